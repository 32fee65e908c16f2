"""Preset verification harness.

Each check recomputes one finite-level identity for a preset and reports the
values it measured. The brute-force oracles used by the checks live here as
well so that the command-line ``verify`` and the test suite run the same
code.
"""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .codes import circular_ambiguity, is_code
from .extension import extension_graph, is_tree, scan_tree_condition
from .freegroup import FreeWord, fold, is_basis_of_full_group, member, reduce, subgroup_equals
from .fundamental import connecting_map, expand_loop, rank_profile, spanning_tree
from .graph import GraphPath, build_rauzy, central_label, iter_paths, project, project_path
from .language import build_language
from .presets import PRESETS, load_preset
from .returns import delayed_return_words, lift_return_word, min_return_length_profile, return_set_at, return_words

__all__ = [
    "Check",
    "run_checks",
    "brute_force_products",
    "brute_force_member",
    "dfs_is_tree",
    "random_generator_set",
    "random_loop",
    "CHECKS_BY_PRESET",
]

TREE_EXPECTATION = {
    "fibonacci": "pass-up-to-horizon",
    "tribonacci": "pass-up-to-horizon",
    "thue-morse": "fail",
    "paper-example": "fail",
}
EXPECTED_RANK = {"fibonacci": 2, "tribonacci": 3, "periodic-ab": 1}


@dataclass
class Check:
    id: int
    name: str
    passed: bool
    measured: dict = field(default_factory=dict)

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.id}: {self.name}"


# --- independent oracles -------------------------------------------------


def brute_force_products(generators, depth):
    """Every reduced product of at most ``depth`` generators or inverses."""
    symbols = []
    for g in generators:
        w = reduce(g) if not isinstance(g, FreeWord) else g
        symbols.extend([w.letters, (~w).letters])
    found = {()}
    frontier = {()}
    for _ in range(depth):
        nxt = set()
        for p in frontier:
            for s in symbols:
                q = reduce(p + s).letters
                if q not in found:
                    nxt.add(q)
        found |= nxt
        frontier = nxt
    return found


def brute_force_member(products, w):
    """Membership in the set of products of at most ``2 * depth`` factors,
    given the set ``products`` of at most ``depth`` factors: ``w = p q``
    with ``p`` and ``q`` both in ``products``."""
    letters = w.letters
    if letters in products:
        return True
    return any(reduce((~FreeWord(p)).letters + letters).letters in products for p in products)


def dfs_is_tree(g):
    """Connected and acyclic, decided by depth-first search."""
    adj = {("L", a): [] for a in g.left}
    adj.update({("R", b): [] for b in g.right})
    for i, (a, b) in enumerate(g.edges):
        adj[("L", a)].append((("R", b), i))
        adj[("R", b)].append((("L", a), i))
    if not adj:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [(start, None)]
    while stack:
        v, via = stack.pop()
        for w, i in adj[v]:
            if i == via:
                continue
            if w in seen:
                return False
            seen.add(w)
            stack.append((w, i))
    return len(seen) == len(adj)


def random_generator_set(rng, letters="ab", max_total=10, max_gens=3):
    """Nonempty reduced words of total length at most ``max_total``."""
    gens = []
    budget = max_total
    for _ in range(rng.randint(1, max_gens)):
        if budget < 1:
            break
        length = rng.randint(1, min(budget, 5))
        w = reduce((rng.choice(letters), rng.choice((1, -1))) for _ in range(length))
        if w:
            gens.append(w)
            budget -= len(w)
    return gens or [FreeWord(((letters[0], 1),))]


def random_loop(g, base, rng, max_len=40):
    """Random directed walk from ``base`` closed by a shortest return path."""
    while True:
        v, edges = base, []
        for _ in range(rng.randint(1, max_len - len(g.vertices))):
            e = rng.choice(g.out_edges[v])
            edges.append(e)
            v = e[1:]
        back = _shortest_path(g, v, base)
        if len(edges) + len(back) <= max_len:
            return GraphPath(base, tuple(edges + back))


def _shortest_path(g, src, dst):
    prev = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for e in g.out_edges[v]:
            if e[1:] not in prev:
                prev[e[1:]] = e
                queue.append(e[1:])
    path = []
    v = dst
    while prev[v] is not None:
        path.append(prev[v])
        v = prev[v][:-1]
    return path[::-1]


def _scan_delayed(lang, u1, u2, budget):
    """Delayed return words read directly off occurrence positions."""
    u = u1 + u2
    text = lang.point_prefix(3 * len(lang.source) + len(u)) if lang.is_periodic else lang.point_prefix(budget)
    pos = [m.start() for m in re.finditer(f"(?={re.escape(u)})", text)]
    k = len(u1)
    return {text[p + k : q + k] for p, q in zip(pos, pos[1:])}


# --- checks --------------------------------------------------------------


def check_return_theorem(ctx):
    lang = ctx["lang"]
    letters = lang.letters
    bad = []
    count = 0
    for k in range(1, 9):
        for w in lang.factors(k):
            rs = return_words(lang, w, ctx["scan_budget"])
            count += 1
            if len(rs) != len(letters) or not is_basis_of_full_group(rs.words, letters):
                bad.append({"word": w, "returns": list(rs.words)})
    return Check(1, "return words of every factor of length <= 8 form a basis", not bad,
                 {"factors_checked": count, "alphabet_size": len(letters), "failures": bad[:5]})


def check_tree_condition(ctx):
    expected = TREE_EXPECTATION[ctx["preset"]]
    report = scan_tree_condition(ctx["lang"], 10)
    passed = report.verdict == expected
    if ctx["preset"] == "thue-morse":
        passed = passed and report.witness == ""
    measured = {"expected": expected, "verdict": report.verdict, "witness": report.witness, "reason": report.reason}
    return Check(2, "tree-condition verdict at max center length 10", passed, measured)


def _splits(lang, max_len=6):
    for k in range(2, max_len + 1):
        for u in lang.factors(k):
            for i in range(1, k):
                yield u[:i], u[i:]


def check_cardinality(ctx):
    lang, budget = ctx["lang"], ctx["scan_budget"]
    bad = []
    n = 0
    for u1, u2 in _splits(lang):
        n += 1
        delayed = delayed_return_words(lang, u1, u2, budget)
        plain = return_words(lang, u1 + u2, budget)
        direct = _scan_delayed(lang, u1, u2, budget)
        conj = {(v + u1)[len(u1):] for v in plain}
        if not (len(delayed) == len(plain) == len(direct) and set(delayed) == direct == conj):
            bad.append([u1, u2])
    return Check(3, "|R(u1,u2)| = |R(u1u2)| for all splits with |u1u2| <= 6", not bad,
                 {"splits_checked": n, "failures": bad[:5]})


@lru_cache(maxsize=None)
def _circular(words):
    return circular_ambiguity(words, 16)


def check_codes(ctx):
    lang, budget = ctx["lang"], ctx["scan_budget"]
    bad = []
    sets = {delayed_return_words(lang, u1, u2, budget).words for u1, u2 in _splits(lang)}
    for words in sorted(sets):
        ok, witness = is_code(words)
        amb = _circular(words)
        if not ok or amb is not None:
            bad.append({"set": list(words), "sp_witness": witness, "circular_witness": amb})
    return Check(4, "delayed return sets are codes with no circular ambiguity up to length 16", not bad,
                 {"sets_checked": len(sets), "failures": bad[:5]})


def check_labelings(ctx):
    lang, budget = ctx["lang"], ctx["scan_budget"]
    graphs = {m: build_rauzy(lang, 2 * m) for m in range(1, 5)}
    projection_failures = 0
    edges_checked = 0
    for m in range(1, 5):
        for n in range(1, m + 1):
            for e in graphs[m].edges:
                edges_checked += 1
                if central_label(graphs[n], project(graphs[m], 2 * n, e)) != central_label(graphs[m], e):
                    projection_failures += 1
    lift_failures = []
    lifted = 0
    for n in range(1, 4):
        for w in lang.factors(2 * n):
            for r in return_set_at(w, lang, budget):
                lifted += 1
                cycle = lift_return_word(graphs[n], w, r)
                if cycle.labels != r or not cycle.is_cycle or cycle.start != w:
                    lift_failures.append([w, r])
    passed = projection_failures == 0 and not lift_failures
    return Check(5, "central labels survive projection and lifted return cycles read back", passed,
                 {"edges_checked": edges_checked, "projection_failures": projection_failures,
                  "return_words_lifted": lifted, "lift_failures": lift_failures[:5]})


def check_diagram(ctx):
    lang, rng = ctx["lang"], random.Random(ctx["seed"])
    levels = {}
    for k in (1, 2, 3):
        g = build_rauzy(lang, 2 * k)
        levels[k] = spanning_tree(g, lang.default_window(k).word)
    loops_checked = 0
    bad = []
    for m, n in ((2, 1), (3, 1), (3, 2)):
        sm, sn = levels[m], levels[n]
        q = connecting_map(sm, sn)
        loops = [p for length in range(1, 9) for p in iter_paths(sm.graph, length, sm.base) if p.is_cycle]
        loops += [random_loop(sm.graph, sm.base, rng) for _ in range(200)]
        for loop in loops:
            loops_checked += 1
            lhs = expand_loop(sn, project_path(sm.graph, 2 * n, loop))
            rhs = q(expand_loop(sm, loop))
            if lhs != rhs:
                bad.append({"m": m, "n": n, "loop": list(loop.edges)})
    return Check(6, "projected loop expansions agree with the connecting maps", not bad,
                 {"loops_checked": loops_checked, "failures": bad[:3]})


def check_rank(ctx):
    expected = EXPECTED_RANK[ctx["preset"]]
    profile = rank_profile(ctx["lang"], range(1, 6))
    return Check(7, f"rank of the order-2n Rauzy graph is {expected} for n = 1..5",
                 all(r == expected for _, r in profile), {"profile": profile})


def check_return_generation(ctx):
    lang, budget = ctx["lang"], ctx["scan_budget"]
    measured = {}
    passed = True
    for n in (1, 2):
        window = lang.default_window(n)
        g = build_rauzy(lang, 2 * n)
        stb = spanning_tree(g, window.word)
        images = [expand_loop(stb, lift_return_word(g, window, r)) for r in return_set_at(window, lang, budget)]
        ok = subgroup_equals(images, [FreeWord(((y, 1),)) for y in stb.generators])
        passed &= ok
        measured[f"n={n}"] = {"window": window.word, "images": [str(w) for w in images], "generates": ok}
    return Check(8, "lifted return cycles generate the fundamental group at n = 1, 2", passed, measured)


def check_divergence(ctx):
    profile = min_return_length_profile(ctx["lang"], range(1, 21), ctx["scan_budget"])
    values = [v for _, v in profile]
    monotone = all(a <= b for a, b in zip(values, values[1:]))
    passed = monotone and values[-1] >= 5 * values[0]
    return Check(9, "minimum return length is non-decreasing and grows fivefold by n = 20", passed,
                 {"profile": profile})


def check_oracles(ctx):
    lang, rng = ctx["lang"], random.Random(ctx["seed"])
    tree_cases = tree_bad = 0
    for k in range(0, 11):
        for w in [""] if k == 0 else lang.factors(k):
            g = extension_graph(lang, w)
            tree_cases += 1
            if is_tree(g)[0] != dfs_is_tree(g):
                tree_bad += 1
    member_cases = member_bad = 0
    while member_cases < 1000:
        gens = random_generator_set(rng)
        products = brute_force_products(gens, 6)
        sg = fold(gens)
        pool = sorted(products)
        for _ in range(10):
            if rng.random() < 0.5:
                w = FreeWord(rng.choice(pool))
            else:
                w = reduce((rng.choice("ab"), rng.choice((1, -1))) for _ in range(rng.randint(0, 4)))
            member_cases += 1
            if member(sg, w) != brute_force_member(products, w):
                member_bad += 1
    confluence_cases = confluence_bad = 0
    for _ in range(50):
        gens = random_generator_set(rng)
        reference = fold(gens)
        confluence_cases += 1
        if any(fold(gens, rng=random.Random(rng.random())) != reference for _ in range(20)):
            confluence_bad += 1
    passed = tree_bad == 0 and member_bad == 0 and confluence_bad == 0
    return Check(10, "oracle agreement: tree test, Stallings membership, folding confluence", passed,
                 {"tree_cases": tree_cases, "tree_disagreements": tree_bad,
                  "membership_cases": member_cases, "membership_disagreements": member_bad,
                  "confluence_cases": confluence_cases, "confluence_failures": confluence_bad})


ALL_CHECKS = {
    1: check_return_theorem,
    2: check_tree_condition,
    3: check_cardinality,
    4: check_codes,
    5: check_labelings,
    6: check_diagram,
    7: check_rank,
    8: check_return_generation,
    9: check_divergence,
    10: check_oracles,
}

CHECKS_BY_PRESET = {
    "fibonacci": (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
    "tribonacci": (1, 2, 3, 4, 5, 7, 8, 10),
    "thue-morse": (2, 3, 4, 5, 10),
    "paper-example": (2, 3, 4, 5, 10),
    "periodic-ab": (3, 4, 5, 7),
}


def run_checks(preset, horizon=40, scan_budget=100_000, seed=0, only=None):
    """Run the checks registered for ``preset``; returns a list of :class:`Check`."""
    if preset not in PRESETS:
        raise KeyError(preset)
    ctx = {
        "preset": preset,
        "lang": build_language(load_preset(preset), horizon),
        "scan_budget": scan_budget,
        "seed": seed,
    }
    ids = CHECKS_BY_PRESET[preset] if only is None else [i for i in CHECKS_BY_PRESET[preset] if i in only]
    return [ALL_CHECKS[i](ctx) for i in ids]


def checks_as_json(preset, checks):
    return {"preset": preset, "passed": all(c.passed for c in checks), "checks": [asdict(c) for c in checks]}
