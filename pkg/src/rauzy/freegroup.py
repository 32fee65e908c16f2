"""Reduced words in free groups and Stallings foldings of subgroups.

A generator name is any string; a word is a tuple of ``(name, exponent)``
pairs with exponent ``+1`` or ``-1``. Plain ``str`` inputs are read as
positive words whose letters are the characters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

__all__ = [
    "FreeWord",
    "reduce",
    "as_word",
    "StallingsGraph",
    "fold",
    "member",
    "rank",
    "is_basis_of_full_group",
    "subgroup_equals",
]


def reduce(raw):
    """Freely reduce a sequence of ``(name, ±1)`` pairs."""
    out = []
    for x, e in raw:
        if e not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {e!r}")
        if out and out[-1][0] == x and out[-1][1] == -e:
            out.pop()
        else:
            out.append((x, e))
    return FreeWord(tuple(out))


@dataclass(frozen=True)
class FreeWord:
    """A reduced word; build with :func:`reduce` or :meth:`parse`."""

    letters: tuple = ()

    def __mul__(self, other):
        return reduce(self.letters + as_word(other).letters)

    def __invert__(self):
        return FreeWord(tuple((x, -e) for x, e in reversed(self.letters)))

    inverse = __invert__

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(x if e == 1 else f"{x}^-1" for x, e in self.letters)

    @classmethod
    def parse(cls, text):
        """Inverse of ``str``: space separated names with optional ``^-1``."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        raw = []
        for token in text.split():
            if token.endswith("^-1"):
                raw.append((token[:-3], -1))
            else:
                raw.append((token, 1))
        return reduce(raw)

    def exponent_sum(self, name):
        return sum(e for x, e in self.letters if x == name)


def as_word(w):
    if isinstance(w, FreeWord):
        return w
    if isinstance(w, str):
        return FreeWord(tuple((c, 1) for c in w))
    return reduce(w)


class StallingsGraph:
    """Folded core graph of a finitely generated subgroup.

    Vertices are ``0..k-1`` with ``0`` the base; numbering is the canonical
    breadth-first order, so two graphs of the same subgroup compare equal.
    """

    def __init__(self, num_vertices, edges):
        self.base = 0
        self.num_vertices = num_vertices
        self.edges = tuple(sorted(edges))
        self.out = {}
        self.inn = {}
        for u, x, v in self.edges:
            if (u, x) in self.out or (v, x) in self.inn:
                raise ValueError("graph is not folded")
            self.out[u, x] = v
            self.inn[v, x] = u

    @property
    def vertices(self):
        return tuple(range(self.num_vertices))

    @property
    def labels(self):
        return sorted({x for _, x, _ in self.edges})

    def step(self, v, x, e):
        return self.out.get((v, x)) if e == 1 else self.inn.get((v, x))

    def canonical_form(self):
        return self.num_vertices, self.edges

    def __eq__(self, other):
        return isinstance(other, StallingsGraph) and self.canonical_form() == other.canonical_form()

    def __hash__(self):
        return hash(self.canonical_form())

    def __repr__(self):
        return f"StallingsGraph(|V|={self.num_vertices}, |E|={len(self.edges)})"

    def to_dot(self, comment=None):
        lines = [f"// {comment}"] if comment else []
        lines.append("digraph stallings {")
        for v in self.vertices:
            shape = "doublecircle" if v == self.base else "circle"
            lines.append(f'  {v} [shape={shape}];')
        for u, x, v in self.edges:
            lines.append(f'  {u} -> {v} [label="{x}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, v):
        self.parent[v] = v

    def find(self, v):
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            # keep the base (vertex 0) as a representative
            if b < a:
                a, b = b, a
            self.parent[b] = a
        return a != b


def _fold_conflicts(edges, uf):
    """All pairs of vertices that some fold would identify."""
    seen_out, seen_in, pairs = {}, {}, []
    for u, x, v in edges:
        u, v = uf.find(u), uf.find(v)
        w = seen_out.setdefault((u, x), v)
        if w != v:
            pairs.append((w, v))
        w = seen_in.setdefault((v, x), u)
        if w != u:
            pairs.append((w, u))
    return pairs


def fold(generators, rng=None):
    """Stallings graph of the subgroup generated by ``generators``.

    Each generator becomes a closed petal at the base, then edges with the
    same label and the same origin (or terminus) are identified until none
    remain. With ``rng`` (a ``random.Random``) the identifications are
    performed one at a time in random order; the result is the same.
    """
    uf = _UnionFind()
    uf.add(0)
    edges = []
    fresh = 1
    for g in generators:
        w = as_word(g)
        if not w:
            continue
        v = 0
        for i, (x, e) in enumerate(w.letters):
            if i == len(w) - 1:
                nxt = 0
            else:
                nxt = fresh
                uf.add(nxt)
                fresh += 1
            edges.append((v, x, nxt) if e == 1 else (nxt, x, v))
            v = nxt

    while True:
        pairs = _fold_conflicts(edges, uf)
        if not pairs:
            break
        if rng is None:
            for a, b in pairs:
                uf.union(a, b)
        else:
            uf.union(*rng.choice(pairs))

    folded = {(uf.find(u), x, uf.find(v)) for u, x, v in edges}
    return _canonical(_core(folded))


def _core(edges):
    """Drop hanging trees that do not contain the base."""
    edges = set(edges)
    while True:
        degree = {}
        for u, _, v in edges:
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        leaves = {v for v, d in degree.items() if d == 1 and v != 0}
        if not leaves:
            return edges
        edges = {(u, x, v) for u, x, v in edges if u not in leaves and v not in leaves}


def _canonical(edges):
    out, inn = {}, {}
    for u, x, v in edges:
        out.setdefault(u, []).append((x, 1, v))
        inn.setdefault(v, []).append((x, -1, u))
    number = {0: 0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for _, _, w in sorted(out.get(v, []) + inn.get(v, [])):
            if w not in number:
                number[w] = len(number)
                queue.append(w)
    return StallingsGraph(len(number), [(number[u], x, number[v]) for u, x, v in edges])


def member(sg, w):
    """True iff ``w`` reads a closed path at the base of ``sg``."""
    v = sg.base
    for x, e in as_word(w):
        v = sg.step(v, x, e)
        if v is None:
            return False
    return v == sg.base


def rank(sg):
    return len(sg.edges) - sg.num_vertices + 1


def is_basis_of_full_group(words, alphabet):
    """Decide whether ``words`` is a free basis of the free group on ``alphabet``.

    A set of ``|alphabet|`` elements generating the whole group is a basis:
    finitely generated free groups are Hopfian, so the surjection from the
    free group on the given elements is an isomorphism.
    """
    words = list(words)
    alphabet = list(alphabet)
    if len(words) != len(alphabet):
        return False
    sg = fold(words)
    return sg.num_vertices == 1 and sg.labels == sorted(alphabet)


def subgroup_equals(words1, words2):
    return fold(words1) == fold(words2)
