"""Extension graphs of factors and the tree condition."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyGraph, HorizonExceeded, NotAFactor

__all__ = [
    "ExtensionGraph",
    "TreeConditionReport",
    "extension_graph",
    "is_tree",
    "scan_tree_condition",
]


@dataclass(frozen=True)
class ExtensionGraph:
    """Bipartite graph of a factor ``w``: left letters ``a`` with ``aw`` a
    factor, right letters ``b`` with ``wb`` a factor, and an edge ``(a, b)``
    whenever ``awb`` is a factor."""

    word: str
    left: tuple
    right: tuple
    edges: tuple

    @property
    def num_vertices(self):
        return len(self.left) + len(self.right)

    def to_dot(self, comment=None):
        lines = [f"// {comment}"] if comment else []
        lines.append("graph extension {")
        lines.append(f'  label="{self.word or "(empty word)"}";')
        for a in self.left:
            lines.append(f'  "L:{a}";')
        for b in self.right:
            lines.append(f'  "R:{b}";')
        for a, b in self.edges:
            lines.append(f'  "L:{a}" -- "R:{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def as_dict(self):
        return {
            "word": self.word,
            "left": list(self.left),
            "right": list(self.right),
            "edges": [list(e) for e in self.edges],
        }


def extension_graph(lang, w=""):
    if len(w) + 2 > lang.horizon:
        raise HorizonExceeded(len(w) + 2, lang.horizon)
    if w and w not in lang:
        raise NotAFactor(w)
    k = len(w)
    left = sorted({v[0] for v in lang.factor_set(k + 1) if v[1:] == w})
    right = sorted({v[-1] for v in lang.factor_set(k + 1) if v[:-1] == w})
    edges = sorted({(v[0], v[-1]) for v in lang.factor_set(k + 2) if v[1:-1] == w})
    return ExtensionGraph(w, tuple(left), tuple(right), tuple(edges))


def is_tree(g):
    """``(True, None)`` for a tree, else ``(False, reason)`` with reason
    ``"disconnected"`` or ``"has-cycle"``.

    Uses a union-find pass: an edge joining two vertices that are already
    connected closes a cycle.
    """
    if g.num_vertices == 0:
        raise EmptyGraph(f"extension graph of {g.word!r} has no vertices")
    parent = {("L", a): ("L", a) for a in g.left}
    parent.update({("R", b): ("R", b) for b in g.right})

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = g.num_vertices
    cycle = False
    for a, b in g.edges:
        x, y = find(("L", a)), find(("R", b))
        if x == y:
            cycle = True
        else:
            parent[x] = y
            components -= 1
    if components > 1:
        return False, "disconnected"
    if cycle:
        return False, "has-cycle"
    return True, None


@dataclass
class TreeConditionReport:
    horizon: int
    max_center_len: int
    verdict: str
    witness: str | None = None
    reason: str | None = None
    stats: list = field(default_factory=list)

    @property
    def passed(self):
        return self.verdict == "pass-up-to-horizon"

    def as_dict(self):
        return {
            "horizon": self.horizon,
            "max_center_len": self.max_center_len,
            "verdict": self.verdict,
            "witness": self.witness,
            "reason": self.reason,
            "stats": self.stats,
        }


def scan_tree_condition(lang, max_center_len):
    """Check extension graphs of the empty word and of every factor of
    length at most ``max_center_len``.

    The first failure in shortest-then-lexicographic order is the witness.
    A pass only covers the scanned lengths.
    """
    if max_center_len + 2 > lang.horizon:
        raise HorizonExceeded(max_center_len + 2, lang.horizon)
    stats = []
    witness = reason = None
    for k in range(max_center_len + 1):
        words = [""] if k == 0 else lang.factors(k)
        failures = []
        for w in words:
            ok, why = is_tree(extension_graph(lang, w))
            if not ok:
                failures.append((w, why))
        stats.append({"length": k, "checked": len(words), "failed": len(failures)})
        if failures and witness is None:
            witness, reason = failures[0]
    verdict = "fail" if witness is not None else "pass-up-to-horizon"
    return TreeConditionReport(lang.horizon, max_center_len, verdict, witness, reason, stats)
