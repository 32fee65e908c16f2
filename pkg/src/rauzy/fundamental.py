"""Spanning-tree bases of fundamental groups of Rauzy graphs and the maps
induced between levels by the projections."""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BaseMismatch, Disconnected, NotALoop, OrderMismatch, UnknownEdge
from .freegroup import FreeWord, reduce
from .graph import build_rauzy, project

__all__ = [
    "SpanningTreeBasis",
    "ConnectingMap",
    "spanning_tree",
    "class_of_edge",
    "expand_path",
    "expand_loop",
    "connecting_map",
    "abelianization_matrix",
    "rank_profile",
]


class SpanningTreeBasis:
    """A spanning tree of a Rauzy graph together with the induced free basis
    of the fundamental group at ``base``.

    Generators are named by the edges outside the tree (``cotree``), in
    lexicographic order. Paths of the underlying undirected graph are
    tuples of ``(edge, ±1)``.
    """

    def __init__(self, graph, base, parent):
        self.graph = graph
        self.base = base
        self._parent = parent
        self.tree = frozenset(e for e, _ in (p for p in parent.values() if p is not None))
        self.cotree = tuple(e for e in graph.edges if e not in self.tree)
        self._delta = {base: ()}
        for v in parent:
            self._tree_path_from_base(v)

    def _tree_path_from_base(self, v):
        if v not in self._delta:
            e, sign = self._parent[v]
            u = e[:-1] if sign == 1 else e[1:]
            self._delta[v] = self._tree_path_from_base(u) + ((e, sign),)
        return self._delta[v]

    @property
    def generators(self):
        return self.cotree

    @property
    def rank(self):
        return len(self.cotree)

    def delta(self, v):
        """Tree path from the base to ``v``."""
        return self._delta[v]

    def gamma(self, v):
        """Tree path from ``v`` to the base (the inverse of ``delta(v)``)."""
        return tuple((e, -s) for e, s in reversed(self._delta[v]))

    def defining_loop(self, s):
        """The loop ``delta(source) · s · gamma(target)`` representing ``g_s``."""
        if not self.graph.has_edge(s):
            raise UnknownEdge(s)
        return self.delta(s[:-1]) + ((s, 1),) + self.gamma(s[1:])

    def __repr__(self):
        return f"SpanningTreeBasis(order={self.graph.order}, base={self.base!r}, rank={self.rank})"


def spanning_tree(g, base):
    """Breadth-first spanning tree rooted at ``base``.

    Outgoing edges are explored first, in lexicographic order, over the
    whole reachable part; only if that leaves vertices unreached is the
    search resumed along incoming edges as well.
    """
    if not g.has_vertex(base):
        raise ValueError(f"{base!r} is not a vertex")
    parent = {base: None}
    order = [base]

    def search(queue, use_in):
        while queue:
            v = queue.popleft()
            steps = [(e, 1, e[1:]) for e in g.out_edges[v]]
            if use_in:
                steps += [(e, -1, e[:-1]) for e in g.in_edges[v]]
            for e, sign, w in steps:
                if w not in parent:
                    parent[w] = (e, sign)
                    order.append(w)
                    queue.append(w)

    search(deque([base]), False)
    if len(parent) < len(g.vertices):
        search(deque(order), True)
    if len(parent) < len(g.vertices):
        raise Disconnected(f"{len(g.vertices) - len(parent)} vertices are unreachable from {base!r}")
    return SpanningTreeBasis(g, base, parent)


def class_of_edge(stb, s):
    """``g_s`` as a word in the generators: trivial for tree edges."""
    if not stb.graph.has_edge(s):
        raise UnknownEdge(s)
    return FreeWord() if s in stb.tree else FreeWord(((s, 1),))


def expand_path(stb, signed_edges):
    """Image of a path of the undirected graph: tree edges vanish and every
    other edge contributes its generator with the traversal sign."""
    raw = []
    for e, sign in signed_edges:
        if not stb.graph.has_edge(e):
            raise UnknownEdge(e)
        if e not in stb.tree:
            raw.append((e, sign))
    return reduce(raw)


def expand_loop(stb, loop):
    """Word in the generators represented by a directed loop at the base."""
    if loop.start != stb.base or loop.end != stb.base:
        raise NotALoop(f"path from {loop.start!r} to {loop.end!r} is not a loop at {stb.base!r}")
    return expand_path(stb, ((e, 1) for e in loop.edges))


@dataclass(frozen=True)
class ConnectingMap:
    """Homomorphism between the fundamental groups at two levels, given by
    the images of the source generators."""

    source_generators: tuple
    target_generators: tuple
    images: dict

    def __call__(self, word):
        raw = []
        for x, e in word:
            image = self.images[x]
            raw.extend(image.letters if e == 1 else (~image).letters)
        return reduce(raw)

    def compose(self, first):
        """``self ∘ first``."""
        return ConnectingMap(
            first.source_generators,
            self.target_generators,
            {x: self(w) for x, w in first.images.items()},
        )

    def as_table(self):
        return {x: str(w) for x, w in self.images.items()}


def connecting_map(stb_m, stb_n):
    """Map induced by the projection from the finer basis ``stb_m`` to the
    coarser ``stb_n``. The bases must be compatible: ``stb_n.base`` is the
    projection of ``stb_m.base``."""
    gm, gn = stb_m.graph, stb_n.graph
    if gm.order % 2 or gn.order % 2 or gn.order > gm.order:
        raise OrderMismatch(f"cannot map order {gm.order} to order {gn.order}")
    if project(gm, gn.order, stb_m.base) != stb_n.base:
        raise BaseMismatch(f"{stb_n.base!r} is not the projection of {stb_m.base!r}")
    images = {}
    for s in stb_m.generators:
        loop = stb_m.defining_loop(s)
        images[s] = expand_path(stb_n, ((project(gm, gn.order, e), sign) for e, sign in loop))
    return ConnectingMap(stb_m.generators, stb_n.generators, images)


def abelianization_matrix(cmap):
    """Exponent-sum matrix: rows are target generators, columns source ones."""
    m = np.zeros((len(cmap.target_generators), len(cmap.source_generators)), dtype=np.int64)
    for j, x in enumerate(cmap.source_generators):
        word = cmap.images[x]
        for i, y in enumerate(cmap.target_generators):
            m[i, j] = word.exponent_sum(y)
    return m


def rank_profile(lang, n_values):
    """``[(n, rank of the Rauzy graph of order 2n)]``."""
    return [(n, build_rauzy(lang, 2 * n).rank) for n in n_values]


def write_matrix_csv(matrix, rows, cols, fh, header_lines=()):
    for line in header_lines:
        fh.write(f"# {line}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow([""] + list(cols))
    for name, row in zip(rows, matrix.tolist()):
        writer.writerow([name] + row)
