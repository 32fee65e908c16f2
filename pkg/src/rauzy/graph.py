"""Rauzy graphs, their central labeling and the projections between even orders."""

from __future__ import annotations

import csv
from collections import deque
from dataclasses import dataclass

from .errors import HorizonExceeded, NotAdmissible, OddOrder, OrderMismatch

__all__ = [
    "RauzyGraph",
    "GraphPath",
    "build_rauzy",
    "central_label",
    "project",
    "project_path",
    "lift_word_to_path",
    "is_locally_admissible",
    "strongly_connected",
    "iter_paths",
    "export_dot",
    "write_edges_csv",
]


class RauzyGraph:
    """Graph with words of length ``order`` as vertices and words of length
    ``order + 1`` as edges; an edge runs from its prefix to its suffix.

    Vertices and edges are kept in lexicographic order and adjacency lists
    inherit that order.
    """

    def __init__(self, order, vertices, edges):
        self.order = order
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted(edges))
        self._vertex_set = frozenset(self.vertices)
        self._edge_set = frozenset(self.edges)
        self.out_edges = {v: [] for v in self.vertices}
        self.in_edges = {v: [] for v in self.vertices}
        for e in self.edges:
            if len(e) != order + 1:
                raise ValueError(f"edge {e!r} does not have length {order + 1}")
            s, t = e[:-1], e[1:]
            if s not in self._vertex_set or t not in self._vertex_set:
                raise ValueError(f"edge {e!r} has an endpoint outside the vertex set")
            self.out_edges[s].append(e)
            self.in_edges[t].append(e)

    @staticmethod
    def source(edge):
        return edge[:-1]

    @staticmethod
    def target(edge):
        return edge[1:]

    @property
    def half_order(self):
        if self.order % 2:
            raise OddOrder(f"Rauzy graph of odd order {self.order} carries no central labeling")
        return self.order // 2

    @property
    def rank(self):
        """Rank of the fundamental group (the graph is assumed connected)."""
        return len(self.edges) - len(self.vertices) + 1

    def has_vertex(self, v):
        return v in self._vertex_set

    def has_edge(self, e):
        return e in self._edge_set

    def __repr__(self):
        return f"RauzyGraph(order={self.order}, |V|={len(self.vertices)}, |E|={len(self.edges)})"


@dataclass(frozen=True)
class GraphPath:
    """A (possibly empty) path of a Rauzy graph given by its edge words."""

    start: str
    edges: tuple

    def __post_init__(self):
        v = self.start
        for e in self.edges:
            if e[:-1] != v:
                raise ValueError(f"edge {e!r} does not leave vertex {v!r}")
            v = e[1:]

    def __len__(self):
        return len(self.edges)

    @property
    def end(self):
        return self.edges[-1][1:] if self.edges else self.start

    @property
    def is_cycle(self):
        return self.start == self.end

    @property
    def traced(self):
        """The word spelled by the path: the start vertex followed by the
        last letter of every edge."""
        return self.start + "".join(e[-1] for e in self.edges)

    @property
    def labels(self):
        """Central-label word of the path (even orders only)."""
        if len(self.start) % 2:
            raise OddOrder("paths of odd-order graphs carry no central labels")
        mid = len(self.start) // 2
        return "".join(e[mid] for e in self.edges)

    def __add__(self, other):
        if self.end != other.start:
            raise ValueError("paths are not composable")
        return GraphPath(self.start, self.edges + other.edges)


def build_rauzy(lang, order):
    """Rauzy graph of the given order: vertices ``L_order``, edges ``L_order+1``."""
    if order < 1:
        raise ValueError("order must be positive")
    if order + 1 > lang.horizon:
        raise HorizonExceeded(order + 1, lang.horizon)
    return RauzyGraph(order, lang.factor_set(order), lang.factor_set(order + 1))


def central_label(g, edge):
    """Middle letter of an edge of an even-order graph."""
    return edge[g.half_order]


def project(g, target_order, item):
    """Strip ``(g.order - target_order) / 2`` letters from each end of a
    vertex or edge of ``g``."""
    if g.order % 2 or target_order % 2 or target_order < 2:
        raise OrderMismatch(f"projection needs even orders, got {g.order} -> {target_order}")
    if target_order > g.order:
        raise OrderMismatch(f"cannot project order {g.order} onto larger order {target_order}")
    if not (g.has_vertex(item) or g.has_edge(item)):
        raise ValueError(f"{item!r} is neither a vertex nor an edge of {g!r}")
    cut = (g.order - target_order) // 2
    return item[cut : len(item) - cut] if cut else item


def project_path(g, target_order, path):
    return GraphPath(project(g, target_order, path.start), tuple(project(g, target_order, e) for e in path.edges))


def lift_word_to_path(g, start, u):
    """Walk from ``start`` along the letters of ``u``.

    The traced word is ``start + u``; its windows of length ``order + 1``,
    read at stride 1, are the edges of the returned path. Raises
    :class:`NotAdmissible` naming the first window (and its offset in the
    traced word) that is not an edge.
    """
    if not g.has_vertex(start):
        raise NotAdmissible(start, 0, start)
    traced = start + u
    k = g.order + 1
    edges = []
    for i in range(len(u)):
        window = traced[i : i + k]
        if not g.has_edge(window):
            bad, offset = _shortest_bad_factor(g, window)
            raise NotAdmissible(bad, i + offset, traced)
        edges.append(window)
    return GraphPath(start, tuple(edges))


def _shortest_bad_factor(g, window):
    """Shortest, then leftmost, factor of ``window`` that is not a factor of
    any edge of ``g``."""
    for m in range(1, len(window) + 1):
        for j in range(len(window) - m + 1):
            w = window[j : j + m]
            if not any(w in e for e in g.edges):
                return w, j
    return window, 0


def is_locally_admissible(lang, u, k):
    """True iff every factor of ``u`` of length at most ``k`` is in the language."""
    if k > lang.horizon:
        raise HorizonExceeded(k, lang.horizon)
    if not u:
        return True
    m = min(k, len(u))
    level = lang.factor_set(m)
    return all(u[i : i + m] in level for i in range(len(u) - m + 1))


def _reach(start, adjacency, step):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for e in adjacency[v]:
            w = step(e)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def strongly_connected(g):
    if not g.vertices:
        return True
    root = g.vertices[0]
    n = len(g.vertices)
    return (
        len(_reach(root, g.out_edges, RauzyGraph.target)) == n
        and len(_reach(root, g.in_edges, RauzyGraph.source)) == n
    )


def iter_paths(g, length, start=None):
    """Yield every path with ``length`` edges (from ``start`` if given), in
    lexicographic order of edge sequences."""
    starts = [start] if start is not None else g.vertices

    def extend(v, acc):
        if len(acc) == length:
            yield acc
            return
        for e in g.out_edges[v]:
            yield from extend(e[1:], acc + (e,))

    for s in starts:
        for edges in extend(s, ()):
            yield GraphPath(s, edges)


def export_dot(g, comment=None):
    """Deterministic DOT text; edges carry their word and, for even orders,
    the central label."""
    lines = []
    if comment:
        lines.append(f"// {comment}")
    lines.append(f"digraph rauzy_{g.order} {{")
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for e in g.edges:
        label = e if g.order % 2 else f"{e} / {central_label(g, e)}"
        lines.append(f'  "{e[:-1]}" -> "{e[1:]}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_edges_csv(g, fh, header_lines=()):
    for line in header_lines:
        fh.write(f"# {line}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["source", "edge", "target", "central_label"])
    for e in g.edges:
        label = "" if g.order % 2 else central_label(g, e)
        writer.writerow([e[:-1], e, e[1:], label])
