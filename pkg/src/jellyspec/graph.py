"""Labeled simple graphs, structured families and elementary operations.

Graphs are immutable and store one adjacency bitset (a Python ``int``) per
vertex, so neighbourhood intersections and degree counts are single integer
operations.  Vertices are ``0..n-1``; labeling matters, isomorphism does not
enter here (see :mod:`jellyspec.canon`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    InvalidParams,
    OutOfRange,
    SelfLoop,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError("rows must have one bitset per vertex")

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        row, out = self.rows[v], []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    if n < 0:
        raise OutOfRange(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(q: int) -> Graph:
    if q < 3:
        raise InvalidParams(f"cycle length must be >= 3, got {q}")
    return build_graph(q, [(i, (i + 1) % q) for i in range(q)])


def star(p: int) -> Graph:
    """K_{1,p} with the centre at vertex 0."""
    if p < 1:
        raise InvalidParams(f"star needs at least one leaf, got {p}")
    return build_graph(p + 1, [(0, i) for i in range(1, p + 1)])


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"path needs at least one vertex, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class JellyfishParams:
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1 or self.q < 3:
            raise InvalidParams(f"jellyfish needs p >= 1 and q >= 3, got p={self.p}, q={self.q}")

    @property
    def order(self) -> int:
        return self.q * (self.p + 1)


def jellyfish(p: int | JellyfishParams, q: int | None = None) -> Graph:
    """JFG(p, q): a q-cycle with p pendant leaves on every cycle vertex.

    Cycle vertices are ``0..q-1`` in cyclic order; the leaves of cycle vertex
    ``c`` are ``q + c*p .. q + c*p + p - 1``.
    """
    params = p if isinstance(p, JellyfishParams) else JellyfishParams(p, q)  # type: ignore[arg-type]
    p, q = params.p, params.q
    edges = [(i, (i + 1) % q) for i in range(q)]
    edges += [(c, q + c * p + k) for c in range(q) for k in range(p)]
    return build_graph(params.order, edges)


def sun(q: int) -> Graph:
    return jellyfish(1, q)


# -- operations ---------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ r ^ (1 << v) for v, r in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(r << shift for r in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    left = (1 << g.n) - 1
    right = ((1 << h.n) - 1) << g.n
    rows = tuple(r | right for r in g.rows) + tuple((r << g.n) | left for r in h.rows)
    return Graph(g.n + h.n, rows)


def coalescence(g: Graph, root_g: int, h: Graph, root_h: int) -> Graph:
    """Identify ``root_g`` of g with ``root_h`` of h.

    Vertices of g keep their labels; the non-root vertices of h follow in
    their original order.
    """
    if not 0 <= root_g < g.n:
        raise OutOfRange(f"root {root_g} not a vertex of the first graph")
    if not 0 <= root_h < h.n:
        raise OutOfRange(f"root {root_h} not a vertex of the second graph")
    new_label = {}
    nxt = g.n
    for v in range(h.n):
        if v == root_h:
            new_label[v] = root_g
        else:
            new_label[v] = nxt
            nxt += 1
    edges = g.edges() + [(new_label[u], new_label[v]) for u, v in h.edges()]
    return build_graph(g.n + h.n - 1, edges)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the i-th edge of ``g.edges()``."""
    edges = g.edges()
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    rows = [0] * len(edges)
    for inc in incident:
        for a, b in combinations(inc, 2):
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(len(edges), tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return build_graph(len(vertices), edges)


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    rows = list(g.rows)
    for u, v in edges:
        if not rows[u] >> v & 1:
            raise OutOfRange(f"({u}, {v}) is not an edge")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


# -- structure ----------------------------------------------------------------


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees(), reverse=True))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.rows[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def _two_colour(g: Graph, comp: Sequence[int]) -> bool:
    colour = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in colour:
                colour[w] = 1 - colour[u]
                stack.append(w)
            elif colour[w] == colour[u]:
                return False
    return True


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Colour classes of a connected bipartite graph, or None if not bipartite."""
    if g.n == 0:
        return [], []
    colour = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in colour:
                colour[w] = 1 - colour[u]
                stack.append(w)
            elif colour[w] == colour[u]:
                return None
    if len(colour) != g.n:
        raise Disconnected("bipartition requires a connected graph")
    side0 = [v for v in range(g.n) if colour[v] == 0]
    side1 = [v for v in range(g.n) if colour[v] == 1]
    return side0, side1


def is_bipartite(g: Graph) -> bool:
    return all(_two_colour(g, c) for c in components(g))


def bipartite_component_count(g: Graph) -> int:
    return sum(_two_colour(g, c) for c in components(g))


def count_subgraphs(g: Graph) -> tuple[int, int, int]:
    """Return (#triangles, #paths on 3 vertices, #4-cycles) as subgraphs."""
    rows = g.rows
    triangles = 0
    for u in range(g.n):
        for v in g.neighbors(u):
            if v > u:
                # third vertex w > v closes the triangle u < v < w
                triangles += ((rows[u] & rows[v]) >> (v + 1)).bit_count()
    p3 = sum(comb(d, 2) for d in g.degrees())
    # every 4-cycle has two diagonals, each pair of opposite vertices sharing
    # the two remaining vertices as common neighbours
    c4 = 0
    for u, w in combinations(range(g.n), 2):
        c4 += comb((rows[u] & rows[w]).bit_count(), 2)
    return triangles, p3, c4 // 2


def cyclomatic_number(g: Graph) -> int:
    if not is_connected(g):
        raise Disconnected("cyclomatic number is defined per connected graph")
    return g.m - g.n + 1
