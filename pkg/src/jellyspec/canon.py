"""Canonical labeling by colour refinement and individualisation.

The search tree is the usual one: refine to an equitable colouring,
individualise each vertex of the first smallest non-singleton cell, recurse.
Two prunings keep symmetric graphs cheap.  Vertices with equal open or closed
neighbourhoods (twins) are interchangeable, and automorphisms discovered at
leaves collapse sibling branches that lie in one orbit of the stabiliser of
the current prefix.  The best leaf is the lexicographically largest relabeled
adjacency, and its graph6 string is the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .graph import Graph
from .graph6 import graph6_encode

CANON_CAP = 64


@dataclass(frozen=True)
class CanonicalLabeling:
    graph: Graph
    labeling: tuple[int, ...]  # labeling[v] = canonical label of v
    generators: tuple[tuple[int, ...], ...]  # automorphism generators found

    @property
    def form(self) -> bytes:
        return graph6_encode(self.graph).encode("ascii")


def _refine(rows: tuple[int, ...], colours: list[int]) -> list[int]:
    n = len(rows)
    ncol = len(set(colours))
    while True:
        masks: dict[int, int] = {}
        for v, c in enumerate(colours):
            masks[c] = masks.get(c, 0) | (1 << v)
        order = sorted(masks)
        sigs = [
            (colours[v], tuple((rows[v] & masks[c]).bit_count() for c in order))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colours = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return colours
        ncol = len(rank)


def _twin_classes(g: Graph) -> list[int]:
    """rep[v] = smallest vertex with the same open or closed neighbourhood as v."""
    rep = list(range(g.n))
    for u in range(g.n):
        if rep[u] != u:
            continue
        open_u, closed_u = g.rows[u], g.rows[u] | (1 << u)
        for v in range(u + 1, g.n):
            if rep[v] == v and (g.rows[v] == open_u or (g.rows[v] | (1 << v)) == closed_u):
                rep[v] = u
    return rep


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], a: int, b: int) -> None:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra != rb:
        parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(g: Graph, cap: int = CANON_CAP) -> CanonicalLabeling:
    n = g.n
    if n > cap:
        raise CapExceeded(f"canonical labeling capped at n={cap}, got {n}")
    rows = g.rows
    twins = _twin_classes(g)
    autos: list[tuple[int, ...]] = []
    best: list = [None, None]  # certificate, labeling

    def leaf(colours: list[int]) -> None:
        cert = [0] * n
        for v in range(n):
            r, bits = rows[v], 0
            while r:
                low = r & -r
                bits |= 1 << colours[low.bit_length() - 1]
                r ^= low
            cert[colours[v]] = bits
        cert_t = tuple(cert)
        if best[0] is None or cert_t > best[0]:
            best[0], best[1] = cert_t, tuple(colours)
        elif cert_t == best[0]:
            # automorphism: v -> vertex with the same label in the best leaf
            inv = [0] * n
            for v, c in enumerate(best[1]):
                inv[c] = v
            perm = tuple(inv[colours[v]] for v in range(n))
            if any(perm[v] != v for v in range(n)):
                autos.append(perm)

    def search(colours: list[int], prefix: frozenset[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            leaf(colours)
            return
        target_colour = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        cell = cells[target_colour]
        explored: list[int] = []
        for v in cell:
            if explored:
                parent = list(range(n))
                first_of: dict[int, int] = {}
                for w in cell:
                    if twins[w] in first_of:
                        _union(parent, w, first_of[twins[w]])
                    else:
                        first_of[twins[w]] = w
                for perm in autos:
                    if all(perm[x] == x for x in prefix):
                        for x in range(n):
                            _union(parent, x, perm[x])
                root = _find(parent, v)
                if any(_find(parent, w) == root for w in explored):
                    continue
            explored.append(v)
            child = [2 * c for c in colours]
            child[v] -= 1
            search(_refine(rows, child), prefix | {v})

    search(_refine(rows, [0] * n), frozenset())
    labeling = best[1] if n else ()
    canon_rows = tuple(best[0]) if n else ()
    gens = list(autos)
    for v in range(n):
        if twins[v] != v:
            perm = list(range(n))
            perm[v], perm[twins[v]] = twins[v], v
            gens.append(tuple(perm))
    return CanonicalLabeling(Graph(n, canon_rows), tuple(labeling), tuple(gens))


def canonical_form(g: Graph, cap: int = CANON_CAP) -> bytes:
    return canonical_labeling(g, cap).form


def is_isomorphic(g: Graph, h: Graph, cap: int = CANON_CAP) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g, cap) == canonical_form(h, cap)
