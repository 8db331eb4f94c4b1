"""Exhaustive isomorphism-class enumeration and cospectral-mate search.

Classes of a fixed order are grown one edge at a time: every class with k
edges is extended by one representative per automorphism orbit of its
non-edges, and the results are deduplicated by canonical form.  Complements
supply the classes above half the possible edges when no size is fixed.

A mate search compares exact characteristic polynomials.  Before that, each
candidate must pass cheap invariants that any cospectral graph necessarily
shares with the target (read off the target's polynomial).
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .canon import CanonicalLabeling, canonical_form, canonical_labeling
from .errors import CapExceeded, InvalidParams
from .exact import (
    KIND_ALIASES,
    CharPoly,
    char_poly,
    graph_matrix,
    power_sums,
    root_multiplicity,
    spanning_tree_count,
)
from .graph import (
    Graph,
    JellyfishParams,
    complement,
    components,
    count_subgraphs,
    degree_sequence,
    is_connected,
    jellyfish,
)
from .graph6 import graph6_decode, graph6_encode

log = logging.getLogger(__name__)

DEFAULT_CAP = 10


@dataclass(frozen=True)
class SearchSpec:
    n: int
    m: int | None = None
    degree_sequence: tuple[int, ...] | None = None
    connected_only: bool = False
    matrix_kind: str = "signlessLaplacian"

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix_kind", KIND_ALIASES[self.matrix_kind])
        ds = self.degree_sequence
        if ds is not None:
            ds = tuple(sorted(ds, reverse=True))
            object.__setattr__(self, "degree_sequence", ds)
            if len(ds) != self.n:
                raise InvalidParams("degree sequence length must equal n")
            if sum(ds) % 2:
                raise InvalidParams("degree sequence sum must be even")
            if self.m is not None and sum(ds) != 2 * self.m:
                raise InvalidParams("degree sequence sum must equal 2m")


# -- enumeration ------------------------------------------------------------------


def _dominated(g: Graph, bound: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(sorted(g.degrees(), reverse=True), bound))


def _canonical_generators(cl: CanonicalLabeling) -> list[tuple[int, ...]]:
    lab = cl.labeling
    out = []
    for perm in cl.generators:
        moved = [0] * len(lab)
        for v, w in enumerate(perm):
            moved[lab[v]] = lab[w]
        out.append(tuple(moved))
    return out


def _non_edge_orbit_reps(g: Graph, gens: Sequence[tuple[int, ...]]) -> list[tuple[int, int]]:
    non_edges = [(u, v) for v in range(g.n) for u in range(v) if not g.rows[u] >> v & 1]
    if not gens:
        return non_edges
    index = {e: i for i, e in enumerate(non_edges)}
    parent = list(range(len(non_edges)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in gens:
        for i, (u, v) in enumerate(non_edges):
            a, b = perm[u], perm[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return [e for i, e in enumerate(non_edges) if find(i) == i]


def _add_edge(g: Graph, u: int, v: int) -> Graph:
    rows = list(g.rows)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def _levels(n: int, top: int, bound: tuple[int, ...] | None) -> Iterator[list[Graph]]:
    """Yield, for k = 0..top, the canonical representatives with k edges."""
    start = canonical_labeling(Graph(n, (0,) * n))
    level = {start.form: start}
    for k in range(top + 1):
        ordered = [level[f] for f in sorted(level)]
        yield [cl.graph for cl in ordered]
        if k == top:
            return
        nxt: dict[bytes, CanonicalLabeling] = {}
        for cl in ordered:
            g = cl.graph
            for u, v in _non_edge_orbit_reps(g, _canonical_generators(cl)):
                h = _add_edge(g, u, v)
                if bound is not None and not _dominated(h, bound):
                    continue
                ch = canonical_labeling(h)
                if ch.form not in nxt:
                    nxt[ch.form] = ch
        level = nxt
        log.debug("n=%d: %d classes with %d edges", n, len(level), k + 1)


def enumerate_graphs(spec: SearchSpec, cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    """One canonical representative per isomorphism class matching ``spec``.

    Order is deterministic: by edge count, then by canonical form.
    """
    n = spec.n
    if n > cap:
        raise CapExceeded(f"enumeration capped at n={cap}, got n={n}")
    if n < 0:
        raise InvalidParams("n must be non-negative")
    total = n * (n - 1) // 2
    ds = spec.degree_sequence
    m = spec.m if spec.m is not None else (sum(ds) // 2 if ds is not None else None)

    def keep(g: Graph) -> bool:
        if spec.connected_only and not is_connected(g):
            return False
        return ds is None or degree_sequence(g) == ds

    if m is not None:
        if not 0 <= m <= total:
            return
        if m <= total // 2 or ds is not None:
            for k, graphs in enumerate(_levels(n, m, ds)):
                if k == m:
                    yield from filter(keep, graphs)
            return
        # dense: complement of the sparse classes
        for k, graphs in enumerate(_levels(n, total - m, None)):
            if k == total - m:
                yield from filter(keep, _complement_classes(graphs))
        return

    half = total // 2
    stored: list[list[Graph]] = []
    for graphs in _levels(n, half, None):
        stored.append(graphs)
        yield from filter(keep, graphs)
    for k in range(half + 1, total + 1):
        yield from filter(keep, _complement_classes(stored[total - k]))


def _complement_classes(graphs: Iterable[Graph]) -> list[Graph]:
    cls = [canonical_labeling(complement(g)) for g in graphs]
    return [cl.graph for cl in sorted(cls, key=lambda c: c.form)]


# -- mate search -------------------------------------------------------------------


@dataclass
class MateReport:
    target: Graph
    matrix_kind: str
    fingerprint: CharPoly
    candidates_examined: int = 0
    char_poly_evaluations: int = 0
    isomorphic_hits: int = 0
    non_isomorphic_mates: list[str] = field(default_factory=list)

    @property
    def determined(self) -> bool:
        return not self.non_isomorphic_mates

    def to_dict(self) -> dict:
        return {
            "target": graph6_encode(self.target),
            "matrix_kind": self.matrix_kind,
            "fingerprint": list(self.fingerprint.coeffs),
            "candidates_examined": self.candidates_examined,
            "char_poly_evaluations": self.char_poly_evaluations,
            "isomorphic_hits": self.isomorphic_hits,
            "non_isomorphic_mates": list(self.non_isomorphic_mates),
        }

    def to_record(self) -> str:
        lines = [
            f"target={graph6_encode(self.target)}",
            f"matrix_kind={self.matrix_kind}",
            f"fingerprint={self.fingerprint.serialize()}",
            f"candidates_examined={self.candidates_examined}",
            f"char_poly_evaluations={self.char_poly_evaluations}",
            f"isomorphic_hits={self.isomorphic_hits}",
            f"mates={len(self.non_isomorphic_mates)}",
        ]
        lines += [f"mate={g6}" for g6 in self.non_isomorphic_mates]
        return "\n".join(lines)


@dataclass(frozen=True)
class _Necessary:
    """Invariants every graph cospectral with the target must share."""

    kind: str
    n: int
    m: int
    zagreb: int | None = None
    components: int | None = None
    spanning_trees: int | None = None
    triangles: int | None = None

    @classmethod
    def from_fingerprint(cls, cp: CharPoly, kind: str) -> _Necessary:
        n = cp.degree
        top = cp.top(4)
        if kind == "adjacency":
            # tr A = 0, tr A^2 = 2m, tr A^3 = 6 * triangles
            sums = power_sums(cp, 3)
            return cls(kind, n, sums[2] // 2, triangles=sums[3] // 6)
        # tr L = tr Q = 2m; tr L^2 = tr Q^2 = 2m + sum of squared degrees
        m = -top[1] // 2 if n >= 1 else 0
        zagreb = power_sums(cp, 2)[2] - 2 * m
        if kind == "signlessLaplacian":
            return cls(kind, n, m, zagreb=zagreb)
        # root 0 of L counts components; for a connected graph the linear
        # coefficient is (-1)^(n-1) * n * (number of spanning trees)
        comps = root_multiplicity(cp, 0)
        trees = None
        if comps == 1:
            trees = cp.coeffs[1] * (-1) ** (n - 1) // n
        return cls(kind, n, m, zagreb=zagreb, components=comps, spanning_trees=trees)

    def admits(self, g: Graph) -> bool:
        if g.n != self.n or g.m != self.m:
            return False
        if self.zagreb is not None and sum(d * d for d in g.degrees()) != self.zagreb:
            return False
        if self.triangles is not None and count_subgraphs(g)[0] != self.triangles:
            return False
        if self.components is not None:
            if len(components(g)) != self.components:
                return False
            if self.spanning_trees is not None and spanning_tree_count(g) != self.spanning_trees:
                return False
        return True


def _scan(args: tuple[str, str, tuple[int, ...], list[str]]) -> tuple[int, int, int, list[str]]:
    """Worker: scan graph6-encoded candidates; returns (evals, iso hits, mates...)."""
    kind, target_g6, fingerprint, batch = args
    target = graph6_decode(target_g6)
    return _scan_graphs(kind, target, CharPoly(fingerprint), (graph6_decode(s) for s in batch))


def _scan_graphs(kind: str, target: Graph, fp: CharPoly, graphs: Iterable[Graph]) -> tuple[int, int, int, list[str]]:
    need = _Necessary.from_fingerprint(fp, kind)
    target_form = canonical_form(target)
    seen = evals = hits = 0
    mates: dict[bytes, None] = {}
    for g in graphs:
        seen += 1
        if not need.admits(g):
            continue
        evals += 1
        if char_poly(graph_matrix(g, kind)) != fp:
            continue
        form = canonical_form(g)
        if form == target_form:
            hits += 1
        else:
            mates[form] = None
    return seen, evals, hits, [f.decode("ascii") for f in mates]


def find_mates(
    target: Graph,
    spec: SearchSpec | None = None,
    candidates: Iterable[Graph] | None = None,
    *,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
    prefilter: bool = True,
) -> MateReport:
    """All non-isomorphic graphs sharing the target's exact characteristic polynomial.

    Without ``candidates`` the search runs over every isomorphism class of the
    target's order; with ``prefilter`` the edge count is fixed from the trace
    before enumeration, which cannot exclude a genuine mate.
    """
    spec = spec or SearchSpec(target.n)
    if spec.n != target.n:
        raise InvalidParams(f"spec order {spec.n} differs from target order {target.n}")
    kind = spec.matrix_kind
    fp = char_poly(graph_matrix(target, kind))
    if candidates is None:
        if target.n > cap:
            raise CapExceeded(f"search capped at n={cap}; supply a candidate stream instead")
        m = spec.m
        if prefilter and m is None:
            m = _Necessary.from_fingerprint(fp, kind).m
        candidates = enumerate_graphs(
            SearchSpec(spec.n, m, spec.degree_sequence, spec.connected_only, kind), cap=cap
        )

    report = MateReport(target, kind, fp)
    if jobs <= 1:
        parts = [_scan_graphs(kind, target, fp, candidates)]
    else:
        # shard by the neighbourhood of vertex 0
        shards: list[list[str]] = [[] for _ in range(jobs)]
        for g in candidates:
            shards[(g.rows[0] if g.n else 0) % jobs].append(graph6_encode(g))
        work = [(kind, graph6_encode(target), fp.coeffs, shard) for shard in shards]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan, work))
    mates: set[str] = set()
    for seen, evals, hits, found in parts:
        report.candidates_examined += seen
        report.char_poly_evaluations += evals
        report.isomorphic_hits += hits
        mates.update(found)
    report.non_isomorphic_mates = sorted(mates)
    return report


def verify_determination(
    params: JellyfishParams | tuple[int, int],
    matrix_kind: str = "signlessLaplacian",
    *,
    cap: int = DEFAULT_CAP,
    jobs: int = 1,
) -> MateReport:
    """Exhaustive mate search for JFG(p, q) over all graphs of order q(p + 1)."""
    if not isinstance(params, JellyfishParams):
        params = JellyfishParams(*params)
    if params.order > cap:
        raise CapExceeded(f"JFG({params.p},{params.q}) has order {params.order} > cap {cap}")
    target = jellyfish(params)
    return find_mates(target, SearchSpec(target.n, matrix_kind=matrix_kind), cap=cap, jobs=jobs)


def jellyfish_params_of(g: Graph) -> JellyfishParams | None:
    """Recognise JFG(p, q) up to isomorphism; None if g is not a jellyfish graph."""
    if not is_connected(g) or g.m != g.n or g.n < 6:
        return None
    degs = g.degrees()
    core = [v for v in range(g.n) if degs[v] > 1]
    leaves = [v for v in range(g.n) if degs[v] == 1]
    if not core or len(core) + len(leaves) != g.n or g.n % len(core):
        return None
    q, p = len(core), g.n // len(core) - 1
    if q < 3 or p < 1:
        return None
    core_mask = sum(1 << v for v in core)
    for v in core:
        if (g.rows[v] & core_mask).bit_count() != 2 or degs[v] != p + 2:
            return None
    return JellyfishParams(p, q)


def degree_sequence_consequence_check(pairs: Iterable[tuple[Graph, Graph]], matrix_kind: str) -> bool:
    """For L- or Q-cospectral pairs with a jellyfish side, degree sequences must agree.

    Adjacency cospectrality does not preserve degrees, so adjacency pairs are
    outside the check and pass untouched.
    """
    kind = KIND_ALIASES[matrix_kind]
    if kind == "adjacency":
        return True
    for g, h in pairs:
        if jellyfish_params_of(g) is None and jellyfish_params_of(h) is None:
            continue
        if degree_sequence(g) != degree_sequence(h):
            return False
    return True


def conjecture_probe(p: int, q: int, *, cap: int = DEFAULT_CAP, jobs: int = 1) -> MateReport:
    """Laplacian mate search for an odd-cycle jellyfish.

    An empty mate list is evidence at this order, not a proof; any mate found
    is a counterexample certificate.
    """
    if q % 2 == 0:
        raise InvalidParams("the probe targets odd cycle lengths")
    return verify_determination(JellyfishParams(p, q), "laplacian", cap=cap, jobs=jobs)
