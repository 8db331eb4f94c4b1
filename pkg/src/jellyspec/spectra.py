"""Floating-point spectra: cyclic Jacobi eigensolver, closed forms, bound checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    Disconnected,
    InternalInconsistency,
    NoConvergence,
    NoEdges,
    NotProperSubgraph,
    NotSymmetric,
    PreconditionViolated,
)
from .exact import adjacency_matrix, graph_matrix, laplacian_matrix, signless_laplacian_matrix
from .graph import (
    Graph,
    JellyfishParams,
    bipartition,
    induced_subgraph,
    is_bipartite,
    is_connected,
    line_graph,
    remove_edges,
)

DEFAULT_TOL = 1e-7
MAX_SWEEPS = 60


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]
    multiplicities: tuple[int, ...]
    tol: float = DEFAULT_TOL
    eigenvalues: tuple[float, ...] = field(default=(), compare=False)

    @property
    def dimension(self) -> int:
        return sum(self.multiplicities)

    def multiplicity_of(self, x: float) -> int:
        for v, k in zip(self.values, self.multiplicities):
            if abs(v - x) <= self.tol * max(1.0, abs(x)):
                return k
        return 0

    def serialize(self) -> str:
        return " ".join(f"{v:.12g}×{k}" for v, k in zip(self.values, self.multiplicities))


def group_eigenvalues(eigs: Sequence[float], tol: float = DEFAULT_TOL) -> Spectrum:
    ordered = sorted((float(x) for x in eigs), reverse=True)
    scale = max([1.0] + [abs(x) for x in ordered])
    values: list[float] = []
    mults: list[int] = []
    group: list[float] = []
    for x in ordered:
        if group and group[-1] - x > tol * max(1.0, abs(x)):
            values.append(sum(group) / len(group))
            mults.append(len(group))
            group = []
        group.append(x)
    if group:
        values.append(sum(group) / len(group))
        mults.append(len(group))
    values = [0.0 if abs(v) < 1e-12 * scale else v for v in values]
    return Spectrum(tuple(values), tuple(mults), tol, tuple(ordered))


def jacobi_eigenvalues(m: Sequence[Sequence[float]]) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, non-increasing."""
    a = np.array(m, dtype=float)
    if a.size == 0:
        return np.zeros(0)
    n = a.shape[0]
    if a.shape != (n, n) or not np.array_equal(a, a.T):
        raise NotSymmetric("Jacobi iteration needs a square symmetric matrix")
    if n == 0:
        return a.diagonal().copy()
    norm = float(np.linalg.norm(a)) or 1.0
    target = (1e-15 * norm) ** 2
    for _ in range(MAX_SWEEPS):
        off = 2.0 * float(np.sum(np.triu(a, 1) ** 2))
        if off <= target:
            return np.sort(a.diagonal())[::-1]
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * norm:
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
    raise NoConvergence(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")


def sym_eigenvalues(m: Sequence[Sequence[float]], tol: float = DEFAULT_TOL) -> Spectrum:
    if tol <= 0:
        raise ValueError("tol must be positive")
    return group_eigenvalues(jacobi_eigenvalues(m), tol)


def graph_spectrum(g: Graph, kind: str, tol: float = DEFAULT_TOL) -> Spectrum:
    return sym_eigenvalues(graph_matrix(g, kind), tol)


def largest_eigenvalue(m: Sequence[Sequence[float]]) -> float:
    eigs = jacobi_eigenvalues(m)
    return float(eigs[0]) if len(eigs) else 0.0


# -- jellyfish closed forms ---------------------------------------------------------


@dataclass(frozen=True)
class ClosedFormQSpectrum:
    p: int
    q: int
    pairs: tuple[tuple[float, float], ...]
    ones: int

    def values(self) -> list[float]:
        out = [x for pair in self.pairs for x in pair] + [1.0] * self.ones
        return sorted(out, reverse=True)


def jellyfish_q_spectrum_closed_form(params: JellyfishParams | tuple[int, int]) -> ClosedFormQSpectrum:
    """Signless Laplacian spectrum of JFG(p, q) without diagonalising.

    Eliminating the p leaves of each cycle vertex leaves the cycle block
    (x - p - 2)I - A(C_q) - p/(x - 1) I, so every cycle eigenvalue
    lam = 2cos(2 pi i / q) yields the two roots of
    x^2 - (lam + p + 3) x + (lam + 2) = 0.  The remaining q(p-1)
    eigenvalues equal 1 (leaf vectors summing to zero at each cycle vertex).
    """
    if not isinstance(params, JellyfishParams):
        params = JellyfishParams(*params)
    p, q = params.p, params.q
    pairs = []
    for i in range(1, q + 1):
        lam = 2.0 * math.cos(2.0 * math.pi * i / q)
        root = math.sqrt(lam * lam + (2 * p + 2) * lam + p * p + 6 * p + 1)
        pairs.append(((lam + p + 3 + root) / 2.0, (lam + p + 3 - root) / 2.0))
    return ClosedFormQSpectrum(p, q, tuple(pairs), q * (p - 1))


def q1_closed_form(p: int) -> float:
    """Largest signless Laplacian eigenvalue of JFG(p, q); independent of q.

    This is the "+" root at lam = 2, i.e. (p + 5 + sqrt((p + 1)(p + 9))) / 2.
    """
    JellyfishParams(p, 3)
    return (p + 5 + math.sqrt(p * p + 10 * p + 9)) / 2.0


def jellyfish_mu1_interval(p: int) -> tuple[float, float]:
    """The interval [p + 3, p + 3 + 2/(p + 2)] claimed to contain mu_1 of JFG(p, q)."""
    JellyfishParams(p, 3)
    return p + 3.0, p + 3.0 + 2.0 / (p + 2)


# -- bounds ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mu1Bounds:
    lower: int
    upper: float | None
    mu1: float
    lower_equality: bool
    upper_equality: bool


def _is_biregular_bipartite(g: Graph) -> bool:
    sides = bipartition(g)
    if sides is None:
        return False
    return all(len({g.degree(v) for v in side}) <= 1 for side in sides)


def mu1_bounds(g: Graph, require_upper: bool = True, slack: float = 1e-9) -> Mu1Bounds:
    """Lower bound d1 + 1 and upper bound max_v(deg v + avg neighbour degree) on mu_1.

    The equality flags are combinatorial: the lower bound is tight exactly
    when some vertex dominates a connected graph, the upper bound exactly
    when the graph is bipartite with constant degree on each side.
    """
    degs = g.degrees()
    if g.m == 0:
        raise NoEdges("mu_1 bounds need at least one edge")
    connected = is_connected(g)
    if require_upper and not connected:
        raise Disconnected("the neighbour-degree upper bound needs a connected graph")
    mu1 = largest_eigenvalue(laplacian_matrix(g))
    lower = max(degs) + 1
    upper = None
    if connected:
        upper = max(d + sum(degs[u] for u in g.neighbors(v)) / d for v, d in enumerate(degs))
    if mu1 < lower - slack or (upper is not None and mu1 > upper + slack):
        raise InternalInconsistency(f"mu_1={mu1} escapes [{lower}, {upper}]")
    return Mu1Bounds(
        lower=lower,
        upper=upper,
        mu1=mu1,
        lower_equality=connected and max(degs) == g.n - 1,
        upper_equality=connected and _is_biregular_bipartite(g),
    )


def q1(g: Graph) -> float:
    return largest_eigenvalue(signless_laplacian_matrix(g))


def q1_subgraph_monotonicity_check(
    g: Graph,
    removed_edges: Sequence[tuple[int, int]] = (),
    removed_vertices: Sequence[int] = (),
    margin: float = 1e-9,
) -> bool:
    """True iff q1(g) > q1(h) + margin for the proper subgraph h described."""
    if not is_connected(g):
        raise Disconnected("monotonicity of q1 is stated for connected graphs")
    if not removed_edges and not removed_vertices:
        raise NotProperSubgraph("nothing removed; h would equal g")
    try:
        h = remove_edges(g, removed_edges)
    except Exception as exc:
        raise NotProperSubgraph(str(exc)) from exc
    gone = set(removed_vertices)
    if not gone <= set(range(g.n)):
        raise NotProperSubgraph("removed vertex outside the graph")
    h = induced_subgraph(h, [v for v in range(g.n) if v not in gone])
    return q1(g) > q1(h) + margin


def line_graph_shift_check(g: Graph, tol: float = 1e-8) -> bool:
    """mu_i(g) == lambda_i(line graph of g) + 2 for i = 1..n-1."""
    if not (is_connected(g) and g.m == g.n and is_bipartite(g)):
        raise PreconditionViolated("needs a connected bipartite unicyclic graph")
    mu = jacobi_eigenvalues(laplacian_matrix(g))
    lam = jacobi_eigenvalues(adjacency_matrix(line_graph(g)))
    k = g.n - 1
    return bool(np.all(np.abs(mu[:k] - (lam[:k] + 2.0)) <= tol))
