"""Graph invariants consumed by the determination arguments, and cospectrality tests."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations

from .errors import InternalInconsistency
from .exact import (
    adjacency_matrix,
    char_poly,
    determinant_q,
    graph_matrix,
    mat_mul,
    signless_laplacian_matrix,
    spanning_tree_count,
    trace,
)
from .graph import (
    Graph,
    bipartite_component_count,
    count_subgraphs,
    cyclomatic_number,
    degree_sequence,
    is_connected,
    line_graph,
)


def zagreb_index(g: Graph) -> int:
    return sum(d * d for d in g.degrees())


def walk_counts(g: Graph) -> tuple[int, int, int]:
    """Closed walks of length 2, 3, 4 from subgraph counts, checked against tr(A^k)."""
    triangles, p3, c4 = count_subgraphs(g)
    m = g.m
    formula = (2 * m, 6 * triangles, 2 * m + 4 * p3 + 8 * c4)
    a = adjacency_matrix(g)
    a2 = mat_mul(a, a)
    a3 = mat_mul(a2, a)
    traced = (trace(a2), trace(a3), sum(x * x for row in a2 for x in row))  # tr A^4 = |A^2|_F^2
    if formula != traced:
        raise InternalInconsistency(f"walk formulas {formula} disagree with traces {traced}")
    return formula


@dataclass(frozen=True)
class InvariantSummary:
    n: int
    m: int
    zagreb: int
    walk2: int
    walk3: int
    walk4: int
    det_q: int
    spanning_trees: int | None
    degree_sequence: tuple[int, ...]
    bipartite_components: int
    cyclomatic: int | None

    def to_record(self) -> str:
        out = []
        for key, value in asdict(self).items():
            if isinstance(value, (tuple, list)):
                value = ",".join(map(str, value))
            elif value is None:
                value = "-"
            out.append(f"{key}={value}")
        return "\n".join(out)

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def invariant_summary(g: Graph) -> InvariantSummary:
    w2, w3, w4 = walk_counts(g)
    connected = is_connected(g)
    return InvariantSummary(
        n=g.n,
        m=g.m,
        zagreb=zagreb_index(g),
        walk2=w2,
        walk3=w3,
        walk4=w4,
        det_q=determinant_q(g),
        spanning_trees=spanning_tree_count(g) if connected else None,
        degree_sequence=degree_sequence(g),
        bipartite_components=bipartite_component_count(g),
        cyclomatic=cyclomatic_number(g) if connected else None,
    )


# -- cospectrality ----------------------------------------------------------------


def cospectral(g: Graph, h: Graph, kind: str) -> bool:
    """Equality of exact characteristic polynomials; different orders give False."""
    if g.n != h.n:
        return False
    return char_poly(graph_matrix(g, kind)) == char_poly(graph_matrix(h, kind))


def a_cospectral(g: Graph, h: Graph) -> bool:
    return cospectral(g, h, "adjacency")


def l_cospectral(g: Graph, h: Graph) -> bool:
    return cospectral(g, h, "laplacian")


def q_cospectral(g: Graph, h: Graph) -> bool:
    return cospectral(g, h, "signlessLaplacian")


def line_graph_cospectrality_check(g: Graph, h: Graph) -> bool:
    """Q-cospectral graphs have A-cospectral line graphs, and conversely for equal n, m."""
    qc = q_cospectral(g, h)
    lc = a_cospectral(line_graph(g), line_graph(h)) if g.m == h.m else False
    if qc and not lc:
        return False
    if g.n == h.n and g.m == h.m and lc and not qc:
        return False
    return True


def twin_vertex_eigenvalue_check(g: Graph) -> list[tuple[tuple[int, int], int, bool]]:
    """Non-adjacent vertices with equal neighbourhoods force their degree into Spec Q."""
    cp = None
    out = []
    for u, v in combinations(range(g.n), 2):
        if g.rows[u] == g.rows[v] and not g.has_edge(u, v):
            if cp is None:
                cp = char_poly(signless_laplacian_matrix(g))
            r = g.degree(u)
            out.append(((u, v), r, cp(r) == 0))
    return out
