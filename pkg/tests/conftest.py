from __future__ import annotations

import random
from collections import defaultdict
from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import strategies as st

from jellyspec.graph import Graph, build_graph
from jellyspec.search import SearchSpec, enumerate_graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return build_graph(h.number_of_nodes(), list(h.edges()))


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return build_graph(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus random extra edges."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    extra = rng.random() * 0.5
    for v in range(n):
        for u in range(v):
            if rng.random() < extra:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return build_graph(n, [(perm[u], perm[v]) for u, v in edges])


def random_unicyclic_bipartite(rng: random.Random, n_max: int = 12) -> Graph:
    k = rng.choice([c for c in range(4, n_max + 1, 2)])
    n = rng.randint(k, n_max)
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(rng.randrange(v), v) for v in range(k, n)]
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_graphs(SearchSpec(n)))


def orbit_census(n: int) -> dict[tuple[int, bool], int]:
    """Isomorphism classes by (edge count, connected), marking whole permutation orbits of labeled graphs."""
    pairs = list(combinations(range(n), 2))
    index = {e: i for i, e in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs])
    seen = bytearray(1 << len(pairs))
    counts: dict[tuple[int, bool], int] = defaultdict(int)
    for mask in range(1 << len(pairs)):
        if seen[mask]:
            continue
        for pm in perm_maps:
            image = 0
            for i, j in enumerate(pm):
                if mask >> i & 1:
                    image |= 1 << j
            seen[image] = 1
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(e for i, e in enumerate(pairs) if mask >> i & 1)
        counts[bin(mask).count("1"), n <= 1 or nx.is_connected(h)] += 1
    return counts


@st.composite
def graphs(draw, max_n: int = 10, min_n: int = 0) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the multi-minute exhaustive sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: multi-minute exhaustive sweep, enabled by --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance(capsys):
    """Print one PASS/FAIL line immediately and again in the closing summary."""

    def emit(passed: bool, text: str) -> bool:
        line = f"{'PASS' if passed else 'FAIL'} {text}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print(f"\n    {line}", end="")
        return passed

    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
