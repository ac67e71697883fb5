import itertools
import random

import networkx as nx
import pytest

from sorder.graph_core import Graph

ACCEPTANCE_LINES: list[str] = []


def to_graph(g: nx.Graph) -> Graph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(index[u], index[v]) for u, v in g.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


@pytest.fixture(scope="session")
def atlas():
    """Every graph on 1..7 vertices, one per isomorphism class (networkx atlas)."""
    return [to_graph(g) for g in nx.graph_atlas_g()[1:]]


@pytest.fixture(scope="session")
def connected_atlas(atlas):
    return [g for g in atlas if nx.is_connected(to_nx(g))]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
