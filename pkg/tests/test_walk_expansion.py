import itertools
import json

import pytest

from conftest import to_graph
from sorder.families import complete, cycle, kite, path, star
from sorder.graph_core import Graph, canonical_form, from_graph6
from sorder.moments import closed_walk_counts
from sorder.walk_expansion import (
    CATALOG_VERSION,
    ExpansionCatalog,
    Pattern,
    bridge_count,
    classify_effective,
    count_embeddings,
    count_subgraphs,
    covering_walk_count,
    derive_catalog,
    get_catalog,
    load_catalog,
    moment_via_expansion,
    save_catalog,
)

# multisets derived here and cross-checked below by inclusion-exclusion
FROZEN = {
    4: [2, 4, 8],
    5: [10, 10, 30],
    6: [2, 6, 12, 12, 12, 12, 24, 24, 36, 48],
    7: [14, 14, 14, 14, 28, 28, 42, 70, 84, 84, 112, 126],
    8: [2, 8, 16, 16, 16, 16, 16, 16, 28, 32, 32, 32, 32, 32, 32, 48, 48, 48, 48,
        64, 64, 64, 72, 96, 96, 96, 96, 112, 128, 168, 192, 264, 320, 464, 528],
}


def covering_oracle(f: Graph, k: int) -> int:
    """Inclusion-exclusion over edge subsets: walks using exactly all edges."""
    edges = f.edges()
    total = 0
    for r in range(len(edges) + 1):
        for keep in itertools.combinations(edges, r):
            sign = -1 if (len(edges) - r) % 2 else 1
            total += sign * closed_walk_counts(Graph.from_edges(f.n, keep), k)[k]
    return total


def walk_oracle(f: Graph, k: int) -> int:
    """Enumerate closed k-walks directly and keep those covering every edge."""
    need = set(f.edges())
    count = 0

    def step(start, v, left, used):
        nonlocal count
        if left == 0:
            if v == start and used == need:
                count += 1
            return
        for u in f.neighbors(v):
            step(start, u, left - 1, used | {(min(u, v), max(u, v))})

    for s in range(f.n):
        step(s, s, k, frozenset())
    return count


def test_subgraph_counts_known_values():
    assert count_subgraphs(complete(4), cycle(4)) == 3
    assert count_subgraphs(complete(4), path(3)) == 12
    assert count_subgraphs(complete(5), complete(3)) == 10
    assert count_subgraphs(star(6), star(4)) == 10
    assert count_subgraphs(path(3), cycle(3)) == 0
    assert count_embeddings(cycle(5), cycle(5)) == 10
    assert Pattern.from_graph(complete(4)).automorphism_count == 24
    with pytest.raises(ValueError):
        Pattern.from_graph(Graph.from_edges(3, [(0, 1)]))


def test_subgraph_counts_match_networkx(connected_atlas):
    import networkx as nx
    from networkx.algorithms import isomorphism

    host = to_graph(nx.petersen_graph())
    for f in [g for g in connected_atlas if 2 <= g.n <= 5][:40]:
        gm = isomorphism.GraphMatcher(
            nx.Graph(host.edges()), nx.Graph(f.edges())
        )
        mono = sum(1 for _ in gm.subgraph_monomorphisms_iter())
        assert count_embeddings(host, f) == mono


def test_bridges():
    assert bridge_count(path(5)) == 4
    assert bridge_count(cycle(5)) == 0
    assert bridge_count(kite(6, 4)) == 2


def test_covering_walk_known_values():
    assert covering_walk_count(path(2), 4) == 2
    assert covering_walk_count(path(3), 4) == 4
    assert covering_walk_count(cycle(4), 4) == 8
    assert covering_walk_count(complete(4), 8) == 528
    assert covering_walk_count(cycle(3), 4) == 0
    assert covering_walk_count(Graph.from_edges(1, []), 0) == 1


def test_covering_walk_matches_oracles(connected_atlas):
    pats = [g for g in connected_atlas if 2 <= g.n <= 5 and g.num_edges <= 6]
    for f in pats:
        for k in range(2, 8):
            assert covering_walk_count(f, k) == covering_oracle(f, k)
    for g6 in ("DF{", "DK{", "DL{", "DFw"):
        f = from_graph6(g6)
        assert covering_walk_count(f, 8) == walk_oracle(f, 8)


def test_catalog_lengths_and_multisets():
    for k, want in FROZEN.items():
        got = sorted(c for _, c in derive_catalog(k).entries)
        assert got == want


def test_catalog_entries_match_inclusion_exclusion():
    for k in (6, 7, 8):
        for p, c in derive_catalog(k).entries:
            assert covering_oracle(p.graph, k) == c


def test_small_catalog_patterns():
    assert derive_catalog(4).coefficients() == {
        canonical_form(path(2)): 2,
        canonical_form(path(3)): 4,
        canonical_form(cycle(4)): 8,
    }
    five = derive_catalog(5).coefficients()
    assert five[canonical_form(cycle(3))] == 30
    assert five[canonical_form(cycle(5))] == 10
    assert derive_catalog(8).coefficients()[canonical_form(complete(4))] == 528


def test_classification():
    trees, cyclic = classify_effective(derive_catalog(4))
    assert trees == {canonical_form(path(2)), canonical_form(path(3))}
    assert cyclic == {canonical_form(cycle(4))}
    trees, cyclic = classify_effective(derive_catalog(6))
    assert trees == {canonical_form(g) for g in (path(2), path(3), path(4), star(4))}
    assert {canonical_form(cycle(c)) for c in (3, 4, 6)} <= cyclic
    for k in (3, 5, 7):
        assert classify_effective(derive_catalog(k))[0] == set()


def test_pattern_edge_bounds():
    for k in range(2, 9):
        for p, _ in derive_catalog(k).entries:
            if p.is_tree:
                assert p.graph.num_edges <= k // 2
            else:
                assert p.graph.num_edges <= k


def test_expansion_equals_trace(connected_atlas):
    graphs = [g for g in connected_atlas if 2 <= g.n <= 6]
    for k in range(2, 9):
        cat = derive_catalog(k)
        for g in graphs:
            assert moment_via_expansion(g, k, cat) == closed_walk_counts(g, k)[k]


def test_expansion_edge_cases():
    assert moment_via_expansion(cycle(5), 0) == 5
    assert moment_via_expansion(cycle(5), 1) == 0
    with pytest.raises(ValueError):
        moment_via_expansion(cycle(5), 5, derive_catalog(4))
    with pytest.raises(ValueError):
        derive_catalog(11)
    with pytest.raises(ValueError):
        derive_catalog(1)


def test_catalog_round_trip(tmp_path):
    cat = derive_catalog(6)
    path_ = tmp_path / "cat.json"
    save_catalog(cat, path_)
    assert load_catalog(path_) == cat
    obj = json.loads(path_.read_text())
    assert obj["version"] == CATALOG_VERSION and obj["k"] == 6
    assert ExpansionCatalog.from_json(obj) == cat
    bad = dict(obj, version=99)
    with pytest.raises(ValueError):
        ExpansionCatalog.from_json(bad)
    bad = dict(obj, entries=[{"g6": "A_", "coeff": 0}])
    with pytest.raises(ValueError):
        ExpansionCatalog.from_json(bad)


def test_get_catalog_uses_cache(tmp_path):
    cat = get_catalog(5, tmp_path)
    f = tmp_path / "expansion-k5.json"
    assert f.exists()
    assert get_catalog(5, tmp_path) == cat
    f.write_text("not json")
    assert get_catalog(5, tmp_path) == cat  # rebuilt
    assert json.loads(f.read_text())["k"] == 5


def test_derivation_parallel_matches_serial():
    assert derive_catalog(7, jobs=2) == derive_catalog(7)
