"""Closed-walk counts expanded over connected pattern graphs.

For a walk length k, every closed k-walk in G traces out a connected
subgraph F of G (the edges it uses). Grouping walks by that subgraph gives

    S_k(G) = sum_F c(F, k) * phi_G(F)

where phi_G(F) counts (not necessarily induced) copies of F in G and c(F, k)
is the number of closed k-walks in F itself that use every edge of F.
The catalog of (F, c(F, k)) is derived here by brute force.
"""

from __future__ import annotations

import functools
import json
import os
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .enumeration import connected_graphs_by_edges
from .graph_core import CanonicalForm, Graph, canonical_graph, from_graph6, is_connected, iter_bits, popcount

CATALOG_VERSION = 1
MIN_K, MAX_K = 2, 10


def count_embeddings(g: Graph, f: Graph) -> int:
    """Injective vertex maps f -> g that send every edge of f to an edge of g."""
    if f.n > g.n:
        return 0
    # place pattern vertices so each (after the first of its component) has a placed neighbor
    order: list[int] = []
    placed = 0
    while len(order) < f.n:
        start = max((v for v in range(f.n) if not placed >> v & 1), key=f.degree)
        order.append(start)
        placed |= 1 << start
        i = len(order) - 1
        while i < len(order):
            for u in sorted(iter_bits(f.adj[order[i]] & ~placed), key=f.degree, reverse=True):
                order.append(u)
                placed |= 1 << u
            i += 1
    back = []
    for i, v in enumerate(order):
        back.append([j for j in range(i) if f.adj[v] >> order[j] & 1])
    fdeg = [f.degree(v) for v in order]
    gdeg = g.degrees()
    gadj = g.adj
    everything = (1 << g.n) - 1
    by_degree = [0] * (g.n + 1)
    for x in range(g.n):
        for d in range(gdeg[x] + 1):
            by_degree[d] |= 1 << x
    image = [0] * f.n
    depth_last = f.n - 1

    def extend(i: int, used: int) -> int:
        cand = everything & ~used & (by_degree[fdeg[i]] if fdeg[i] <= g.n else 0)
        for j in back[i]:
            cand &= gadj[image[j]]
        if i == depth_last:
            return popcount(cand)
        total = 0
        for x in iter_bits(cand):
            image[i] = x
            total += extend(i + 1, used | 1 << x)
        return total

    return extend(0, 0)


@dataclass(frozen=True)
class Pattern:
    graph: Graph
    automorphism_count: int

    @classmethod
    def from_graph(cls, f: Graph) -> "Pattern":
        if not is_connected(f):
            raise ValueError("patterns must be connected")
        return cls(f, count_embeddings(f, f))

    @property
    def g6(self) -> str:
        return self.graph.to_graph6()

    @property
    def is_tree(self) -> bool:
        return self.graph.num_edges == self.graph.n - 1


def count_subgraphs(g: Graph, f: Pattern | Graph) -> int:
    """Number of subgraphs of ``g`` isomorphic to ``f`` (copies, not induced)."""
    if isinstance(f, Graph):
        f = Pattern.from_graph(f)
    return count_embeddings(g, f.graph) // f.automorphism_count


def bridge_count(f: Graph) -> int:
    total = 0
    for u, v in f.edges():
        rows = list(f.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        if not is_connected(Graph._trusted(f.n, tuple(rows))):
            total += 1
    return total


def covering_walk_count(f: Graph, k: int) -> int:
    """Closed k-walks in ``f`` (any start vertex) that traverse every edge.

    Dynamic program over (start, current vertex, set of edges used so far).
    """
    edges = f.edges()
    m = len(edges)
    n = f.n
    if m == 0:
        return n if k == 0 else 0
    if m > MAX_K:
        raise ValueError("coverage DP supports at most 10 edges")
    if n * max(n - 1, 1) ** k > 2**62:
        raise ValueError("walk counts would overflow int64")
    size = 1 << m
    masks = np.arange(size)
    state = np.zeros((n, n, size), dtype=np.int64)
    for s in range(n):
        state[s, s, 0] = 1
    without = [masks[(masks >> b) & 1 == 0] for b in range(m)]
    for _ in range(k):
        nxt = np.zeros_like(state)
        for b, (a, c) in enumerate(edges):
            lo = without[b]
            hi = lo | (1 << b)
            for x, y in ((a, c), (c, a)):
                nxt[:, y, hi] += state[:, x, lo] + state[:, x, hi]
        state = nxt
    full = size - 1
    return int(sum(state[s, s, full] for s in range(n)))


@dataclass(frozen=True)
class ExpansionCatalog:
    k: int
    entries: tuple[tuple[Pattern, int], ...]  # sorted by pattern graph6

    def coefficients(self) -> dict[str, int]:
        return {p.g6: c for p, c in self.entries}

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "version": CATALOG_VERSION,
            "entries": [{"g6": p.g6, "coeff": c} for p, c in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExpansionCatalog":
        if obj.get("version", CATALOG_VERSION) != CATALOG_VERSION:
            raise ValueError(f"unsupported catalog version {obj.get('version')}")
        entries = []
        for item in obj["entries"]:
            coeff = int(item["coeff"])
            if coeff <= 0:
                raise ValueError("catalog coefficients must be positive")
            entries.append((Pattern.from_graph(from_graph6(item["g6"])), coeff))
        entries.sort(key=lambda e: e[0].g6.encode())
        return cls(int(obj["k"]), tuple(entries))


def _coefficient_entry(args: tuple[Graph, int]) -> tuple[Pattern, int] | None:
    f, k = args
    coeff = covering_walk_count(f, k)
    if coeff <= 0:
        return None
    return Pattern.from_graph(canonical_graph(f)), coeff


def derive_catalog(k: int, jobs: int = 1) -> ExpansionCatalog:
    """Every connected F with c(F, k) > 0, with its coefficient.

    Candidates are all connected graphs with at most k edges; those with
    edges + bridges > k are skipped because a closed walk crosses each bridge
    at least twice.
    """
    if not MIN_K <= k <= MAX_K:
        raise ValueError(f"walk length must be in {MIN_K}..{MAX_K}, got {k}")
    candidates = [
        (f, k)
        for graphs in connected_graphs_by_edges(k).values()
        for f in graphs
        if f.num_edges + bridge_count(f) <= k
    ]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            results = pool.map(_coefficient_entry, candidates)
    else:
        results = [_coefficient_entry(c) for c in candidates]
    entries = sorted((r for r in results if r is not None), key=lambda e: e[0].g6.encode())
    return ExpansionCatalog(k, tuple(entries))


def save_catalog(catalog: ExpansionCatalog, path: str | os.PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(catalog.to_json(), indent=1) + "\n")
    os.replace(tmp, path)


def load_catalog(path: str | os.PathLike) -> ExpansionCatalog:
    return ExpansionCatalog.from_json(json.loads(Path(path).read_text()))


@functools.lru_cache(maxsize=None)
def _memory_catalog(k: int) -> ExpansionCatalog:
    return derive_catalog(k)


def get_catalog(k: int, cache_dir: str | os.PathLike | None = None) -> ExpansionCatalog:
    """Catalog for k, from ``cache_dir/expansion-k{k}.json`` if present, else derived."""
    if cache_dir is None:
        return _memory_catalog(k)
    path = Path(cache_dir) / f"expansion-k{k}.json"
    if path.exists():
        try:
            return load_catalog(path)
        except (ValueError, KeyError, json.JSONDecodeError):
            pass  # stale or foreign file: rebuild below
    catalog = _memory_catalog(k)
    save_catalog(catalog, path)
    return catalog


def moment_via_expansion(g: Graph, k: int, catalog: ExpansionCatalog | None = None) -> int:
    if k == 0:
        return g.n
    if k == 1:
        return 0
    catalog = catalog or get_catalog(k)
    if catalog.k != k:
        raise ValueError(f"catalog is for k={catalog.k}, not {k}")
    return sum(c * count_subgraphs(g, p) for p, c in catalog.entries)


def classify_effective(catalog: ExpansionCatalog) -> tuple[set[CanonicalForm], set[CanonicalForm]]:
    """Split catalog patterns into (trees, cycle-containing graphs)."""
    trees, cyclic = set(), set()
    for p, _ in catalog.entries:
        (trees if p.is_tree else cyclic).add(CanonicalForm(p.g6))
    return trees, cyclic


def coefficient_multiset(catalog: ExpansionCatalog) -> list[int]:
    return sorted(c for _, c in catalog.entries)

