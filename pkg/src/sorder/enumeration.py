"""Isomorphism-free generation of connected graphs by canonical augmentation.

A graph on n vertices is produced from the graph obtained by deleting its
canonical vertex: among the vertices of largest (degree, sum of neighbor
degrees), the one nauty labels last. A child made by adding vertex ``n-1``
is kept only when that vertex is in the orbit of the canonical vertex, so
each isomorphism class has exactly one parent class. Isomorphic children of
one parent (neighbor sets related by a parent automorphism) are removed with
a per-parent certificate set.
"""

from __future__ import annotations

import functools
import logging
import multiprocessing
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import pynauty

from .graph_core import (
    Graph,
    certificate,
    clique_number,
    from_graph6,
    is_k_colorable,
    iter_bits,
    popcount,
    to_graph6,
)

log = logging.getLogger(__name__)

MAX_N = 9
MAX_N_EXPENSIVE = 10


def _nauty(n: int, adj: Sequence[int]) -> pynauty.Graph:
    return pynauty.Graph(n, adjacency_dict={v: list(iter_bits(adj[v])) for v in range(n)})


def _clique_within(adj: Sequence[int], cand: int) -> int:
    """Clique number of the subgraph induced on ``cand``."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + popcount(cand) <= best:
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & adj[v])

    expand(0, cand)
    return best


def _children(
    parent: tuple[int, ...],
    connected: bool,
    max_clique: int | None,
) -> list[tuple[int, ...]]:
    m = len(parent)
    n = m + 1
    new = m
    deg = [popcount(r) for r in parent]
    maxd = max(deg, default=0)
    top = 0
    for u in range(m):
        if deg[u] == maxd:
            top |= 1 << u
    comps: list[int] = []
    if connected and m:
        seen = 0
        for s in range(m):
            if seen >> s & 1:
                continue
            comp = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= parent[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
    aut_trivial = True
    if m > 1:
        _, mant, exp, _, _ = pynauty.autgrp(_nauty(m, parent))
        aut_trivial = mant == 1.0 and exp == 0
    seen_certs: set[bytes] = set()
    out = []
    for nb in range(1 << m):
        d = popcount(nb)
        others_max = maxd + 1 if nb & top else maxd
        if d < others_max:
            continue
        if connected and (n > 1) and not all(nb & c for c in comps):
            continue
        if max_clique is not None and d and 1 + _clique_within(parent, nb) > max_clique:
            continue
        rows = list(parent)
        for u in iter_bits(nb):
            rows[u] |= 1 << new
        rows.append(nb)
        if d == others_max:
            degc = [popcount(r) for r in rows]
            inv = [
                sum(degc[w] for w in iter_bits(rows[u])) if degc[u] == d else -1
                for u in range(n)
            ]
            best = max(inv)
            if inv[new] < best:
                continue
            cands = [u for u in range(n) if inv[u] == best]
            if len(cands) > 1:
                g = _nauty(n, rows)
                lab = pynauty.canon_label(g)
                pos = {x: i for i, x in enumerate(lab)}
                chosen = max(cands, key=pos.__getitem__)
                if chosen != new:
                    orbits = pynauty.autgrp(g)[3]
                    if orbits[chosen] != orbits[new]:
                        continue
        if not aut_trivial:
            cert = pynauty.certificate(_nauty(n, rows))
            if cert in seen_certs:
                continue
            seen_certs.add(cert)
        out.append(tuple(rows))
    return out


def _check_n(n: int, expensive: bool) -> None:
    cap = MAX_N_EXPENSIVE if expensive else MAX_N
    if not 1 <= n <= cap:
        hint = "" if expensive or n > MAX_N_EXPENSIVE else " (n = 10 needs expensive=True)"
        raise ValueError(f"full enumeration supports 1 <= n <= {cap}, got {n}{hint}")


@functools.lru_cache(maxsize=None)
def _all_graphs(n: int, max_clique: int | None) -> tuple[tuple[int, ...], ...]:
    """Every graph (connected or not) on n vertices, one per class."""
    if n == 0:
        return ((),)
    out = []
    for parent in _all_graphs(n - 1, max_clique):
        out.extend(_children(parent, False, max_clique))
    return tuple(out)


def _shard_worker(args: tuple[int, int | None, int, int]) -> list[tuple[int, ...]]:
    n, max_clique, index, count = args
    return list(_connected_rows(n, max_clique, (index, count)))


def _connected_rows(
    n: int, max_clique: int | None, shard: tuple[int, int] | None = None
) -> Iterator[tuple[int, ...]]:
    parents = _all_graphs(n - 1, max_clique)
    index, count = shard or (0, 1)
    for pi in range(index, len(parents), count):
        yield from _children(parents[pi], True, max_clique)


def enumerate_connected(
    n: int,
    *,
    max_clique: int | None = None,
    shard: tuple[int, int] | None = None,
    jobs: int = 1,
    expensive: bool = False,
) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on n vertices.

    ``max_clique`` restricts output to clique number <= max_clique; the bound
    is applied during generation (clique number never drops when a vertex is
    added). ``shard=(i, m)`` yields only the subtree under parents with
    index = i mod m. With ``jobs > 1`` the shards run in worker processes and
    are concatenated in shard order.
    """
    _check_n(n, expensive)
    if max_clique is not None and max_clique < 1:
        raise ValueError("max_clique must be >= 1")
    if jobs > 1 and shard is None:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(jobs) as pool:
            parts = pool.map(_shard_worker, [(n, max_clique, i, jobs) for i in range(jobs)])
        for part in parts:
            for rows in part:
                yield Graph._trusted(n, rows)
        return
    for rows in _connected_rows(n, max_clique, shard):
        yield Graph._trusted(n, rows)


def connected_graphs_by_edges(max_edges: int) -> dict[int, list[Graph]]:
    """Connected graphs with 1..max_edges edges (any order), keyed by edge count.

    Level m+1 comes from level m by adding a pendant vertex or an edge between
    two nonadjacent vertices; every connected graph with m+1 edges has a
    non-bridge edge or a leaf edge whose removal leaves a connected graph.
    """
    levels: dict[int, list[Graph]] = {1: [Graph.from_edges(2, [(0, 1)])]}
    for m in range(1, max_edges):
        found: dict[bytes, Graph] = {}
        for g in levels[m]:
            for v in range(g.n):
                rows = list(g.adj) + [1 << v]
                rows[v] |= 1 << g.n
                child = Graph._trusted(g.n + 1, tuple(rows))
                found.setdefault(certificate(child), child)
                for u in range(v + 1, g.n):
                    if not g.adj[v] >> u & 1:
                        rows = list(g.adj)
                        rows[v] |= 1 << u
                        rows[u] |= 1 << v
                        child = Graph._trusted(g.n, tuple(rows))
                        found.setdefault(certificate(child), child)
        levels[m + 1] = list(found.values())
    return {m: levels[m] for m in range(1, max_edges + 1)}


@dataclass(frozen=True)
class EnumerationTask:
    """A class of connected graphs on n vertices; filters combine with AND."""

    n: int
    clique: int | None = None
    chromatic: int | None = None
    edges: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        low = 2 if self.n >= 2 else 1
        for name, val in (("clique", self.clique), ("chromatic", self.chromatic)):
            if val is not None and not low <= val <= self.n:
                raise ValueError(f"{name} must be in {low}..{self.n}, got {val}")
        if self.edges is not None and not 0 <= self.edges <= self.n * (self.n - 1) // 2:
            raise ValueError(f"edge count {self.edges} impossible for n={self.n}")

    def key(self) -> str:
        parts = [f"n{self.n}"]
        if self.clique is not None:
            parts.append(f"clique{self.clique}")
        if self.chromatic is not None:
            parts.append(f"chi{self.chromatic}")
        if self.edges is not None:
            parts.append(f"m{self.edges}")
        if len(parts) == 1:
            parts.append("all")
        return "-".join(parts)

    def accepts(self, g: Graph) -> bool:
        if self.edges is not None and g.num_edges != self.edges:
            return False
        omega = None
        if self.clique is not None:
            omega = clique_number(g)
            if omega != self.clique:
                return False
        if self.chromatic is not None:
            if omega is None:
                omega = clique_number(g)
            if omega > self.chromatic:
                return False
            if not is_k_colorable(g, self.chromatic):
                return False
            if omega < self.chromatic and is_k_colorable(g, self.chromatic - 1):
                return False
        return True


def enumerate_class(task: EnumerationTask, *, jobs: int = 1, expensive: bool = False) -> Iterator[Graph]:
    bound = None
    for val in (task.clique, task.chromatic):
        if val is not None:
            bound = val if bound is None else min(bound, val)
    source = _cached_connected(task.n, bound, jobs, expensive)
    for g in source:
        if task.accepts(g):
            yield g


@functools.lru_cache(maxsize=8)
def _cached_connected(n: int, max_clique: int | None, jobs: int, expensive: bool) -> tuple[Graph, ...]:
    _check_n(n, expensive)
    if max_clique is not None and n >= 8:
        # one shared full run beats several barely-pruned ones at this size
        return _cached_connected(n, None, jobs, expensive)
    return tuple(enumerate_connected(n, max_clique=max_clique, jobs=jobs, expensive=expensive))


# catalog files --------------------------------------------------------------


def write_catalog(path: str | os.PathLike, graphs: Iterable[Graph]) -> int:
    """Newline-delimited graph6; written atomically. Returns the graph count."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    count = 0
    with open(tmp, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g))
            fh.write("\n")
            count += 1
    os.replace(tmp, path)
    return count


def read_catalog(path: str | os.PathLike) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [from_graph6(line) for line in fh if line.strip()]


def load_class(
    task: EnumerationTask,
    cache_dir: str | os.PathLike | None = None,
    *,
    jobs: int = 1,
    expensive: bool = False,
) -> list[Graph]:
    """The filtered class, read from ``cache_dir`` when a catalog exists there."""
    if cache_dir is not None:
        path = Path(cache_dir) / f"{task.key()}.g6"
        if path.exists():
            return read_catalog(path)
    graphs = list(enumerate_class(task, jobs=jobs, expensive=expensive))
    if cache_dir is not None:
        write_catalog(path, graphs)
        log.info("wrote %d graphs to %s", len(graphs), path)
    return graphs

