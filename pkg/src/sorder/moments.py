"""Exact spectral moments (closed-walk counts) and the lexicographic S-order."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph_core import Graph, canonical_form, count_triangles, iter_bits

_INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class MomentSequence:
    """``values[k]`` is the number of closed walks of length ``k``, k = 0..n-1."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __iter__(self):
        return iter(self.values)


class Order(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


@dataclass(frozen=True)
class SOrderOutcome:
    order: Order
    index: int | None = None  # first differing moment, None when equal


def closed_walk_counts(g: Graph, kmax: int) -> list[int]:
    """Traces of A^0..A^kmax with arbitrary-precision integers.

    One integer vector chain per start vertex: x <- A x, reading off x[s].
    """
    n = g.n
    nbrs = [list(iter_bits(r)) for r in g.adj]
    totals = [0] * (kmax + 1)
    totals[0] = n
    for s in range(n):
        x = [0] * n
        x[s] = 1
        for k in range(1, kmax + 1):
            x = [sum(x[u] for u in nbrs[v]) for v in range(n)]
            totals[k] += x[s]
    return totals


def _fits_int64(n: int, kmax: int) -> bool:
    return n * max(n - 1, 1) ** kmax <= _INT64_MAX


def spectral_moments(g: Graph) -> MomentSequence:
    values = closed_walk_counts(g, g.n - 1)
    expected = [g.n, 0, 2 * g.num_edges, 6 * count_triangles(g)]
    for k in range(min(4, g.n)):
        if values[k] != expected[k]:
            raise AssertionError(f"S_{k} = {values[k]} disagrees with closed form {expected[k]}")
    return MomentSequence(tuple(values))


def spectral_moment_at(g: Graph, k: int) -> int:
    if k < 0:
        raise ValueError("moment index must be nonnegative")
    return closed_walk_counts(g, k)[k]


def adjacency_stack(graphs: Sequence[Graph]) -> np.ndarray:
    n = graphs[0].n
    bits = np.array([g.adj for g in graphs], dtype=np.int64)
    shifts = np.arange(n, dtype=np.int64)
    return ((bits[:, :, None] >> shifts[None, None, :]) & 1).astype(np.int64)


def batch_moment_table(graphs: Sequence[Graph], kmax: int | None = None) -> list[tuple[int, ...]]:
    """Moments 0..kmax for many graphs of one order.

    Uses int64 array products when ``n (n-1)^kmax`` fits (every walk count
    and partial sum is bounded by it), otherwise exact Python integers.
    """
    if not graphs:
        return []
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("all graphs must have the same vertex count")
    if kmax is None:
        kmax = n - 1
    if not _fits_int64(n, kmax):
        return [tuple(closed_walk_counts(g, kmax)) for g in graphs]
    out = np.zeros((len(graphs), kmax + 1), dtype=np.int64)
    out[:, 0] = n
    chunk = 20000
    for start in range(0, len(graphs), chunk):
        a = adjacency_stack(graphs[start:start + chunk])
        half = (kmax + 1) // 2
        powers = [None, a]
        for _ in range(2, half + 1):
            powers.append(powers[-1] @ a)
        for k in range(1, kmax + 1):
            hi, lo = (k + 1) // 2, k // 2
            if lo == 0:
                out[start:start + chunk, k] = 0  # no loops
            else:
                out[start:start + chunk, k] = (powers[hi] * powers[lo]).sum(axis=(1, 2))
    return [tuple(int(x) for x in row) for row in out]


def compare_sequences(a: Sequence[int], b: Sequence[int]) -> SOrderOutcome:
    if len(a) != len(b):
        raise ValueError(f"cannot compare moment sequences of lengths {len(a)} and {len(b)}")
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return SOrderOutcome(Order.LESS if x < y else Order.GREATER, k)
    return SOrderOutcome(Order.EQUAL)


def s_order_compare(g1: Graph, g2: Graph) -> SOrderOutcome:
    if g1.n != g2.n:
        raise ValueError(f"S-order compares graphs of equal order, got {g1.n} and {g2.n}")
    return compare_sequences(spectral_moments(g1).values, spectral_moments(g2).values)


def group_by_moments(graphs: Sequence[Graph], keys: Sequence[tuple[int, ...]]) -> list[list[int]]:
    """Indices of ``graphs`` grouped by equal key, groups in ascending key order."""
    order = sorted(range(len(graphs)), key=lambda i: keys[i])
    groups: list[list[int]] = []
    prev = None
    for i in order:
        if groups and keys[i] == prev:
            groups[-1].append(i)
        else:
            groups.append([i])
            prev = keys[i]
    return groups


def s_order_sort(graphs: Iterable[Graph]) -> list[list[Graph]]:
    """Groups of S-equal graphs in ascending S-order.

    Inside a group graphs are ordered by canonical form, so the output does
    not depend on input order.
    """
    graphs = list(graphs)
    if not graphs:
        return []
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("all graphs must have the same vertex count")
    keys = batch_moment_table(graphs)
    out = []
    for idx in group_by_moments(graphs, keys):
        members = [graphs[i] for i in idx]
        if len(members) > 1:
            members.sort(key=lambda g: (canonical_form(g), g.to_graph6()))
        out.append(members)
    return out
