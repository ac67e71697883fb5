"""Immutable small simple graphs stored as per-vertex adjacency bitsets.

Vertices are ``0..n-1`` with ``n <= 32``; ``adj[v]`` is an int whose bit ``u``
is set iff ``uv`` is an edge.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NewType, Sequence

import pynauty

MAX_VERTICES = 32

CanonicalForm = NewType("CanonicalForm", str)


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong number of rows")
        limit = 1 << self.n
        for v, row in enumerate(self.adj):
            if row < 0 or row >= limit:
                raise ValueError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {v},{u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Skips validation; only for rows built by this package's own kernels.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for u in iter_bits(self.adj[v]):
                rows[pv] |= 1 << perm[u]
        return Graph._trusted(self.n, tuple(rows))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, g6={to_graph6(self)!r})"


# graph6 codec ---------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header is accepted)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in codes):
        raise ValueError(f"invalid graph6 character in {text!r}")
    if codes[0] == 63:
        if len(codes) >= 4 and codes[1] == 63:
            raise ValueError("graph6 with more than 258047 vertices is not supported")
        if len(codes) < 4:
            raise ValueError("truncated graph6 size header")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        payload = codes[4:]
    else:
        n = codes[0]
        payload = codes[1:]
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"graph6 encodes n={n}; supported range is 1..{MAX_VERTICES}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(payload) != need:
        raise ValueError(f"graph6 payload has {len(payload)} bytes, expected {need}")
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if payload[bit // 6] >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    # padding bits must be zero
    total = n * (n - 1) // 2
    if total % 6 and payload[-1] & ((1 << (6 - total % 6)) - 1):
        raise ValueError("nonzero padding bits in graph6 payload")
    return Graph._trusted(n, tuple(rows))


def from_json(obj: dict | str) -> Graph:
    """Decode ``{"n": int, "edges": [[u, v], ...]}`` (0-based vertices)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('JSON graph needs keys "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError('"n" must be an integer')
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    edges = obj["edges"]
    if not all(isinstance(e, (list, tuple)) and len(e) == 2 for e in edges):
        raise ValueError("each edge must be a pair [u, v]")
    return Graph.from_edges(n, edges)


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


# structural queries ---------------------------------------------------------


def component_masks(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    reached = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~reached
        reached |= frontier
    return reached == full


def count_triangles(g: Graph) -> int:
    total = 0
    for v in range(g.n):
        higher = g.adj[v] >> (v + 1) << (v + 1)
        for u in iter_bits(higher):
            total += popcount(g.adj[u] & higher & ~((2 << u) - 1))
    return total


def _color_bound(adj: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy sequential coloring of ``cand``; returns (vertex, color) by color."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~adj[v] & ~(1 << v)
            rest &= ~(1 << v)
            out.append((v, color))
    return out


def max_clique(g: Graph) -> int:
    """Bitmask of one maximum clique (branch and bound with a coloring bound)."""
    adj = g.adj
    best = [0, 0]  # size, mask

    def expand(size: int, mask: int, cand: int) -> None:
        order = _color_bound(adj, cand)
        for v, color in reversed(order):
            if size + color <= best[0]:
                return
            new_cand = cand & adj[v]
            if new_cand:
                expand(size + 1, mask | 1 << v, new_cand)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = mask | 1 << v
            cand &= ~(1 << v)

    expand(0, 0, (1 << g.n) - 1)
    return best[1]


def clique_number(g: Graph) -> int:
    return popcount(max_clique(g))


def is_k_colorable(g: Graph, k: int) -> bool:
    n = g.n
    if k <= 0:
        return False
    if k >= n:
        return True
    adj = g.adj
    colors = [-1] * n
    # class_masks[c] = vertices currently colored c
    class_masks = [0] * k

    def pick() -> int:
        # DSATUR: most distinct neighbor colors, then highest degree
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = sum(1 for c in range(k) if class_masks[c] & adj[v])
            key = (sat, popcount(adj[v]))
            if key > best_key:
                best_v, best_key = v, key
        return best_v

    def solve(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        # a fresh color is interchangeable with any other fresh color
        for c in range(min(used + 1, k)):
            if class_masks[c] & adj[v]:
                continue
            colors[v] = c
            class_masks[c] |= 1 << v
            if solve(done + 1, max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
            colors[v] = -1
        return False

    return solve(0, 0)


def chromatic_number(g: Graph) -> int:
    k = clique_number(g)
    while not is_k_colorable(g, k):
        k += 1
    return k


def is_bipartite(g: Graph) -> bool:
    return is_k_colorable(g, 2) if g.num_edges else True


# canonical form -------------------------------------------------------------


def _refined_cells(g: Graph) -> list[int]:
    """Ordered equitable partition from iterated degree refinement.

    Cells are ordered by their (isomorphism-invariant) color signature, so the
    result is the same for every relabeling of ``g``.
    """
    n = g.n
    color = [popcount(r) for r in g.adj]
    num = len(set(color))
    while True:
        sig = [
            (color[v], tuple(sorted(color[u] for u in iter_bits(g.adj[v]))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        color = [ranks[s] for s in sig]
        if len(ranks) == num:
            break
        num = len(ranks)
    cells = [0] * num
    for v in range(n):
        cells[color[v]] |= 1 << v
    return cells


def _canonical_order(g: Graph) -> list[int]:
    """Vertex order giving the lexicographically least graph6 bit string.

    The minimum is taken over orderings that list the refined cells in order.
    Breadth-first over positions: at each position keep only the partial
    orders achieving the least column so far; twin vertices are tried once
    since swapping them is an automorphism fixing every placed vertex.
    """
    n = g.n
    adj = g.adj
    cells = _refined_cells(g)
    slot_cell = []
    for cell in cells:
        slot_cell.extend([cell] * popcount(cell))

    states: list[tuple[list[int], int]] = [([], 0)]
    for j in range(n):
        cell = slot_cell[j]
        best_col = None
        nxt: list[tuple[list[int], int]] = []
        for order, placed in states:
            avail = cell & ~placed
            tried_open: set[int] = set()
            tried_closed: set[int] = set()
            for v in iter_bits(avail):
                ko = adj[v]
                kc = adj[v] | 1 << v
                if ko in tried_open or kc in tried_closed:
                    continue
                tried_open.add(ko)
                tried_closed.add(kc)
                col = 0
                row = adj[v]
                for p in order:
                    col = (col << 1) | (row >> p & 1)
                if best_col is None or col < best_col:
                    best_col = col
                    nxt = []
                if col == best_col:
                    nxt.append((order + [v], placed | 1 << v))
        states = nxt
    return states[0][0]


def canonical_form(g: Graph) -> CanonicalForm:
    """graph6 string of the canonically relabeled graph; equal iff isomorphic."""
    return CanonicalForm(canonical_graph(g).to_graph6())


def canonical_graph(g: Graph) -> Graph:
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def nauty_graph(g: Graph) -> pynauty.Graph:
    return pynauty.Graph(g.n, adjacency_dict={v: list(iter_bits(g.adj[v])) for v in range(g.n)})


def certificate(g: Graph) -> bytes:
    """Fast isomorphism-class key from nauty; equal iff isomorphic."""
    return pynauty.certificate(nauty_graph(g))


def automorphism_group_size(g: Graph) -> int:
    _, mant, exp, _, _ = pynauty.autgrp(nauty_graph(g))
    return round(mant * 10**exp)


# constructions --------------------------------------------------------------


def coalesce(g: Graph, u: int, h: Graph, w: int) -> Graph:
    """Identify vertex ``u`` of ``g`` with vertex ``w`` of ``h``.

    Vertices of ``g`` keep their labels; the other vertices of ``h`` follow in
    their original order.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} not in first graph")
    if not 0 <= w < h.n:
        raise ValueError(f"vertex {w} not in second graph")
    mapping = {}
    nxt = g.n
    for x in range(h.n):
        if x == w:
            mapping[x] = u
        else:
            mapping[x] = nxt
            nxt += 1
    edges = g.edges() + [(mapping[a], mapping[b]) for a, b in h.edges()]
    return Graph.from_edges(g.n + h.n - 1, edges)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError(f"invalid vertex pair ({u},{v})")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph._trusted(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError(f"invalid vertex pair ({u},{v})")
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u},{v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph._trusted(g.n, tuple(rows))


def induced_subgraph(g: Graph, mask: int) -> Graph:
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._trusted(len(verts), tuple(rows))


def is_forest_edges(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def bfs_distances(g: Graph, s: int) -> list[int]:
    dist = [-1] * g.n
    dist[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for u in iter_bits(g.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist
