"""Named graph families with a fixed vertex numbering.

Numbering: clique (or cycle) vertices first, then tails in attachment order.
For kites and the double-tail graphs, vertex 0 is the clique root ``v0``
carrying the main tail, and ``u`` (used by :func:`double_tail_h`) is vertex 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .graph_core import Graph, canonical_form


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def turan_parts(n: int, t: int) -> list[list[int]]:
    """Parts of T_{n,t}: n = kt + r, the first t - r parts have k vertices."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    k, r = divmod(n, t)
    sizes = [k] * (t - r) + [k + 1] * r
    parts, nxt = [], 0
    for s in sizes:
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    return parts


def turan(n: int, t: int) -> Graph:
    if not 2 <= t <= n:
        raise ValueError(f"Turan graph needs 2 <= t <= n, got n={n}, t={t}")
    parts = turan_parts(n, t)
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1:]
        for u in p
        for v in q
    ]
    return Graph.from_edges(n, edges)


def turan_minus(n: int, t: int, variant: int) -> Graph:
    """T_{n,t} minus one edge between parts of sizes (k,k), (k,k+1) or (k+1,k+1)."""
    if not 2 <= t <= n:
        raise ValueError(f"Turan graph needs 2 <= t <= n, got n={n}, t={t}")
    _, r = divmod(n, t)
    parts = turan_parts(n, t)
    if variant == 1:
        if t - r < 2:
            raise ValueError(f"variant 1 needs two parts of the smaller size (n={n}, t={t})")
        i, j = 0, 1
    elif variant == 2:
        if not 1 <= r <= t - 1:
            raise ValueError(f"variant 2 needs parts of both sizes (n={n}, t={t})")
        i, j = 0, t - 1
    elif variant == 3:
        if r < 2:
            raise ValueError(f"variant 3 needs two parts of the larger size (n={n}, t={t})")
        i, j = t - 2, t - 1
    else:
        raise ValueError(f"unknown variant {variant}")
    u, v = parts[i][0], parts[j][0]
    edges = [e for e in turan(n, t).edges() if e != (min(u, v), max(u, v))]
    return Graph.from_edges(n, edges)


def t_seq(n: int, i: int) -> Graph:
    """T_{n,n-1} with the edges from u to v_1..v_i removed.

    v_1..v_{n-1} are vertices 0..n-2 and u is vertex n-1 (u and v_{n-1} form
    the two-vertex part).
    """
    if not 1 <= i <= n - 3:
        raise ValueError(f"need 1 <= i <= n-3, got n={n}, i={i}")
    u = n - 1
    drop = {(v, u) for v in range(i)}
    return Graph.from_edges(n, [e for e in turan(n, n - 1).edges() if e not in drop])


def _attach_path(edges: list[tuple[int, int]], at: int, start: int, length: int) -> int:
    prev = at
    for x in range(start, start + length):
        edges.append((prev, x))
        prev = x
    return start + length


def kite(n: int, t: int) -> Graph:
    """K_t with a pendant path on n - t new vertices attached at vertex 0."""
    if not 2 <= t <= n:
        raise ValueError(f"kite needs 2 <= t <= n, got n={n}, t={t}")
    edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
    _attach_path(edges, 0, t, n - t)
    return Graph.from_edges(n, edges)


def _check_double_tail(n: int, t: int, i: int) -> None:
    if not 3 <= t <= n - 2:
        raise ValueError(f"need 3 <= t <= n-2, got n={n}, t={t}")
    if not 1 <= i <= (n - t) // 2:
        raise ValueError(f"need 1 <= i <= {(n - t) // 2}, got i={i}")


def _tail_vertex(t: int, j: int) -> int:
    return 0 if j == 0 else t + j - 1


def double_tail_g(n: int, t: int, i: int, j: int) -> Graph:
    """Kite K_t^{n-t-i} with a second path of i edges hung at tail vertex v_j."""
    _check_double_tail(n, t, i)
    if not 0 <= j <= n - t - 2 * i:
        raise ValueError(f"need 0 <= j <= {n - t - 2 * i}, got j={j}")
    base = kite(n - i, t)
    edges = base.edges()
    _attach_path(edges, _tail_vertex(t, j), n - i, i)
    return Graph.from_edges(n, edges)


def double_tail_h(n: int, t: int, i: int) -> Graph:
    """Kite K_t^{n-t-i} with a second path of i edges hung at clique vertex 1."""
    _check_double_tail(n, t, i)
    edges = kite(n - i, t).edges()
    _attach_path(edges, 1, n - i, i)
    return Graph.from_edges(n, edges)


def lollipop(n: int, c: int) -> Graph:
    """Cycle C_c on vertices 0..c-1 with a path on n - c new vertices at vertex 0."""
    if not 3 <= c <= n:
        raise ValueError(f"lollipop needs 3 <= c <= n, got n={n}, c={c}")
    edges = [(x, (x + 1) % c) for x in range(c)]
    _attach_path(edges, 0, c, n - c)
    return Graph.from_edges(n, edges)


def path_pair_at(g: Graph, u: int, a: int, b: int) -> Graph:
    """Attach paths with a and b edges to ``g`` at vertex ``u`` by their ends."""
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} not in graph")
    if a < 0 or b < 0:
        raise ValueError("path lengths must be nonnegative")
    edges = g.edges()
    nxt = _attach_path(edges, u, g.n, a)
    _attach_path(edges, u, nxt, b)
    return Graph.from_edges(g.n + a + b, edges)


def minimal_edge_class(n: int, t: int) -> list[Graph]:
    """K_t plus an attached forest on n - t new vertices, up to isomorphism.

    Grows one pendant vertex at a time; every such graph arises this way since
    a forest attached to K_t always has a leaf outside the clique.
    Returned in canonical-form order.
    """
    if not 3 <= t <= n:
        raise ValueError(f"need 3 <= t <= n, got n={n}, t={t}")
    level = {canonical_form(complete(t)): complete(t)}
    for size in range(t, n):
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for v in range(size):
                rows = list(g.adj) + [1 << v]
                rows[v] |= 1 << size
                child = Graph._trusted(size + 1, tuple(rows))
                nxt.setdefault(canonical_form(child), child)
        level = nxt
    return [level[k] for k in sorted(level)]


# string grammar -------------------------------------------------------------

KINDS = {
    "turan": ("n", "t"),
    "turan_minus": ("n", "t", "variant"),
    "tseq": ("n", "i"),
    "kite": ("n", "t"),
    "g": ("n", "t", "i", "j"),
    "h": ("n", "t", "i"),
    "lollipop": ("n", "c"),
    "path": ("n",),
    "cycle": ("n",),
    "star": ("n",),
    "complete": ("n",),
    "minimal": ("n", "t", "index"),
}

_ALIASES = {
    "turan1": ("turan_minus", {"variant": 1}),
    "turan2": ("turan_minus", {"variant": 2}),
    "turan3": ("turan_minus", {"variant": 3}),
}

_SPEC_RE = re.compile(r"^\s*([a-z_0-9]+)\s*(?::(.*))?$")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: dict[str, int] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse e.g. ``"turan:n=7,t=3"`` or ``"g:n=9,t=4,i=1,j=2"``."""
        m = _SPEC_RE.match(text)
        if not m:
            raise ValueError(f"malformed family spec {text!r}")
        kind, body = m.group(1), m.group(2) or ""
        params: dict[str, int] = {}
        if kind in _ALIASES:
            kind, extra = _ALIASES[kind]
            params.update(extra)
        if kind not in KINDS:
            raise ValueError(f"unknown family {kind!r}; known: {', '.join(sorted(KINDS))}")
        for item in filter(None, (s.strip() for s in body.split(","))):
            key, sep, val = item.partition("=")
            if not sep:
                raise ValueError(f"expected key=value, got {item!r}")
            try:
                params[key.strip()] = int(val)
            except ValueError:
                raise ValueError(f"parameter {key!r} must be an integer") from None
        if kind == "minimal":
            params.setdefault("index", 0)
        if set(params) != set(KINDS[kind]):
            raise ValueError(f"{kind} takes parameters {', '.join(KINDS[kind])}; got {sorted(params)}")
        return cls(kind, params)

    def __str__(self) -> str:
        body = ",".join(f"{k}={self.params[k]}" for k in KINDS[self.kind] if k in self.params)
        return f"{self.kind}:{body}"

    def build(self) -> Graph:
        p = self.params
        k = self.kind
        if k == "turan":
            return turan(p["n"], p["t"])
        if k == "turan_minus":
            return turan_minus(p["n"], p["t"], p["variant"])
        if k == "tseq":
            return t_seq(p["n"], p["i"])
        if k == "kite":
            return kite(p["n"], p["t"])
        if k == "g":
            return double_tail_g(p["n"], p["t"], p["i"], p["j"])
        if k == "h":
            return double_tail_h(p["n"], p["t"], p["i"])
        if k == "lollipop":
            return lollipop(p["n"], p["c"])
        if k == "path":
            return path(p["n"])
        if k == "cycle":
            return cycle(p["n"])
        if k == "star":
            return star(p["n"])
        if k == "complete":
            return complete(p["n"])
        if k == "minimal":
            members = minimal_edge_class(p["n"], p["t"])
            if not 0 <= p["index"] < len(members):
                raise ValueError(f"index must be in 0..{len(members) - 1}")
            return members[p["index"]]
        raise ValueError(f"unknown family {k!r}")

