"""Small immutable graphs on at most 64 vertices with bitset adjacency.

Vertex sets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is in
the set).  Every operation here is exact; nothing is approximated.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64
EXACT_CHI_CAP = 20

VertexSet = int


class GraphError(ValueError):
    pass


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits outside the vertex range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        full = self.all_vertices
        out = []
        for u in range(self.n):
            rest = ~self.adj[u] & full & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in bits(rest))
        return out

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _from_rows(n: int, rows: list[int]) -> Graph:
    # trusted constructor for rows already known to be valid
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(rows))
    return g


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return _from_rows(n, rows)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return _from_rows(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_minus_cycle(m: int, p: int) -> Graph:
    """K_{m+p} with the edges of the cycle (0, 1, ..., 2p) removed."""
    if p < 2 or m < p + 1:
        raise GraphError(f"complete_minus_cycle needs p >= 2 and m >= p + 1, got m={m}, p={p}")
    n = m + p
    cyc = 2 * p + 1
    removed = {frozenset((i, (i + 1) % cyc)) for i in range(cyc)}
    return build_graph(n, [e for e in combinations(range(n), 2) if frozenset(e) not in removed])


def standard_graph(kind: str, *params: int) -> Graph:
    if kind == "complete":
        return complete_graph(*params)
    if kind == "cycle":
        return cycle_graph(*params)
    if kind == "complete_minus_cycle":
        return complete_minus_cycle(*params)
    raise GraphError(f"unknown graph kind {kind!r}")


def complement(g: Graph) -> Graph:
    full = g.all_vertices
    return _from_rows(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them.

    Vertices of ``g1`` keep their labels; ``g2``'s are shifted by ``g1.n``.
    """
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"join would have {n} vertices, cap is {MAX_VERTICES}")
    shift = g1.n
    high = ((1 << g2.n) - 1) << shift
    low = (1 << g1.n) - 1
    rows = [row | high for row in g1.adj] + [(row << shift) | low for row in g2.adj]
    return _from_rows(n, rows)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return _from_rows(g.n, rows)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_pair(g, u, v)
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return _from_rows(g.n, rows)


def _check_pair(g: Graph, u: int, v: int) -> None:
    if u == v:
        raise GraphError("u and v must differ")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range")


def induced_subgraph(g: Graph, keep: VertexSet) -> Graph:
    """Subgraph induced by ``keep``, renumbered 0.. in increasing label order."""
    order = list(bits(keep))
    rows = []
    for v in order:
        row = g.adj[v]
        new = 0
        for i, u in enumerate(order):
            if row >> u & 1:
                new |= 1 << i
        rows.append(new)
    return _from_rows(len(order), rows)


def delete_vertices(g: Graph, removed: VertexSet) -> Graph:
    if removed & ~g.all_vertices:
        raise GraphError("vertex set out of range")
    if removed == g.all_vertices:
        raise GraphError("cannot delete every vertex")
    return induced_subgraph(g, g.all_vertices & ~removed)


def attach_vertices(g: Graph, neighborhoods: Iterable[VertexSet]) -> Graph:
    """Add new pairwise non-adjacent vertices with the given neighborhoods."""
    nbhds = list(neighborhoods)
    n = g.n + len(nbhds)
    if n > MAX_VERTICES:
        raise GraphError(f"graph would have {n} vertices, cap is {MAX_VERTICES}")
    rows = list(g.adj)
    for j, nb in enumerate(nbhds):
        v = g.n + j
        for u in bits(nb):
            rows[u] |= 1 << v
        rows.append(nb)
    return _from_rows(n, rows)


# --- cliques -----------------------------------------------------------------

def _has_clique(adj: tuple[int, ...], cand: int, t: int) -> bool:
    if t <= 0:
        return True
    if cand.bit_count() < t:
        return False
    if t == 1:
        return True
    if t == 2:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if adj[v] & cand:
                return True
        return False
    while cand.bit_count() >= t:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        sub = adj[v] & cand
        if sub.bit_count() >= t - 1 and _has_clique(adj, sub, t - 1):
            return True
    return False


def has_clique_in(g: Graph, within: VertexSet, t: int) -> bool:
    """True iff the vertices of ``within`` contain a ``t``-clique of ``g``."""
    return _has_clique(g.adj, within, t)


def has_clique(g: Graph, t: int) -> bool:
    return _has_clique(g.adj, g.all_vertices, t)


def clique_number(g: Graph) -> int:
    adj = g.adj
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    best = 1

    def expand(cand: int, size: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            sub = adj[v] & cand
            if sub:
                expand(sub, size + 1)
            elif size + 1 > best:
                best = size + 1

    # root branching follows the degree order; deeper levels take the low bit
    remaining = g.all_vertices
    for v in order:
        if 1 + (adj[v] & remaining).bit_count() > best:
            expand(adj[v] & remaining, 1)
        remaining &= ~(1 << v)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def is_independent(g: Graph, s: VertexSet) -> bool:
    return all(not (g.adj[v] & s) for v in bits(s))


def maximal_independent_sets(g: Graph) -> list[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    comp = complement(g).adj
    out: list[VertexSet] = []

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: (comp[u] & p).bit_count())
        for v in bits(p & ~comp[pivot]):
            bk(r | 1 << v, p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, g.all_vertices, 0)
    return sorted(out)


# --- colouring ---------------------------------------------------------------

def greedy_coloring(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in bits(g.adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def is_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability by DSATUR-ordered backtracking."""
    if k <= 0:
        return False
    n, adj = g.n, g.adj
    classes = [0] * k
    colored = 0

    def pick() -> int:
        best, best_key = -1, None
        for v in bits(g.all_vertices & ~colored):
            sat = sum(1 for c in classes if c & adj[v])
            key = (sat, (adj[v] & ~colored).bit_count())
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(done: int) -> bool:
        nonlocal colored
        if done == n:
            return True
        v = pick()
        seen_empty = False
        for c in range(k):
            if classes[c] & adj[v]:
                continue
            if not classes[c]:
                # empty classes are interchangeable
                if seen_empty:
                    continue
                seen_empty = True
            classes[c] |= 1 << v
            colored |= 1 << v
            if solve(done + 1):
                return True
            classes[c] &= ~(1 << v)
            colored &= ~(1 << v)
        return False

    return solve(0)


def chromatic_number(g: Graph, cap: int = EXACT_CHI_CAP) -> Optional[int]:
    """Exact chromatic number, or ``None`` when ``g.n`` exceeds ``cap``.

    A ``None`` result means the exact value is unavailable and any pruning
    that relies on it must be skipped.
    """
    if g.n > cap:
        return None
    lower = clique_number(g)
    upper = max(greedy_coloring(g)) + 1
    for k in range(lower, upper):
        if is_colorable(g, k):
            return k
    return upper
