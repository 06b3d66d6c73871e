"""Canonical labeling by individualization-refinement, and isomorph rejection.

The certificate of a graph is the graph6 text (as bytes) of its canonical
relabeling: the lexicographically least upper-triangle adjacency string over
all discrete leaves of the search tree.  Equal certificates therefore mean
isomorphic graphs, and the certificate doubles as the stored form of the
canonical representative.
"""
from __future__ import annotations

from typing import Iterable

from .graph import Graph, _from_rows, bits

Certificate = bytes


def _refine(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``.

    Colors are ranks 0..k-1.  Each round a vertex is keyed by its color and
    its neighbor count in every color cell; the new colors are the ranks of
    the sorted keys, which keeps the procedure label-independent.
    """
    k = max(colors) + 1
    while True:
        cells = [0] * k
        for v in range(n):
            cells[colors[v]] |= 1 << v
        keys = [(colors[v],) + tuple((adj[v] & c).bit_count() for c in cells) for v in range(n)]
        ranks = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [ranks[key] for key in keys]
        if len(ranks) == k:
            return new
        colors, k = new, len(ranks)


def _individualize(colors: list[int], v: int) -> list[int]:
    # v moves ahead of the rest of its cell; ranks are re-compacted
    c = colors[v]
    return [x if x < c or u == v else x + 1 for u, x in enumerate(colors)]


def _target_cell(colors: list[int]) -> list[int]:
    """Vertices of the first smallest non-singleton cell."""
    sizes: dict[int, int] = {}
    for x in colors:
        sizes[x] = sizes.get(x, 0) + 1
    best = min((size, x) for x, size in sizes.items() if size > 1)[1]
    return [u for u, x in enumerate(colors) if x == best]


def _leaf_code(adj: tuple[int, ...], n: int, colors: list[int]) -> int:
    # upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),...,
    # first pair most significant
    inv = [0] * n
    for v, x in enumerate(colors):
        inv[x] = v
    code = 0
    for j in range(1, n):
        row = adj[inv[j]]
        for i in range(j):
            code = (code << 1) | (row >> inv[i] & 1)
    return code


def _twin_mask(adj: tuple[int, ...], n: int) -> list[int]:
    """For each vertex, the set of its true or false twins."""
    twins = [0] * n
    for v in range(n):
        closed = adj[v] | 1 << v
        for u in range(v + 1, n):
            if adj[u] == adj[v] or adj[u] | 1 << u == closed:
                twins[v] |= 1 << u
                twins[u] |= 1 << v
    return twins


def _canonical_code(g: Graph) -> int:
    n, adj = g.n, g.adj
    twins = _twin_mask(adj, n)
    best = -1
    found = False
    stack = [_refine(adj, n, [0] * n)]
    while stack:
        colors = stack.pop()
        if max(colors) == n - 1:
            code = _leaf_code(adj, n, colors)
            if not found or code < best:
                best, found = code, True
            continue
        # swapping two twins fixes every other vertex, so it is an
        # automorphism of the current node: one branch per twin class
        taken = 0
        branch = []
        for v in _target_cell(colors):
            if not twins[v] & taken:
                branch.append(v)
            taken |= 1 << v
        for v in reversed(branch):
            stack.append(_refine(adj, n, _individualize(colors, v)))
    return best


def _code_to_graph6(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    pad = (-nbits) % 6
    code <<= pad
    chunks = (nbits + pad) // 6
    out = bytearray([n + 63])
    for i in range(chunks - 1, -1, -1):
        out.append(((code >> (6 * i)) & 63) + 63)
    return bytes(out)


def canonical_certificate(g: Graph) -> Certificate:
    if g.n > 62:
        raise ValueError("certificates are defined for graphs with at most 62 vertices")
    return _code_to_graph6(g.n, _canonical_code(g))


def canonical_form(g: Graph) -> Graph:
    """The canonically relabeled copy of ``g``."""
    from .graph6 import decode_graph6

    return decode_graph6(canonical_certificate(g).decode("ascii"))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return _from_rows(g.n, rows)


class CertificateIndex:
    """Certificate-keyed set of graphs keeping the first representative seen."""

    def __init__(self):
        self._seen: dict[Certificate, Graph] = {}

    def add(self, g: Graph, cert: Certificate | None = None) -> bool:
        """Insert ``g``; return False when an isomorphic copy is already present."""
        cert = canonical_certificate(g) if cert is None else cert
        if cert in self._seen:
            return False
        self._seen[cert] = g
        return True

    def discard(self, cert: Certificate) -> None:
        self._seen.pop(cert, None)

    def __contains__(self, g: Graph) -> bool:
        return canonical_certificate(g) in self._seen

    def __len__(self) -> int:
        return len(self._seen)

    def graphs(self) -> list[Graph]:
        return list(self._seen.values())

    def certificates(self) -> list[Certificate]:
        return list(self._seen)

    def merge(self, other: "CertificateIndex") -> None:
        for cert, g in other._seen.items():
            self._seen.setdefault(cert, g)


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    index = CertificateIndex()
    for g in graphs:
        index.add(g)
    return index.graphs()


def is_isomorphic_bruteforce(g: Graph, h: Graph) -> bool:
    """Isomorphism test by trying every permutation; independent of the canonizer."""
    from itertools import permutations

    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    for perm in permutations(range(g.n)):
        if all((g.adj[v] >> u & 1) == (h.adj[perm[v]] >> perm[u] & 1)
               for v in range(g.n) for u in range(v + 1, g.n)):
            return True
    return False
