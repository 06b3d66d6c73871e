"""Slow, obviously-correct reference computations used as test oracles.

Everything here works on explicit vertex lists and itertools; none of it
touches the bitset kernels under test.
"""
from itertools import combinations, permutations, product

from folkman.graph import Graph


def edge_set(g: Graph) -> set[frozenset]:
    return {frozenset((u, v)) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1}


def is_clique(g: Graph, vs) -> bool:
    return all(g.adj[u] >> v & 1 for u, v in combinations(vs, 2))


def omega(g: Graph) -> int:
    best = 1
    for size in range(2, g.n + 1):
        if any(is_clique(g, c) for c in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def alpha(g: Graph) -> int:
    best = 1
    for size in range(2, g.n + 1):
        if any(all(not g.adj[u] >> v & 1 for u, v in combinations(c, 2))
               for c in combinations(range(g.n), size)):
            best = size
        else:
            break
    return best


def chi(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for col in product(range(k), repeat=g.n):
            if all(col[u] != col[v] for u, v in combinations(range(g.n), 2) if g.adj[u] >> v & 1):
                return k
    return g.n


def contains_clique(g: Graph, vs, t: int) -> bool:
    return any(is_clique(g, c) for c in combinations(vs, t)) if t <= len(vs) else t <= 0


def arrows(g: Graph, parts) -> bool:
    """Try every assignment of vertices to len(parts) colors."""
    s = len(parts)
    for col in product(range(s), repeat=g.n):
        classes = [[v for v in range(g.n) if col[v] == i] for i in range(s)]
        if all(not contains_clique(g, cls, a) for cls, a in zip(classes, parts)):
            return False
    return True


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    eg, eh = edge_set(g), edge_set(h)
    if len(eg) != len(eh):
        return False
    for perm in permutations(range(g.n)):
        if {frozenset((perm[u], perm[v])) for u, v in map(tuple, eg)} == eh:
            return True
    return False


def maximal_ktfree_subsets(g: Graph, t: int) -> list[int]:
    free = []
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if not contains_clique(g, vs, t):
            free.append(mask)
    free_set = set(free)
    return sorted(m for m in free
                  if all((m | 1 << v) not in free_set for v in range(g.n) if not m >> v & 1))


def is_plus_kt(g: Graph, t: int) -> bool:
    """Adding any missing edge creates a t-clique that uses the new edge."""
    for u, v in combinations(range(g.n), 2):
        if g.adj[u] >> v & 1:
            continue
        others = [w for w in range(g.n) if w not in (u, v)]
        if not any(all(g.adj[u] >> w & 1 and g.adj[v] >> w & 1 for w in c) and is_clique(g, c)
                   for c in combinations(others, t - 2)):
            return False
    return True


def partitions_into_parts(total: int, largest: int):
    """All multisets of positive integers <= largest summing to total (descending tuples)."""
    out = set()
    for k in range(1, total + 1):
        for combo in product(range(1, largest + 1), repeat=k):
            if sum(combo) == total:
                out.add(tuple(sorted(combo, reverse=True)))
    return sorted(out)
