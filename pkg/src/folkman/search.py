"""Generation of maximal and (+K_t)-graphs in the classes H~(m|p; q; n).

Maximal graphs on n vertices come from (+K_{q-1})-graphs on n - k vertices by
attaching k independent vertices whose neighborhoods are maximal
K_{q-1}-free vertex subsets; the remaining (+K_t)-graphs of a class are
reached by deleting edges from the maximal ones.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional

from .arrowing import ArrowSpec, arrows_uni
from .canon import CertificateIndex, canonical_certificate
from .graph import (Graph, MAX_VERTICES, GraphError, attach_vertices, bits, complement,
                    has_clique, has_clique_in, remove_edge)

log = logging.getLogger(__name__)

UNRESTRICTED = "unrestricted"
EXACTLY_TWO = "exactly_two"
AT_MOST_TWO = "at_most_two"
ALPHA_MODES = (UNRESTRICTED, EXACTLY_TWO, AT_MOST_TWO)


def alpha_at_most_two(g: Graph) -> bool:
    return not has_clique(complement(g), 3)


def alpha_ok(g: Graph, alpha_mode: str) -> bool:
    if alpha_mode == UNRESTRICTED:
        return True
    small = alpha_at_most_two(g)
    if alpha_mode == AT_MOST_TWO:
        return small
    if alpha_mode == EXACTLY_TWO:
        return small and g.num_edges() < g.n * (g.n - 1) // 2
    raise ValueError(f"unknown alpha mode {alpha_mode!r}")


def maximal_ktfree_subsets(h: Graph, t: int) -> list[int]:
    """All maximal vertex subsets of ``h`` containing no ``t``-clique.

    Vertices are decided in index order (take / skip).  A skipped vertex must
    end up blocked, i.e. the final set must hold a (t-1)-clique inside its
    neighborhood; a branch is cut as soon as that can no longer happen.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    n, adj = h.n, h.adj
    out: list[int] = []
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | 1 << v

    def rec(v: int, cur: int, skipped: int) -> None:
        reach = cur | suffix[v]
        for u in bits(skipped):
            if not has_clique_in(h, reach & adj[u], t - 1):
                return
        if v == n:
            # every skipped vertex is blocked by now
            out.append(cur)
            return
        if not has_clique_in(h, cur & adj[v], t - 1):
            rec(v + 1, cur | 1 << v, skipped)
            # skipping v is only useful if something later can block it
            if has_clique_in(h, (cur | suffix[v + 1]) & adj[v], t - 1):
                rec(v + 1, cur, skipped | 1 << v)
        else:
            rec(v + 1, cur, skipped)

    rec(0, 0, 0)
    return sorted(out)


def is_ktfree(g: Graph, s: int, t: int) -> bool:
    return not has_clique_in(g, s, t)


def is_plus_kt(g: Graph, t: int) -> bool:
    """Every missing edge u-v would complete a new t-clique through u and v."""
    if t < 2:
        raise ValueError("t must be >= 2")
    adj = g.adj
    for u, v in g.non_edges():
        if not has_clique_in(g, adj[u] & adj[v], t - 2):
            return False
    return True


def is_maximal(g: Graph, q: int) -> bool:
    """omega(G + e) >= q for every non-edge e (and omega(G) < q)."""
    return not has_clique(g, q) and is_plus_kt(g, q)


@dataclass
class ExtensionJob:
    seeds: list[Graph]
    k: int
    spec: ArrowSpec
    q: int
    alpha_mode: str = UNRESTRICTED

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.alpha_mode not in (UNRESTRICTED, EXACTLY_TWO):
            raise ValueError(f"extension alpha mode must be unrestricted or exactly_two, got {self.alpha_mode!r}")
        if self.alpha_mode == EXACTLY_TWO:
            if self.k != 2:
                raise ValueError("exactly_two mode adds exactly 2 vertices")
            for h in self.seeds:
                if not alpha_at_most_two(h):
                    raise ValueError("exactly_two mode needs seeds with independence number <= 2")
        for h in self.seeds:
            if h.n + self.k > MAX_VERTICES:
                raise GraphError(f"extension would exceed {MAX_VERTICES} vertices")


@dataclass
class ExtensionStats:
    seeds: int = 0
    subsets: int = 0
    tuples: int = 0
    maximal_candidates: int = 0
    after_dedup: int = 0
    in_class: int = 0
    extra: dict = field(default_factory=dict)


def _candidate_tuples(h: Graph, family: list[int], k: int, q: int) -> Iterable[tuple[int, ...]]:
    """Index tuples i_1 <= ... <= i_k whose attachment is maximal (no K_q added).

    Attaching v_j with N(v_j) = M_{i_j} leaves three kinds of non-edges:
      v_j - x with x outside M_{i_j}: covered by maximality of M_{i_j};
      v_i - v_j: needs a (q-2)-clique in M_i & M_j;
      x - y inside H: needs a (q-2)-clique in the common neighborhood, either
      already in H or through some v_j adjacent to both, which then needs a
      (q-3)-clique in N(x) & N(y) & M_j.
    """
    adj = h.adj
    r = len(family)
    deficient = [(x, y) for x, y in h.non_edges()
                 if not has_clique_in(h, adj[x] & adj[y], q - 2)]
    fixes = [0] * r
    for i, mset in enumerate(family):
        f = 0
        for d, (x, y) in enumerate(deficient):
            if mset >> x & 1 and mset >> y & 1 and has_clique_in(h, adj[x] & adj[y] & mset, q - 3):
                f |= 1 << d
        fixes[i] = f
    need = (1 << len(deficient)) - 1
    if k >= 2:
        pair_ok = [[False] * r for _ in range(r)]
        for i in range(r):
            for j in range(i, r):
                ok = has_clique_in(h, family[i] & family[j], q - 2)
                pair_ok[i][j] = pair_ok[j][i] = ok

    def rec(start: int, chosen: list[int], covered: int) -> Iterable[tuple[int, ...]]:
        if len(chosen) == k:
            if covered == need:
                yield tuple(chosen)
            return
        for i in range(start, r):
            if k >= 2 and not all(pair_ok[i][j] for j in chosen):
                continue
            chosen.append(i)
            yield from rec(i, chosen, covered | fixes[i])
            chosen.pop()

    yield from rec(0, [], 0)


def extend_independent(job: ExtensionJob, full_tuples: bool = False,
                       stats: Optional[ExtensionStats] = None) -> list[Graph]:
    """Maximal graphs of H~(m|p; q; n) with alpha >= k (or alpha = 2) from the seeds.

    Steps per seed: maximal K_{q-1}-free subsets, all k-multisets of them,
    attach k independent vertices, keep the maximal ones (alpha = 2 check in
    exactly_two mode), then isomorph rejection and the final G -> m|p filter.
    """
    stats = stats if stats is not None else ExtensionStats()
    q = job.q
    index = CertificateIndex()
    for h in job.seeds:
        stats.seeds += 1
        family = maximal_ktfree_subsets(h, q - 1)
        stats.subsets += len(family)
        for combo in _candidate_tuples(h, family, job.k, q):
            stats.maximal_candidates += 1
            g = attach_vertices(h, [family[i] for i in combo])
            if job.alpha_mode == EXACTLY_TWO and not alpha_at_most_two(g):
                continue
            index.add(g)
    stats.after_dedup = len(index)
    out = [g for g in index.graphs() if arrows_uni(g, job.spec, full_tuples=full_tuples)]
    stats.in_class = len(out)
    log.info("extend k=%d to %s q=%d: %d seeds, %d candidates, %d classes, %d in class",
             job.k, job.spec, q, stats.seeds, stats.maximal_candidates, stats.after_dedup, len(out))
    return out


def extend_independent_naive(job: ExtensionJob) -> list[Graph]:
    """The same output computed literally: every k-multiset, full maximality test.

    Kept as a cross-check for the pruned candidate generation.
    """
    index = CertificateIndex()
    for h in job.seeds:
        family = maximal_ktfree_subsets(h, job.q - 1)
        for combo in combinations_with_replacement(range(len(family)), job.k):
            g = attach_vertices(h, [family[i] for i in combo])
            if not is_plus_kt(g, job.q):
                continue
            if job.alpha_mode == EXACTLY_TWO and not alpha_at_most_two(g):
                continue
            index.add(g)
    return [g for g in index.graphs() if arrows_uni(g, job.spec)]


def edge_removal_closure(maximal: list[Graph], spec: ArrowSpec, q: int, plus_t: int,
                         alpha_mode: str = UNRESTRICTED, full_tuples: bool = False,
                         progress: Optional[Callable[[int, int], None]] = None) -> list[Graph]:
    """All (+K_plus_t)-graphs of H~(m|p; q; n) below the given maximal graphs.

    Works level by level (one edge fewer per level) with a single isomorph
    rejection index shared by all levels.  Only class members that are (+K_plus_t) with the right
    independence number are expanded: any graph between such a target and a
    maximal supergraph has the same three properties, so nothing is lost.
    """
    if not maximal:
        return []
    seen = CertificateIndex()
    rejected: set[bytes] = set()
    level = []
    for g in maximal:
        if alpha_ok(g, alpha_mode) and is_plus_kt(g, plus_t) and seen.add(g):
            level.append(g)
    depth = 0
    while level:
        depth += 1
        nxt = []
        for g in level:
            adj = g.adj
            for u, v in g.edges():
                # the new non-edge u-v must itself close a K_plus_t
                if not has_clique_in(g, adj[u] & adj[v], plus_t - 2):
                    continue
                child = remove_edge(g, u, v)
                if not is_plus_kt(child, plus_t) or not alpha_ok(child, alpha_mode):
                    continue
                cert = canonical_certificate(child)
                if cert in rejected or not seen.add(child, cert):
                    continue
                if not arrows_uni(child, spec, full_tuples=full_tuples):
                    # membership fails for the whole isomorphism class
                    seen.discard(cert)
                    rejected.add(cert)
                    continue
                nxt.append(child)
        level = nxt
        if progress:
            progress(depth, len(level))
        log.debug("closure depth %d: %d graphs", depth, len(level))
    return seen.graphs()
