"""Exhaustive enumeration used to check the staged search independently.

Nothing in here calls the extension or closure code: classes are found by
looking at every graph of a given order.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .arrowing import ArrowSpec, ArrowTuple, arrows, arrows_uni
from .canon import CertificateIndex, canonical_certificate, canonical_form
from .graph import Graph, _from_rows, attach_vertices, complete_graph, has_clique
from .search import UNRESTRICTED, alpha_ok, is_plus_kt

LABELED_MAX = 7
BASE_MAX = 8


def labeled_graphs(n: int, clique_bound: Optional[int] = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, optionally only those with omega < clique_bound.

    Vertex j is added with every neighborhood inside {0..j-1}; because a
    clique in a prefix stays a clique, prefixes that already hold a
    ``clique_bound``-clique are cut.
    """
    rows = [0] * n

    def rec(j: int) -> Iterator[Graph]:
        if j == n:
            yield _from_rows(n, rows)
            return
        for nb in range(1 << j):
            if clique_bound is not None and has_clique_in_rows(rows, nb, clique_bound - 1):
                continue
            for u in range(j):
                if nb >> u & 1:
                    rows[u] |= 1 << j
            rows[j] = nb
            yield from rec(j + 1)
            for u in range(j):
                rows[u] &= ~(1 << j)
            rows[j] = 0

    yield from rec(0)


def has_clique_in_rows(rows: list[int], cand: int, t: int) -> bool:
    if t <= 0:
        return True
    if cand.bit_count() < t:
        return False
    while cand.bit_count() >= t:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if has_clique_in_rows(rows, rows[v] & cand, t - 1):
            return True
    return False


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on ``n`` vertices, in canonical form.

    Every n-vertex graph is an (n-1)-vertex graph plus one vertex, so trying
    all neighborhoods of a new vertex over all smaller classes and rejecting
    isomorphs is exhaustive.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return (complete_graph(1),)
    index = CertificateIndex()
    for h in all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            index.add(attach_vertices(h, [nb]))
    return tuple(sorted((canonical_form(g) for g in index.graphs()),
                        key=canonical_certificate))


def base_enumerate(spec: ArrowSpec, q: int, n: int, plus_t: int,
                   alpha_mode: str = UNRESTRICTED, full_tuples: bool = False) -> list[Graph]:
    """All (+K_plus_t)-graphs of H~(m|p; q; n), by looking at every graph on n vertices."""
    if n > BASE_MAX:
        raise ValueError(f"exhaustive enumeration is limited to n <= {BASE_MAX}, got {n}")
    if n < spec.m:
        return []
    out = []
    for g in all_graphs(n):
        if has_clique(g, q):
            continue
        if not is_plus_kt(g, plus_t) or not alpha_ok(g, alpha_mode):
            continue
        if arrows_uni(g, spec, full_tuples=full_tuples):
            out.append(g)
    return out


def class_members(spec: ArrowSpec, q: int, n: int, full_tuples: bool = False) -> list[Graph]:
    """Every isomorphism class in H~(m|p; q; n) (n <= BASE_MAX)."""
    if n > BASE_MAX:
        raise ValueError(f"exhaustive enumeration is limited to n <= {BASE_MAX}, got {n}")
    return [g for g in all_graphs(n)
            if not has_clique(g, q) and arrows_uni(g, spec, full_tuples=full_tuples)]


def brute_force_folkman(t: ArrowTuple, q: int, n_max: int) -> tuple[Optional[int], list[Graph]]:
    """Least n <= n_max with a graph of omega < q arrowing ``t``, plus all extremal classes.

    Returns ``(None, [])`` when no such graph exists up to ``n_max``.
    """
    if n_max > LABELED_MAX:
        raise ValueError(f"labeled enumeration is limited to n <= {LABELED_MAX}, got {n_max}")
    for n in range(1, n_max + 1):
        index = CertificateIndex()
        for g in labeled_graphs(n, clique_bound=q):
            if arrows(g, t)[0]:
                index.add(g)
        if len(index):
            return n, sorted((canonical_form(g) for g in index.graphs()),
                             key=canonical_certificate)
    return None, []
