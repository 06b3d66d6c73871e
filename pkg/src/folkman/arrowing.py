"""Vertex arrowing G -> (a_1, ..., a_s), the uniform relation G -> m|p, and
membership in the classes H~(m|p; q).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (Graph, bits, chromatic_number, clique_number, has_clique,
                    has_clique_in, EXACT_CHI_CAP)


@dataclass(frozen=True, order=True)
class ArrowTuple:
    """A multiset of clique sizes, stored in descending order.

    Parts equal to 1 are rejected: a 1-clique is met by any non-empty color
    class and contributes nothing to ``m``.
    """
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(a) for a in self.parts), reverse=True))
        if any(a < 2 for a in parts):
            raise ValueError(f"arrow tuple parts must be >= 2, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "ArrowTuple":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "ArrowTuple":
        return cls(tuple(int(x) for x in text.replace(" ", "").split(",") if x))

    @property
    def m(self) -> int:
        return sum(a - 1 for a in self.parts) + 1

    @property
    def p(self) -> int:
        return max(self.parts, default=1)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class ArrowSpec:
    m: int
    p: int

    def __post_init__(self):
        if self.m < 1 or self.p < 2:
            raise ValueError(f"need m >= 1 and p >= 2, got m={self.m}, p={self.p}")

    def __str__(self):
        return f"{self.m}|{self.p}"


def check_exists(spec: ArrowSpec, q: int) -> None:
    """Reject the q = m - 1 classes that are empty for every n (requires m >= p + 2)."""
    if q == spec.m - 1 and spec.m < spec.p + 2:
        raise ValueError(f"H~({spec.m}|{spec.p}; {q}) is empty: q = m - 1 needs m >= p + 2")


def _partitions(total: int, largest: int) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(total - first, first))
    return out


def tuples_for(m: int, p: int) -> list[ArrowTuple]:
    """Every tuple with sum(a_i - 1) + 1 = m and 2 <= a_i <= p."""
    return [ArrowTuple(tuple(x + 1 for x in part)) for part in _partitions(m - 1, p - 1)]


def reduced_tuples_for(m: int, p: int) -> list[ArrowTuple]:
    """Tuples in which no two parts can be merged into one part of size <= p.

    Merging a_i, a_j into a_i + a_j - 1 gives a tuple whose arrowing implies
    the original's, so these tuples alone decide m|p.
    """
    out = []
    for t in tuples_for(m, p):
        a = t.parts
        # parts are descending, so the two smallest decide mergeability
        if len(a) < 2 or (a[-1] - 1) + (a[-2] - 1) > p - 1:
            out.append(t)
    return out


def _free_coloring(g: Graph, parts: tuple[int, ...]) -> Optional[list[int]]:
    """Backtracking search for a coloring where class i has no parts[i]-clique."""
    s = len(parts)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    adj = g.adj
    classes = [0] * s

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        for i in range(s):
            if not classes[i] and i > 0 and parts[i - 1] == parts[i] and not classes[i - 1]:
                # equal parts are interchangeable: fill empty ones left to right
                continue
            if has_clique_in(g, classes[i] & adj[v], parts[i] - 1):
                continue
            classes[i] |= 1 << v
            if place(idx + 1):
                return True
            classes[i] &= ~(1 << v)
        return False

    return classes if place(0) else None


def arrows(g: Graph, t: ArrowTuple, chi_prune: bool = False,
           chi_cap: int = EXACT_CHI_CAP) -> tuple[bool, Optional[list[int]]]:
    """Decide G -> t.  Returns ``(flag, witness)``.

    The witness, present only when the flag is False, is a list of vertex
    bitmasks V_1..V_s partitioning V(G) with no parts[i]-clique inside V_i.
    """
    parts = t.parts
    if not parts:
        return True, None
    if len(parts) == 1:
        if has_clique(g, parts[0]):
            return True, None
        return False, [g.all_vertices]
    if chi_prune and g.n <= chi_cap:
        chi = chromatic_number(g, chi_cap)
        if chi is not None and chi < t.m:
            witness = _free_coloring_from_chi(g, parts, chi)
            return False, witness
    witness = _free_coloring(g, parts)
    return witness is None, witness


def _free_coloring_from_chi(g: Graph, parts: tuple[int, ...], chi: int) -> list[int]:
    # recover an explicit chi-coloring, then pack a_i - 1 of its classes into part i
    n, adj = g.n, g.adj
    color = [-1] * n
    classes = [0] * chi

    def solve(i: int) -> bool:
        if i == n:
            return True
        for c in range(chi):
            if not classes[c] & adj[i]:
                classes[c] |= 1 << i
                color[i] = c
                if solve(i + 1):
                    return True
                classes[c] &= ~(1 << i)
            if not classes[c]:
                break
        return False

    if not solve(0):
        raise RuntimeError(f"no {chi}-coloring found although chi = {chi}")
    out, c = [], 0
    for a in parts:
        mask = 0
        for _ in range(a - 1):
            if c < chi:
                mask |= classes[c]
                c += 1
        out.append(mask)
    return out


def is_free_coloring(g: Graph, t: ArrowTuple, witness: list[int]) -> bool:
    """Check that ``witness`` partitions V(G) with no parts[i]-clique in class i."""
    if len(witness) != len(t.parts):
        return False
    union = 0
    for mask in witness:
        if union & mask:
            return False
        union |= mask
    if union != g.all_vertices:
        return False
    return all(not has_clique_in(g, mask, a) for mask, a in zip(witness, t.parts))


def arrows_uni(g: Graph, spec: ArrowSpec, full_tuples: bool = False,
               chi_prune: bool = False) -> bool:
    """Decide G -> m|p.  By default only the merge-maximal tuples are tried."""
    m, p = spec.m, spec.p
    if g.n < m and not full_tuples:
        # chi(G) <= n < m rules out every tuple
        return False
    tuples = tuples_for(m, p) if full_tuples else reduced_tuples_for(m, p)
    # cheap single-part tuples first
    tuples = sorted(tuples, key=lambda t: len(t.parts))
    return all(arrows(g, t, chi_prune=chi_prune)[0] for t in tuples)


def in_class(g: Graph, spec: ArrowSpec, q: int, full_tuples: bool = False) -> bool:
    """G in H~(m|p; q): omega(G) < q and G -> m|p."""
    if has_clique(g, q):
        return False
    return arrows_uni(g, spec, full_tuples=full_tuples)


def omega_below(g: Graph, q: int) -> bool:
    return clique_number(g) < q


def witness_classes(witness: list[int]) -> list[list[int]]:
    return [list(bits(mask)) for mask in witness]
