"""Exhaustive F_v(a_1, ..., a_s; q) for a few tiny cases, with their extremal graphs.

Compares against m + p, the value of F_v(a_1..a_s; m) for p = max a_i.
The (2,3) case scans every labeled graph on up to 7 vertices (a minute or so).
"""
import time

from folkman.arrowing import ArrowTuple
from folkman.cli import describe
from folkman.oracles import brute_force_folkman

CASES = [((2, 2), 3), ((2, 2, 2), 4), ((2, 3), 4)]

for parts, q in CASES:
    t = ArrowTuple(parts)
    t0 = time.perf_counter()
    value, graphs = brute_force_folkman(t, q, 7)
    names = ", ".join(describe(g) for g in graphs)
    expected = t.m + t.p if q == t.m else None
    print(f"F_v{t}; q={q}: {value} (m + p = {expected}) extremal: {names}  [{time.perf_counter() - t0:.1f}s]")
