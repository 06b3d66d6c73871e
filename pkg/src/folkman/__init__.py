"""Exhaustive computation of modified vertex Folkman numbers wFv(m|p; q).

Graphs are small (at most 64 vertices) and stored as tuples of adjacency
bitmasks; see :mod:`folkman.graph`.  The staged search lives in
:mod:`folkman.search` and is driven by :mod:`folkman.pipeline`.
"""
__version__ = "0.1.0"
