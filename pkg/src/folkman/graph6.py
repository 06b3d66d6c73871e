"""graph6 encoding and canonical stage files.

Only the single-byte size header is supported (n <= 62), which covers every
class this package enumerates.
"""
from __future__ import annotations

import hashlib
from pathlib import Path
from typing import Iterable

from .graph import Graph, _from_rows


class Graph6Error(ValueError):
    pass


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > 62:
        raise Graph6Error(f"graph6 short header supports n <= 62, got {n}")
    out = [chr(n + 63)]
    acc = nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def decode_graph6(line: str, strict: bool = True) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 line")
    data = [ord(c) - 63 for c in text]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f"byte outside the graph6 range 63..126 in {line!r}")
    n = data[0]
    if n == 63:
        raise Graph6Error("long graph6 headers (n > 62) are not supported")
    if n < 1:
        raise Graph6Error("graph6 graphs must have at least one vertex")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if strict and nbytes and body[-1] & ((1 << (6 * nbytes - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    return _from_rows(n, rows)


def write_stage_file(path: str | Path, graphs: Iterable[Graph]) -> str:
    """Write graphs in canonical form sorted by certificate; return the sha256.

    The bytes depend only on the set of isomorphism classes, so two runs that
    find the same classes in a different order produce identical files.
    """
    from .canon import canonical_certificate

    certs = sorted({canonical_certificate(g) for g in graphs})
    payload = b"".join(c + b"\n" for c in certs)
    Path(path).write_bytes(payload)
    return hashlib.sha256(payload).hexdigest()


def read_stage_file(path: str | Path, strict: bool = True) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return [decode_graph6(line, strict) for line in fh if line.strip()]


def file_checksum(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
