# src/planarc5/graphs/graph6.py
from __future__ import annotations

import logging
from typing import Iterable, Iterator

from planarc5.config import get_settings
from planarc5.errors import Graph6Error
from planarc5.graphs.base import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Header-free graph6 text for `g` (upper triangle, column by column)."""
    bits: list[int] = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = group << 1 | b
        body.append(chr(group + 63))
    return _size_prefix(g.n) + "".join(body)


def _parse_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    if len(data) < start + width:
        raise Graph6Error("truncated size prefix")
    n = 0
    for c in data[start : start + width]:
        n = n << 6 | (c - 63)
    return n, start + width


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 line")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the printable graph6 range 63..126")
    data = s.encode("ascii")
    n, offset = _parse_size(data)
    if n > get_settings().max_vertices:
        raise Graph6Error(f"declared {n} vertices, above the configured maximum")
    pairs = n * (n - 1) // 2
    expected = -(-pairs // 6)
    body = data[offset:]
    if len(body) != expected:
        raise Graph6Error(f"n={n} needs {expected} body bytes, got {len(body)}")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield (line number, graph or the decode error) for each non-blank line."""
    for line_no, line in enumerate(lines, start=1):
        s = line.strip()
        if s.startswith(HEADER):
            s = s[len(HEADER) :]
        if not s:
            continue
        try:
            yield line_no, graph6_decode(s)
        except Graph6Error as exc:
            logger.warning("line %d: %s", line_no, exc)
            yield line_no, exc
