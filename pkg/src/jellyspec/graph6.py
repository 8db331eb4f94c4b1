"""graph6 encoding and decoding (one graph per line, optional ``>>graph6<<`` header)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import MalformedGraph6
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_n(g.n) + "".join(body)


def _sextets(text: str) -> list[int]:
    out = []
    for ch in text:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise MalformedGraph6(f"character {ch!r} outside the graph6 range 63..126")
        out.append(code - 63)
    return out


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = _sextets(s)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise MalformedGraph6("truncated 36-bit vertex count")
        n, pos = 0, 8
        for x in data[2:8]:
            n = n << 6 | x
    else:
        if len(data) < 4:
            raise MalformedGraph6("truncated 18-bit vertex count")
        n, pos = 0, 4
        for x in data[1:4]:
            n = n << 6 | x
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != expected:
        raise MalformedGraph6(f"n={n} needs {expected} body characters, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = 6 * expected - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """Decode a stream of graph6 lines, skipping blanks."""
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> None:
    for g in graphs:
        out.write(graph6_encode(g) + "\n")
