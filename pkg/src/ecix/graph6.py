"""graph6 encoding and decoding (upper-triangle bits, column-major, 6 per char)."""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_N = 68719476735


class Graph6Error(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_N:
        raise Graph6Error(f"order {n} not representable in graph6")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: list[int]) -> tuple[int, int]:
    """Return (n, index of the first adjacency byte)."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 63 + 63:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte graph6 order header")
        vals, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte graph6 order header")
        vals, start = data[1:4], 4
    n = 0
    for b in vals:
        n = (n << 6) | (b - 63)
    return n, start


def encode_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for v in range(1, n):
        r = rows[v]
        for u in range(v):
            acc = (acc << 1) | ((r >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    data = [ord(c) for c in s]
    bad = [c for c in s if not 63 <= ord(c) <= 126]
    if bad:
        raise Graph6Error(f"character {bad[0]!r} outside the graph6 range 63..126")
    n, start = _decode_n(data)
    if n < 1:
        raise Graph6Error("graph6 order must be at least 1 for this tool")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start:]
    if len(body) != need:
        raise Graph6Error(f"graph6 body has {len(body)} characters, expected {need} for n={n}")
    rows = [0] * n
    u, v = 0, 1
    consumed = 0
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            if consumed == nbits:
                if val & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("graph6 padding bits are not zero")
                break
            if (val >> shift) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            consumed += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, tuple(rows))
