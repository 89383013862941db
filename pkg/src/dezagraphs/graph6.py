"""graph6 encoding and decoding, plus the JSON label sidecar."""

from __future__ import annotations

import json

from .errors import Graph6Error
from .graph import Graph


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"graph too large for graph6: n={n}")


def to_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline) for ``g``.

    Bits are the upper triangle read column by column: ``(0,1), (0,2), (1,2), (0,3), ...``.
    """
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + sum(bits[p + q] << (5 - q) for q in range(6)) for p in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str | bytes, labels=None) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii", errors="replace")
    data = text.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("graph6 bytes must lie in 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated graph6 size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        body = data[8:]
    else:
        if len(data) < 4:
            raise Graph6Error("truncated graph6 size field")
        n = 0
        for c in data[1:4]:
            n = (n << 6) | (c - 63)
        body = data[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    rows = [0] * n
    p = 0
    for j in range(1, n):
        for i in range(j):
            if (body[p // 6] - 63) >> (5 - p % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            p += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits in graph6 body")
    return Graph(n, tuple(rows), None if labels is None else tuple(labels))


def labels_to_json(g: Graph) -> str:
    return json.dumps(list(g.labels) if g.labels is not None else None)


def labels_from_json(text: str) -> list[str] | None:
    out = json.loads(text)
    if out is not None and not (isinstance(out, list) and all(isinstance(s, str) for s in out)):
        raise Graph6Error("label sidecar must be a JSON array of strings")
    return out
