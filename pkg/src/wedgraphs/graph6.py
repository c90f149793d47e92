"""graph6 encoding, short form only (order <= 62).

The first byte is ``order + 63``; the upper-triangle adjacency bits follow
in column order ``x(0,1), x(0,2), x(1,2), x(0,3), ...``, packed big-endian
into 6-bit groups, zero-padded, each group offset by 63.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_ORDER = 62


class Graph6Error(GraphError):
    pass


def upper_triangle_bits(order: int, adj) -> list[int]:
    return [adj[i] >> j & 1 for j in range(1, order) for i in range(j)]


def encode(G: Graph) -> str:
    return encode_bits(G.order, upper_triangle_bits(G.order, G.adj))


def encode_bits(order: int, bitlist: list[int]) -> str:
    if not 0 <= order <= MAX_ORDER:
        raise Graph6Error(f"graph6 short form supports order 0..{MAX_ORDER}, got {order}")
    out = [chr(order + 63)]
    for start in range(0, len(bitlist), 6):
        chunk = bitlist[start:start + 6]
        value = 0
        for b in chunk:
            value = value << 1 | b
        value <<= 6 - len(chunk)
        out.append(chr(value + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 line")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {pos} ({ch!r}) outside 63..126")
    order = ord(s[0]) - 63
    if order > MAX_ORDER:
        raise Graph6Error("long-form graph6 (order > 62) is not supported")
    nbits = order * (order - 1) // 2
    need = -(-nbits // 6)
    payload = s[1:]
    if len(payload) != need:
        raise Graph6Error(
            f"order {order} needs {need} payload bytes, found {len(payload)}"
        )
    adj = [0] * order
    k = 0
    stream = [(ord(ch) - 63) >> shift & 1 for ch in payload for shift in range(5, -1, -1)]
    for j in range(1, order):
        for i in range(j):
            if stream[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if any(stream[nbits:]):
        raise Graph6Error("nonzero padding bits")
    return Graph(order, tuple(adj))
