"""graph6 encoding, bit-exact per the standard convention.

Size byte n+63 for n <= 62, the four-byte form (126, then 18 bits in
three sextets) above that; then the upper triangle column-major in
6-bit chunks, each chunk +63.
"""

from __future__ import annotations

from .errors import MalformedGraph6, OutOfRange
from .graph import MAX_VERTICES, Graph

_HEADER = b">>graph6<<"


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # 64-vertex cap keeps us in the 4-byte form
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> bytes:
    if g.n > MAX_VERTICES:
        raise OutOfRange("graph too large for this build")
    out = bytearray(_size_bytes(g.n))
    chunk = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chunk + 63)
                chunk = 0
                nbits = 0
    if nbits:
        out.append((chunk << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise MalformedGraph6("empty input")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise MalformedGraph6("unsupported or truncated size field")
        vals = [b - 63 for b in data[1:4]]
        if any(not 0 <= v < 64 for v in vals):
            raise MalformedGraph6("bad size byte")
        n = vals[0] << 12 | vals[1] << 6 | vals[2]
        body = data[4:]
    else:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise MalformedGraph6("bad size byte")
        body = data[1:]
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} body bytes, got {len(body)}")
    bitpos = 0
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            byte = body[bitpos // 6] - 63
            if not 0 <= byte < 64:
                raise MalformedGraph6("body byte out of range")
            if byte >> (5 - bitpos % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bitpos += 1
    if body and (body[-1] - 63) & ((1 << (-bitpos % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return Graph(n, tuple(adj))


def write_graph6_file(path, graphs) -> None:
    with open(path, "wb") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + b"\n")


def read_graph6_file(path) -> list[Graph]:
    out = []
    with open(path, "rb") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(graph6_decode(line))
    return out
