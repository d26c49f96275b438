"""graph6 encoding and decoding.

Format (byte-exact):

* Size header N(n): for n <= 62 a single byte chr(63 + n); for
  63 <= n <= 258047 the byte '~' (126) followed by three bytes holding n
  as an 18-bit big-endian value, 6 bits per byte, each offset by 63.
* Body: the upper triangle of the adjacency matrix in column-major order
  (pairs (0,1), (0,2), (1,2), (0,3), ...), packed 6 bits per byte, most
  significant bit first, padded with zero bits to a byte boundary, every
  byte offset by 63. All bytes are printable ASCII in [63, 126].

A file is one graph per line. The optional ">>graph6<<" prefix emitted by
some tools is accepted and stripped on input.
"""

from .graphs import Graph

_HEADER = b">>graph6<<"
_MAX_N = 258047  # 2^18 - 1


class Graph6Error(ValueError):
    """Malformed graph6 input; the message names the failing byte offset."""


def to_graph6(g: Graph) -> bytes:
    if g.n > _MAX_N:
        raise Graph6Error(f"graph too large for graph6: {g.n} vertices")
    n = g.n
    if n <= 62:
        out = [63 + n]
    else:
        out = [126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 value. Rejects trailing bytes and padding bits set."""
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 input (offset 0)")
    for off, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} out of graph6 range at offset {off}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 sizes above 2^18-1 are unsupported (offset 1)")
        if len(data) < 4:
            raise Graph6Error(f"truncated long-form size header at offset {len(data)}")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
        body_off = 4
    else:
        n = data[0] - 63
        body = data[1:]
        body_off = 1
    tri = n * (n - 1) // 2
    need = (tri + 5) // 6
    if len(body) < need:
        raise Graph6Error(
            f"body too short for {n} vertices: need {need} bytes, "
            f"got {len(body)} (offset {body_off + len(body)})"
        )
    if len(body) > need:
        raise Graph6Error(f"trailing bytes after graph body (offset {body_off + need})")
    rows = [0] * n
    idx = 0
    u, v = 0, 1
    for i, b in enumerate(body):
        bits = b - 63
        for k in range(5, -1, -1):
            if idx >= tri:
                if (bits >> k) & 1:
                    raise Graph6Error(f"padding bit set at offset {body_off + i}")
                continue
            if (bits >> k) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
            u += 1
            if u == v:
                u = 0
                v += 1
    return Graph(n, tuple(rows))


def iter_graph6(lines) -> "list[Graph]":
    """Decode an iterable of graph6 lines, skipping blank lines."""
    out = []
    for lineno, line in enumerate(lines, 1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            out.append(from_graph6(line))
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
    return out
