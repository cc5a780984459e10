"""graph6 codec for interchange with external graph corpora.

Layout: a vertex-count header (one byte 63+n for n <= 62, or '~' plus three
bytes of 18 big-endian bits for larger n), then the upper adjacency triangle
in column-major order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per
byte, most significant bit first, each byte offset by 63. Trailing pad bits
must be zero.
"""

from __future__ import annotations

from .errors import MalformedHeader, NonCanonicalPadding, TooManyVertices, TruncatedBits
from .graphs import MAX_VERTICES, Graph


def _decode_header(data: bytes) -> tuple[int, int]:
    """Return (n, offset of the first body byte)."""
    if not data:
        raise MalformedHeader("empty graph6 line")
    b0 = data[0]
    if b0 == 126:  # '~': long form
        if len(data) >= 2 and data[1] == 126:
            raise MalformedHeader("8-byte vertex counts are far beyond the 64-vertex cap")
        if len(data) < 4:
            raise MalformedHeader("truncated long-form vertex count")
        chunk = data[1:4]
        if any(not 63 <= b <= 126 for b in chunk):
            raise MalformedHeader("long-form vertex count byte out of range")
        n = 0
        for b in chunk:
            n = n << 6 | (b - 63)
        if n < 63:
            raise MalformedHeader("long-form header used for a short vertex count")
        return n, 4
    if not 63 <= b0 <= 125:
        raise MalformedHeader(f"header byte {b0} out of range")
    return b0 - 63, 1


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line."""
    data = line.encode("ascii") if isinstance(line, str) else line
    data = data.rstrip(b"\r\n")
    n, pos = _decode_header(data)
    if n > MAX_VERTICES:
        raise TooManyVertices(f"graph6 line encodes {n} vertices, cap is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise TruncatedBits(f"need {nbytes} body bytes for n = {n}, got {len(body)}")
    if len(body) > nbytes:
        raise TruncatedBits(f"trailing bytes after {nbytes} body bytes")
    value = 0
    for b in body:
        if not 63 <= b <= 126:
            raise TruncatedBits(f"body byte {b} out of range")
        value = value << 6 | (b - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise NonCanonicalPadding("padding bits must be zero")
    value >>= pad
    rows = [0] * n
    k = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if value >> k & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            k -= 1
    return Graph(n, tuple(rows))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as its canonical graph6 line."""
    n = g.n
    if n <= 62:
        header = bytes([n + 63])
    else:
        header = bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    value = 0
    nbits = n * (n - 1) // 2
    for col in range(1, n):
        for row in range(col):
            value = value << 1 | (g.adj[row] >> col & 1)
    pad = (6 - nbits % 6) % 6
    value <<= pad
    body = bytearray()
    for shift in range(nbits + pad - 6, -1, -6):
        body.append(63 + (value >> shift & 63))
    return (header + bytes(body)).decode("ascii")
