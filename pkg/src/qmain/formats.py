"""graph6 (short form) and plain edge-list serialization."""

from __future__ import annotations

from .errors import DuplicateEdge, InvalidEdge, ParseError, Unsupported
from .graph import Graph, from_edges

MAX_SHORT_N = 62


def _pairs(n: int):
    # graph6 bit order: column-major upper triangle (0,1),(0,2),(1,2),(0,3),...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII byte in graph6 input", exc.start) from None
    text = text.rstrip("\r\n")
    if text.startswith(">>graph6<<"):
        raise ParseError("graph6 header is not accepted", 0)
    if not text:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range 63..126", pos)
    n = ord(text[0]) - 63
    if n == 63:
        raise Unsupported("long-form graph6 (n > 62) is not supported")
    if n == 0:
        raise ParseError("graph6 with zero vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(text) != 1 + nbytes:
        raise ParseError(
            f"expected {1 + nbytes} characters for n={n}, got {len(text)}",
            min(len(text), 1 + nbytes),
        )
    value = 0
    for ch in text[1:]:
        value = value << 6 | (ord(ch) - 63)
    pad = 6 * nbytes - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", len(text) - 1)
    value >>= pad
    edges = []
    for k, (i, j) in enumerate(_pairs(n)):
        if value >> (nbits - 1 - k) & 1:
            edges.append((i, j))
    return from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > MAX_SHORT_N:
        raise Unsupported(f"graph6 long form not implemented (n={g.n} > {MAX_SHORT_N})")
    bits = [g.rows[i] >> j & 1 for i, j in _pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k:k + 6]:
            chunk = chunk << 1 | b
        out.append(chr(chunk + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment line."""
    header = None
    edges: list[tuple[int, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        start = offset
        offset += len(line.encode())
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {body!r}", start)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer field in {body!r}", start) from None
        if header is None:
            if a < 1 or b < 0:
                raise ParseError(f"bad header 'n m' = {a} {b}", start)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise ParseError(f"vertex out of range in edge {a} {b}", start)
        edges.append((a, b))
    if header is None:
        raise ParseError("empty edge list", 0)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}", offset)
    try:
        return from_edges(n, edges)
    except (InvalidEdge, DuplicateEdge) as exc:
        raise ParseError(str(exc)) from exc


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
