"""Text formats: graph6, edge lists and tree-cover JSON."""

import json
from typing import Iterable, List, Sequence

from .errors import GraphParseError
from .graph import MAX_VERTICES, Graph, VertexSet, iter_bits

GRAPH6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 0x3F)) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    payload = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        payload.append(chr(63 + value))
    return _encode_size(g.n) + "".join(payload)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; errors carry the offending byte offset."""
    line = text.rstrip("\r\n")
    base = 0
    if line.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        line = line[base:]
    if not line:
        raise GraphParseError("empty graph6 string", offset=base)
    for k, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"byte {ch!r} outside the graph6 range", offset=base + k)

    if line[0] != "~":
        n, start = ord(line[0]) - 63, 1
    else:
        if len(line) < 4:
            raise GraphParseError("truncated vertex count", offset=base + len(line))
        if line[1] == "~":
            raise GraphParseError(
                f"eight-byte vertex counts exceed the {MAX_VERTICES}-vertex limit",
                offset=base + 1,
            )
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        start = 4
        if n > MAX_VERTICES:
            raise GraphParseError(
                f"{n} vertices exceed the {MAX_VERTICES}-vertex limit", offset=base
            )

    nbits = n * (n - 1) // 2
    expected = start + (nbits + 5) // 6
    if len(line) < expected:
        raise GraphParseError(
            f"expected {expected} bytes for {n} vertices, got {len(line)}",
            offset=base + len(line),
        )
    if len(line) > expected:
        raise GraphParseError("trailing garbage after the adjacency payload", offset=base + expected)

    bits = []
    for ch in line[start:expected]:
        value = ord(ch) - 63
        bits.extend(value >> shift & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphParseError("nonzero padding bits", offset=base + expected - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored; repeated edges are idempotent.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        try:
            values = [int(tok) for tok in tokens]
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", line=lineno) from None
        if n is None:
            if len(values) != 1 or values[0] < 0:
                raise GraphParseError("first line must hold the vertex count", line=lineno)
            n = values[0]
            if n > MAX_VERTICES:
                raise GraphParseError(
                    f"{n} vertices exceed the {MAX_VERTICES}-vertex limit", line=lineno
                )
            continue
        if len(values) != 2:
            raise GraphParseError("expected exactly two vertex indices", line=lineno)
        u, v = values
        if u == v:
            raise GraphParseError(f"loop at vertex {u} rejected", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range 0..{n - 1}", line=lineno)
        edges.append((u, v))
    if n is None:
        raise GraphParseError("missing vertex count", line=1)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parts_to_lists(parts: Iterable[VertexSet]) -> List[List[int]]:
    """Vertex lists sorted within each part and parts sorted by their first vertex."""
    return sorted((list(iter_bits(p)) for p in parts), key=lambda part: part[:1])


def cover_to_json(parts: Sequence[VertexSet]) -> str:
    return json.dumps(parts_to_lists(parts))


def cover_from_json(text: str) -> List[List[int]]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(p, list) for p in data):
        raise GraphParseError("a tree cover is a JSON array of arrays of vertex indices")
    return [[int(v) for v in part] for part in data]
