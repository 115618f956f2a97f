"""Text formats: graph6 (interchange), edge lists (hand-written), DOT (export only)."""

from __future__ import annotations

import numpy as np

from . import graph as _graph
from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Raised when text cannot be decoded into a graph."""


def _encode_size(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated graph6 size header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def _bit_positions(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper-triangle cells ``(i, j)`` in graph6 order: j = 1..n-1, then i = 0..j-1."""
    j, i = np.tril_indices(n, -1)
    return i, j


def emit_graph6(g: Graph) -> str:
    """Canonical graph6 text for ``g`` (shortest size header, no ``>>graph6<<`` prefix)."""
    i, j = _bit_positions(g.n)
    bits = g.adj[i, j]
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=bool)]).reshape(-1, 6)
    values = bits.astype(np.uint8) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.uint8)
    return (_encode_size(g.n) + (values + 63).astype(np.uint8).tobytes()).decode("ascii")


def parse_graph6(text: str | bytes, *, max_vertices: int | None = None) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(GRAPH6_HEADER.encode()):
        data = data[len(GRAPH6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b!r} outside the graph6 range 63..126")
    n, offset = _decode_size(data)
    cap = _graph.MAX_VERTICES if max_vertices is None else max_vertices
    if n > cap:
        raise FormatError(f"graph6 declares {n} vertices, over the limit of {cap}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise FormatError(f"truncated graph6 body: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise FormatError(f"trailing data after graph6 body ({len(body) - nbytes} bytes)")
    values = np.frombuffer(body, dtype=np.uint8) - 63
    bits = np.unpackbits(values[:, None], axis=1)[:, 2:].ravel()
    if bits[nbits:].any():
        raise FormatError("nonzero padding bits in graph6 body")
    adj = np.zeros((n, n), dtype=bool)
    i, j = _bit_positions(n)
    adj[i, j] = bits[:nbits].astype(bool)
    adj |= adj.T
    return Graph(adj, max_vertices=cap)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored; repeated edges are harmless.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("edge list is empty; expected a vertex count")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"bad vertex count {lines[0]!r}") from None
    if n < 0:
        raise FormatError("vertex count must be non-negative")
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {ln!r}") from None
        if u == v:
            raise FormatError(f"line {lineno}: loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"line {lineno}: vertex out of range for n={n}")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except FormatError:
        raise
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges()])


def emit_dot(g: Graph, name: str = "G") -> str:
    out = [f"graph {name} {{\n"]
    out += [f"  {v};\n" for v in range(g.n)]
    out += [f"  {u} -- {v};\n" for u, v in g.edges()]
    out.append("}\n")
    return "".join(out)


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    raise FormatError(f"unsupported input format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edges":
        return emit_edge_list(g)
    if fmt == "dot":
        return emit_dot(g)
    raise FormatError(f"unsupported output format {fmt!r}")
