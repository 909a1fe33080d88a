"""Bit-exact graph6 text encoding for labeled simple graphs (n < 63), plus a
one-graph-per-line corpus format with '#' comments."""

from __future__ import annotations

import io
from typing import Iterable, Union

from .graphs import Graph, graph_from_adj

_MAX_N = 62  # single-byte header form only


def graph6_encode(g: Graph) -> str:
    """Encode a labeled graph: header byte n+63, then the upper adjacency
    triangle read column by column, packed into 6-bit chunks offset by 63."""
    if g.n > _MAX_N:
        raise ValueError(f"graph6 small-header form supports n <= {_MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    adj = g.adj
    chunk = 0
    nbits = 0
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            chunk = chunk << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                nbits = 0
    if nbits:
        chunk <<= 6 - nbits
        out.append(chr(chunk + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string back to a labeled Graph.

    Raises ValueError with the byte offset for malformed input: bad header,
    out-of-range characters, wrong body length, or nonzero padding bits.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    for off, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise ValueError(f"invalid graph6 character {ch!r} at offset {off}")
    n = ord(s[0]) - 63
    if n > _MAX_N:
        raise ValueError(f"unsupported graph6 header at offset 0: n = {n} > {_MAX_N}")
    nbits = n * (n - 1) // 2
    body_len = (nbits + 5) // 6
    if len(s) - 1 != body_len:
        raise ValueError(
            f"graph6 body length mismatch at offset {len(s)}: "
            f"expected {body_len} bytes for n={n}, got {len(s) - 1}"
        )
    adj = [0] * n
    bit_index = 0
    for k in range(body_len):
        chunk = ord(s[1 + k]) - 63
        for b in range(5, -1, -1):
            bit = chunk >> b & 1
            if bit_index >= nbits:
                if bit:
                    raise ValueError(f"nonzero padding bit at offset {1 + k}")
                continue
            if bit:
                i, j = _triangle_position(bit_index)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit_index += 1
    return graph_from_adj(n, adj)


def _triangle_position(index: int) -> tuple[int, int]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    j = 1
    while j * (j - 1) // 2 <= index:
        j += 1
    j -= 1
    return index - j * (j - 1) // 2, j


def write_graph6_lines(graphs: Iterable[Graph], dest: Union[str, io.TextIOBase]) -> None:
    """Write one graph6 line per graph; dest may be a path or a text stream."""
    if isinstance(dest, str):
        with open(dest, "w") as fh:
            write_graph6_lines(graphs, fh)
        return
    for g in graphs:
        dest.write(graph6_encode(g) + "\n")


def read_graph6_lines(src: Union[str, io.TextIOBase, Iterable[str]]) -> list[Graph]:
    """Read a graph6 corpus: one graph per line, '#' comments and blank lines skipped."""
    if isinstance(src, str):
        with open(src) as fh:
            return read_graph6_lines(fh)
    out = []
    for line in src:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(graph6_decode(line))
    return out
