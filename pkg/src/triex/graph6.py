"""graph6 reader/writer for graphs of at most 62 vertices."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    n = g.vertex_count
    nbits = n * (n - 1) // 2
    out = [chr(n + 63)]
    bits = g.bits
    for start in range(0, nbits, 6):
        group = 0
        for k in range(6):
            idx = start + k
            group <<= 1
            if idx < nbits and bits >> idx & 1:
                group |= 1
        out.append(chr(group + 63))
    return "".join(out)


def decode(line: str) -> Graph:
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise Graph6Error(f"only graphs with at most {MAX_VERTICES} vertices are supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    need = -(-nbits // 6)
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for {n} vertices, got {len(body)}")
    bits = 0
    for g, ch in enumerate(body):
        val = ord(ch) - 63
        for k in range(6):
            idx = 6 * g + k
            if val >> (5 - k) & 1:
                if idx >= nbits:
                    raise Graph6Error("non-zero padding bits")
                bits |= 1 << idx
    return Graph(n, bits)


def read_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6Error]]:
    """Yield ``(line_number, graph_or_error)``; blank lines are skipped."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, decode(line)
        except Graph6Error as exc:
            yield lineno, exc


def write(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(encode(g) + "\n")
