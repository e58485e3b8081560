"""Simple undirected graphs stored as an upper-triangular adjacency bitset.

Pair ``{i, j}`` with ``i < j`` lives at bit ``j*(j-1)//2 + i``, i.e. pairs are
ordered (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  This is the graph6 bit
order, so the same integer serves computation and serialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex arguments."""


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def index_pair(idx: int) -> tuple[int, int]:
    """Inverse of :func:`pair_index`."""
    j = 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j


def _check_size(n: int) -> None:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise GraphError(f"vertex count {n} exceeds the cap of {MAX_VERTICES}")


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    bits: int = 0

    def __post_init__(self):
        _check_size(self.vertex_count)
        if self.bits < 0 or self.bits >> (self.vertex_count * (self.vertex_count - 1) // 2):
            raise GraphError("adjacency bits reference pairs outside the vertex range")

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_size(vertex_count)
        bits = 0
        for i, j in edges:
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            if not (0 <= i < vertex_count and 0 <= j < vertex_count):
                raise GraphError(f"edge ({i}, {j}) out of range for {vertex_count} vertices")
            bits |= 1 << pair_index(i, j)
        return cls(vertex_count, bits)

    @classmethod
    def from_neighbors(cls, neighbors: Sequence[int]) -> Graph:
        n = len(neighbors)
        bits = 0
        for j in range(1, n):
            row = neighbors[j]
            base = j * (j - 1) // 2
            for i in range(j):
                if row >> i & 1:
                    bits |= 1 << (base + i)
        return cls(n, bits)

    @property
    def edge_count(self) -> int:
        return self.bits.bit_count()

    @cached_property
    def neighbors(self) -> tuple[int, ...]:
        """Neighbour sets as vertex bitmasks, one per vertex."""
        nbr = [0] * self.vertex_count
        bits = self.bits
        for j in range(1, self.vertex_count):
            col = (bits >> (j * (j - 1) // 2)) & ((1 << j) - 1)
            if col:
                nbr[j] |= col
                i = 0
                while col:
                    if col & 1:
                        nbr[i] |= 1 << j
                    col >>= 1
                    i += 1
        return tuple(nbr)

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool(self.bits >> pair_index(i, j) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in bit order."""
        bits = self.bits
        idx = 0
        while bits:
            if bits & 1:
                yield index_pair(idx)
            bits >>= 1
            idx += 1

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edges={list(self.edges())})"


class OpenTriple(NamedTuple):
    """Edges xy and yz present, xz absent."""

    x: int
    y: int
    z: int


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v} out of range for {g.vertex_count} vertices")


def triangle_count(g: Graph) -> int:
    nbr = g.neighbors
    total = 0
    for i, j in g.edges():
        total += (nbr[i] & nbr[j]).bit_count()
    return total // 3


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.neighbors[v].bit_count()


def degree_sequence(g: Graph) -> list[int]:
    return [m.bit_count() for m in g.neighbors]


def complete_graph(r: int) -> Graph:
    """K_r.  ``r == 0`` gives the empty graph on no vertices."""
    _check_size(r)
    return Graph(r, (1 << (r * (r - 1) // 2)) - 1)


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise GraphError("relabel needs a permutation of the vertex set")
    return Graph.from_edges(g.vertex_count, ((perm[i], perm[j]) for i, j in g.edges()))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``; vertex ``vertices[k]`` becomes ``k``."""
    pos = {v: k for k, v in enumerate(vertices)}
    return Graph.from_edges(
        len(vertices), ((pos[i], pos[j]) for i, j in g.edges() if i in pos and j in pos)
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.vertex_count
    edges = list(g.edges()) + [(i + off, j + off) for i, j in h.edges()]
    return Graph.from_edges(g.vertex_count + h.vertex_count, edges)


def attach_fan(g: Graph, targets: Sequence[int]) -> Graph:
    """Add one vertex (index ``g.vertex_count``) adjacent exactly to ``targets``."""
    if len(set(targets)) != len(targets):
        raise GraphError(f"duplicate fan targets: {list(targets)}")
    for v in targets:
        _check_vertex(g, v)
    new = g.vertex_count
    return Graph.from_edges(new + 1, list(g.edges()) + [(v, new) for v in targets])


def quotient(g: Graph, mapping: Sequence[int], size: int) -> Graph:
    """Image of ``g`` under the vertex map ``v -> mapping[v]`` onto ``size`` vertices.

    Edges whose endpoints collapse to one vertex vanish; parallel images merge.
    """
    edges = set()
    for i, j in g.edges():
        a, b = mapping[i], mapping[j]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(size, edges)


def contraction_map(n: int, u: int, v: int) -> list[int]:
    """Vertex map used by :func:`contract_pair`.

    The merged vertex takes the smaller index; indices above the larger one
    shift down by one.
    """
    lo, hi = min(u, v), max(u, v)
    out = []
    for w in range(n):
        if w == hi:
            out.append(lo)
        elif w > hi:
            out.append(w - 1)
        else:
            out.append(w)
    return out


def contract_pair(g: Graph, u: int, v: int) -> Graph:
    """Identify ``u`` and ``v`` into one vertex adjacent to N(u) | N(v).

    Any u-v edge is lost, and edges that become parallel collapse, so the
    edge count can drop.
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("cannot contract a vertex with itself")
    return quotient(g, contraction_map(g.vertex_count, u, v), g.vertex_count - 1)


def find_open_triple(g: Graph) -> OpenTriple | None:
    # scan order: centre y, then x, then z, all ascending
    nbr = g.neighbors
    for y in range(g.vertex_count):
        ny = nbr[y]
        for x in _bits(ny):
            missing = ny & ~nbr[x] & ~(1 << x)
            if missing:
                z = (missing & -missing).bit_length() - 1
                return OpenTriple(x, y, z)
    return None


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    nbr = g.neighbors
    seen = 0
    out = []
    for s in range(g.vertex_count):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= nbr[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def is_connected(g: Graph) -> bool:
    # the empty graph on 0 vertices counts as connected
    return component_count(g) <= 1


def is_complete(g: Graph) -> bool:
    n = g.vertex_count
    return g.edge_count == n * (n - 1) // 2


def strip_isolated(g: Graph) -> Graph:
    keep = [v for v, m in enumerate(g.neighbors) if m]
    return induced_subgraph(g, keep)
