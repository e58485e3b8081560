"""Maximum triangle counts for a fixed number of edges, and the graphs attaining them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from math import comb

from .graph import Graph, attach_fan, complete_graph, disjoint_union


@dataclass(frozen=True)
class TriangularDecomposition:
    """``n = C(r, 2) + t`` with ``C(r, 2) <= n < C(r+1, 2)``."""

    n: int
    r: int
    t: int

    def __post_init__(self):
        if not (comb(self.r, 2) <= self.n < comb(self.r + 1, 2)) or self.t != self.n - comb(self.r, 2):
            raise ValueError(f"inconsistent decomposition {self}")

    @property
    def min_vertices(self) -> int:
        """Fewest vertices carrying ``n`` edges."""
        return self.r if self.t == 0 else self.r + 1


def triangular_decompose(n: int) -> TriangularDecomposition:
    if n < 0:
        raise ValueError(f"edge count must be non-negative, got {n}")
    # largest r with r(r-1)/2 <= n
    r = (1 + math.isqrt(1 + 8 * n)) // 2
    return TriangularDecomposition(n, r, n - comb(r, 2))


def max_triangles(n: int) -> int:
    d = triangular_decompose(n)
    return comb(d.r, 3) + comb(d.t, 2)


def rivin_bound(edge_count: int, vertex_count: int) -> float:
    """Rivin's E^{3/2} bound on triangles for E edges on V vertices.

    Accepts ``V >= 2`` (at V = 2 the bound is 0, which is exact).
    """
    if edge_count < 1:
        raise ValueError("rivin_bound needs at least one edge")
    if vertex_count < 2:
        raise ValueError("rivin_bound needs at least two vertices")
    if edge_count > comb(vertex_count, 2):
        raise ValueError(f"{edge_count} edges do not fit on {vertex_count} vertices")
    v = vertex_count
    return (v - 2) / math.sqrt(v * (v - 1)) * math.sqrt(2) / 3 * edge_count ** 1.5


def rivin_best(n: int) -> float:
    """Rivin's bound at the fewest vertices able to carry ``n`` edges."""
    if n == 0:
        return 0.0
    return rivin_bound(n, triangular_decompose(n).min_vertices)


class Choose2Verdict(enum.Enum):
    STRICT = "strict"
    EQUAL = "equal"
    VIOLATED_PRECONDITION = "violated-precondition"


def choose2_inequality_holds(a: int, b: int, c: int, d: int, m: int) -> Choose2Verdict:
    """Compare C(c,2)+C(d,2) against C(a,2)+C(b,2) for a split with c >= a >= b.

    Raises ``AssertionError`` if the inequality fails under valid hypotheses,
    which would mean the split inequality is false.
    """
    if min(a, b, c, d, m) < 0 or a + b != m or c + d != m or not c >= a >= b:
        return Choose2Verdict.VIOLATED_PRECONDITION
    lhs = comb(c, 2) + comb(d, 2)
    rhs = comb(a, 2) + comb(b, 2)
    if lhs < rhs:
        raise AssertionError(f"C(c,2)+C(d,2) < C(a,2)+C(b,2) at {(a, b, c, d)}")
    if lhs == rhs:
        if c != a:
            raise AssertionError(f"equality with c != a at {(a, b, c, d)}")
        return Choose2Verdict.EQUAL
    if c == a:
        raise AssertionError(f"strict inequality with c == a at {(a, b, c, d)}")
    return Choose2Verdict.STRICT


class ShapeKind(enum.Enum):
    COMPLETE = "complete"
    PENDANT_ONE = "pendant-one"
    K2_UNION_COMPLETE = "k2-union-complete"
    FAN = "fan"


@dataclass(frozen=True)
class ExtremalShape:
    kind: ShapeKind
    r: int
    t: int = 0

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r must be positive, got {self.r}")
        ok = {
            ShapeKind.COMPLETE: self.t == 0,
            ShapeKind.PENDANT_ONE: self.t == 1,
            ShapeKind.K2_UNION_COMPLETE: self.t == 1,
            ShapeKind.FAN: 2 <= self.t <= self.r - 1,
        }[self.kind]
        if not ok:
            raise ValueError(f"invalid parameters for {self.kind.value}: r={self.r}, t={self.t}")

    @classmethod
    def complete(cls, r: int) -> ExtremalShape:
        return cls(ShapeKind.COMPLETE, r, 0)

    @classmethod
    def pendant_one(cls, r: int) -> ExtremalShape:
        return cls(ShapeKind.PENDANT_ONE, r, 1)

    @classmethod
    def k2_union_complete(cls, r: int) -> ExtremalShape:
        return cls(ShapeKind.K2_UNION_COMPLETE, r, 1)

    @classmethod
    def fan(cls, r: int, t: int) -> ExtremalShape:
        return cls(ShapeKind.FAN, r, t)

    @property
    def connected(self) -> bool:
        return self.kind is not ShapeKind.K2_UNION_COMPLETE

    @property
    def edge_count(self) -> int:
        return comb(self.r, 2) + self.t

    def __str__(self) -> str:
        if self.kind is ShapeKind.FAN:
            return f"FanT({self.r},{self.t})"
        name = {
            ShapeKind.COMPLETE: "Complete",
            ShapeKind.PENDANT_ONE: "PendantOne",
            ShapeKind.K2_UNION_COMPLETE: "K2UnionComplete",
        }[self.kind]
        return f"{name}({self.r})"


def build_extremal(shape: ExtremalShape) -> Graph:
    kr = complete_graph(shape.r)
    if shape.kind is ShapeKind.COMPLETE:
        return kr
    if shape.kind is ShapeKind.K2_UNION_COMPLETE:
        return disjoint_union(complete_graph(2), kr)
    # pendant and fan: new vertex joined to the first t vertices of K_r
    return attach_fan(kr, list(range(shape.t)))


def maximizer_catalogue(n: int) -> list[ExtremalShape]:
    """Every triangle-maximal graph with ``n`` edges, ignoring isolated vertices."""
    if n < 1:
        raise ValueError("the catalogue starts at one edge")
    d = triangular_decompose(n)
    if d.t == 0:
        return [ExtremalShape.complete(d.r)]
    if d.t == 1:
        return [ExtremalShape.pendant_one(d.r), ExtremalShape.k2_union_complete(d.r)]
    return [ExtremalShape.fan(d.r, d.t)]
