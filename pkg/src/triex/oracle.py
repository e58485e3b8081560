"""Brute-force checks of the extremal results by exhaustive enumeration.

Edge subsets of K_B (B = vertex budget) are visited in colexicographic order
of pair indices.  A subset ``c_1 < ... < c_k`` has colex rank
``sum C(c_i, i)``, so any contiguous rank range can be scanned on its own and
ranges can be farmed out to worker processes.  Each worker returns a
``(max, {maximizer bitsets})`` pair; merging takes the larger max and unions
tied sets, which is associative and commutative, so the final report does not
depend on the number of workers.
"""

from __future__ import annotations

import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

from . import graph6
from .extremal import build_extremal, max_triangles, maximizer_catalogue, triangular_decompose
from .graph import (
    MAX_VERTICES,
    Graph,
    complete_graph,
    components,
    index_pair,
    quotient,
    strip_isolated,
    triangle_count,
)

log = logging.getLogger(__name__)

DEFAULT_WORK_CEILING = 200_000_000
CANONICAL_MAX_VERTICES = 12


class WorkloadTooLarge(RuntimeError):
    def __init__(self, subsets: int, ceiling: int):
        super().__init__(f"enumeration needs {subsets} edge subsets, above the ceiling of {ceiling}")
        self.subsets = subsets
        self.ceiling = ceiling


class CharacterizationMismatch(AssertionError):
    pass


def work_ceiling() -> int:
    env = os.environ.get("TRIEX_WORK_CEILING")
    return int(env) if env else DEFAULT_WORK_CEILING


# --------------------------------------------------------------------------
# canonical labelling


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-class key: vertex count plus the minimal adjacency bit-string."""

    vertex_count: int
    bitstring: str

    def graph(self) -> Graph:
        bits = 0
        for idx, ch in enumerate(self.bitstring):
            if ch == "1":
                bits |= 1 << idx
        return Graph(self.vertex_count, bits)

    def graph6(self) -> str:
        return graph6.encode(self.graph())


def _refine(nbr: Sequence[int]) -> list[int]:
    """Colour refinement seeded with degrees; colours are canonical ranks."""
    n = len(nbr)
    colour = [m.bit_count() for m in nbr]
    ranks = sorted(set(colour))
    colour = [ranks.index(c) for c in colour]
    while True:
        sigs = []
        for v in range(n):
            m = nbr[v]
            around = []
            u = 0
            while m:
                if m & 1:
                    around.append(colour[u])
                m >>= 1
                u += 1
            sigs.append((colour[v], tuple(sorted(around))))
        order = sorted(set(sigs))
        new = [order.index(s) for s in sigs]
        if len(order) == len(set(colour)):
            return new
        colour = new


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form of ``strip_isolated(g)``.

    Vertices are placed cell by cell (cells from colour refinement, in colour
    order); within a cell every placement order is tried and the
    lexicographically smallest bit-string wins.  Branches are cut when the
    partial string already exceeds the best one, and when a candidate is a
    twin of one already tried at the same depth (swapping twins is an
    automorphism fixing everything placed so far).
    """
    h = strip_isolated(g)
    n = h.vertex_count
    if n > CANONICAL_MAX_VERTICES:
        raise ValueError(f"canonical_form supports at most {CANONICAL_MAX_VERTICES} non-isolated vertices, got {n}")
    if n == 0:
        return CanonicalForm(0, "")
    nbr = h.neighbors
    colour = _refine(nbr)
    slot_cell = sorted(colour)
    cells: dict[int, int] = {}
    for v, c in enumerate(colour):
        cells[c] = cells.get(c, 0) | (1 << v)

    best: list[int] = []
    placed: list[int] = []
    stack: list[int] = []

    def twins(u: int, w: int) -> bool:
        return nbr[u] & ~(1 << w) == nbr[w] & ~(1 << u)

    def search(pos: int, unplaced: int) -> None:
        nonlocal best
        if pos == n:
            if not best or stack < best:
                best = stack[:]
            return
        cands = cells[slot_cell[pos]] & unplaced
        tried: list[int] = []
        while cands:
            low = cands & -cands
            cands ^= low
            v = low.bit_length() - 1
            if any(twins(u, v) for u in tried):
                continue
            tried.append(v)
            # column for this slot; earlier slots are the higher bits, so
            # integer order equals bit-string order
            col = 0
            nv = nbr[v]
            for k, u in enumerate(placed):
                if nv >> u & 1:
                    col |= 1 << (pos - 1 - k)
            stack.append(col)
            if not best or stack <= best[: pos + 1]:
                placed.append(v)
                search(pos + 1, unplaced & ~low)
                placed.pop()
            stack.pop()

    search(0, (1 << n) - 1)
    # column value bit (pos-1-k) encodes pair (k, pos); graph6 wants the
    # string with pair (k, pos) at position C(pos,2)+k, smallest string first
    out = []
    for pos in range(1, n):
        col = best[pos]
        out.extend("1" if col >> (pos - 1 - k) & 1 else "0" for k in range(pos))
    return CanonicalForm(n, "".join(out))


# --------------------------------------------------------------------------
# enumeration


STRUCTURAL = "structural"
EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class EnumerationTask:
    edge_count: int
    vertex_budget: int
    mode: str = STRUCTURAL

    def __post_init__(self):
        if self.edge_count < 1:
            raise ValueError("edge_count must be positive")
        if not 3 <= self.vertex_budget <= MAX_VERTICES:
            raise ValueError(f"vertex budget must lie in [3, {MAX_VERTICES}], got {self.vertex_budget}")
        if self.edge_count > comb(self.vertex_budget, 2):
            raise ValueError(f"{self.edge_count} edges do not fit on {self.vertex_budget} vertices")

    @classmethod
    def structural(cls, edge_count: int) -> EnumerationTask:
        """Budget r+2, enough for every catalogue member."""
        return cls(edge_count, max(3, triangular_decompose(edge_count).r + 2), STRUCTURAL)

    @classmethod
    def exhaustive(cls, edge_count: int) -> EnumerationTask:
        """Budget equal to the edge count, independent of the extremal shapes."""
        return cls(edge_count, max(3, min(edge_count, MAX_VERTICES)), EXHAUSTIVE)

    @property
    def subsets(self) -> int:
        return comb(comb(self.vertex_budget, 2), self.edge_count)


@dataclass
class MaximizerReport:
    edge_count: int
    observed_max: int
    formula_max: int
    maximizer_classes: list[CanonicalForm]
    catalogue_match: bool
    vertex_budget: int = 0
    mode: str = STRUCTURAL
    labelled_maximizers: int = 0

    @property
    def ok(self) -> bool:
        return self.observed_max == self.formula_max and self.catalogue_match

    def to_dict(self) -> dict:
        d = triangular_decompose(self.edge_count)
        return {
            "n": self.edge_count,
            "r": d.r,
            "t": d.t,
            "formula_max": self.formula_max,
            "observed_max": self.observed_max,
            "classes": [c.graph6() for c in self.maximizer_classes],
            "catalogue_match": self.catalogue_match,
            "vertex_budget": self.vertex_budget,
            "mode": self.mode,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@lru_cache(maxsize=None)
def _binom_table(size: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(comb(c, i) for i in range(size + 2)) for c in range(size + 2))


def scan_range(budget: int, k: int, lo: int, hi: int) -> tuple[int, set[int]]:
    """Best triangle count and its maximizing edge bitsets over colex ranks [lo, hi).

    Triangles are counted incrementally: adding pair (a, b) closes one
    triangle per common neighbour already present.
    """
    npairs = comb(budget, 2)
    pairs = [index_pair(c) for c in range(npairs)]
    C = _binom_table(npairs)
    nbr = [0] * budget
    best = -1
    found: set[int] = set()

    def rec(i: int, upper: int, base: int, tri: int, mask: int) -> None:
        nonlocal best, found
        if i == 1:
            # leaves: rank = base + c
            c0 = max(0, lo - base)
            c1 = min(upper, hi - base)
            for c in range(c0, c1):
                a, b = pairs[c]
                tt = tri + (nbr[a] & nbr[b]).bit_count()
                if tt >= best:
                    if tt > best:
                        best = tt
                        found = set()
                    found.add(mask | (1 << c))
            return
        for c in range(i - 1, upper):
            start = base + C[c][i]
            if start >= hi:
                break
            if start + C[c][i - 1] <= lo:
                continue
            a, b = pairs[c]
            na, nb = nbr[a], nbr[b]
            nbr[a] = na | (1 << b)
            nbr[b] = nb | (1 << a)
            rec(i - 1, c, start, tri + (na & nb).bit_count(), mask | (1 << c))
            nbr[a] = na
            nbr[b] = nb

    if k == 0:
        return (0, {0}) if lo <= 0 < hi else (-1, set())
    rec(k, npairs, 0, 0, 0)
    return best, found


def merge(parts: Iterable[tuple[int, set[int]]]) -> tuple[int, set[int]]:
    best, found = -1, set()
    for b, f in parts:
        if b > best:
            best, found = b, set(f)
        elif b == best:
            found |= f
    return best, found


def _scan_job(args: tuple[int, int, int, int]) -> tuple[int, set[int]]:
    return scan_range(*args)


def chunk_ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    chunks = max(1, min(chunks, total))
    step, extra = divmod(total, chunks)
    out, lo = [], 0
    for i in range(chunks):
        hi = lo + step + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def catalogue_forms(n: int) -> set[CanonicalForm]:
    return {canonical_form(build_extremal(s)) for s in maximizer_catalogue(n)}


def enumerate_max(task: EnumerationTask, jobs: int = 1, ceiling: int | None = None) -> MaximizerReport:
    ceiling = work_ceiling() if ceiling is None else ceiling
    total = task.subsets
    if total > ceiling:
        raise WorkloadTooLarge(total, ceiling)
    B, k = task.vertex_budget, task.edge_count
    if jobs > 1:
        ranges = chunk_ranges(total, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            best, found = merge(pool.map(_scan_job, [(B, k, lo, hi) for lo, hi in ranges]))
    else:
        best, found = scan_range(B, k, 0, total)
    classes = sorted({canonical_form(Graph(B, m)) for m in found})
    report = MaximizerReport(
        edge_count=k,
        observed_max=best,
        formula_max=max_triangles(k),
        maximizer_classes=classes,
        catalogue_match=set(classes) == catalogue_forms(k),
        vertex_budget=B,
        mode=task.mode,
        labelled_maximizers=len(found),
    )
    log.debug("n=%d budget=%d subsets=%d max=%d classes=%d", k, B, total, best, len(classes))
    return report


def verify_characterization(max_n: int = 12, jobs: int = 1, ceiling: int | None = None) -> list[MaximizerReport]:
    """Structural-mode scan for every n in 1..max_n; raises on the first disagreement."""
    reports = []
    for n in range(1, max_n + 1):
        rep = enumerate_max(EnumerationTask.structural(n), jobs=jobs, ceiling=ceiling)
        if rep.observed_max != rep.formula_max:
            raise CharacterizationMismatch(
                f"n={n}: brute-force maximum {rep.observed_max} != formula {rep.formula_max}"
            )
        if not rep.catalogue_match:
            expected = catalogue_forms(n)
            extra = [c.graph6() for c in rep.maximizer_classes if c not in expected]
            missing = [c.graph6() for c in sorted(expected) if c not in rep.maximizer_classes]
            raise CharacterizationMismatch(
                f"n={n}: maximizer classes differ from the catalogue; unexpected {extra}, missing {missing}"
            )
        reports.append(rep)
    return reports


# --------------------------------------------------------------------------
# sweeps over all small graphs


def all_graphs(vertex_count: int) -> Iterator[tuple[int, int]]:
    """Every labelled graph on ``vertex_count`` vertices as ``(bits, triangles)``."""
    npairs = comb(vertex_count, 2)
    pairs = [index_pair(c) for c in range(npairs)]
    nbr = [0] * vertex_count

    def rec(c: int, tri: int, mask: int) -> Iterator[tuple[int, int]]:
        if c == npairs:
            yield mask, tri
            return
        yield from rec(c + 1, tri, mask)
        a, b = pairs[c]
        na, nb = nbr[a], nbr[b]
        nbr[a] = na | (1 << b)
        nbr[b] = nb | (1 << a)
        yield from rec(c + 1, tri + (na & nb).bit_count(), mask | (1 << c))
        nbr[a] = na
        nbr[b] = nb

    yield from rec(0, 0, 0)


class RivinCheck(NamedTuple):
    holds: bool
    witness: Graph | None = None
    graphs_checked: int = 0
    equality_cases: int = 0

    def __bool__(self) -> bool:
        return self.holds


def verify_rivin_average(vertex_count: int, m: int) -> RivinCheck:
    """Check 3T <= (m-2)E on every graph with ``vertex_count`` vertices and E <= C(m,2).

    Equality with E > 0 must only happen when the graph minus isolated
    vertices is K_m.  The empty graph meets the bound with equality
    trivially and is not counted.
    """
    if not 0 <= vertex_count <= 7:
        raise ValueError("the Rivin sweep is limited to graphs on at most 7 vertices")
    cap = comb(m, 2) if m >= 0 else 0
    km = canonical_form(complete_graph(max(m, 0)))
    checked = equal = 0
    for bits, tri in all_graphs(vertex_count):
        e = bits.bit_count()
        if e > cap:
            continue
        checked += 1
        lhs, rhs = 3 * tri, (m - 2) * e
        if lhs > rhs:
            return RivinCheck(False, Graph(vertex_count, bits), checked, equal)
        if lhs == rhs and e > 0:
            equal += 1
            if canonical_form(Graph(vertex_count, bits)) != km:
                return RivinCheck(False, Graph(vertex_count, bits), checked, equal)
    return RivinCheck(True, None, checked, equal)


def isomorphism_classes(max_vertices: int) -> list[list[Graph]]:
    """Representatives of every graph on k vertices, k = 0..max_vertices.

    Built by adding a vertex with every possible neighbourhood to each
    (k-1)-vertex class; canonical forms (which ignore isolated vertices) are
    keyed together with the isolated-vertex count.
    """
    levels: list[list[Graph]] = [[Graph(0)]]
    for k in range(1, max_vertices + 1):
        seen: dict[tuple[CanonicalForm, int], Graph] = {}
        for g in levels[-1]:
            for nb in range(1 << (k - 1)):
                h = Graph.from_neighbors(_with_vertex(g, nb))
                cf = canonical_form(h)
                seen.setdefault((cf, k - cf.vertex_count), h)
        levels.append([seen[key] for key in sorted(seen)])
    return levels


def extensions(g: Graph) -> Iterator[Graph]:
    """``g`` plus one new vertex, for every neighbourhood of the new vertex."""
    for nb in range(1 << g.vertex_count):
        yield Graph.from_neighbors(_with_vertex(g, nb))


def _with_vertex(g: Graph, nb: int) -> list[int]:
    k = g.vertex_count
    rows = [m | ((nb >> v & 1) << k) for v, m in enumerate(g.neighbors)]
    rows.append(nb)
    return rows


# --------------------------------------------------------------------------
# merging components


def merge_three_components(g: Graph) -> Graph:
    """Glue three edge-bearing components into a new triangle.

    With edges v_i w_i picked from three different components, contract
    v1 with w3, v2 with w1 and v3 with w2.  The three merged vertices form a
    triangle, every old triangle survives, and no edge is lost or doubled.
    """
    comps = [c for c in components(g) if len(c) > 1]
    if len(comps) < 3:
        raise ValueError("need at least three components that contain an edge")
    picked = []
    for comp in comps[:3]:
        v = comp[0]
        nb = g.neighbors[v]
        w = (nb & -nb).bit_length() - 1
        picked.append((v, w))
    (v1, w1), (v2, w2), (v3, w3) = picked
    groups = [(v1, w3), (v2, w1), (v3, w2)]
    merged = {b: a for a, b in groups}
    mapping = []
    nxt = 0
    index = {}
    for x in range(g.vertex_count):
        if x in merged:
            continue
        index[x] = nxt
        nxt += 1
    for x in range(g.vertex_count):
        mapping.append(index[merged.get(x, x)])
    return quotient(g, mapping, nxt)


def random_multicomponent_graph(rng: random.Random, max_vertices: int = 10, min_components: int = 3) -> Graph:
    """Random graph with at least ``min_components`` connected components, each with an edge."""
    if max_vertices < 2 * min_components:
        raise ValueError("not enough vertices for the requested components")
    ncomp = rng.randint(min_components, max_vertices // 2)
    sizes = [2] * ncomp
    for _ in range(rng.randint(0, max_vertices - 2 * ncomp)):
        sizes[rng.randrange(ncomp)] += 1
    edges = []
    off = 0
    for s in sizes:
        for v in range(1, s):
            edges.append((off + rng.randrange(v), off + v))
        for i in range(s):
            for j in range(i + 1, s):
                if rng.random() < 0.4:
                    edges.append((off + i, off + j))
        off += s
    perm = list(range(off))
    rng.shuffle(perm)
    return Graph.from_edges(off, {(min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in edges})


def contraction_gain(g: Graph) -> tuple[int, int]:
    """Triangle counts before and after :func:`merge_three_components`."""
    h = merge_three_components(g)
    if h.edge_count != g.edge_count:
        raise AssertionError(f"merging components changed the edge count: {g.edge_count} -> {h.edge_count}")
    return triangle_count(g), triangle_count(h)
