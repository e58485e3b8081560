import math
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_max_triangles, brute_triangles
from triex.extremal import (
    Choose2Verdict,
    ExtremalShape,
    ShapeKind,
    TriangularDecomposition,
    build_extremal,
    choose2_inequality_holds,
    max_triangles,
    maximizer_catalogue,
    rivin_best,
    rivin_bound,
    triangular_decompose,
)
from triex.graph import complete_graph, is_connected, triangle_count


@pytest.mark.parametrize("n,r,t", [(10, 5, 0), (7, 4, 1), (0, 1, 0), (1, 2, 0), (2, 2, 1), (9, 4, 3)])
def test_decompose_examples(n, r, t):
    assert triangular_decompose(n) == TriangularDecomposition(n, r, t)


def test_decompose_range_sweep():
    for n in range(0, 1_000_001):
        d = triangular_decompose(n)
        assert comb(d.r, 2) <= n < comb(d.r + 1, 2)
        assert 0 <= d.t <= d.r - 1


@given(st.integers(0, 10**30))
def test_decompose_huge(n):
    d = triangular_decompose(n)
    assert d.r * (d.r - 1) // 2 <= n < d.r * (d.r + 1) // 2


def test_decompose_rejects_negative():
    with pytest.raises(ValueError):
        triangular_decompose(-1)
    with pytest.raises(ValueError):
        TriangularDecomposition(7, 4, 2)


def test_max_triangles_examples():
    assert max_triangles(10) == 10
    assert max_triangles(1) == 0
    assert max_triangles(0) == 0


@pytest.mark.parametrize("n,budget,expected", [(7, 5, 4), (8, 5, 5), (9, 6, 7)])
def test_max_triangles_against_brute_force(n, budget, expected):
    # expected values frozen from brute_max_triangles (triple scans over all subsets)
    assert brute_max_triangles(n, budget) == expected
    assert max_triangles(n) == expected


def test_max_triangles_monotone_and_complete():
    for n in range(1, 5000):
        assert max_triangles(n) <= max_triangles(n + 1)
    for r in range(1, 60):
        assert max_triangles(comb(r, 2)) == comb(r, 3)


# -- Rivin's bound


def test_rivin_coincides_at_triangular_numbers():
    for r in range(2, 200):
        assert math.isclose(rivin_bound(comb(r, 2), r), comb(r, 3), rel_tol=1e-9, abs_tol=1e-12)


def test_rivin_k3():
    # (1/sqrt 6)(sqrt 2 / 3) 3^{3/2} = 1
    assert math.isclose(rivin_bound(3, 3), 1.0, rel_tol=1e-12)


def test_rivin_larger_than_sharp_bound():
    assert rivin_bound(7, 5) > max_triangles(7) == 4


def test_rivin_improvement_sweep():
    for n in range(1, 2001):
        d = triangular_decompose(n)
        if d.t == 0:
            assert math.isclose(rivin_best(n), max_triangles(n), rel_tol=1e-9, abs_tol=1e-12)
        else:
            assert max_triangles(n) < rivin_bound(n, d.r + 1)


def test_rivin_rejects_bad_input():
    for e, v in [(0, 3), (3, 1), (4, 3)]:
        with pytest.raises(ValueError):
            rivin_bound(e, v)


# -- the binomial split inequality


def test_choose2_examples():
    # C(4,2)+C(0,2) = 6 > C(2,2)+C(2,2) = 2
    assert choose2_inequality_holds(2, 2, 4, 0, 4) is Choose2Verdict.STRICT
    assert choose2_inequality_holds(3, 1, 3, 1, 4) is Choose2Verdict.EQUAL
    assert choose2_inequality_holds(1, 3, 3, 1, 4) is Choose2Verdict.VIOLATED_PRECONDITION
    assert choose2_inequality_holds(2, 2, 3, 2, 4) is Choose2Verdict.VIOLATED_PRECONDITION


@given(st.integers(0, 300), st.data())
def test_choose2_random(m, data):
    b = data.draw(st.integers(0, m // 2))
    a = m - b
    c = data.draw(st.integers(a, m))
    verdict = choose2_inequality_holds(a, b, c, m - c, m)
    assert verdict is (Choose2Verdict.EQUAL if c == a else Choose2Verdict.STRICT)


# -- shapes and the catalogue


def test_shape_validity():
    with pytest.raises(ValueError):
        ExtremalShape.fan(4, 1)
    with pytest.raises(ValueError):
        ExtremalShape.fan(4, 4)
    with pytest.raises(ValueError):
        ExtremalShape(ShapeKind.COMPLETE, 4, 1)
    with pytest.raises(ValueError):
        ExtremalShape(ShapeKind.PENDANT_ONE, 4, 2)


def test_build_examples():
    g = build_extremal(ExtremalShape.fan(4, 2))
    assert g.edge_count == 8
    assert triangle_count(g) == brute_triangles(g) == 5
    g = build_extremal(ExtremalShape.k2_union_complete(4))
    assert (g.edge_count, triangle_count(g)) == (7, 4)
    assert not is_connected(g)
    assert build_extremal(ExtremalShape.complete(3)) == complete_graph(3)


def test_catalogue_examples():
    assert maximizer_catalogue(6) == [ExtremalShape.complete(4)]
    assert maximizer_catalogue(7) == [ExtremalShape.pendant_one(4), ExtremalShape.k2_union_complete(4)]
    assert maximizer_catalogue(8) == [ExtremalShape.fan(4, 2)]
    assert [str(s) for s in maximizer_catalogue(11)] == ["PendantOne(5)", "K2UnionComplete(5)"]


def test_catalogue_members_attain_bound():
    for n in range(1, 400):
        for shape in maximizer_catalogue(n):
            g = build_extremal(shape)
            assert g.edge_count == n
            assert triangle_count(g) == max_triangles(n)
