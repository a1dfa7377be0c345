import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellsuper import (
    AmbiguityError,
    AspectRatio,
    AspectVector,
    gamma_path,
    gamma_point,
    gamma_point_vec,
    mult,
    pair_factorial,
    point_add,
    point_scale,
)
from oracles import brute_gamma_point

PATH_3_2 = [(0, 0), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (4, 2), (4, 3)]

ratios = st.tuples(st.integers(1, 300), st.integers(1, 120))


def test_parse_and_render():
    assert AspectRatio.parse("inf").is_infinite
    assert AspectRatio.parse("3/2") == AspectRatio.plus_delta(3, 2)
    assert AspectRatio.parse("6/4") == AspectRatio.plus_delta(3, 2)  # reduced
    assert AspectRatio.parse("5") == AspectRatio.plus_delta(5, 1)
    assert str(AspectRatio.plus_delta(3, 2)) == "3/2+delta"
    assert str(AspectRatio.plus_delta(5, 1)) == "5+delta"
    assert str(AspectRatio.infinite()) == "inf"
    # rendered form re-parses
    assert AspectRatio.parse("3/2+delta") == AspectRatio.plus_delta(3, 2)
    with pytest.raises(ValueError):
        AspectRatio.parse("zero")
    with pytest.raises(ValueError):
        AspectRatio.parse("-3/2")
    with pytest.raises(ValueError):
        AspectRatio.parse("0")


def test_point_helpers():
    assert point_add((1, 2), (3, 4)) == (4, 6)
    assert point_add((1, 2, 3), (0, 0, 1), (1, 1, 1)) == (2, 3, 5)
    assert point_scale((2, 1), 3) == (6, 3)
    assert pair_factorial((3, 2)) == 12
    assert pair_factorial((0, 0)) == 1
    assert pair_factorial((2, 1, 3)) == 12
    with pytest.raises(ValueError):
        point_add((1, 2), (1, 2, 3))


def test_gamma_path_fixture_three_halves():
    assert gamma_path(AspectRatio.plus_delta(3, 2), 7) == PATH_3_2


def test_gamma_infinite():
    assert gamma_path(AspectRatio.infinite(), 3) == [(0, 0), (1, 0), (2, 0), (3, 0)]
    for k in range(20):
        assert gamma_point(AspectRatio.infinite(), k) == (k, 0)


def test_gamma_path_five_plus_delta():
    # all mass stays on the first coordinate while a exceeds the index
    assert gamma_path(AspectRatio.plus_delta(5, 1), 5) == [(k, 0) for k in range(6)]


def test_gamma_point_zero_and_small():
    a = AspectRatio.plus_delta(7, 4)
    assert gamma_point(a, 0) == (0, 0)
    # 1 < a < 2 puts the second unit step on the second coordinate
    assert gamma_point(a, 2) == (1, 1)


def test_gamma_point_matches_brute_force_small():
    for p, q in [(3, 2), (1, 1), (2, 1), (7, 3), (5, 8)]:
        a = AspectRatio.plus_delta(p, q)
        for k in range(41):
            assert gamma_point(a, k) == brute_gamma_point(p, q, k)


@given(pq=ratios, k=st.integers(0, 60))
@settings(max_examples=150, deadline=None)
def test_gamma_point_matches_brute_force_random(pq, k):
    p, q = pq
    assert gamma_point(AspectRatio.plus_delta(p, q), k) == brute_gamma_point(p, q, k)


@given(pq=ratios, k_max=st.integers(0, 50))
@settings(max_examples=100, deadline=None)
def test_gamma_path_unit_steps_and_pointwise(pq, k_max):
    a = AspectRatio.plus_delta(*pq)
    path = gamma_path(a, k_max)
    assert path[0] == (0, 0)
    for k in range(k_max):
        di = path[k + 1][0] - path[k][0]
        dj = path[k + 1][1] - path[k][1]
        assert (di, dj) in ((1, 0), (0, 1))
    for k in (0, k_max // 2, k_max):
        assert path[k] == gamma_point(a, k)


def test_mult_values():
    inf = AspectRatio.infinite()
    for d in range(1, 6):
        assert mult(inf, (3 * d - 1, 0)) == 3 * d - 1
    assert mult(AspectRatio.plus_delta(3, 2), (4, 3)) == 3  # 4*2 <= 3*3: second branch
    assert mult(AspectRatio.plus_delta(3, 2), (4, 2)) == 4  # 4*2 > 3*2: first branch
    assert mult(AspectRatio.plus_delta(9, 5), (1, 0)) == 1
    assert mult(inf, (0, 7)) == 7
    with pytest.raises(ValueError):
        mult(inf, (0, 0))
    with pytest.raises(ValueError):
        mult(AspectRatio.plus_delta(2, 1), (1, 2, 3))


def test_exact_ratio_rejected_by_planar_ops():
    exact = AspectRatio.exact_ratio(3, 2)
    for fn in (lambda: gamma_point(exact, 3), lambda: gamma_path(exact, 3),
               lambda: mult(exact, (1, 0))):
        with pytest.raises(ValueError):
            fn()


def test_vector_embedding_matches_planar():
    one = AspectRatio.exact_ratio(1)
    for p, q in [(3, 2), (2, 1), (7, 3), (11, 4), (5, 4)]:
        vec = AspectVector((one, AspectRatio.plus_delta(p, q)))
        for k in range(26):
            assert gamma_point_vec(vec, k) == gamma_point(AspectRatio.plus_delta(p, q), k)


def test_vector_three_components():
    vec = AspectVector((
        AspectRatio.exact_ratio(1),
        AspectRatio.plus_delta(10, 1),
        AspectRatio.plus_delta(10, 1),
    ))
    assert gamma_point_vec(vec, 3) == (3, 0, 0)
    assert gamma_point_vec(vec, 0) == (0, 0, 0)


def test_vector_infinite_component_gets_no_mass():
    vec = AspectVector((
        AspectRatio.exact_ratio(1),
        AspectRatio.infinite(),
    ))
    for k in range(8):
        assert gamma_point_vec(vec, k) == (k, 0)


def test_vector_tie_handling():
    vec = AspectVector((AspectRatio.exact_ratio(1), AspectRatio.exact_ratio(1)))
    with pytest.raises(AmbiguityError):
        gamma_point_vec(vec, 1, on_tie="error")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        pt = gamma_point_vec(vec, 1)
    assert pt == (1, 0)  # mass pushed to the earlier coordinate
    assert any("tie" in str(w.message) for w in caught)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert gamma_point_vec(vec, 1, on_tie="ignore") == (1, 0)


def test_vector_validation():
    with pytest.raises(ValueError):
        AspectVector((AspectRatio.plus_delta(2, 1),))
    with pytest.raises(TypeError):
        AspectVector((AspectRatio.plus_delta(2, 1), Fraction(3, 2)))


def test_determinism():
    a = AspectRatio.plus_delta(17, 6)
    assert gamma_path(a, 30) == gamma_path(a, 30)
    assert [gamma_point(a, k) for k in range(31)] == gamma_path(a, 30)
