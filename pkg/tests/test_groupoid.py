import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersym import core
from supersym.groupoid import (
    NotOnHyperplane,
    Point,
    Root,
    SeparationError,
    atypicality,
    groupoid_orbit,
    is_invariant,
    isotropic_roots,
    maximum_pairing,
    on_hyperplane,
    pairing,
    pointset_from_json,
    pointset_to_json,
    separating_polynomial,
    tau_shift,
    vanishing_ideal_check,
    weyl_orbit,
)
from supersym.laurent import is_laurent_supersymmetric
from supersym.partitions import hook_partitions_upto
from supersym.poly import Polynomial, VarSpec, evaluate
from supersym.selftest import brute_force_atypicality


def P(x, y, mult=False):
    return Point(x, y, mult)


def test_separator_example():
    f = separating_polynomial({P([1], [2])}, P([3], [4]))
    x, y = Polynomial.gens(VarSpec(1, 1))
    x, y = x[0], y[0]
    assert f == (x + y) * (x - 1) * (y - 2)
    assert evaluate(f, P([3], [4])) == 28
    assert evaluate(f, P([1], [2])) == 0


def test_orbit_example_is_truncated():
    points, truncated = groupoid_orbit(P([3], [-3]), depth_cap=2)
    assert truncated
    assert points == {P([3 + k], [-3 - k]) for k in range(-2, 3)}


def test_typical_orbit_is_weyl_orbit():
    p = P([1, 2], [3, 4])
    points, truncated = groupoid_orbit(p)
    assert not truncated
    assert points == weyl_orbit(p)
    assert len(points) == 4


def test_atypicality_examples():
    assert atypicality(P([1, 2], [-1, -2])) == 2
    assert atypicality(P([1, 2], [3, 4])) == 0
    assert atypicality(P([1, 1], [-1])) == 1
    assert atypicality(P([2, 3], [2], True)) == 1
    assert maximum_pairing(P([1, 2], [-2, -1])) == [(0, 1), (1, 0)]


def test_pairing_and_shift():
    alpha = Root(1, 1)
    p = P([2], [-2])
    assert pairing(alpha, p) == 0
    assert pairing(Root(1, 1, -1), P([2], [3])) == -5
    assert tau_shift(alpha, p) == P([3], [-3])
    assert tau_shift(Root(1, 1, -1), p) == P([1], [-1])
    with pytest.raises(NotOnHyperplane):
        tau_shift(alpha, P([1], [1]))
    with pytest.raises(IndexError):
        on_hyperplane(Root(2, 1), p)
    with pytest.raises(ValueError):
        Root(1, 1, 2)


def test_multiplicative_shift():
    p = P([3], [3], True)
    assert tau_shift(Root(1, 1), p) == P([6], [6], True)
    assert tau_shift(Root(1, 1, -1), p) == P([Fraction(3, 2)], [Fraction(3, 2)], True)
    with pytest.raises(ValueError):
        P([0], [1], True)
    with pytest.raises(ValueError):
        pairing(Root(1, 1), p)


def test_roots_listing():
    assert len(isotropic_roots(2, 3)) == 12


def test_is_invariant_examples():
    assert is_invariant(weyl_orbit(P([1, 2], [3, 4])))
    assert not is_invariant({P([1, 2], [3, 4])})
    assert not is_invariant({P([1], [-1])})
    assert is_invariant(set())


def test_vanishing_ideal_check():
    V = weyl_orbit(P([1, 2], [3, 5]))
    f = separating_polynomial(V, P([0, 1], [2, 3]))
    assert vanishing_ideal_check(V, f)
    assert not vanishing_ideal_check({P([0, 1], [2, 3])}, f)
    x = Polynomial.var(VarSpec(2, 2), "x1")
    with pytest.raises(core.NotSupersymmetric):
        vanishing_ideal_check(V, x)
    with pytest.raises(ValueError):
        vanishing_ideal_check({P([1], [2]), P([1, 2], [3])}, core.t_element(1, 1))


def test_separator_rejections():
    V = weyl_orbit(P([1, 2], [3, 5]))
    with pytest.raises(SeparationError):
        separating_polynomial(V, P([2, 1], [5, 3]))
    with pytest.raises(ValueError):
        separating_polynomial({P([1, 2], [3, 5])}, P([0, 0], [1, 1]))


def test_separator_for_atypical_point():
    V = weyl_orbit(P([1, 2], [3, 5]))
    p = P([1, 2], [-1, 4])
    f = separating_polynomial(V, p)
    assert core.is_supersymmetric(f)
    assert vanishing_ideal_check(V, f)
    assert evaluate(f, p) != 0
    g = separating_polynomial(set(), P([1, 2], [-1, -2]))
    assert evaluate(g, P([1, 2], [-1, -2])) != 0


def test_multiplicative_separator():
    V = weyl_orbit(P([1, 2], [3, 5], True))
    p = P([2, 7], [3, 3], True)
    f = separating_polynomial(V, p)
    assert is_laurent_supersymmetric(f)
    assert vanishing_ideal_check(V, f)
    assert evaluate(f, p) != 0


def test_pointset_json_round_trip():
    V = weyl_orbit(P([Fraction(1, 2), 2], [3, -1]))
    assert pointset_from_json(pointset_to_json(V)) == V
    with pytest.raises(ValueError):
        pointset_from_json({"x": ["1"]})
    with pytest.raises(ValueError):
        Point.from_json({"x": [1], "y": ["2"]})


def test_point_str():
    assert str(P([1, 2], [Fraction(-1, 2)])) == "(1,2|-1/2)"


# properties

coords = st.integers(-3, 3)


def points(m, n):
    return st.builds(
        lambda xs, ys: P(xs, ys),
        st.lists(coords, min_size=m, max_size=m),
        st.lists(coords, min_size=n, max_size=n),
    )


shapes = st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(lambda s: points(*s))
small_shapes = st.tuples(st.integers(1, 3), st.integers(1, 2)).flatmap(lambda s: points(*s))


@settings(max_examples=300)
@given(shapes)
def test_atypicality_matches_brute_force(p):
    assert atypicality(p) == brute_force_atypicality(p)
    pairs = maximum_pairing(p)
    assert len({i for i, _ in pairs}) == len(pairs) == len({j for _, j in pairs})
    assert all(p.x[i] + p.y[j] == 0 for i, j in pairs)


@given(shapes)
def test_atypicality_constant_on_weyl_orbit(p):
    r = atypicality(p)
    assert all(atypicality(q) == r for q in weyl_orbit(p))


@settings(max_examples=50)
@given(small_shapes)
def test_orbit_is_finite_exactly_for_typical_points(p):
    points_, truncated = groupoid_orbit(p, depth_cap=3)
    assert truncated == (atypicality(p) > 0)
    if not truncated:
        assert points_ == weyl_orbit(p)
    assert all(atypicality(q) == atypicality(p) for q in points_)


@settings(max_examples=50)
@given(shapes)
def test_shift_inverts(p):
    for alpha in isotropic_roots(*p.shape):
        if on_hyperplane(alpha, p):
            back = Root(alpha.i, alpha.j, -alpha.sign)
            assert tau_shift(back, tau_shift(alpha, p)) == p


@settings(max_examples=25, deadline=None)
@given(points(2, 2), st.integers(0, 1000))
def test_supersymmetric_values_constant_on_orbit(p, seed):
    fs = [core.super_schur(lam, 2, 2) for lam in hook_partitions_upto(2, 2, 3)]
    points_, _ = groupoid_orbit(p, depth_cap=2)
    for f in fs:
        assert len({evaluate(f, q) for q in points_}) == 1


def _typical(rng):
    while True:
        q = P([rng.randint(-4, 4) for _ in range(2)], [rng.randint(-4, 4) for _ in range(2)])
        if atypicality(q) == 0:
            return q


@pytest.mark.parametrize("seed", range(8))
def test_separator_properties_random(seed):
    rng = random.Random(seed)
    V = weyl_orbit(_typical(rng)) | weyl_orbit(_typical(rng))
    p = _typical(rng)
    if p in V:
        return
    f = separating_polynomial(V, p, seed=seed)
    assert core.is_supersymmetric(f)
    assert all(evaluate(f, v) == 0 for v in V)
    assert evaluate(f, p) != 0


def test_orbit_set_identities():
    a = weyl_orbit(P([1, 2], [3, 4]))
    b = weyl_orbit(P([0, 1], [3, 4]))
    assert is_invariant(a | b)
    assert is_invariant(a & b)
    assert all(weyl_orbit(q) == a for q in a)
    assert not (a & b)
    assert sum(1 for _ in itertools.chain(a, b)) == len(a | b)
