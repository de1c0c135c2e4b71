import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supersym import core
from supersym.core import (
    BasisDecomposition,
    KernelWitnessError,
    NotSupersymmetric,
    decompose,
    g_polynomial,
    is_supersymmetric,
    is_t_independent,
    kernel_witness,
    phi_s,
    power_sum,
    super_schur,
    super_schur_factored,
    t_element,
)
from supersym.partitions import hook_partitions_upto, in_h0
from supersym.poly import Polynomial, VarSpec, eliminate, evaluate, substitute

from conftest import S11, S22, gens, polynomials
from oracles import hook_tableau_polynomial, rational_sum_value


def test_super_schur_small_examples():
    x, y = gens(S11)
    assert super_schur((1,), 1, 1) == x + y
    assert super_schur((2,), 1, 1) == x**2 + x * y
    assert super_schur((1, 1), 1, 1) == x * y + y**2
    assert super_schur((), 1, 1) == 1
    assert super_schur((2, 2), 1, 1).is_zero()


def test_super_schur_examples_at_one():
    assert evaluate(super_schur((2,), 1, 1), ([1], [1])) == 2
    assert evaluate(super_schur((1, 1), 1, 1), ([1], [1])) == 2


def test_power_sum_identity():
    assert super_schur((2,), 1, 1) - super_schur((1, 1), 1, 1) == power_sum(2, 1, 1)
    assert decompose(power_sum(2, 1, 1)).coeffs == {(2,): 1, (1, 1): -1}


def test_supersymmetry_examples():
    x, y = gens(S11)
    assert is_supersymmetric(x + y)
    assert not is_supersymmetric(x)
    assert not is_supersymmetric(x**2 + y**2)
    assert is_supersymmetric(x**2 - y**2)
    assert is_supersymmetric(t_element(2, 2))
    x1, x2, y1, y2 = gens(S22)
    assert not is_supersymmetric(x1 + y2)


def test_t_element_example():
    x1, x2, y1, y2 = gens(S22)
    assert t_element(2, 2) == (x1 + y1) * (x1 + y2) * (x2 + y1) * (x2 + y2)


def test_phi_examples():
    x, y = gens(S11)
    assert phi_s(x + y).is_zero()
    assert phi_s(Polynomial.const(S11, 5)) == 5
    with pytest.raises(NotSupersymmetric):
        phi_s(x)
    assert phi_s(x, check=False).is_zero()


def test_kernel_witness_examples():
    x1, x2, y1, y2 = gens(S22)
    T = t_element(2, 2)
    assert kernel_witness(T * (x1 + x2)) == x1 + x2
    with pytest.raises(KernelWitnessError):
        kernel_witness(power_sum(1, 2, 2))


def test_decompose_examples():
    assert decompose(Polynomial.zero(S22)).coeffs == {}
    assert decompose(Polynomial.const(S22, 3)).coeffs == {(): 3}
    with pytest.raises(NotSupersymmetric):
        decompose(gens(S11)[0])
    with pytest.raises(ValueError):
        decompose(power_sum(3, 1, 1), degree_cap=2)


def test_basis_decomposition_json_round_trip():
    dec = decompose(power_sum(3, 2, 1) * power_sum(1, 2, 1))
    assert BasisDecomposition.from_json(dec.to_json()) == dec
    assert dec.reconstruct() == power_sum(3, 2, 1) * power_sum(1, 2, 1)
    with pytest.raises(ValueError):
        BasisDecomposition(1, 1, {(2, 2): 1})


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_super_schur_matches_supertableaux(m, n):
    for lam in hook_partitions_upto(m, n, 5):
        assert super_schur(lam, m, n) == hook_tableau_polynomial(lam, m, n), lam


def test_super_schur_matches_rational_sum_evaluation():
    rng = random.Random(3)
    for lam in hook_partitions_upto(2, 2, 5):
        g = g_polynomial(lam, 2, 2)
        for _ in range(3):
            vals = rng.sample(range(-9, 10), 4)
            xs, ys = vals[:2], vals[2:]
            expected = rational_sum_value(g, 2, 2, xs, ys)
            assert evaluate(super_schur(lam, 2, 2), (xs, ys)) == expected


def test_factorization_on_h0():
    for m, n in [(1, 1), (2, 1), (2, 2)]:
        for lam in hook_partitions_upto(m, n, 6):
            if in_h0(lam, m, n):
                assert super_schur(lam, m, n) == super_schur_factored(lam, m, n)
    with pytest.raises(ValueError):
        super_schur_factored((1,), 2, 2)


def test_stability_under_restriction():
    for lam in hook_partitions_upto(2, 1, 6):
        assert eliminate(super_schur(lam, 2, 2), {"y2": 0}) == super_schur(lam, 2, 1)
        assert phi_s(super_schur(lam, 2, 2)) == super_schur(lam, 1, 1)


def test_kernel_is_spanned_by_h0():
    for lam in hook_partitions_upto(2, 2, 7):
        image = phi_s(super_schur(lam, 2, 2))
        assert image.is_zero() == in_h0(lam, 2, 2)


def test_t_independence_sampled_at_values():
    x1, x2, y1, y2 = gens(S22)
    T = t_element(2, 2)
    for t in range(-2, 3):
        assert substitute(T, {"x1": t, "y1": -t}).is_zero()
    f = super_schur((2, 1), 2, 2)
    vals = {substitute(f, {"x1": t, "y1": -t}) for t in range(-2, 3)}
    assert len(vals) == 1


power_sum_products = st.lists(
    st.tuples(st.integers(-3, 3), st.lists(st.integers(1, 4), min_size=0, max_size=2)),
    max_size=3,
)


def _combination(m, n, data):
    spec = VarSpec(m, n)
    total = Polynomial.zero(spec)
    for c, rs in data:
        term = Polynomial.const(spec, c)
        for r in rs:
            term = term * power_sum(r, m, n)
        total = total + term
    return total


@settings(max_examples=40, deadline=None)
@given(power_sum_products)
def test_decompose_round_trip_is_integral(data):
    p = _combination(2, 1, data)
    dec = decompose(p)
    assert dec.reconstruct() == p
    assert dec.is_integral()


@settings(max_examples=40, deadline=None)
@given(power_sum_products, power_sum_products)
def test_supersymmetric_ring_is_closed(a, b):
    p, q = _combination(2, 2, a), _combination(2, 2, b)
    assert is_supersymmetric(p + q)
    assert is_supersymmetric(p * q)
    assert phi_s(p * q) == phi_s(p) * phi_s(q)


@settings(max_examples=80, deadline=None)
@given(polynomials(VarSpec(1, 1), max_terms=6))
def test_supersymmetry_agrees_with_direct_restriction(p):
    assert is_supersymmetric(p) == is_t_independent(p)


@settings(max_examples=40, deadline=None)
@given(polynomials(VarSpec(1, 1), max_terms=4))
def test_t_times_anything_symmetric_is_in_kernel(b):
    p = t_element(1, 1) * b
    assert is_supersymmetric(p)
    assert phi_s(p).is_zero()
    assert kernel_witness(p) == b


def test_fractional_coefficients_survive():
    p = power_sum(2, 1, 1) * Fraction(1, 3)
    dec = decompose(p)
    assert not dec.is_integral()
    assert dec.coeffs == {(2,): Fraction(1, 3), (1, 1): Fraction(-1, 3)}
