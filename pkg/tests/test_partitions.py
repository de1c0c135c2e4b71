import pytest
from hypothesis import given
from hypothesis import strategies as st

from supersym.partitions import (
    IntegerSignature,
    Partition,
    enumerate_hook,
    euler_character,
    hook_mu_nu,
    hook_partitions_upto,
    in_h0,
    in_hook,
    partition_from_json,
    partition_to_json,
    partitions,
    schur,
    transpose,
    vandermonde,
)
from supersym.poly import Polynomial, VarSpec, as_laurent

from oracles import ssyt_polynomial

partition_st = st.lists(st.integers(0, 6), max_size=6).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


def test_partition_normalizes_and_validates():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition((2, 1)).size == 3
    assert Partition((2, 1)).part(5) == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert IntegerSignature((0, -1)) == (0, -1)
    with pytest.raises(ValueError):
        IntegerSignature((-1, 0))


def test_transpose_examples():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose((2, 2)) == (2, 2)
    assert transpose(()) == ()
    assert transpose((1,)) == (1,)


def test_hook_examples():
    assert in_hook((3, 1), 1, 1)
    assert not in_hook((2, 2), 1, 1)
    assert in_h0((2, 2), 2, 2)
    assert not in_h0((2, 1), 2, 2)
    assert not in_h0((1,), 1, 0)
    with pytest.raises(ValueError):
        in_h0((2, 2), 1, 1)
    assert hook_mu_nu((3, 1, 1), 1, 1) == ((2,), (2,))
    assert hook_mu_nu((3, 3, 2), 2, 2) == ((1, 1), (1, 1))


def test_partition_counts():
    assert [len(list(partitions(d))) for d in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert enumerate_hook(1, 1, 3) == [(3,), (2, 1), (1, 1, 1)]
    assert enumerate_hook(1, 0, 3) == [(3,)]
    with pytest.raises(ValueError):
        enumerate_hook(1, 1, -1)


def test_schur_examples():
    x1, x2 = Polynomial.gens(VarSpec(2, 0))[0]
    assert schur((1,), 2) == x1 + x2
    assert schur((1, 1), 2) == x1 * x2
    assert schur((2,), 2) == x1**2 + x1 * x2 + x2**2
    assert schur((), 2) == 1
    with pytest.raises(ValueError):
        schur((1, 1, 1), 2)


def test_vandermonde_example():
    x1, x2, x3 = Polynomial.gens(VarSpec(3, 0))[0]
    assert vandermonde(3) == (x1 - x2) * (x1 - x3) * (x2 - x3)


def test_euler_character_examples():
    spec = VarSpec(2, 0, True)
    x1, x2 = Polynomial.gens(spec)[0]
    assert euler_character((0, -1), 2) == x1**-1 + x2**-1
    assert euler_character((1, 0), 2) == x1 + x2
    with pytest.raises(ValueError):
        euler_character((1,), 2)


@given(partition_st)
def test_transpose_is_an_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).size == lam.size


@given(partition_st)
def test_diagram_reconstructs_partition(lam):
    cells = lam.diagram()
    assert len(cells) == lam.size
    rows = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    assert Partition([rows[r] for r in sorted(rows)]) == lam


@given(partition_st, st.integers(0, 3), st.integers(0, 3))
def test_hook_is_monotone(lam, m, n):
    if in_hook(lam, m, n):
        assert in_hook(lam, m + 1, n)
        assert in_hook(lam, m, n + 1)
        mu, nu = hook_mu_nu(lam, m, n)
        assert len(mu) <= m and len(nu) <= n


def test_hook_matches_transposed_hook():
    for lam in hook_partitions_upto(3, 2, 7):
        assert in_hook(transpose(lam), 2, 3)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_schur_matches_tableau_enumeration(m):
    for d in range(7):
        for mu in partitions(d):
            if len(mu) <= m:
                assert schur(mu, m) == ssyt_polynomial(mu, m), mu


def test_euler_character_agrees_with_schur_on_partitions():
    for mu in hook_partitions_upto(2, 0, 5):
        sig = list(mu) + [0] * (2 - len(mu))
        assert euler_character(sig, 2) == as_laurent(schur(mu, 2))


def test_euler_character_shift_rule():
    spec = VarSpec(2, 0, True)
    x1, x2 = Polynomial.gens(spec)[0]
    for sig in [(0, -1), (2, -3), (1, 1)]:
        shifted = [s + 1 for s in sig]
        assert euler_character(shifted, 2) == x1 * x2 * euler_character(sig, 2)


def test_partition_json_round_trip():
    lam = Partition((4, 2, 2))
    assert partition_from_json(partition_to_json(lam)) == lam
    with pytest.raises(ValueError):
        partition_from_json([1, 2])
