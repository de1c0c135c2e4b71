from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from supersym.poly import Polynomial, VarSpec

settings.register_profile("default", deadline=None)
settings.load_profile("default")

S11 = VarSpec(1, 1)
S22 = VarSpec(2, 2)
L11 = VarSpec(1, 1, True)


def gens(spec):
    xs, ys = Polynomial.gens(spec)
    return xs + ys


def mono(spec, x=(), y=(), c=1):
    return Polynomial.monomial(spec, x, y, c)


small_fractions = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


def polynomials(spec, max_terms=5, lo=0, hi=3):
    if spec.laurent:
        lo = min(lo, -hi)
    monos = st.tuples(*[st.integers(lo, hi) for _ in range(spec.nvars)])
    return st.dictionaries(monos, small_fractions, max_size=max_terms).map(
        lambda d: Polynomial(spec, d)
    )


@pytest.fixture
def s11():
    return gens(S11)


@pytest.fixture
def l11():
    return gens(L11)
