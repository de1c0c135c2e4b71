"""Laurent supersymmetric polynomials (the ring Lambda_{m,n})."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .partitions import IntegerSignature, euler_character
from .poly import (
    NotDivisible,
    Polynomial,
    VarSpec,
    divide_exact,
    drop_variables,
    evaluate,
    is_w_invariant,
    laurent_derivative,
    substitute,
)


class NotLaurentSupersymmetric(ValueError):
    pass


class NotMember(ValueError):
    """``f`` is not in ``R + S z``."""


@dataclass(frozen=True)
class SignaturePair:
    lam: IntegerSignature
    mu: IntegerSignature

    def __init__(self, lam, mu):
        object.__setattr__(self, "lam", IntegerSignature(lam))
        object.__setattr__(self, "mu", IntegerSignature(mu))

    @property
    def degree(self):
        return sum(self.lam) + sum(self.mu)

    def to_json(self):
        return {"lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_json(cls, data):
        return cls(data["lambda"], data["mu"])


def _lspec(m, n):
    return VarSpec(m, n, True)


def is_laurent_supersymmetric(p):
    if not p.spec.laurent:
        raise ValueError("expected a laurent spec")
    if not is_w_invariant(p):
        return False
    if p.spec.m == 0 or p.spec.n == 0:
        return True
    spec = p.spec
    divisor = Polynomial.var(spec, "x1") - Polynomial.var(spec, "y1")
    try:
        divide_exact(laurent_derivative(p, 1, 1), divisor)
    except NotDivisible:
        return False
    return True


def t_element_l(m, n, spec=None):
    """``prod_{i,j} (1 - y_j / x_i)``."""
    spec = spec or _lspec(m, n)
    result = Polynomial.one(spec)
    for i in range(1, m + 1):
        inv_xi = Polynomial.monomial(spec, xexp=[0] * (i - 1) + [-1])
        for j in range(1, n + 1):
            result = result * (1 - Polynomial.var(spec, ("y", j)) * inv_xi)
    return result


def k_element(sig, m=None, n=None):
    if not isinstance(sig, SignaturePair):
        sig = SignaturePair(*sig)
    m = len(sig.lam) if m is None else m
    n = len(sig.mu) if n is None else n
    if len(sig.lam) != m or len(sig.mu) != n:
        raise ValueError(f"signature pair does not match ({m},{n})")
    spec = _lspec(m, n)
    return (
        t_element_l(m, n, spec)
        * euler_character(sig.lam, m, "x", spec)
        * euler_character(sig.mu, n, "y", spec)
    )


def phi_l(p, check=True):
    """Evaluation map setting ``x_m = y_n``; lands in spec (m-1, n-1).

    ``y_n`` plays the role of the common value after substitution, so the
    image must not involve it.
    """
    m, n = p.spec.m, p.spec.n
    if m < 1 or n < 1:
        raise ValueError("phi needs m >= 1 and n >= 1")
    if check and not is_laurent_supersymmetric(p):
        raise NotLaurentSupersymmetric("input is not laurent supersymmetric")
    restricted = substitute(p, {("x", m): Polynomial.var(p.spec, ("y", n))})
    if restricted.involves(("y", n)):
        raise ArithmeticError("image still depends on the shared value of x_m = y_n")
    return drop_variables(restricted, [("x", m), ("y", n)])


def z_plus(spec):
    """``1 - x_1 / y_1``."""
    return 1 - Polynomial.monomial(spec, xexp=[1], yexp=[-1])


def z_minus(spec):
    """``1 - y_1 / x_1``."""
    return 1 - Polynomial.monomial(spec, xexp=[-1], yexp=[1])


def _rij_table(p):
    """Group ``p`` as ``sum r_{i,j} x^i (x/y)^j`` with ``r_{i,j}`` free of x_1, y_1."""
    spec = p.spec
    kx, ky = 0, spec.m
    table = {}
    for mono, c in p.terms.items():
        a, b = mono[kx], mono[ky]
        j = -b
        i = a - j
        rest = list(mono)
        rest[kx] = rest[ky] = 0
        table.setdefault((i, j), {})[tuple(rest)] = c
    return {key: Polynomial(spec, terms) for key, terms in table.items()}


def decompose_r_sz(p):
    """Write ``p = r + s*z`` with ``z = 1 - x_1/y_1`` and ``r`` free of x_1, y_1."""
    spec = p.spec
    if not spec.laurent or spec.m < 1 or spec.n < 1:
        raise ValueError("needs a laurent spec with m, n >= 1")
    table = _rij_table(p)
    by_i = {}
    for (i, j), r in table.items():
        by_i.setdefault(i, {})[j] = r
    for i, row in by_i.items():
        if i == 0:
            continue
        # membership: r_{i,0} = -sum_{j != 0} r_{i,j} for every i != 0
        if sum(row.values(), Polynomial.zero(spec)):
            raise NotMember(f"coefficient identity fails at x-power {i}")
    r = sum(by_i.get(0, {}).values(), Polynomial.zero(spec))
    s = divide_exact(p - r, z_plus(spec))
    return r, s


class CodResult(NamedTuple):
    a: bool
    b: bool
    c: bool
    d: bool

    def consistent(self):
        return len(set(self)) == 1


def _cond_a(p):
    try:
        decompose_r_sz(p)
    except NotMember:
        return False
    return True


def _cond_b(p):
    spec = p.spec
    restricted = substitute(p, {"x1": Polynomial.var(spec, "y1")})
    return not restricted.involves("y1")


def _random_nonzero(rng, bound=7):
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v:
            return v


def _cond_c(p, rng, samples):
    # lambda on the subtorus x_1 = y_1, t acting by scaling x_1 and y_1 together
    spec = p.spec
    for _ in range(samples):
        a = _random_nonzero(rng)
        xs = [a] + [_random_nonzero(rng) for _ in range(spec.m - 1)]
        ys = [a] + [_random_nonzero(rng) for _ in range(spec.n - 1)]
        base = evaluate(p, (xs, ys))
        for _ in range(samples):
            t = _random_nonzero(rng)
            if evaluate(p, ([t * xs[0]] + xs[1:], [t * ys[0]] + ys[1:])) != base:
                return False
    return True


def _cond_d(p):
    spec = p.spec
    try:
        divide_exact(laurent_derivative(p, 1, 1), Polynomial.var(spec, "x1") - Polynomial.var(spec, "y1"))
    except NotDivisible:
        return False
    return True


def cod_check(p, seed=0, samples=5):
    """The four equivalent membership conditions for the pair (x_1, y_1).

    Condition (c) is sampled: ``samples`` torus points times ``samples``
    scalars.
    """
    spec = p.spec
    if not spec.laurent or spec.m < 1 or spec.n < 1:
        raise ValueError("needs a laurent spec with m, n >= 1")
    rng = random.Random(seed)
    return CodResult(_cond_a(p), _cond_b(p), _cond_c(p, rng, samples), _cond_d(p))
