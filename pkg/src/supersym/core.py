"""Supersymmetric polynomials in x_1..x_m | y_1..y_n and their super Schur basis."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .linalg import InconsistentSystem, SparseSolver
from .partitions import (
    Partition,
    enumerate_hook,
    hook_mu_nu,
    in_h0,
    in_hook,
    partition_from_json,
    schur,
    vandermonde,
)
from .poly import (
    NotDivisible,
    Polynomial,
    VarSpec,
    alternate,
    divide_exact,
    eliminate,
    is_w_invariant,
    partial_derivative,
    substitute,
)

DEFAULT_DEGREE_CAP = 12


class NotSupersymmetric(ValueError):
    pass


def is_supersymmetric(p):
    spec = p.spec
    if spec.laurent and any(e < 0 for mono in p.terms for e in mono):
        return False
    if not is_w_invariant(p):
        return False
    if spec.m == 0 or spec.n == 0:
        return True
    x1 = Polynomial.var(spec, "x1")
    y1 = Polynomial.var(spec, "y1")
    diff = partial_derivative(p, "x1") - partial_derivative(p, "y1")
    try:
        divide_exact(diff, x1 + y1)
    except NotDivisible:
        return False
    return True


def is_t_independent(p):
    """Direct check: ``p(x1 = t, y1 = -t)`` does not depend on ``t``.

    ``t`` is carried by ``x1`` after substituting ``y1 = -x1``.
    """
    spec = p.spec
    if spec.m == 0 or spec.n == 0:
        return True
    restricted = substitute(p, {"y1": -Polynomial.var(spec, "x1")})
    return not restricted.involves("x1")


def power_sum(r, m, n):
    if r < 1:
        raise ValueError("power sums are indexed by r >= 1")
    spec = VarSpec(m, n)
    sign = (-1) ** (r - 1)
    terms = {}
    for i in range(m):
        mono = [0] * (m + n)
        mono[i] = r
        terms[tuple(mono)] = 1
    for j in range(n):
        mono = [0] * (m + n)
        mono[m + j] = r
        terms[tuple(mono)] = sign
    return Polynomial(spec, terms)


def t_element(m, n, spec=None):
    """``prod_{i<=m, j<=n} (x_i + y_j)``."""
    spec = spec or VarSpec(m, n)
    result = Polynomial.one(spec)
    for i in range(1, m + 1):
        xi = Polynomial.var(spec, ("x", i))
        for j in range(1, n + 1):
            result = result * (xi + Polynomial.var(spec, ("y", j)))
    return result


def g_polynomial(lam, m, n):
    """The numerator whose double alternation gives F_lambda."""
    lam = Partition(lam)
    spec = VarSpec(m, n)
    mu, nu = hook_mu_nu(lam, m, n)
    xexp = [mu.part(i) + m - i for i in range(1, m + 1)]
    yexp = [nu.part(j) + n - j for j in range(1, n + 1)]
    g = Polynomial.monomial(spec, xexp, yexp)
    for i in range(1, m + 1):
        xi = Polynomial.var(spec, ("x", i))
        for j in range(1, min(n, lam.part(i)) + 1):
            g = g * (xi + Polynomial.var(spec, ("y", j)))
    return g


def super_schur(lam, m, n):
    """Super Schur polynomial F_lambda(X_m / Y_n); zero outside the hook."""
    return _super_schur(Partition(lam), m, n)


@lru_cache(maxsize=None)
def _super_schur(lam, m, n):
    spec = VarSpec(m, n)
    if not in_hook(lam, m, n):
        return Polynomial.zero(spec)
    # w[g / (D(X) D(Y))] = sign(w) w(g) / (D(X) D(Y)), so alternate twice then divide once
    numerator = alternate(alternate(g_polynomial(lam, m, n), "x"), "y")
    denominator = vandermonde(m, "x", spec) * vandermonde(n, "y", spec)
    return divide_exact(numerator, denominator)


def super_schur_factored(lam, m, n):
    lam = Partition(lam)
    if not in_hook(lam, m, n) or not in_h0(lam, m, n):
        raise ValueError(f"{tuple(lam)} is not in H0({m},{n})")
    spec = VarSpec(m, n)
    mu, nu = hook_mu_nu(lam, m, n)
    return t_element(m, n, spec) * schur(mu, m, "x", spec) * schur(nu, n, "y", spec)


def _require_supersymmetric(p):
    if not is_supersymmetric(p):
        raise NotSupersymmetric("input is not supersymmetric")


def phi_s(p, check=True):
    """Evaluation map setting ``x_m = y_n = 0``; lands in spec (m-1, n-1)."""
    m, n = p.spec.m, p.spec.n
    if m < 1 or n < 1:
        raise ValueError("phi needs m >= 1 and n >= 1")
    if check:
        _require_supersymmetric(p)
    return eliminate(p, {("x", m): 0, ("y", n): 0})


class KernelWitnessError(ValueError):
    pass


def kernel_witness(p):
    """W-invariant ``b`` with ``p == T * b`` for ``p`` in the kernel of phi."""
    _require_supersymmetric(p)
    if not phi_s(p, check=False).is_zero():
        raise KernelWitnessError("phi(p) != 0")
    try:
        b = divide_exact(p, t_element(p.spec.m, p.spec.n))
    except NotDivisible as exc:
        raise KernelWitnessError("T does not divide p") from exc
    if not is_w_invariant(b):
        raise KernelWitnessError("quotient by T is not W-invariant")
    return b


@dataclass(frozen=True)
class BasisDecomposition:
    m: int
    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for lam, c in self.coeffs.items():
            if not in_hook(lam, self.m, self.n):
                raise ValueError(f"{tuple(lam)} not in the ({self.m},{self.n})-hook")
            if not c:
                raise ValueError("zero coefficient stored")

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.coeffs.values())

    def reconstruct(self):
        total = Polynomial.zero(VarSpec(self.m, self.n))
        for lam, c in self.coeffs.items():
            total = total + super_schur(lam, self.m, self.n) * c
        return total

    def to_json(self):
        items = sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(kv[0])))
        return {
            "m": self.m,
            "n": self.n,
            "coeffs": [{"partition": list(lam), "c": str(c)} for lam, c in items],
        }

    @classmethod
    def from_json(cls, data):
        coeffs = {}
        for entry in data["coeffs"]:
            coeffs[partition_from_json(entry["partition"])] = Fraction(entry["c"])
        return cls(int(data["m"]), int(data["n"]), coeffs)


@lru_cache(maxsize=None)
def _degree_solver(m, n, d):
    basis = enumerate_hook(m, n, d)
    columns = [dict(super_schur(lam, m, n).terms) for lam in basis]
    return basis, SparseSolver(columns)


def decompose(p, degree_cap=DEFAULT_DEGREE_CAP):
    """Coefficients of ``p`` in the F_lambda basis, solved degree by degree."""
    if p.spec.laurent:
        raise NotSupersymmetric("laurent input")
    _require_supersymmetric(p)
    m, n = p.spec.m, p.spec.n
    coeffs = {}
    for d, comp in p.homogeneous_components().items():
        if d > degree_cap:
            raise ValueError(f"degree {d} exceeds the decomposition cap {degree_cap}")
        basis, solver = _degree_solver(m, n, d)
        try:
            solution = solver.solve(dict(comp.terms))
        except InconsistentSystem as exc:
            raise ArithmeticError(f"degree {d} component not in the span of F_lambda") from exc
        for lam, c in zip(basis, solution):
            if c:
                coeffs[lam] = c
    return BasisDecomposition(m, n, coeffs)
