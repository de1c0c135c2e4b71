"""Membership in the image I(h) for gl(m,n), osp(2m+1,2n) and osp(2m,2n).

Polynomials live in ``VarSpec(m, n)`` with the x-block read as h_1..h_m and
the y-block as h'_1..h'_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import is_supersymmetric, t_element
from .poly import NotDivisible, Polynomial, VarSpec, apply_group, GroupElement, divide_exact, w_generators

OSP_NAMES = ("h", "h'")
HALF = Fraction(1, 2)


class OspKind(str, Enum):
    GLMN = "glmn"
    OSPODD = "ospodd"
    OSPEVEN = "ospeven"


@dataclass(frozen=True)
class OspSpec:
    kind: OspKind
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "kind", OspKind(self.kind))
        if self.m < 0 or self.n < 0:
            raise ValueError("negative rank")


class NotWInvariant(ValueError):
    pass


@dataclass(frozen=True)
class SignVector:
    """Element of W' acting by ``h_i -> xsigns[i] * h_{xperm[i]}`` (0-based perms)."""

    xsigns: tuple
    ysigns: tuple
    xperm: tuple = None
    yperm: tuple = None

    def __post_init__(self):
        if self.xperm is None:
            object.__setattr__(self, "xperm", tuple(range(len(self.xsigns))))
        if self.yperm is None:
            object.__setattr__(self, "yperm", tuple(range(len(self.ysigns))))
        if any(s not in (1, -1) for s in self.xsigns + self.ysigns):
            raise ValueError("signs must be +1 or -1")
        if len(self.xperm) != len(self.xsigns) or len(self.yperm) != len(self.ysigns):
            raise ValueError("sign and permutation lengths differ")
        GroupElement(tuple(self.xperm), tuple(self.yperm))

    @classmethod
    def flip(cls, m, n, hs=(), hps=()):
        """Sign change of the listed h (``hs``) and h' (``hps``), 1-based."""
        return cls(
            tuple(-1 if i + 1 in hs else 1 for i in range(m)),
            tuple(-1 if j + 1 in hps else 1 for j in range(n)),
        )

    def in_w(self):
        return self.xsigns.count(-1) % 2 == 0

    def sigma(self):
        return 1 if self.in_w() else -1


def apply_wprime(g, f):
    spec = f.spec
    if len(g.xsigns) != spec.m or len(g.ysigns) != spec.n:
        raise ValueError("sign vector size does not match the polynomial")
    signs = g.xsigns + g.ysigns
    flipped = {}
    for mono, c in f.terms.items():
        s = 1
        for e, sg in zip(mono, signs):
            if sg < 0 and e % 2:
                s = -s
        flipped[mono] = c * s
    return apply_group(GroupElement(tuple(g.xperm), tuple(g.yperm)), Polynomial(spec, flipped))


def _w_generators(m, n):
    gens = [SignVector((1,) * m, (1,) * n, w.xperm, w.yperm) for w in w_generators(m, n)]
    gens += [SignVector.flip(m, n, hps=(j,)) for j in range(1, n + 1)]
    gens += [SignVector.flip(m, n, hs=(i, i + 1)) for i in range(1, m)]
    return gens


def _wprime_generators(m, n):
    return _w_generators(m, n) + [SignVector.flip(m, n, hs=(i,)) for i in range(1, m + 1)]


def is_w_invariant_osp(f):
    """Invariance under W, the even-sign-change subgroup of W'."""
    return all(apply_wprime(g, f) == f for g in _w_generators(f.spec.m, f.spec.n))


def is_wprime_invariant(f):
    return all(apply_wprime(g, f) == f for g in _wprime_generators(f.spec.m, f.spec.n))


def sigma_decompose(f):
    """Split a W-invariant ``f`` into its W'-invariant and sigma-twisted parts."""
    if not is_w_invariant_osp(f):
        raise NotWInvariant("input is not invariant under W")
    m, n = f.spec.m, f.spec.n
    if m == 0:
        return f, Polynomial.zero(f.spec)
    s_f = apply_wprime(SignVector.flip(m, n, hs=(1,)), f)
    return (f + s_f) * HALF, (f - s_f) * HALF


def squared_to_supersymmetric(f):
    """``g`` with ``f = g(h^2, -h'^2)``, or ``None`` if some exponent is odd."""
    m = f.spec.m
    terms = {}
    for mono, c in f.terms.items():
        if any(e % 2 for e in mono):
            return None
        ysign = (-1) ** sum(e // 2 for e in mono[m:])
        terms[tuple(e // 2 for e in mono)] = c * ysign
    return Polynomial(f.spec, terms)


def supersymmetric_to_squared(g):
    """Inverse of :func:`squared_to_supersymmetric`: ``u_i = h_i^2``, ``v_j = -h'_j^2``."""
    m = g.spec.m
    terms = {}
    for mono, c in g.terms.items():
        ysign = (-1) ** sum(mono[m:])
        terms[tuple(2 * e for e in mono)] = c * ysign
    return Polynomial(g.spec, terms)


def j_membership(f, m=None, n=None):
    if (m is not None and m != f.spec.m) or (n is not None and n != f.spec.n):
        raise ValueError("rank does not match the polynomial")
    g = squared_to_supersymmetric(f)
    return g is not None and is_supersymmetric(g)


def osp_t(m, n):
    """``prod_{i,j} (h_i^2 - h'_j^2)``."""
    return supersymmetric_to_squared(t_element(m, n))


def phi_cap(m, n):
    spec = VarSpec(m, n)
    return Polynomial.monomial(spec, xexp=[1] * m) * osp_t(m, n)


def ih_membership(f, spec):
    if not isinstance(spec, OspSpec):
        spec = OspSpec(*spec)
    if (spec.m, spec.n) != (f.spec.m, f.spec.n) or f.spec.laurent:
        raise ValueError("polynomial does not match the osp spec")
    if spec.kind is OspKind.GLMN:
        return is_supersymmetric(f)
    if spec.kind is OspKind.OSPODD:
        return j_membership(f)
    f1, fsigma = sigma_decompose(f)
    if not j_membership(f1):
        return False
    if fsigma.is_zero():
        return True
    try:
        quotient = divide_exact(fsigma, phi_cap(spec.m, spec.n))
    except NotDivisible:
        return False
    return is_wprime_invariant(quotient)
