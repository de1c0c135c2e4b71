"""Weyl groupoid of gl(m|n) acting on points, atypicality, separating witnesses.

Points carry exact rational coordinates ``(x_1..x_m | y_1..y_n)``.  In the
additive case the hyperplane of the isotropic root ``e_i - d_j`` is
``x_i + y_j = 0`` and the root shifts ``(x_i, y_j)`` by ``(+1, -1)``.  In the
multiplicative case the hyperplane is ``x_i = y_j`` and the shift scales both
coordinates by :data:`MULTIPLICATIVE_STEP`.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import NotSupersymmetric, decompose, is_supersymmetric, super_schur, t_element
from .laurent import is_laurent_supersymmetric, t_element_l
from .poly import Polynomial, VarSpec, evaluate, symmetrize

MULTIPLICATIVE_STEP = Fraction(2)
DEFAULT_DEPTH_CAP = 8


@dataclass(frozen=True)
class Point:
    x: tuple
    y: tuple
    multiplicative: bool = False

    def __init__(self, x, y, multiplicative=False):
        xs = tuple(Fraction(v) for v in x)
        ys = tuple(Fraction(v) for v in y)
        if multiplicative and any(v == 0 for v in xs + ys):
            raise ValueError("multiplicative points need nonzero coordinates")
        object.__setattr__(self, "x", xs)
        object.__setattr__(self, "y", ys)
        object.__setattr__(self, "multiplicative", bool(multiplicative))

    @property
    def shape(self):
        return len(self.x), len(self.y)

    def to_json(self):
        return {
            "x": [str(v) for v in self.x],
            "y": [str(v) for v in self.y],
            "multiplicative": self.multiplicative,
        }

    @classmethod
    def from_json(cls, data):
        for key in ("x", "y"):
            if not isinstance(data.get(key), list) or any(not isinstance(v, str) for v in data[key]):
                raise ValueError(f"point field {key!r} must be a list of decimal strings")
        return cls(data["x"], data["y"], bool(data.get("multiplicative", False)))

    def __str__(self):
        xs = ",".join(str(v) for v in self.x)
        ys = ",".join(str(v) for v in self.y)
        return f"({xs}|{ys})"


@dataclass(frozen=True)
class Root:
    """The isotropic root ``sign * (e_i - d_j)`` (1-based indices)."""

    i: int
    j: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1) or self.i < 1 or self.j < 1:
            raise ValueError(f"bad root {self}")


class NotOnHyperplane(ValueError):
    pass


class SeparationError(ValueError):
    pass


def isotropic_roots(m, n):
    return [Root(i, j, s) for i in range(1, m + 1) for j in range(1, n + 1) for s in (1, -1)]


def _check_root(alpha, p):
    m, n = p.shape
    if alpha.i > m or alpha.j > n:
        raise IndexError(f"{alpha} out of range for shape ({m}|{n})")


def pairing(alpha, p):
    """``(alpha, p)`` for the form with (e_i, e_k) = d_ik and (d_j, d_l) = -d_jl."""
    _check_root(alpha, p)
    if p.multiplicative:
        raise ValueError("the bilinear pairing is defined for additive points")
    return alpha.sign * (p.x[alpha.i - 1] + p.y[alpha.j - 1])


def on_hyperplane(alpha, p):
    _check_root(alpha, p)
    xi, yj = p.x[alpha.i - 1], p.y[alpha.j - 1]
    return xi == yj if p.multiplicative else xi + yj == 0


def tau_shift(alpha, p):
    if not on_hyperplane(alpha, p):
        raise NotOnHyperplane(f"{p} is not on the hyperplane of {alpha}")
    xs, ys = list(p.x), list(p.y)
    i, j = alpha.i - 1, alpha.j - 1
    if p.multiplicative:
        factor = MULTIPLICATIVE_STEP if alpha.sign > 0 else 1 / MULTIPLICATIVE_STEP
        xs[i] *= factor
        ys[j] *= factor
    else:
        xs[i] += alpha.sign
        ys[j] -= alpha.sign
    return Point(xs, ys, p.multiplicative)


def weyl_orbit(p):
    xperms = set(itertools.permutations(p.x))
    yperms = set(itertools.permutations(p.y))
    return frozenset(Point(xs, ys, p.multiplicative) for xs in xperms for ys in yperms)


def groupoid_orbit(p, depth_cap=DEFAULT_DEPTH_CAP):
    """Breadth-first closure under block permutations and root shifts.

    Chains are cut after ``depth_cap`` shifts; ``truncated`` reports whether
    any unexplored point remained.
    """
    if depth_cap < 0:
        raise ValueError("depth_cap must be >= 0")
    m, n = p.shape
    roots = isotropic_roots(m, n)
    seen = set(weyl_orbit(p))
    queue = deque((q, 0) for q in seen)
    truncated = False
    while queue:
        q, depth = queue.popleft()
        for alpha in roots:
            if not on_hyperplane(alpha, q):
                continue
            shifted = tau_shift(alpha, q)
            if shifted in seen:
                continue
            if depth >= depth_cap:
                truncated = True
                continue
            for r in weyl_orbit(shifted):
                if r not in seen:
                    seen.add(r)
                    queue.append((r, depth + 1))
    return frozenset(seen), truncated


def is_invariant(points):
    points = frozenset(points)
    for p in points:
        if not weyl_orbit(p) <= points:
            return False
        m, n = p.shape
        for alpha in isotropic_roots(m, n):
            if on_hyperplane(alpha, p) and tau_shift(alpha, p) not in points:
                return False
    return True


def _edges(p):
    m, n = p.shape
    same = (lambda a, b: a == b) if p.multiplicative else (lambda a, b: a + b == 0)
    return [[j for j in range(n) if same(p.x[i], p.y[j])] for i in range(m)]


def maximum_pairing(p):
    """A maximum set of disjoint vanishing pairs ``(i, j)`` (0-based), by augmenting paths."""
    adj = _edges(p)
    match_y = {}

    def augment(i, visited):
        for j in adj[i]:
            if j in visited:
                continue
            visited.add(j)
            if j not in match_y or augment(match_y[j], visited):
                match_y[j] = i
                return True
        return False

    for i in range(len(adj)):
        augment(i, set())
    return sorted((i, j) for j, i in match_y.items())


def atypicality(p):
    return len(maximum_pairing(p))


def _ring_spec(points):
    shapes = {q.shape for q in points}
    kinds = {q.multiplicative for q in points}
    if len(shapes) > 1 or len(kinds) > 1:
        raise ValueError("points of mixed shape")
    return shapes, kinds


def _in_ring(f, multiplicative):
    if multiplicative:
        return f.spec.laurent and is_laurent_supersymmetric(f)
    return is_supersymmetric(f)


def vanishing_ideal_check(points, f):
    """Whether ``f`` vanishes on every point; ``f`` must be in the matching ring."""
    points = list(points)
    shapes, kinds = _ring_spec(points)
    multiplicative = kinds.pop() if kinds else f.spec.laurent
    if not _in_ring(f, multiplicative):
        raise NotSupersymmetric("polynomial is not in the supersymmetric ring for these points")
    if shapes and shapes.pop() != (f.spec.m, f.spec.n):
        raise ValueError("point shape does not match the polynomial")
    return all(evaluate(f, q) == 0 for q in points)


def _coordinate_vanisher(spec, points):
    # prod over coordinates k of prod_{c in values_k(V)} (z_k - c)
    g = Polynomial.one(spec)
    names = spec.names()
    for k, name in enumerate(names):
        values = sorted({(q.x + q.y)[k] for q in points})
        z = Polynomial.var(spec, name)
        for c in values:
            g = g * (z - c)
    return g


def _affine_vanisher(spec, points, rng):
    coeffs = [rng.randint(-9, 9) for _ in range(spec.nvars)]
    xs, ys = Polynomial.gens(spec)
    ell = sum((c * v for c, v in zip(coeffs, xs + ys)), Polynomial.zero(spec))
    g = Polynomial.one(spec)
    for value in sorted({sum(c * v for c, v in zip(coeffs, q.x + q.y)) for q in points}):
        g = g * (ell - value)
    return g


def _t_for(spec):
    return t_element_l(spec.m, spec.n, spec) if spec.laurent else t_element(spec.m, spec.n, spec)


def _invariant_vanisher(spec, points, p, rng, max_attempts):
    """W-invariant ``h`` with ``h = 0`` on ``points`` and ``h(p) != 0``."""
    order = factorial(spec.m) * factorial(spec.n)
    for attempt in range(max_attempts):
        if attempt == 0:
            g = _coordinate_vanisher(spec, points)
        else:
            g = _affine_vanisher(spec, points, rng)
        h = symmetrize(g) * Fraction(1, order)
        if evaluate(h, p) != 0:
            return h
    raise SeparationError(f"no invariant vanisher found in {max_attempts} attempts")


def _orbit_separator(spec, reps, rng, max_attempts):
    """A W-invariant polynomial taking distinct values on the given orbit representatives."""
    top = max(spec.m, spec.n, 1)
    for _ in range(max_attempts):
        s = Polynomial.zero(spec)
        xs, ys = Polynomial.gens(spec)
        for r in range(1, top + 1):
            s = s + rng.randint(1, 50) * sum((v ** r for v in xs), Polynomial.zero(spec))
            s = s + rng.randint(1, 50) * sum((v ** r for v in ys), Polynomial.zero(spec))
        if len({evaluate(s, q) for q in reps}) == len(reps):
            return s
    raise SeparationError("could not separate the orbits of V")


def _invariant_interpolant(spec, values, rng, max_attempts):
    """W-invariant ``h`` with ``h(q) = values[q]`` for orbit representatives ``q``."""
    reps = list(values)
    if not reps:
        return Polynomial.zero(spec)
    s = _orbit_separator(spec, reps, rng, max_attempts)
    svals = {q: evaluate(s, q) for q in reps}
    h = Polynomial.zero(spec)
    for q in reps:
        term = Polynomial.const(spec, values[q])
        for other in reps:
            if other != q:
                term = term * (s - svals[other]) * (1 / (svals[q] - svals[other]))
        h = h + term
    return h


def _orbit_reps(points):
    reps, covered = [], set()
    for q in sorted(points, key=lambda q: (q.x, q.y)):
        if q not in covered:
            reps.append(q)
            covered |= weyl_orbit(q)
    return reps


def _lift_reduced(p, pairs, spec, rng, max_attempts):
    """Supersymmetric ``L`` on (m, n) with ``L(p) != 0`` for atypical ``p``.

    Drops the matched pairs to get a typical point in (m - r, n - r),
    separates it from the empty set there, and lifts the separator along
    ``F_lambda(m-r, n-r) -> F_lambda(m, n)``.
    """
    mx = {i for i, _ in pairs}
    my = {j for _, j in pairs}
    reduced = Point(
        [v for i, v in enumerate(p.x) if i not in mx],
        [v for j, v in enumerate(p.y) if j not in my],
        p.multiplicative,
    )
    rm, rn = reduced.shape
    if spec.laurent:
        # no basis section is available for the laurent ring; the constant lifts trivially
        return Polynomial.one(spec)
    reduced_sep = _typical_separator(VarSpec(rm, rn), frozenset(), reduced, rng, max_attempts)
    lift = Polynomial.zero(spec)
    for lam, c in decompose(reduced_sep).coeffs.items():
        lift = lift + super_schur(lam, spec.m, spec.n) * c
    return lift


def _typical_separator(spec, points, p, rng, max_attempts):
    h = _invariant_vanisher(spec, points, p, rng, max_attempts)
    return _t_for(spec) * h


def separating_polynomial(points, p, seed=0, max_attempts=64):
    """A supersymmetric ``f`` vanishing on the invariant set ``points`` with ``f(p) != 0``."""
    points = frozenset(points)
    _ring_spec(points | {p})
    if p in points:
        raise SeparationError("point lies in the set; no separator exists")
    if not is_invariant(points):
        raise ValueError("point set is not invariant under the Weyl groupoid")
    m, n = p.shape
    spec = VarSpec(m, n, p.multiplicative)
    rng = random.Random(seed)
    pairs = maximum_pairing(p)
    if not pairs:
        f = _typical_separator(spec, points, p, rng, max_attempts)
    else:
        lift = _lift_reduced(p, pairs, spec, rng, max_attempts)
        # T vanishes at p, so subtracting T*h keeps f(p) = lift(p) while killing V
        T = _t_for(spec)
        targets = {q: evaluate(lift, q) / evaluate(T, q) for q in _orbit_reps(points)}
        f = lift - T * _invariant_interpolant(spec, targets, rng, max_attempts)
    if any(evaluate(f, q) for q in points) or evaluate(f, p) == 0:
        raise SeparationError("constructed polynomial failed its own check")
    return f


def pointset_to_json(points):
    return [q.to_json() for q in sorted(points, key=lambda q: (q.x, q.y))]


def pointset_from_json(data):
    if not isinstance(data, list):
        raise ValueError("point set must be a JSON array")
    return frozenset(Point.from_json(d) for d in data)
