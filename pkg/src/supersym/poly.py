"""Sparse exact multivariate (Laurent) polynomials in two blocks of variables.

A polynomial lives in a :class:`VarSpec` with ``m`` x-variables and ``n``
y-variables.  Monomials are stored as a single exponent tuple of length
``m + n`` (x-block first), coefficients are :class:`fractions.Fraction`.
Values are immutable; every operation returns a new polynomial.
"""

from __future__ import annotations

import heapq
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType

MAX_ALTERNATION_BLOCK = 8


class SpecMismatch(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised by :func:`divide_exact` when the divisor does not divide."""


@dataclass(frozen=True)
class VarSpec:
    m: int
    n: int
    laurent: bool = False

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"negative variable count in {self}")

    @property
    def nvars(self):
        return self.m + self.n

    def block_size(self, block):
        if block == "x":
            return self.m
        if block == "y":
            return self.n
        raise ValueError(f"unknown block {block!r}")

    def names(self, xname="x", yname="y"):
        return [f"{xname}{i + 1}" for i in range(self.m)] + [
            f"{yname}{j + 1}" for j in range(self.n)
        ]


_VAR_RE = re.compile(r"^([xy])(\d+)$")


def var_index(spec, var):
    """Position of a variable in the exponent tuple.

    ``var`` may be ``"x1"``, ``("y", 2)`` or an already-resolved int.
    Indices in names are 1-based.
    """
    if isinstance(var, int):
        if not 0 <= var < spec.nvars:
            raise IndexError(f"variable position {var} out of range for {spec}")
        return var
    if isinstance(var, str):
        match = _VAR_RE.match(var)
        if not match:
            raise ValueError(f"bad variable name {var!r}")
        block, idx = match.group(1), int(match.group(2))
    else:
        block, idx = var
    size = spec.block_size(block)
    if not 1 <= idx <= size:
        raise IndexError(f"{block}{idx} out of range for {spec}")
    return idx - 1 if block == "x" else spec.m + idx - 1


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("spec", "_terms", "_hash")

    def __init__(self, spec, terms=None):
        self.spec = spec
        clean = {}
        size = spec.nvars
        if terms:
            for mono, c in terms.items():
                mono = tuple(int(e) for e in mono)
                if len(mono) != size:
                    raise SpecMismatch(f"monomial {mono} does not fit {spec}")
                if not spec.laurent and any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in non-laurent spec: {mono}")
                c = _as_fraction(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, spec, terms):
        # trusted constructor: terms already canonical, no zero coefficients
        p = object.__new__(cls)
        p.spec = spec
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, spec):
        return cls._raw(spec, {})

    @classmethod
    def const(cls, spec, c):
        c = _as_fraction(c)
        return cls._raw(spec, {(0,) * spec.nvars: c} if c else {})

    @classmethod
    def one(cls, spec):
        return cls.const(spec, 1)

    @classmethod
    def var(cls, spec, var):
        mono = [0] * spec.nvars
        mono[var_index(spec, var)] = 1
        return cls._raw(spec, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, spec, xexp=(), yexp=(), c=1):
        xexp, yexp = tuple(xexp), tuple(yexp)
        xexp += (0,) * (spec.m - len(xexp))
        yexp += (0,) * (spec.n - len(yexp))
        return cls(spec, {xexp + yexp: c})

    @classmethod
    def gens(cls, spec):
        """Return ``(xs, ys)``: lists of the variables of each block."""
        xs = [cls.var(spec, ("x", i + 1)) for i in range(spec.m)]
        ys = [cls.var(spec, ("y", j + 1)) for j in range(spec.n)]
        return xs, ys

    # inspection

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(mono) for mono in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((0,) * self.spec.nvars, Fraction(0))

    def is_integral(self):
        return all(c.denominator == 1 for c in self._terms.values())

    def coeff(self, xexp=(), yexp=()):
        return self._terms.get(tuple(xexp) + tuple(yexp), Fraction(0))

    def degree(self):
        """Total degree; ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(mono) for mono in self._terms)

    def min_degree(self):
        if not self._terms:
            return None
        return min(sum(mono) for mono in self._terms)

    def is_homogeneous(self, degree=None):
        degs = {sum(mono) for mono in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    def homogeneous_components(self):
        comps = {}
        for mono, c in self._terms.items():
            comps.setdefault(sum(mono), {})[mono] = c
        return {d: Polynomial._raw(self.spec, t) for d, t in sorted(comps.items())}

    def sorted_terms(self):
        """Terms in decreasing graded-lex order (x-block before y-block)."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex_key)
        return mono, self._terms[mono]

    def involves(self, var):
        k = var_index(self.spec, var)
        return any(mono[k] for mono in self._terms)

    def min_exponents(self):
        if not self._terms:
            return (0,) * self.spec.nvars
        return tuple(min(col) for col in zip(*self._terms))

    # arithmetic

    def _check(self, other):
        if self.spec != other.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.const(self.spec, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial._raw(self.spec, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.spec, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            if not c:
                return Polynomial.zero(self.spec)
            return Polynomial._raw(self.spec, {k: v * c for k, v in self._terms.items()})
        self._check(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                out[mono] = get(mono, 0) + ca * cb
        return Polynomial._raw(self.spec, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            return divide_exact(self, other)
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of polynomial by zero")
        return self * (1 / c)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1 or not self.spec.laurent:
                raise ValueError("negative powers only exist for laurent monomials")
            (mono, c), = self._terms.items()
            return Polynomial._raw(self.spec, {tuple(e * k for e in mono): c ** k})
        result = Polynomial.one(self.spec)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.spec == other.spec and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == Polynomial.const(self.spec, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.spec, frozenset(self._terms.items())))
        return self._hash

    def map_coefficients(self, f):
        return Polynomial(self.spec, {k: f(c) for k, c in self._terms.items()})

    def __repr__(self):
        return f"Polynomial({self.spec.m}|{self.spec.n}{', laurent' if self.spec.laurent else ''}: {self})"

    def to_str(self, names=None):
        if not self._terms:
            return "0"
        names = names or self.spec.names()
        pieces = []
        for mono, c in self.sorted_terms():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not factors:
                body = str(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{a}*" + "*".join(factors)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_str


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def _power_of_value(value, e, laurent_var, cache):
    key = (id(value), e)
    if key in cache:
        return cache[key][1]
    if isinstance(value, Polynomial):
        if e < 0 and len(value) != 1:
            raise ValueError("a variable with negative exponents may only be bound "
                             "to a nonzero scalar or a monomial")
        result = value ** e
    else:
        if e < 0 and not value:
            raise ZeroDivisionError(f"zero bound to inverted variable {laurent_var}")
        result = value ** e
    cache[key] = (value, result)
    return result


def substitute(p, bindings):
    """Simultaneous substitution.

    ``bindings`` maps variables (``"x1"``, ``("y", 2)``, positions) to scalars
    or to polynomials in ``p.spec``.  The spec is unchanged; use
    :func:`eliminate` to also drop the bound variables.
    """
    spec = p.spec
    bound = {}
    for var, value in bindings.items():
        k = var_index(spec, var)
        if isinstance(value, Polynomial):
            if value.spec != spec:
                raise SpecMismatch(f"binding for {var} lives in {value.spec}, expected {spec}")
        else:
            value = _as_fraction(value)
        bound[k] = value
    if not bound:
        return p
    names = spec.names()
    cache = {}
    poly_out = Polynomial.zero(spec)
    scalar_out = {}
    for mono, c in p._terms.items():
        rest = list(mono)
        coef = c
        polyfactor = None
        for k, value in bound.items():
            e = mono[k]
            if not e:
                continue
            rest[k] = 0
            pw = _power_of_value(value, e, names[k], cache)
            if isinstance(pw, Polynomial):
                polyfactor = pw if polyfactor is None else polyfactor * pw
            else:
                coef *= pw
        if not coef:
            continue
        rest = tuple(rest)
        if polyfactor is None:
            s = scalar_out.get(rest, 0) + coef
            scalar_out[rest] = s
        else:
            poly_out = poly_out + polyfactor * Polynomial._raw(spec, {rest: coef})
    return poly_out + Polynomial._raw(spec, {k: v for k, v in scalar_out.items() if v})


def drop_variables(p, variables, xname=None):
    """Remove variables that ``p`` does not involve, shrinking its spec."""
    spec = p.spec
    ks = sorted({var_index(spec, v) for v in variables})
    for k in ks:
        if any(mono[k] for mono in p._terms):
            raise ValueError(f"cannot drop {spec.names()[k]}: polynomial involves it")
    dm = sum(1 for k in ks if k < spec.m)
    new_spec = VarSpec(spec.m - dm, spec.n - (len(ks) - dm), spec.laurent)
    keep = [k for k in range(spec.nvars) if k not in set(ks)]
    return Polynomial._raw(new_spec, {tuple(mono[k] for k in keep): c for mono, c in p._terms.items()})


def eliminate(p, bindings):
    """Substitute and then drop the bound variables from the spec."""
    return drop_variables(substitute(p, bindings), list(bindings))


def embed(p, spec, xoffset=0, yoffset=0):
    """Reinterpret ``p`` in a larger spec, shifting block indices by the offsets."""
    if spec.m < p.spec.m + xoffset or spec.n < p.spec.n + yoffset:
        raise SpecMismatch(f"{p.spec} does not fit into {spec}")
    if p.spec.laurent and not spec.laurent and any(e < 0 for mono in p._terms for e in mono):
        raise ValueError("laurent polynomial with negative exponents into polynomial spec")
    m0 = p.spec.m
    out = {}
    for mono, c in p._terms.items():
        new = [0] * spec.nvars
        new[xoffset:xoffset + m0] = mono[:m0]
        new[spec.m + yoffset:spec.m + yoffset + p.spec.n] = mono[m0:]
        out[tuple(new)] = c
    return Polynomial._raw(spec, out)


def as_laurent(p):
    if p.spec.laurent:
        return p
    return Polynomial._raw(VarSpec(p.spec.m, p.spec.n, True), dict(p._terms))


def partial_derivative(p, var):
    k = var_index(p.spec, var)
    out = {}
    for mono, c in p._terms.items():
        e = mono[k]
        if e:
            new = list(mono)
            new[k] = e - 1
            out[tuple(new)] = c * e
    return Polynomial._raw(p.spec, out)


def laurent_derivative(p, i, j):
    """``x_i dp/dx_i + y_j dp/dy_j`` (1-based indices)."""
    spec = p.spec
    kx = var_index(spec, ("x", i))
    ky = var_index(spec, ("y", j))
    out = {}
    for mono, c in p._terms.items():
        w = mono[kx] + mono[ky]
        if w:
            out[mono] = c * w
    return Polynomial._raw(spec, out)


def _divide_polynomial(p, d):
    """Multivariate division by a single divisor in grlex order.

    Returns (quotient, remainder).  With one divisor the remainder is zero
    exactly when ``d`` divides ``p``.
    """
    spec = p.spec
    lm, lc = d.leading_term()
    rem = dict(p._terms)
    heap = [(-sum(mono), tuple(-e for e in mono)) for mono in rem]
    heapq.heapify(heap)
    quot = {}
    leftover = {}
    dterms = list(d._terms.items())
    while heap:
        negdeg, negmono = heapq.heappop(heap)
        mono = tuple(-e for e in negmono)
        c = rem.pop(mono, None)
        if c is None:
            continue
        # skip stale duplicate heap entries
        while heap and heap[0] == (negdeg, negmono):
            heapq.heappop(heap)
        shift = tuple(a - b for a, b in zip(mono, lm))
        if any(s < 0 for s in shift):
            leftover[mono] = c
            continue
        qc = c / lc
        quot[shift] = qc
        for dm, dc in dterms:
            if dm == lm:
                continue
            t = tuple(a + b for a, b in zip(shift, dm))
            v = rem.get(t, 0) - qc * dc
            if v:
                if t not in rem:
                    heapq.heappush(heap, (-sum(t), tuple(-e for e in t)))
                rem[t] = v
            else:
                rem.pop(t, None)
    return Polynomial._raw(spec, quot), Polynomial._raw(spec, leftover)


def _shift(p, exps, sign=1):
    return Polynomial._raw(
        p.spec, {tuple(a + sign * b for a, b in zip(mono, exps)): c for mono, c in p._terms.items()}
    )


def divide_exact(p, d):
    """Return ``q`` with ``p == q * d`` or raise :class:`NotDivisible`.

    In laurent mode both operands are first normalised by their monomial
    content, so divisibility is decided up to units.
    """
    p._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    if not p.spec.laurent:
        q, r = _divide_polynomial(p, d)
        if r:
            raise NotDivisible(f"{d} does not divide {p}")
        return q
    pe, de = p.min_exponents(), d.min_exponents()
    q, r = _divide_polynomial(_shift(p, pe, -1), _shift(d, de, -1))
    if r:
        raise NotDivisible(f"{d} does not divide {p}")
    return _shift(q, tuple(a - b for a, b in zip(pe, de)))


def divides(d, p):
    try:
        divide_exact(p, d)
    except NotDivisible:
        return False
    return True


def evaluate(p, pt):
    """Exact value of ``p`` at a point.

    ``pt`` is anything with ``x``/``y`` coordinate sequences or an
    ``(xs, ys)`` pair.
    """
    xs, ys = (pt.x, pt.y) if hasattr(pt, "x") else pt
    coords = [_as_fraction(v) for v in itertools.chain(xs, ys)]
    if len(coords) != p.spec.nvars or len(xs) != p.spec.m:
        raise SpecMismatch(f"point of shape ({len(xs)}|{len(ys)}) for {p.spec}")
    if p.spec.laurent and any(v == 0 for v in coords):
        raise ZeroDivisionError("zero coordinate for a laurent polynomial")
    powers = [{} for _ in coords]
    total = Fraction(0)
    for mono, c in p._terms.items():
        v = c
        for k, e in enumerate(mono):
            if e:
                cache = powers[k]
                pw = cache.get(e)
                if pw is None:
                    pw = cache[e] = coords[k] ** e
                v *= pw
        total += v
    return total


@dataclass(frozen=True)
class GroupElement:
    """An element of S_m x S_n.

    ``xperm[i]`` is the image of ``i`` (0-based), so ``x_{i+1}`` is sent to
    ``x_{xperm[i]+1}``.
    """

    xperm: tuple
    yperm: tuple

    def __post_init__(self):
        for perm in (self.xperm, self.yperm):
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{perm} is not a permutation")

    @classmethod
    def identity(cls, m, n):
        return cls(tuple(range(m)), tuple(range(n)))

    @classmethod
    def transposition(cls, m, n, block, i, j):
        """Swap of positions ``i`` and ``j`` (1-based) in one block."""
        perm = list(range(m if block == "x" else n))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        ident = GroupElement.identity(m, n)
        if block == "x":
            return cls(tuple(perm), ident.yperm)
        return cls(ident.xperm, tuple(perm))

    def compose(self, other):
        """``self * other``: apply ``other`` first."""
        return GroupElement(
            tuple(self.xperm[k] for k in other.xperm),
            tuple(self.yperm[k] for k in other.yperm),
        )

    def sign(self):
        return _perm_sign(self.xperm) * _perm_sign(self.yperm)


def _perm_sign(perm):
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _permute_terms(terms, m, xperm, yperm):
    out = {}
    for mono, c in terms.items():
        new = list(mono)
        for i, img in enumerate(xperm):
            new[img] = mono[i]
        for j, img in enumerate(yperm):
            new[m + img] = mono[m + j]
        out[tuple(new)] = c
    return out


def apply_group(w, p):
    spec = p.spec
    if len(w.xperm) != spec.m or len(w.yperm) != spec.n:
        raise SpecMismatch(f"group element of size ({len(w.xperm)},{len(w.yperm)}) for {spec}")
    return Polynomial._raw(spec, _permute_terms(p._terms, spec.m, w.xperm, w.yperm))


def w_generators(m, n):
    gens = [GroupElement.transposition(m, n, "x", i, i + 1) for i in range(1, m)]
    gens += [GroupElement.transposition(m, n, "y", j, j + 1) for j in range(1, n)]
    return gens


def is_w_invariant(p):
    return all(apply_group(g, p) == p for g in w_generators(p.spec.m, p.spec.n))


def alternate(p, block):
    """Signed orbit sum of ``p`` over the symmetric group of one block."""
    spec = p.spec
    k = spec.block_size(block)
    if k > MAX_ALTERNATION_BLOCK:
        raise ValueError(f"alternation over S_{k} refused (cap {MAX_ALTERNATION_BLOCK})")
    ident = tuple(range(spec.m if block == "y" else spec.n))
    out = {}
    for perm in itertools.permutations(range(k)):
        sign = _perm_sign(perm)
        if block == "x":
            image = _permute_terms(p._terms, spec.m, perm, ident)
        else:
            image = _permute_terms(p._terms, spec.m, ident, perm)
        for mono, c in image.items():
            out[mono] = out.get(mono, 0) + sign * c
    return Polynomial._raw(spec, {mono: c for mono, c in out.items() if c})


def symmetrize(p):
    """Unsigned orbit sum over S_m x S_n."""
    spec = p.spec
    if max(spec.m, spec.n) > MAX_ALTERNATION_BLOCK:
        raise ValueError("symmetrization block too large")
    out = {}
    for xp in itertools.permutations(range(spec.m)):
        for yp in itertools.permutations(range(spec.n)):
            for mono, c in _permute_terms(p._terms, spec.m, xp, yp).items():
                out[mono] = out.get(mono, 0) + c
    return Polynomial._raw(spec, {mono: c for mono, c in out.items() if c})


# JSON


def poly_to_json(p, names=None):
    data = {
        "m": p.spec.m,
        "n": p.spec.n,
        "laurent": p.spec.laurent,
        "terms": [
            {"c": str(c), "x": list(mono[:p.spec.m]), "y": list(mono[p.spec.m:])}
            for mono, c in p.sorted_terms()
        ],
    }
    if names is not None:
        data["names"] = names
    return data


def poly_from_json(data):
    try:
        spec = VarSpec(int(data["m"]), int(data["n"]), bool(data.get("laurent", False)))
        terms = {}
        for t in data.get("terms", []):
            c = t["c"]
            if not isinstance(c, str):
                raise ValueError("coefficients must be decimal strings")
            mono = tuple(t.get("x", [])) + tuple(t.get("y", []))
            if len(t.get("x", [])) != spec.m or len(t.get("y", [])) != spec.n:
                raise ValueError(f"term {t} does not match m={spec.m}, n={spec.n}")
            if any(not isinstance(e, int) or isinstance(e, bool) for e in mono):
                raise ValueError(f"non-integer exponent in {t}")
            terms[mono] = terms.get(mono, 0) + Fraction(c)
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed polynomial JSON: {exc}") from exc
    return Polynomial(spec, terms)
