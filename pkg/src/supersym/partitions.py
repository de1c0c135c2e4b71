"""Partitions, the (m,n)-hook, Schur polynomials and Euler characters."""

from __future__ import annotations

from functools import lru_cache

from .poly import Polynomial, VarSpec, alternate, divide_exact


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative ints; trailing zeros trimmed."""

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{tuple(parts)} is not a partition")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition{tuple(self)}"

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """``lambda_i`` with 1-based ``i``; zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def transpose(self):
        return transpose(self)

    def diagram(self):
        return {(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)}


class IntegerSignature(tuple):
    """Weakly decreasing fixed-length tuple of integers (negatives allowed)."""

    def __new__(cls, entries=()):
        entries = [int(e) for e in entries]
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"{tuple(entries)} is not non-increasing")
        return super().__new__(cls, entries)

    def __repr__(self):
        return f"IntegerSignature{tuple(self)}"


def transpose(lam):
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for row in lam if row >= j) for j in range(1, lam[0] + 1))


def in_hook(lam, m, n):
    return Partition(lam).part(m + 1) <= n


def _require_hook(lam, m, n):
    if not in_hook(lam, m, n):
        raise ValueError(f"{tuple(lam)} is not contained in the ({m},{n})-hook")


def in_h0(lam, m, n):
    """Whether a hook partition has the box (m, n) in its diagram."""
    lam = Partition(lam)
    _require_hook(lam, m, n)
    if m == 0 or n == 0:
        # the box (m, n) does not exist; H0 is only defined for m, n > 0
        return False
    return lam.part(m) >= n


def hook_mu_nu(lam, m, n):
    lam = Partition(lam)
    _require_hook(lam, m, n)
    mu = Partition(max(0, lam.part(i) - n) for i in range(1, m + 1))
    lt = transpose(lam)
    nu = Partition(max(0, lt.part(j) - m) for j in range(1, n + 1))
    return mu, nu


def partitions(d, max_part=None):
    """All partitions of ``d`` in reverse lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield Partition()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield Partition((first,) + tuple(rest))


def enumerate_hook(m, n, d):
    if d < 0:
        raise ValueError("negative degree")
    return [lam for lam in partitions(d) if in_hook(lam, m, n)]


def hook_partitions_upto(m, n, dmax):
    return [lam for d in range(dmax + 1) for lam in enumerate_hook(m, n, d)]


def vandermonde(k, block="x", spec=None):
    """``prod_{i<j} (v_i - v_j)`` over the first ``k`` variables of a block."""
    if spec is None:
        spec = VarSpec(k, 0) if block == "x" else VarSpec(0, k)
    result = Polynomial.one(spec)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            result = result * (Polynomial.var(spec, (block, i)) - Polynomial.var(spec, (block, j)))
    return result


def _block_monomial(spec, block, exps):
    if block == "x":
        return Polynomial.monomial(spec, xexp=exps)
    return Polynomial.monomial(spec, yexp=exps)


def _bialternant(exps, k, block, spec):
    staircase = [e + k - 1 - i for i, e in enumerate(exps)]
    numerator = alternate(_block_monomial(spec, block, staircase), block)
    return divide_exact(numerator, vandermonde(k, block, spec))


def schur(mu, m, block="x", spec=None):
    """Schur polynomial ``S_mu`` in the ``m`` variables of ``block``."""
    mu = Partition(mu)
    if len(mu) > m:
        raise ValueError(f"{tuple(mu)} has more than {m} parts")
    if spec is None:
        return _schur_cached(mu, m, block)
    if spec.block_size(block) != m:
        raise ValueError("spec block size does not match m")
    return _bialternant(list(mu) + [0] * (m - len(mu)), m, block, spec)


@lru_cache(maxsize=None)
def _schur_cached(mu, m, block):
    spec = VarSpec(m, 0) if block == "x" else VarSpec(0, m)
    return _bialternant(list(mu) + [0] * (m - len(mu)), m, block, spec)


def euler_character(lam, m, block="x", spec=None):
    """Laurent analogue of a Schur polynomial for an integer signature."""
    lam = IntegerSignature(lam)
    if len(lam) != m:
        raise ValueError(f"signature {tuple(lam)} should have length {m}")
    if spec is None:
        spec = VarSpec(m, 0, True) if block == "x" else VarSpec(0, m, True)
    if not spec.laurent:
        raise ValueError("euler characters live in a laurent spec")
    return _bialternant(list(lam), m, block, spec)


def partition_to_json(lam):
    return list(lam)


def partition_from_json(data):
    if not isinstance(data, list) or any(not isinstance(e, int) for e in data):
        raise ValueError(f"partition must be an integer array, got {data!r}")
    return Partition(data)


def signature_to_json(sig):
    return {"entries": list(sig)}


def signature_from_json(data):
    return IntegerSignature(data["entries"])
