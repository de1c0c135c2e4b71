"""Acceptance suites, runnable from the CLI (``supersym selftest``) and pytest.

Each suite returns a :class:`SuiteResult`; nothing here raises on failure.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import core, groupoid, laurent, osp
from .linalg import rank
from .partitions import hook_partitions_upto, in_h0
from .poly import Polynomial, VarSpec, eliminate, evaluate, is_w_invariant


@dataclass
class SuiteResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name} ({self.seconds:.2f}s): {self.detail}"


def _timed(number, name):
    def wrap(fn):
        def run(seed=0):
            start = time.perf_counter()
            try:
                passed, detail = fn(seed)
            except Exception as exc:  # a crash is a failed criterion, reported not raised
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            return SuiteResult(number, name, passed, detail, time.perf_counter() - start)

        run.number = number
        run.suite_name = name
        return run

    return wrap


@_timed(1, "super Schur correctness")
def super_schur_correctness(seed):
    start = time.perf_counter()
    cases = [(lam, 2, 2) for lam in hook_partitions_upto(2, 2, 6)]
    cases += [(lam, 1, 1) for lam in hook_partitions_upto(1, 1, 8)]
    bad = []
    for lam, m, n in cases:
        f = core.super_schur(lam, m, n)
        if not (core.is_supersymmetric(f) and f.is_homogeneous(sum(lam)) and f.is_integral() and f):
            bad.append((tuple(lam), m, n))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 10.0
    return ok, f"{len(cases)} partitions, failures={bad}, {elapsed:.2f}s (limit 10s)"


@_timed(2, "factorization F = T S_mu S_nu on H0(2,2)")
def factorization_identity(seed):
    lams = [lam for lam in hook_partitions_upto(2, 2, 8) if in_h0(lam, 2, 2)]
    bad = [tuple(lam) for lam in lams if core.super_schur(lam, 2, 2) != core.super_schur_factored(lam, 2, 2)]
    return not bad, f"{len(lams)} partitions in H0, mismatches={bad}"


@_timed(3, "stability and kernel of phi")
def stability_and_kernel(seed):
    problems = []
    stable = hook_partitions_upto(2, 1, 6)
    for lam in stable:
        f = core.super_schur(lam, 2, 2)
        if eliminate(f, {"y2": 0}) != core.super_schur(lam, 2, 1):
            problems.append(("stability", tuple(lam)))
    h0 = [lam for lam in hook_partitions_upto(2, 2, 8) if in_h0(lam, 2, 2)]
    for lam in h0:
        f = core.super_schur(lam, 2, 2)
        if not core.phi_s(f).is_zero():
            problems.append(("phi", tuple(lam)))
            continue
        b = core.kernel_witness(f)
        if not is_w_invariant(b) or core.t_element(2, 2) * b != f:
            problems.append(("witness", tuple(lam)))
    return not problems, f"{len(stable)} stability cases, {len(h0)} kernel cases, problems={problems}"


def random_power_sum_combination(rng, m, n, max_degree=8, max_r=4):
    spec = VarSpec(m, n)
    total = Polynomial.zero(spec)
    for _ in range(rng.randint(1, 4)):
        budget = rng.randint(0, max_degree)
        term = Polynomial.const(spec, rng.choice([c for c in range(-5, 6) if c]))
        while budget > 0:
            r = rng.randint(1, min(max_r, budget))
            term = term * core.power_sum(r, m, n)
            budget -= r
        total = total + term
    return total


@_timed(4, "basis decomposition of power-sum products")
def basis_decomposition(seed):
    rng = random.Random(seed)
    failures = 0
    for _ in range(50):
        p = random_power_sum_combination(rng, 2, 2)
        dec = core.decompose(p)
        if not dec.is_integral() or dec.reconstruct() != p:
            failures += 1
    identity = core.super_schur((2,), 1, 1) - core.super_schur((1, 1), 1, 1) == core.power_sum(2, 1, 1)
    dec = core.decompose(core.power_sum(2, 1, 1))
    identity = identity and dec.coeffs == {(2,): 1, (1, 1): -1}
    return failures == 0 and identity, f"50 combinations, failures={failures}, x^2-y^2 identity={identity}"


def random_laurent(rng, spec, max_terms=6, lo=-3, hi=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(lo, hi) for _ in range(spec.nvars))
        terms[mono] = rng.choice([c for c in range(-5, 6) if c])
    return Polynomial(spec, terms)


@_timed(5, "four equivalent membership conditions")
def membership_equivalence(seed):
    rng = random.Random(seed)
    spec = VarSpec(1, 1, True)
    disagree, members = [], 0
    for k in range(200):
        f = random_laurent(rng, spec)
        res = laurent.cod_check(f, seed=seed + k, samples=5)
        members += res.a
        if not res.consistent():
            disagree.append(str(f))
    z = laurent.z_plus(spec)
    constructed_fail = 0
    for k in range(50):
        r = Polynomial.const(spec, rng.randint(-5, 5))
        s = random_laurent(rng, spec)
        if not all(laurent.cod_check(r + s * z, seed=seed + k, samples=5)):
            constructed_fail += 1
    ok = not disagree and constructed_fail == 0
    return ok, (f"200 random (members={members}), disagreements={disagree[:3]}, "
                f"50 constructed r+s*z, failures={constructed_fail}")


@_timed(6, "laurent kernel basis K_{lambda,mu}")
def laurent_kernel(seed):
    sigs = [laurent.SignaturePair((a,), (b,)) for a in range(-2, 3) for b in range(-2, 3)]
    nonzero_images = [s.to_json() for s in sigs if not laurent.phi_l(laurent.k_element(s)).is_zero()]
    by_degree = {}
    for s in sigs:
        by_degree.setdefault(s.degree, []).append(dict(laurent.k_element(s).terms))
    dependent = [d for d, vecs in by_degree.items() if rank(vecs) != len(vecs)]
    ok = not nonzero_images and not dependent
    return ok, f"{len(sigs)} pairs, nonzero phi images={nonzero_images}, dependent degrees={dependent}"


def brute_force_atypicality(p):
    """Largest set of disjoint vanishing pairs, by exhaustive search."""
    m, n = p.shape
    if p.multiplicative:
        vanish = lambda i, j: p.x[i] == p.y[j]  # noqa: E731
    else:
        vanish = lambda i, j: p.x[i] + p.y[j] == 0  # noqa: E731
    for k in range(min(m, n), 0, -1):
        for xs in itertools.combinations(range(m), k):
            for ys in itertools.permutations(range(n), k):
                if all(vanish(i, j) for i, j in zip(xs, ys)):
                    return k
    return 0


def random_point(rng, m, n, multiplicative):
    if multiplicative:
        draw = lambda: rng.randint(1, 5)  # noqa: E731
    else:
        draw = lambda: rng.randint(-3, 3)  # noqa: E731
    return groupoid.Point([draw() for _ in range(m)], [draw() for _ in range(n)], multiplicative)


@_timed(7, "atypicality equals brute-force maximum pairing")
def atypicality_oracle(seed):
    rng = random.Random(seed)
    points = [random_point(rng, rng.randint(1, 4), rng.randint(1, 4), k % 2 == 1) for k in range(1000)]
    start = time.perf_counter()
    computed = [groupoid.atypicality(p) for p in points]
    elapsed = time.perf_counter() - start
    mismatches = [str(p) for p, r in zip(points, computed) if r != brute_force_atypicality(p)]
    ok = not mismatches and elapsed < 5.0
    return ok, f"1000 points, mismatches={mismatches[:3]}, matching time {elapsed:.3f}s (limit 5s)"


def _random_fraction(rng, bound=9):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


@_timed(8, "supersymmetric functions are constant along root lines")
def groupoid_line_constancy(seed):
    rng = random.Random(seed)
    spec = VarSpec(2, 2)
    fs = [core.super_schur(lam, 2, 2) for lam in hook_partitions_upto(2, 2, 4)]
    broken = []
    control_failures = 0
    xs, ys = Polynomial.gens(spec)
    control = xs[0] ** 2 + ys[0] ** 2
    for i, j in itertools.product((1, 2), (1, 2)):
        alpha = groupoid.Root(i, j)
        for _ in range(20):
            x = [_random_fraction(rng) for _ in range(2)]
            y = [_random_fraction(rng) for _ in range(2)]
            y[j - 1] = -x[i - 1]
            q = groupoid.Point(x, y)
            line = []
            for k in range(-3, 4):
                xk, yk = list(x), list(y)
                xk[i - 1] += k
                yk[j - 1] -= k
                line.append(groupoid.Point(xk, yk))
            for f in fs:
                if len({evaluate(f, pt) for pt in line}) != 1:
                    broken.append((i, j, str(q)))
            if len({evaluate(control, pt) for pt in line}) != 1:
                control_failures += 1
    ok = not broken and control_failures >= 1
    return ok, f"{len(fs)} polynomials x 4 hyperplanes x 20 points, broken={broken[:3]}, control failures={control_failures}"


def random_typical_point(rng, m, n, bound=5):
    while True:
        p = groupoid.Point([rng.randint(-bound, bound) for _ in range(m)],
                           [rng.randint(-bound, bound) for _ in range(n)])
        if groupoid.atypicality(p) == 0:
            return p


@_timed(9, "separating witnesses")
def separating_witness(seed):
    rng = random.Random(seed)
    problems = []
    for k in range(25):
        V = groupoid.weyl_orbit(random_typical_point(rng, 2, 2))
        p = random_typical_point(rng, 2, 2)
        while p in V:
            p = random_typical_point(rng, 2, 2)
        f = groupoid.separating_polynomial(V, p, seed=seed + k)
        if any(evaluate(f, v) for v in V) or evaluate(f, p) == 0 or not core.is_supersymmetric(f):
            problems.append(str(p))
    V = groupoid.weyl_orbit(groupoid.Point([1, 2], [3, 5]))
    atypical = groupoid.Point([1, 2], [-1, 4])
    f = groupoid.separating_polynomial(V, atypical, seed=seed)
    atypical_ok = (not any(evaluate(f, v) for v in V) and evaluate(f, atypical) != 0
                   and core.is_supersymmetric(f))
    return not problems and atypical_ok, f"25 typical cases, problems={problems}, atypical path ok={atypical_ok}"


def random_wprime_invariant(rng, m, n, max_degree):
    """Random polynomial in the squares, symmetric in each block."""
    spec = VarSpec(m, n)
    total = Polynomial.zero(spec)
    for d in range(0, max_degree // 2 + 1):
        for a in range(d + 1):
            c = rng.randint(-4, 4)
            if not c:
                continue
            xs, ys = Polynomial.gens(spec)
            px = sum((v ** (2 * a) for v in xs), Polynomial.zero(spec)) if a else Polynomial.one(spec)
            py = sum((v ** (2 * (d - a)) for v in ys), Polynomial.zero(spec)) if d - a else Polynomial.one(spec)
            total = total + c * px * py
    return total


@_timed(10, "osp(2,2) membership and sigma decomposition")
def osp_membership(seed):
    rng = random.Random(seed)
    m, n = 1, 1
    spec = osp.OspSpec("ospeven", m, n)
    gens = [osp.supersymmetric_to_squared(core.super_schur(lam, m, n)) for lam in hook_partitions_upto(m, n, 4)]
    Phi = osp.phi_cap(m, n)
    h1 = Polynomial.var(VarSpec(m, n), "x1")
    problems = []
    for _ in range(50):
        j = sum((rng.randint(-5, 5) * g for g in gens), Polynomial.zero(VarSpec(m, n)))
        s = random_wprime_invariant(rng, m, n, 8 - Phi.degree())
        f = j + Phi * s
        if not osp.ih_membership(f, spec):
            problems.append(("member rejected", str(f)))
        if osp.ih_membership(f + h1, spec):
            problems.append(("perturbed accepted", str(f)))
        f1, fs = osp.sigma_decompose(f)
        if f1 + fs != f or osp.sigma_decompose(f1) != (f1, 0 * f1) or osp.sigma_decompose(fs) != (0 * fs, fs):
            problems.append(("projection", str(f)))
    identity_bad = []
    for a, b in itertools.product(range(3), range(3)):
        T = osp.osp_t(a, b)
        squares = Polynomial.monomial(VarSpec(a, b), xexp=[2] * a)
        if osp.phi_cap(a, b) ** 2 != T * (T * squares):
            identity_bad.append((a, b))
    ok = not problems and not identity_bad
    return ok, f"50 random f = j + Phi*s, problems={problems[:3]}, Phi^2 identity failures={identity_bad}"


SUITES = [
    super_schur_correctness,
    factorization_identity,
    stability_and_kernel,
    basis_decomposition,
    membership_equivalence,
    laurent_kernel,
    atypicality_oracle,
    groupoid_line_constancy,
    separating_witness,
    osp_membership,
]


def run_all(seed=0, only=None):
    return [suite(seed) for suite in SUITES if only is None or suite.number in only]
