"""Exhaustive sweeps over small fields, shared by the CLI and the test suite."""

import itertools
from dataclasses import dataclass, field
from functools import reduce
from math import gcd, prod

from .charsum import (
    TOL_SINGLE,
    TOL_SUM,
    check_theta_expansion,
    compute_A,
    compute_B,
    gauss_sum_complex,
    orthogonality_sum,
)
from .ffield import is_prime, make_field
from .surface import SurfaceSpec
from .verify import (
    check_affine_identity,
    check_congruence_claim,
    check_floor_identities,
    check_gamma_products,
    check_reflection,
    verify_theorem1,
    verify_theorem2,
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.checked > 0 and not self.failures

    def record(self, ok, label):
        self.checked += 1
        if not ok:
            self.failures.append(label)

    def summary(self):
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed"


def odd_prime_powers(qmax):
    """(p, r) with p odd prime and p^r <= qmax, ordered by q."""
    out = []
    for q in range(3, qmax + 1):
        for p in range(3, q + 1, 2):
            if not is_prime(p):
                continue
            r, v = 0, q
            while v % p == 0:
                v //= p
                r += 1
            if v == 1:
                out.append((p, r))
                break
    return out


def fields_for(qs):
    out = []
    for q in qs:
        (pr,) = [x for x in odd_prime_powers(q) if x[0] ** x[1] == q]
        out.append(make_field(*pr))
    return out


def compositions(d, n):
    """Ordered tuples of n positive integers summing to d."""
    for cut in itertools.combinations(range(1, d), n - 1):
        bounds = (0,) + cut + (d,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def theorem1_specs(qs, ns=(2, 3), dmax=7):
    """Every admissible instance of the general formula over the given fields."""
    for F in fields_for(qs):
        q, p = F.q, F.p
        for n in ns:
            for d in range(max(2, n), dmax + 1):
                if gcd(d, q - 1) != 1 or d % p == 0:
                    continue
                for h in compositions(d, n):
                    if prod(h) % p == 0 or reduce(gcd, h, d) != 1:
                        continue
                    for lam in F.units():
                        yield SurfaceSpec(F, d, h, lam)


def theorem2_cases(qs, dmax=8):
    for F in fields_for(qs):
        p = F.p
        for d in range(2, dmax + 1):
            for k in range(1, d):
                if reduce(gcd, (k, d - k), d) != 1 or (d * k * (d - k)) % p == 0:
                    continue
                for lam in F.units():
                    yield F, d, k, lam


def sweep_theorem1(qs, ns=(2, 3), dmax=7):
    res = SweepResult("general formula (gcd(d,q-1)=1)")
    for spec in theorem1_specs(qs, ns, dmax):
        rep = verify_theorem1(spec)
        res.record(rep.match, (spec.q, spec.d, spec.h, spec.lam.coeffs))
    return res


def sweep_theorem2(qs, dmax=8):
    res = SweepResult("two-variable formula (any gcd(d,q-1))")
    for F, d, k, lam in theorem2_cases(qs, dmax):
        rep = verify_theorem2(F, d, k, lam)
        res.record(rep.match, (F.q, d, k, lam.coeffs))
    return res


def sweep_floors(qs, dmax=8, nmax=3):
    res = SweepResult("floor identities")
    for F in fields_for(qs):
        p, r, q = F.p, F.r, F.q
        for i in range(r):
            for d in range(2, dmax + 1):
                if d % p == 0:
                    continue
                for a in range(1, q - 1):
                    res.record(check_floor_identities("d-lemma", p, r, a, i, d=d),
                               ("d-lemma", q, d, a, i))
            for l in range(1, dmax + 1):
                if l % p == 0:
                    continue
                for a in range(0, q - 1):
                    res.record(check_floor_identities("l-lemma", p, r, a, i, l=l),
                               ("l-lemma", q, l, a, i))
            for d in range(2, dmax + 1):
                if gcd(d, p * (q - 1)) != 1:
                    continue
                for n in range(1, nmax + 1):
                    for h in compositions(d, n):
                        if prod(h) % p == 0:
                            continue
                        for a in range(1, q - 1):
                            res.record(check_floor_identities("combined", p, r, a, i, d=d, h=h),
                                       ("combined", q, d, h, a, i))
    return res


def sweep_gamma(qmax=25, tmax=6, M=6):
    res = SweepResult(f"gamma product lemmas (M={M})")
    for p, r in odd_prime_powers(qmax):
        F = make_field(p, r)
        for t in range(1, tmax + 1):
            if t % p == 0:
                continue
            for a in range(F.q - 1):
                for variant in ("negative", "positive"):
                    res.record(check_gamma_products(variant, F, t, a, M), (variant, F.q, t, a))
    return res


def sweep_reflection(qmax=25, M=6):
    res = SweepResult(f"reflection lemma (M={M})")
    for p, r in odd_prime_powers(qmax):
        F = make_field(p, r)
        for a in range(1, F.q - 1):
            res.record(check_reflection(F, a, M), (F.q, a))
    return res


def sweep_claim(qmax=25, dmax=8):
    res = SweepResult("congruence solution claim")
    for p, r in odd_prime_powers(qmax):
        F = make_field(p, r)
        for d in range(2, dmax + 1):
            for k in range(1, d):
                if reduce(gcd, (k, d - k), d) != 1:
                    continue
                res.record(check_congruence_claim(d, k, F), (F.q, d, k))
    return res


def sweep_theta(qmax=49, expansion_qmax=25):
    res = SweepResult("character orthogonality, |g|^2 = q, theta expansion")
    for p, r in odd_prime_powers(qmax):
        F = make_field(p, r)
        q = F.q
        for m in range(q - 1):
            want = q - 1 if m == 0 else 0
            res.record(abs(orthogonality_sum(F, m) - want) < TOL_SINGLE, ("orth", q, m))
            if m:
                res.record(abs(abs(gauss_sum_complex(F, m)) ** 2 - q) < TOL_SINGLE, ("gauss", q, m))
        if q <= expansion_qmax:
            for x in F.units():
                res.record(check_theta_expansion(x), ("theta", q, x.coeffs))
    return res


def sweep_affine(qs, ns=(2, 3), dmax=7):
    """Complex-oracle checks on every instance of the theorem-1 grid."""
    res = SweepResult("A brute vs Gauss form, B closed form, q*N = q^n + A - B")
    for spec in theorem1_specs(qs, ns, dmax):
        label = (spec.q, spec.d, spec.h, spec.lam.coeffs)
        a_brute = compute_A(spec, "brute")
        a_gauss = compute_A(spec, "gauss")
        res.record(abs(a_brute - a_gauss) < TOL_SUM * (1 + abs(a_brute)), ("A",) + label)
        b = compute_B(spec)
        res.record(abs(b - (-1) ** spec.n * (spec.q - 1)) < TOL_SUM, ("B",) + label)
        res.record(check_affine_identity(spec), ("eq",) + label)
    return res


def run_named(which, qmax):
    """Dispatch used by ``diagcount identities``."""
    qs = [p ** r for p, r in odd_prime_powers(qmax)]
    if which == "floors":
        return [sweep_floors(qs)]
    if which == "gamma":
        return [sweep_gamma(qmax)]
    if which == "reflection":
        return [sweep_reflection(qmax)]
    if which == "claim":
        return [sweep_claim(qmax)]
    if which == "theta":
        return [sweep_theta(qmax, expansion_qmax=min(qmax, 25))]
    if which == "affine":
        return [sweep_affine(qs)]
    raise ValueError(f"unknown identity family {which!r}")
