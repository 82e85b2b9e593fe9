"""Character sums over F_q.

Two independent representations live here:

* a complex embedding (double precision) of the additive character theta, the
  multiplicative characters T^m with T(g^k) = exp(2*pi*i*k/(q-1)), Gauss sums,
  and the exhaustive sums A and B; this is only ever used as a cross-check;
* pi-adic Gauss sums via Gross-Koblitz, stored as ``(pi exponent, unit)``
  since pi itself is never a ring element.

The two are deliberately never compared numerically with each other.
"""

import cmath
import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

import numpy as np

from .errors import HypothesisViolated, OutOfRange, ZeroArgument
from .ffield import dlog, trace
from .padic import PadicNum, frac
from .pgamma import gamma_residue
from .surface import SurfaceSpec

TOL_SINGLE = 1e-9
TOL_SUM = 1e-6


def theta(alpha):
    """exp(2*pi*i*tr(alpha)/p)."""
    p = alpha.field.p
    return cmath.exp(2j * cmath.pi * trace(alpha) / p)


def char_value(m, x):
    """T^m(x), with T^m(0) = 0 for every m including m = 0."""
    if x.code == 0:
        return 0j
    q = x.field.q
    k = (m * dlog(x)) % (q - 1)
    return cmath.exp(2j * cmath.pi * k / (q - 1))


@functools.lru_cache(maxsize=None)
def _theta_table(field):
    return np.exp(2j * np.pi * field.trace_table / field.p)


@functools.lru_cache(maxsize=None)
def _char_table(field):
    # row m holds T^m at every code; column 0 (the zero element) stays 0
    q = field.q
    logs = field.log_table[1:]
    m = np.arange(q - 1)[:, None]
    out = np.zeros((q - 1, q), dtype=complex)
    out[:, 1:] = np.exp(2j * np.pi * ((m * logs[None, :]) % (q - 1)) / (q - 1))
    return out


@functools.lru_cache(maxsize=None)
def _gauss_table(field):
    g = _char_table(field) @ _theta_table(field)
    g[0] = -1.0
    return g


def gauss_sum_complex(field, m):
    """g(T^m) = sum_x T^m(x) theta(x); exactly -1 for the trivial character."""
    m %= field.q - 1
    if m == 0:
        return complex(-1.0)
    return complex(_gauss_table(field)[m])


@dataclass(frozen=True)
class PiAdicGauss:
    """g(omega-bar^a) = -pi^pi_exponent * prod Gamma_p(...); ``unit`` holds the
    whole unit factor including the leading minus sign."""

    pi_exponent: int
    unit: PadicNum

    def times(self, other):
        return PiAdicGauss(self.pi_exponent + other.pi_exponent, self.unit * other.unit)

    def to_padic(self):
        """Collapse to an honest p-adic number; only legal when the pi exponent
        is a multiple of p-1 (pi^(p-1) = -p)."""
        p = self.unit.p
        k, rem = divmod(self.pi_exponent, p - 1)
        if rem:
            raise ValueError("pi exponent is not a multiple of p-1")
        return self.unit * (-p) ** k


def digit_sum(a, p):
    s = 0
    while a:
        a, c = divmod(a, p)
        s += c
    return s


def gauss_sum_padic(field, a, M):
    """Gross-Koblitz: g(omega-bar^a) for 0 <= a <= q-2."""
    q, p, r = field.q, field.p, field.r
    if not 0 <= a <= q - 2:
        raise OutOfRange(f"a={a} outside [0, q-2]")
    fracs = [frac(Fraction(a * p ** i, q - 1)) for i in range(r)]
    exponent = (p - 1) * sum(fracs)
    assert exponent.denominator == 1
    unit = -prod(gamma_residue(x, p, M) for x in fracs)
    return PiAdicGauss(int(exponent), PadicNum(p, M, unit))


# -- the sums A and B ----------------------------------------------------------

def _unit_codes(field):
    return np.array([e.code for e in field.elements() if e.code != 0], dtype=np.int64)


def _unit_grid(field, n):
    units = _unit_codes(field)
    grids = np.meshgrid(*([units] * n), indexing="ij")
    return [g.ravel() for g in grids]


def _poly_values(spec, xs, deformed):
    field = spec.field
    add, mul = field.add_table, field.mul_table
    powd = field._pow_codes(np.arange(field.q), spec.d)
    s = np.zeros_like(xs[0])
    for x in xs:
        s = add[s, powd[x]]
    if not deformed:
        return s
    mono = np.ones_like(xs[0])
    for x, hi in zip(xs, spec.h):
        mono = mul[mono, field._pow_codes(np.arange(field.q), hi)[x]]
    coeff = (spec.lam * spec.d).code
    return add[s, field.neg_table[mul[coeff, mono]]]


def _exhaustive_theta_sum(spec, deformed):
    # ascending z, then lexicographic x-bar; fixed so the float sum is reproducible
    field = spec.field
    xs = _unit_grid(field, spec.n)
    fvals = _poly_values(spec, xs, deformed)
    th = _theta_table(field)
    total = 0j
    for z in _unit_codes(field):
        total += complex(th[field.mul_table[z, fvals]].sum())
    return total


def compute_A(spec, mode="brute"):
    """A = sum over z, x_i in F_q^x of theta(z*f(x)).

    ``mode="gauss"`` uses the closed form in Gauss sums, which needs
    gcd(d, q-1) = 1.
    """
    field = spec.field
    if spec.lam.code == 0:
        raise HypothesisViolated("lambda!=0")
    if (spec.d * prod(spec.h)) % field.p == 0:
        raise HypothesisViolated("p!|d*h_1*...*h_n")
    if mode == "brute":
        return _exhaustive_theta_sum(spec, deformed=True)
    if mode != "gauss":
        raise ValueError(f"unknown mode {mode!r}")
    q = field.q
    if gcd(spec.d, q - 1) != 1:
        raise HypothesisViolated("gcd(d,q-1)=1")
    g = _gauss_table(field)
    arg = -(spec.lam * spec.d)
    total = 0j
    for a in range(q - 1):
        term = g[(a * spec.d) % (q - 1)] * char_value(-a * spec.d, arg)
        for hi in spec.h:
            term *= g[(-a * hi) % (q - 1)]
        total += term
    return complex(total)


def compute_B(spec):
    """B = sum over z, x_i in F_q^x of theta(z*(x_1^d + ... + x_n^d))."""
    if gcd(spec.d, spec.q - 1) != 1:
        raise HypothesisViolated("gcd(d,q-1)=1")
    return _exhaustive_theta_sum(spec, deformed=False)


def theta_expansion_rhs(alpha):
    field = alpha.field
    q = field.q
    g = _gauss_table(field)
    return sum(g[(-m) % (q - 1)] * char_value(m, alpha) for m in range(q - 1)) / (q - 1)


def check_theta_expansion(alpha):
    """theta(alpha) = (1/(q-1)) sum_m g(T^-m) T^m(alpha), for alpha != 0.

    At alpha = 0 the right side is 0 under T^m(0) = 0 while theta(0) = 1, so
    zero is rejected rather than reported as a failure.
    """
    if alpha.code == 0:
        raise ZeroArgument("theta expansion is only valid for alpha != 0")
    return abs(theta(alpha) - theta_expansion_rhs(alpha)) < TOL_SINGLE


def orthogonality_sum(field, m):
    """sum_{x in F_q} T^m(x)."""
    return complex(_char_table(field)[m % (field.q - 1)].sum())


__all__ = [
    "PiAdicGauss",
    "SurfaceSpec",
    "char_value",
    "check_theta_expansion",
    "compute_A",
    "compute_B",
    "digit_sum",
    "gauss_sum_complex",
    "gauss_sum_padic",
    "orthogonality_sum",
    "theta",
]
