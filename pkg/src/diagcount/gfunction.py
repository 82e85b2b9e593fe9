"""McCarthy's p-adic hypergeometric function nGn[a; b | t]_q, evaluated mod p^M.

All bookkeeping on fractional parts and floors is exact rational arithmetic.
Individual summands may carry a negative power of p when r > 1, so the sum is
formed at a guard precision ``M + shift`` with every term scaled by p^shift,
and the shift is divided back out at the end.
"""

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from .errors import BadPartition, HypothesisViolated, NonIntegralValue, NotPAdicInteger, ZeroArgument
from .ffield import FieldElem, FieldSpec
from .padic import UnramNum, frac, omega_power
from .pgamma import gamma_residue
from .surface import SurfaceSpec

__all__ = [
    "GAudit",
    "GParams",
    "build_b_list",
    "default_precision",
    "evaluate_G",
    "theorem_params",
]


def build_b_list(d, h):
    """Bottom parameters for the diagonal family: n-1 zeros, then k/h_j for
    k = 1..h_j-1 for every h_j > 1 in index order.

    >>> [str(b) for b in build_b_list(7, (1, 2, 1, 3))]
    ['0', '0', '0', '1/2', '1/3', '2/3']
    """
    h = tuple(h)
    if any(x < 1 for x in h) or sum(h) != d:
        raise BadPartition(f"h={h} is not a partition of d={d}")
    out = [Fraction(0)] * (len(h) - 1)
    for hj in h:
        out.extend(Fraction(k, hj) for k in range(1, hj))
    return out


@dataclass(frozen=True)
class GParams:
    top: tuple
    bottom: tuple
    t: FieldElem
    field: FieldSpec

    def __post_init__(self):
        top = tuple(Fraction(x) for x in self.top)
        bottom = tuple(Fraction(x) for x in self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if not isinstance(self.t, FieldElem):
            object.__setattr__(self, "t", self.field(self.t))
        if len(top) != len(bottom) or not top:
            raise ValueError("top and bottom parameter lists must have equal positive length")
        p = self.field.p
        for x in top + bottom:
            if x.denominator % p == 0:
                raise NotPAdicInteger(f"parameter {x} is not in Z_{p}")
        if self.t.code == 0:
            raise ZeroArgument("G is evaluated at t != 0 only")

    @property
    def n(self):
        return len(self.top)


@dataclass
class GAudit:
    """Exponent bookkeeping from one evaluation."""

    exponents: list = field(default_factory=list)
    guard: int = 0
    working_precision: int = 0

    @property
    def min_exponent(self):
        return min(self.exponents)


def default_precision(p, q, n):
    """Smallest M with p^M > 4 q^(n-1), plus two guard digits."""
    bound = 4 * q ** (n - 1)
    M = 1
    while p ** M <= bound:
        M += 1
    return M + 2


def _exponents(top, bottom, p, r, q):
    out = []
    for a in range(q - 1):
        e = 0
        for ak, bk in zip(top, bottom):
            for i in range(r):
                s = Fraction(a * p ** i, q - 1)
                e -= floor(frac(ak * p ** i) - s)
                e -= floor(frac(-bk * p ** i) + s)
        out.append(e)
    return out


def _gamma_unit(top, bottom, a, p, r, q, M):
    mod = p ** M
    num = 1
    den = 1
    s = Fraction(a, q - 1)
    for ak, bk in zip(top, bottom):
        for i in range(r):
            pi = p ** i
            num = num * gamma_residue(frac((ak - s) * pi), p, M) % mod
            num = num * gamma_residue(frac((-bk + s) * pi), p, M) % mod
            den = den * gamma_residue(frac(ak * pi), p, M) % mod
            den = den * gamma_residue(frac(-bk * pi), p, M) % mod
    return num * pow(den, -1, mod) % mod


@functools.lru_cache(maxsize=256)
def _coefficients(top, bottom, p, r, M):
    """The t-independent part of each summand, scaled by p^shift, mod p^(M+shift).

    Returns ``(coeffs, exponents, shift)``.
    """
    q = p ** r
    n = len(top)
    exps = _exponents(top, bottom, p, r, q)
    shift = max(0, -min(exps))
    Mw = M + shift
    mod = p ** Mw
    coeffs = []
    for a, e in enumerate(exps):
        unit = _gamma_unit(top, bottom, a, p, r, q, Mw)
        if a == 0 and (e != 0 or unit != 1):
            raise AssertionError("the a=0 summand of G must be exactly 1")
        sign = -1 if (a * n + e) % 2 else 1
        coeffs.append(sign * unit * pow(p, e + shift, mod) % mod)
    return tuple(coeffs), tuple(exps), shift


def evaluate_G(params, M):
    """Value of nGn[top; bottom | t]_q mod p^M as an :class:`UnramNum`, with an
    audit of the per-summand (-p)-exponents."""
    if M < 1:
        raise ValueError("precision M must be >= 1")
    F = params.field
    p, r, q = F.p, F.r, F.q
    coeffs, exps, shift = _coefficients(params.top, params.bottom, p, r, M)
    Mw = M + shift
    # omega-bar^a(t) = w^a with w = omega(t)^-1
    w = omega_power(1, params.t, Mw)
    acc = UnramNum.from_int(F, Mw, 0)
    power = UnramNum.from_int(F, Mw, 1)
    for c in coeffs:
        if c:
            acc = acc + power * c
        power = power * w
    scale = p ** shift
    if any(x % scale for x in acc.coeffs):
        raise NonIntegralValue(
            f"G sum has negative valuation (guard shift {shift} not absorbed)"
        )
    mod = p ** M
    inv = pow(q - 1, -1, mod)
    value = UnramNum(F, M, [-(x // scale) * inv for x in acc.coeffs])
    audit = GAudit(exponents=list(exps), guard=shift, working_precision=Mw)
    return value, audit


def theorem_params(spec, t=None):
    """Parameters 1/d..(d-1)/d over the b-list, at t = lambda^d * prod h_i^h_i."""
    if not isinstance(spec, SurfaceSpec):
        raise TypeError("expected a SurfaceSpec")
    d = spec.d
    if spec.lam.code == 0:
        raise HypothesisViolated("lambda!=0")
    if t is None:
        t = spec.lam ** d
        for hi in spec.h:
            t = t * spec.field(hi) ** hi
    top = [Fraction(k, d) for k in range(1, d)]
    return GParams(top, build_b_list(d, spec.h), t, spec.field)
