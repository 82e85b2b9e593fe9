"""The hypersurface family X_1^d + ... + X_n^d = lambda*d*X_1^h_1 ... X_n^h_n."""

from dataclasses import dataclass
from functools import reduce
from math import gcd, prod

from .errors import BadPartition, HypothesisViolated
from .ffield import FieldElem, FieldSpec


@dataclass(frozen=True)
class SurfaceSpec:
    field: FieldSpec
    d: int
    h: tuple
    lam: FieldElem

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))
        if not isinstance(self.lam, FieldElem):
            object.__setattr__(self, "lam", self.field(self.lam))
        if self.d < 2:
            raise HypothesisViolated("d>=2")
        if len(self.h) < 2:
            raise HypothesisViolated("n>=2")
        if any(x < 1 for x in self.h) or sum(self.h) != self.d:
            raise BadPartition(f"h={self.h} is not a partition of d={self.d} into positive parts")
        if reduce(gcd, self.h, self.d) != 1:
            raise HypothesisViolated("gcd(d,h_1,...,h_n)=1")

    @property
    def n(self):
        return len(self.h)

    @property
    def p(self):
        return self.field.p

    @property
    def q(self):
        return self.field.q

    def theorem1_checks(self):
        """Named hypotheses of the general point-count formula, in a fixed order."""
        q, p = self.q, self.p
        return [
            ("gcd(d,q-1)=1", gcd(self.d, q - 1) == 1),
            ("lambda!=0", self.lam.code != 0),
            ("p!|d*h_1*...*h_n", (self.d * prod(self.h)) % p != 0),
            ("d>=n", self.d >= self.n),
        ]

    def theorem2_checks(self):
        """Named hypotheses of the two-variable formula (no gcd(d,q-1) clause)."""
        k = self.h[0]
        d = self.d
        return [
            ("n=2", self.n == 2),
            ("gcd(d,k,d-k)=1", reduce(gcd, (k, d - k), d) == 1),
            ("p!|d*k*(d-k)", (d * k * (d - k)) % self.p != 0),
            ("lambda!=0", self.lam.code != 0),
        ]

    def describe(self):
        return {
            "p": self.p,
            "r": self.field.r,
            "d": self.d,
            "h": list(self.h),
            "lambda": list(self.lam.coeffs),
        }


def require(checks, only=None):
    """Raise :class:`HypothesisViolated` naming the first failed check."""
    for name, ok in checks:
        if only is not None and name not in only:
            continue
        if not ok:
            err = HypothesisViolated(name)
            err.checks = list(checks)
            raise err
