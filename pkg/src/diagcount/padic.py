"""Fixed-precision arithmetic in Z_p and in the unramified extension Z_q.

Both rings are handled as residues modulo p^M. The unramified extension
reuses the modulus of the underlying :class:`~diagcount.ffield.FieldSpec`,
lifted verbatim, so reducing an :class:`UnramNum` coefficientwise mod p lands
exactly on the matching field element.
"""

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import NotAUnit, ZeroArgument


def frac_floor(x):
    """Split a rational into ``(<x>, floor(x))`` with ``0 <= <x> < 1``."""
    x = Fraction(x)
    fl = floor(x)
    return x - fl, fl


def frac(x):
    return frac_floor(x)[0]


def valuation(n, p):
    """p-adic valuation of a nonzero integer; ``None`` for zero."""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def symmetric_lift(residue, modulus):
    """Representative of ``residue`` in (-modulus/2, modulus/2]."""
    r = residue % modulus
    return r - modulus if 2 * r > modulus else r


@dataclass(frozen=True)
class PadicNum:
    """An element of Z_p known modulo p^M."""

    p: int
    M: int
    residue: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p ** self.M)

    @property
    def modulus(self):
        return self.p ** self.M

    def _coerce(self, other):
        if isinstance(other, PadicNum):
            if other.p != self.p:
                raise ValueError("mismatched primes")
            return other.residue, min(self.M, other.M)
        if isinstance(other, int):
            return other, self.M
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return PadicNum(self.p, c[1], self.residue + c[0])

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return PadicNum(self.p, c[1], self.residue - c[0])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PadicNum(self.p, self.M, -self.residue)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return PadicNum(self.p, c[1], self.residue * c[0])

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return padic_inverse(self) ** -e
        return PadicNum(self.p, self.M, pow(self.residue, e, self.modulus))

    def __eq__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return (self.residue - c[0]) % self.p ** c[1] == 0

    def __hash__(self):
        return hash((self.p, self.M, self.residue))

    def is_unit(self):
        return self.residue % self.p != 0

    def reduce(self, M):
        return PadicNum(self.p, min(M, self.M), self.residue)

    def lift(self):
        """Symmetric integer lift in (-p^M/2, p^M/2)."""
        return symmetric_lift(self.residue, self.modulus)

    def __int__(self):
        return self.residue


def padic_inverse(x):
    if x.residue % x.p == 0:
        raise NotAUnit(f"{x.residue} is divisible by p={x.p}")
    return PadicNum(x.p, x.M, pow(x.residue, -1, x.modulus))


class UnramNum:
    """An element of Z_q modulo p^M, as a coefficient vector over the lifted
    field modulus (constant term first)."""

    __slots__ = ("field", "M", "coeffs")

    def __init__(self, field, M, coeffs):
        self.field = field
        self.M = M
        mod = field.p ** M
        c = [int(x) % mod for x in coeffs]
        c += [0] * (field.r - len(c))
        if len(c) > field.r:
            c = _reduce_poly(c, field.modulus, mod)
        self.coeffs = tuple(c)

    @classmethod
    def from_int(cls, field, M, n):
        return cls(field, M, [n])

    @property
    def modulus(self):
        return self.field.p ** self.M

    def _check(self, other):
        if isinstance(other, int):
            return UnramNum.from_int(self.field, self.M, other)
        if isinstance(other, PadicNum):
            return UnramNum.from_int(self.field, min(self.M, other.M), other.residue)
        if isinstance(other, UnramNum):
            if other.field is not self.field:
                raise ValueError("elements of different unramified extensions")
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        M = min(self.M, o.M)
        return UnramNum(self.field, M, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return UnramNum(self.field, self.M, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        M = min(self.M, o.M)
        mod = self.field.p ** M
        if self.field.r == 1:
            return UnramNum(self.field, M, [self.coeffs[0] * o.coeffs[0]])
        prod = [0] * (2 * self.field.r - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return UnramNum(self.field, M, _reduce_poly(prod, self.field.modulus, mod))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are taken through omega_power")
        result = UnramNum.from_int(self.field, self.M, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return NotImplemented
        mod = self.field.p ** min(self.M, o.M)
        return all((a - b) % mod == 0 for a, b in zip(self.coeffs, o.coeffs))

    def __hash__(self):
        return hash((self.field.q, self.M, self.coeffs))

    def reduce(self, M):
        return UnramNum(self.field, min(M, self.M), self.coeffs)

    def residue_field_elem(self):
        """Reduction mod p, as a field element."""
        return self.field(list(self.coeffs))

    def is_rational(self):
        """True when every non-constant coefficient vanishes mod p^M."""
        return all(c == 0 for c in self.coeffs[1:])

    def constant(self):
        return PadicNum(self.field.p, self.M, self.coeffs[0])

    def __repr__(self):
        return f"UnramNum(q={self.field.q}, M={self.M}, coeffs={self.coeffs})"


def _reduce_poly(c, modulus, mod):
    # modulus is monic of degree r, constant term first
    c = list(c)
    r = len(modulus) - 1
    for top in range(len(c) - 1, r - 1, -1):
        lead = c[top]
        if lead:
            base = top - r
            for i in range(r):
                c[base + i] -= lead * modulus[i]
        c[top] = 0
    return [x % mod for x in c[:r]]


@functools.lru_cache(maxsize=4096)
def _teichmuller_code(field, code, M):
    x = field.from_code(code)
    y = UnramNum(field, M, x.coeffs)
    for _ in range(M):
        y = y ** field.q
    return y


def teichmuller(x, M):
    """The (q-1)-th root of unity in Z_q congruent to ``x`` mod p.

    Iterates y -> y^q from the naive lift; each step gains one p-adic digit.
    """
    if x.code == 0:
        raise ZeroArgument("the Teichmuller character is not defined at 0")
    return _teichmuller_code(x.field, x.code, M)


def omega_power(a, t, M):
    """The value omega-bar^a(t) = omega(t)^(-a), exponent reduced mod q-1."""
    if t.code == 0:
        raise ZeroArgument("omega-bar^a(0) is taken as undefined")
    q = t.field.q
    return teichmuller(t, M) ** ((-a) % (q - 1))
