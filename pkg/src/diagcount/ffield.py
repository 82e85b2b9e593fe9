"""Arithmetic in F_q = F_p[y]/(m(y)).

Elements are stored as integer codes ``c_0 + c_1 p + ... + c_{r-1} p^{r-1}``
where ``(c_0, ..., c_{r-1})`` is the coefficient vector, constant term first.
Every :class:`FieldSpec` precomputes exp/log, addition and multiplication
tables, so the hot loops elsewhere in the package work on raw codes and
numpy fancy indexing rather than on :class:`FieldElem` objects.

"Least" always refers to the enumeration order of coefficient vectors
compared lexicographically with the constant term most significant; both the
modulus search and the generator search use it, which makes the model of F_q
reproducible.
"""

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BadDegree, NonOddPrime, ZeroArgument


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, constant term first ----------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_mod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a = _trim(a)
    return a


def _poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base, e, m, p):
    result = [1]
    base = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(m, p):
    """Ben-Or test: ``m`` has no factor of degree k for any k <= deg(m)/2."""
    m = _trim(m)
    r = len(m) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    y = [0, 1]
    ypow = y
    for _ in range(r // 2):
        ypow = _poly_powmod(ypow, p, m, p)
        g = _poly_gcd(m, _poly_sub(ypow, y, p), p)
        if len(g) > 1:
            return False
    return True


def _vectors(p, r):
    # lexicographic, constant term most significant
    return itertools.product(range(p), repeat=r)


class FieldSpec:
    """The finite field F_q with a fixed modulus and multiplicative generator.

    Build instances with :func:`make_field`; they are immutable after
    construction and cached per ``(p, r)``.
    """

    def __init__(self, p, r, modulus, generator_coeffs):
        self.p = p
        self.r = r
        self.q = p ** r
        # monic, constant term first, length r + 1
        self.modulus = tuple(modulus)
        q = self.q
        self._pow_p = [p ** i for i in range(r)]

        coeffs = np.array([self._decode(c) for c in range(q)], dtype=np.int64).reshape(q, r)
        self.coeff_table = coeffs
        weights = np.array(self._pow_p, dtype=np.int64)
        summed = (coeffs[:, None, :] + coeffs[None, :, :]) % p
        self.add_table = (summed * weights).sum(axis=2)
        self.neg_table = ((-coeffs) % p * weights).sum(axis=1)

        gen_code = self.encode(generator_coeffs)
        exp = [1]
        cur = [1]
        g = list(generator_coeffs)
        for _ in range(q - 2):
            cur = _poly_mod(_poly_mul(cur, g, p), self.modulus, p)
            exp.append(self.encode(cur))
        self.exp_table = np.array(exp, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(q - 1)
        self.log_table = log
        if (log[1:] < 0).any():
            raise ValueError("generator does not enumerate F_q^x")

        e = self.exp_table
        mul = np.zeros((q, q), dtype=np.int64)
        li = log[1:]
        mul[1:, 1:] = e[(li[:, None] + li[None, :]) % (q - 1)]
        self.mul_table = mul

        tr = np.zeros(q, dtype=np.int64)
        x = np.arange(q)
        power = x.copy()
        for _ in range(r):
            tr = self.add_table[tr, power]
            power = self._pow_codes(power, p)
        self.trace_table = tr
        self.generator = FieldElem(self, gen_code)

    # -- encoding -----------------------------------------------------------

    def _decode(self, code):
        out = []
        for _ in range(self.r):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    def encode(self, coeffs):
        coeffs = list(coeffs) + [0] * (self.r - len(coeffs))
        return sum((c % self.p) * w for c, w in zip(coeffs, self._pow_p))

    def coeffs(self, code):
        return tuple(int(c) for c in self.coeff_table[code])

    def _pow_codes(self, codes, e):
        codes = np.asarray(codes)
        out = np.zeros_like(codes)
        nz = codes != 0
        out[nz] = self.exp_table[(self.log_table[codes[nz]] * e) % (self.q - 1)]
        if e == 0:
            out[:] = 1
        return out

    # -- element construction ---------------------------------------------

    def __call__(self, value):
        """Coerce an int (reduced into the prime subfield) or a coefficient
        sequence into a :class:`FieldElem`."""
        if isinstance(value, FieldElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElem(self, int(value) % self.p)
        return FieldElem(self, self.encode(value))

    def from_code(self, code):
        return FieldElem(self, int(code))

    @property
    def zero(self):
        return FieldElem(self, 0)

    @property
    def one(self):
        return FieldElem(self, 1)

    def elements(self):
        """All q elements in enumeration order."""
        return [self.from_code(self.encode(v)) for v in _vectors(self.p, self.r)]

    def units(self):
        """F_q^x as generator powers g^0, g^1, ..., g^(q-2)."""
        return [FieldElem(self, int(c)) for c in self.exp_table]

    def gen_power(self, k):
        return FieldElem(self, int(self.exp_table[k % (self.q - 1)]))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, r={self.r}, modulus={self.modulus})"

    def __reduce__(self):
        return (make_field, (self.p, self.r))


@dataclass(frozen=True, eq=False)
class FieldElem:
    field: FieldSpec
    code: int

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other.code
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self.code == o

    def __hash__(self):
        return hash((self.field.p, self.field.r, self.code))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, int(self.field.add_table[self.code, o]))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, int(self.field.neg_table[self.code]))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-FieldElem(self.field, o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, int(self.field.mul_table[self.code, o]))

    __rmul__ = __mul__

    def __pow__(self, e):
        f = self.field
        if self.code == 0:
            if e < 0:
                raise ZeroArgument("0 has no inverse")
            return FieldElem(f, 1 if e == 0 else 0)
        k = int(f.log_table[self.code]) * e % (f.q - 1)
        return FieldElem(f, int(f.exp_table[k]))

    def inverse(self):
        return self ** -1

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * FieldElem(self.field, o).inverse()

    def __bool__(self):
        return self.code != 0

    @property
    def coeffs(self):
        return self.field.coeffs(self.code)

    def __repr__(self):
        if self.field.r == 1:
            return f"F{self.field.p}({self.code})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
                terms.append(f"{c}{'*' + mono if mono else ''}" if c != 1 or not mono else mono)
        return f"F{self.field.q}({' + '.join(terms) or '0'})"


def _least_irreducible(p, r):
    for low in _vectors(p, r):
        m = list(low) + [1]
        if is_irreducible(m, p):
            return m
    raise AssertionError("an irreducible polynomial always exists")


def _least_generator(p, r, modulus):
    q = p ** r
    ell = prime_factors(q - 1)
    for v in _vectors(p, r):
        g = _trim(v)
        if not g:
            continue
        if q == 2:
            return list(v)
        if _poly_powmod(g, q - 1, modulus, p) != [1]:
            continue
        if all(_poly_powmod(g, (q - 1) // l, modulus, p) != [1] for l in ell):
            return list(v)
    raise AssertionError("F_q^x is cyclic")


@functools.lru_cache(maxsize=None)
def make_field(p, r=1):
    """Construct F_{p^r} with the least monic irreducible modulus and the least
    generator of F_q^x."""
    if p % 2 == 0 or not is_prime(p):
        raise NonOddPrime(f"p={p} is not an odd prime")
    if r < 1:
        raise BadDegree(f"extension degree r={r} must be >= 1")
    modulus = _least_irreducible(p, r)
    gen = _least_generator(p, r, modulus)
    return FieldSpec(p, r, modulus, gen)


def find_generator(spec):
    return spec.generator


def trace(x):
    """Absolute trace x + x^p + ... + x^(p^(r-1)), returned as an int in [0, p)."""
    code = int(x.field.trace_table[x.code])
    # the trace lies in the prime subfield, so only c_0 can be nonzero
    return code


def dlog(x):
    """Discrete log of ``x`` to the base of the field's fixed generator."""
    if x.code == 0:
        raise ZeroArgument("dlog(0) is undefined")
    return int(x.field.log_table[x.code])
