"""Exact point counts on the diagonal family, by enumeration over F_q^n.

Inner loops run on integer field codes through the precomputed addition and
multiplication tables of :class:`~diagcount.ffield.FieldSpec`; the outermost
coordinate is iterated in Python and the remaining ``n-1`` are vectorized.
"""

import numpy as np

from .errors import DivisibilityFault


def _power_table(field, e):
    return field._pow_codes(np.arange(field.q), e)


def _grid(q, k):
    if k == 0:
        return []
    grids = np.meshgrid(*([np.arange(q)] * k), indexing="ij")
    return [g.ravel() for g in grids]


def _zero_mask(spec, xs):
    """Boolean mask of points in ``xs`` (list of code arrays) lying on D."""
    field = spec.field
    add, mul = field.add_table, field.mul_table
    powd = _power_table(field, spec.d)
    s = np.zeros_like(xs[0])
    for x in xs:
        s = add[s, powd[x]]
    coeff = (spec.lam * spec.d).code
    if coeff == 0:
        return s == 0
    mono = np.full_like(xs[0], coeff)
    for x, hi in zip(xs, spec.h):
        mono = mul[mono, _power_table(field, hi)[x]]
    return s == mono


def count_affine(spec):
    """N = #{x in F_q^n : x_1^d + ... + x_n^d = lambda*d*x_1^h_1...x_n^h_n}."""
    q = spec.q
    rest = _grid(q, spec.n - 1)
    total = 0
    for lead in range(q):
        xs = [np.full(q ** (spec.n - 1), lead, dtype=np.int64)] + rest
        total += int(_zero_mask(spec, xs).sum())
    return total


def count_projective_direct(spec):
    """Count points of P^(n-1) by enumerating representatives whose last
    nonzero coordinate is 1."""
    q, n = spec.q, spec.n
    total = 0
    for j in range(n):
        # coordinates 0..j-1 free, coordinate j = 1, the rest 0
        free = _grid(q, j)
        size = q ** j
        xs = list(free) if j else []
        xs.append(np.ones(size, dtype=np.int64))
        xs.extend(np.zeros(size, dtype=np.int64) for _ in range(n - j - 1))
        total += int(_zero_mask(spec, xs).sum())
    return total


def count_projective(spec, cross_check=True):
    """#D(F_q) = (N - 1)/(q - 1)."""
    N = count_affine(spec)
    num, rem = divmod(N - 1, spec.q - 1)
    if rem:
        raise DivisibilityFault(f"N-1={N - 1} is not divisible by q-1={spec.q - 1}")
    if cross_check:
        direct = count_projective_direct(spec)
        if direct != num:
            raise DivisibilityFault(
                f"affine route gives {num} projective points, direct enumeration {direct}"
            )
    return num


def fermat_count_convolution(d, n, field):
    """Solutions of x_1^d + ... + x_n^d = 0 via n-fold additive convolution of
    the histogram of d-th powers."""
    q = field.q
    hist = np.bincount(_power_table(field, d), minlength=q).astype(object)
    add = field.add_table
    acc = np.zeros(q, dtype=object)
    acc[0] = 1
    for _ in range(n):
        nxt = np.zeros(q, dtype=object)
        for v in range(q):
            if acc[v]:
                # nxt[v + w] += acc[v] * hist[w]
                np.add.at(nxt, add[v], acc[v] * hist)
        acc = nxt
    return int(acc[0])
