"""Morita's p-adic gamma function on integers and on Q cap Z_p.

``gamma_int`` is the literal defining product and serves as the reference.
``gamma_rational`` evaluates the same product at the least nonnegative integer
congruent to the argument mod p^M; to keep that affordable for p^M in the tens
of millions it reads from a per-(p, M) table of prefix products sampled every
``BLOCK`` integers, so each lookup costs at most ``BLOCK`` multiplications.
The table build is O(p^M) and is the scaling bottleneck of the package.
"""

import functools
import threading
from fractions import Fraction

import numpy as np

from .errors import NotPAdicInteger
from .padic import PadicNum

BLOCK = 1024
# products of two residues must fit in int64
_NUMPY_LIMIT = 3_037_000_499


def gamma_int(n, p, M):
    """Gamma_p(n) = (-1)^n * prod_{0<j<n, p!|j} j  mod p^M, with Gamma_p(0) = 1."""
    if n < 0:
        raise ValueError("gamma_int needs n >= 0")
    mod = p ** M
    acc = 1
    for j in range(1, n):
        if j % p:
            acc = acc * j % mod
    if n % 2:
        acc = -acc
    return PadicNum(p, M, acc)


def _block_products_numpy(p, mod, nblocks):
    out = np.empty(nblocks, dtype=np.int64)
    chunk = max(1, (1 << 20) // BLOCK)
    for start in range(0, nblocks, chunk):
        stop = min(nblocks, start + chunk)
        j = np.arange(start * BLOCK, stop * BLOCK, dtype=np.int64)
        j[j % p == 0] = 1
        j = j.reshape(stop - start, BLOCK)
        # pairwise tree reduction along the block axis
        while j.shape[1] > 1:
            j = (j[:, 0::2] * j[:, 1::2]) % mod
        out[start:stop] = j[:, 0]
    return [int(v) for v in out]


def _block_products_python(p, mod, nblocks):
    out = []
    for b in range(nblocks):
        acc = 1
        for j in range(b * BLOCK, (b + 1) * BLOCK):
            if j % p:
                acc = acc * j % mod
        out.append(acc)
    return out


class GammaTable:
    """Prefix products of the units below p^M, checkpointed every BLOCK."""

    def __init__(self, p, M):
        self.p = p
        self.M = M
        self.mod = p ** M
        nblocks = -(-self.mod // BLOCK)
        if self.mod < _NUMPY_LIMIT:
            blocks = _block_products_numpy(p, self.mod, nblocks)
        else:
            blocks = _block_products_python(p, self.mod, nblocks)
        # checkpoints[b] = prod of units j in [1, b*BLOCK)
        checkpoints = [1]
        acc = 1
        for b in blocks:
            acc = acc * b % self.mod
            checkpoints.append(acc)
        self.checkpoints = checkpoints
        self._memo = {}
        self._lock = threading.Lock()

    def prefix(self, n):
        b, rem = divmod(n, BLOCK)
        acc = self.checkpoints[b]
        p, mod = self.p, self.mod
        for j in range(b * BLOCK, b * BLOCK + rem):
            if j % p and j:
                acc = acc * j % mod
        return acc

    def __call__(self, n):
        """Gamma_p(n mod p^M) as a residue."""
        n %= self.mod
        hit = self._memo.get(n)
        if hit is not None:
            return hit
        if n == 0:
            val = 1
        else:
            val = self.prefix(n)
            if n % 2:
                val = (-val) % self.mod
        with self._lock:
            self._memo[n] = val
        return val


@functools.lru_cache(maxsize=None)
def gamma_table(p, M):
    return GammaTable(p, M)


def rational_to_residue(x, p, M):
    """The least nonnegative integer congruent to ``x`` mod p^M."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPAdicInteger(f"{x} is not in Z_{p}")
    mod = p ** M
    return x.numerator * pow(x.denominator, -1, mod) % mod


def gamma_rational(x, p, M):
    """Gamma_p(x) mod p^M for rational ``x`` with denominator prime to p."""
    n = rational_to_residue(x, p, M)
    return PadicNum(p, M, gamma_table(p, M)(n))


def gamma_residue(x, p, M):
    """Bare-int variant of :func:`gamma_rational` for inner loops."""
    return gamma_table(p, M)(rational_to_residue(x, p, M))
