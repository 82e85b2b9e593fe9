from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from diagcount.errors import NotAUnit, ZeroArgument
from diagcount.ffield import make_field
from diagcount.padic import (
    PadicNum,
    UnramNum,
    frac_floor,
    omega_power,
    padic_inverse,
    symmetric_lift,
    teichmuller,
)


@pytest.mark.parametrize(
    "x,expected",
    [(Fraction(-1, 3), (Fraction(2, 3), -1)), (Fraction(5, 3), (Fraction(2, 3), 1)), (0, (0, 0))],
)
def test_frac_floor_examples(x, expected):
    assert frac_floor(x) == expected


@given(st.fractions())
def test_frac_floor_property(x):
    f, fl = frac_floor(x)
    assert x == fl + f
    assert 0 <= f < 1


def test_padic_inverse_examples():
    assert padic_inverse(PadicNum(5, 3, 4)).residue == 94
    assert padic_inverse(PadicNum(5, 3, 1)).residue == 1
    with pytest.raises(NotAUnit):
        padic_inverse(PadicNum(5, 3, 5))


@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 8), st.integers())
def test_padic_inverse_property(p, M, n):
    x = PadicNum(p, M, n)
    if n % p == 0:
        return
    assert (x * padic_inverse(x)).residue == 1


def test_symmetric_lift():
    assert symmetric_lift(124, 125) == -1
    assert symmetric_lift(62, 125) == 62
    assert symmetric_lift(63, 125) == -62


def _teichmuller_brute(a, p, M):
    # the unique solution of x^(p-1) = 1 mod p^M with x = a mod p
    mod = p ** M
    sols = [x for x in range(a % p, mod, p) if pow(x, p - 1, mod) == 1]
    assert len(sols) == 1
    return sols[0]


def test_teichmuller_examples():
    F = make_field(5, 1)
    assert teichmuller(F.one, 3).coeffs == (1,)
    assert teichmuller(F(2), 3).coeffs == (57,)
    assert teichmuller(F(-1), 3).coeffs == (124,)
    with pytest.raises(ZeroArgument):
        teichmuller(F.zero, 3)


@pytest.mark.parametrize("p,M", [(3, 5), (5, 4), (7, 3), (11, 3)])
def test_teichmuller_matches_brute_force(p, M):
    F = make_field(p, 1)
    for a in range(1, p):
        assert teichmuller(F(a), M).coeffs == (_teichmuller_brute(a, p, M),)


@pytest.mark.parametrize("p,r", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2), (3, 3)])
def test_teichmuller_properties(p, r):
    F = make_field(p, r)
    M = 4
    lifts = {}
    for x in F.units():
        w = teichmuller(x, M)
        assert w ** (F.q - 1) == 1
        assert w.residue_field_elem() == x
        assert teichmuller(x, M + 2).reduce(M) == w
        lifts[x.code] = w
    # pairwise distinct mod p
    assert len({w.residue_field_elem().code for w in lifts.values()}) == F.q - 1
    if F.q <= 49:
        units = F.units()
        for x in units:
            for y in units:
                assert lifts[(x * y).code] == lifts[x.code] * lifts[y.code]


def test_omega_power_examples():
    F = make_field(7, 1)
    for t in F.units():
        assert omega_power(0, t, 4) == 1
    for a in range(10):
        assert omega_power(a, F.one, 4) == 1
    assert omega_power(2, F(-1), 4) == 1
    with pytest.raises(ZeroArgument):
        omega_power(1, F.zero, 4)


def test_omega_power_is_inverse_power():
    F = make_field(5, 2)
    for t in F.units()[:8]:
        for a in range(0, 30, 7):
            assert omega_power(a, t, 3) * teichmuller(t, 3) ** (a % (F.q - 1)) == 1


def test_unram_arithmetic_reduces_to_field():
    F = make_field(3, 2)
    M = 3
    for x in F.elements():
        for y in F.elements():
            X = UnramNum(F, M, x.coeffs)
            Y = UnramNum(F, M, y.coeffs)
            assert (X * Y).residue_field_elem() == x * y
            assert (X + Y).residue_field_elem() == x + y
