import functools
from fractions import Fraction
from math import floor

import pytest

from diagcount.counting import count_projective
from diagcount.errors import BadPartition, NonIntegralValue, NotPAdicInteger, ZeroArgument
from diagcount.ffield import make_field
from diagcount.gfunction import GParams, build_b_list, default_precision, evaluate_G, theorem_params
from diagcount.padic import frac, omega_power, symmetric_lift
from diagcount.pgamma import gamma_int
from diagcount.surface import SurfaceSpec

F = Fraction


def test_b_list_examples():
    assert build_b_list(7, (1, 2, 1, 3)) == [0, 0, 0, F(1, 2), F(1, 3), F(2, 3)]
    assert build_b_list(4, (1, 1, 1, 1)) == [0, 0, 0]
    assert build_b_list(5, (2, 3)) == [0, F(1, 2), F(1, 3), F(2, 3)]
    with pytest.raises(BadPartition):
        build_b_list(5, (2, 2))
    with pytest.raises(BadPartition):
        build_b_list(3, (0, 3))


def _lift(value):
    assert value.is_rational()
    return symmetric_lift(value.coeffs[0], value.modulus)


def test_dwork_cubic_value():
    F5 = make_field(5, 1)
    v, audit = evaluate_G(GParams([F(1, 3), F(2, 3)], [0, 0], 1, F5), 6)
    assert _lift(v) == -1
    assert audit.min_exponent >= 0 and audit.guard == 0


@pytest.mark.parametrize("p,r", [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1), (5, 2)])
def test_quadratic_value_is_zero(p, r):
    K = make_field(p, r)
    v, _ = evaluate_G(GParams([F(1, 2)], [0], 1, K), 5)
    assert _lift(v) == 0


def test_q7_cubic_binary():
    K = make_field(7, 1)
    t = K(1) * K(2) ** 2
    v, _ = evaluate_G(GParams([F(1, 3), F(2, 3)], [0, F(1, 2)], t, K), 5)
    spec = SurfaceSpec(K, 3, (1, 2), K.one)
    assert _lift(v) == count_projective(spec) - 1


def _naive_G(top, bottom, t, K, M):
    """Literal transcription of the defining sum over prime fields, with the
    gamma values taken from the literal product instead of the table."""
    p, q = K.p, K.q
    assert K.r == 1
    n = len(top)
    mod = p ** M
    Mw = M
    modw = p ** Mw

    @functools.lru_cache(maxsize=None)
    def G(x):
        x = x % 1
        n_ = x.numerator * pow(x.denominator, -1, modw) % modw
        return gamma_int(n_, p, Mw).residue

    total = 0
    for a in range(q - 1):
        s = F(a, q - 1)
        term = (-1) ** (a * n) * omega_power(a, t, Mw).coeffs[0]
        e = 0
        for ak, bk in zip(top, bottom):
            e += -floor(frac(ak) - s) - floor(frac(-bk) + s)
            num = G(ak - s) * G(-bk + s)
            den = G(ak) * G(-bk)
            term = term * num * pow(den, -1, modw) % modw
        assert e >= 0
        total += term * (-p) ** e
    return -total * pow(q - 1, -1, modw) % mod


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_matches_naive_evaluator(p):
    K = make_field(p, 1)
    cases = [([F(1, 2)], [0]), ([F(1, 3), F(2, 3)], [0, 0]), ([F(1, 4), F(3, 4)], [0, F(1, 2)]),
             ([F(1, 3), F(2, 3)], [0, F(1, 2)])]
    for top, bottom in cases:
        for t in K.units()[:5]:
            v, audit = evaluate_G(GParams(top, bottom, t, K), 3)
            if audit.guard:
                continue
            assert v.coeffs[0] == _naive_G(top, bottom, t, K, 3)


@pytest.mark.parametrize("p,r,d,h", [(5, 1, 3, (1, 1, 1)), (3, 2, 5, (1, 2, 2)),
                                     (7, 1, 5, (2, 3)), (5, 2, 3, (1, 2))])
def test_precision_consistency(p, r, d, h):
    K = make_field(p, r)
    for lam in K.units()[:4]:
        params = theorem_params(SurfaceSpec(K, d, h, lam))
        M = default_precision(p, K.q, len(h))
        lo, _ = evaluate_G(params, M)
        hi, _ = evaluate_G(params, M + 2)
        assert hi.reduce(M) == lo
        assert lo.is_rational()


def test_guard_path():
    # r > 1 can give negative per-term exponents; this instance needs one guard digit
    K = make_field(3, 2)
    v, audit = evaluate_G(GParams([F(1, 2)], [F(1, 4)], 1, K), 4)
    assert audit.guard == 1 and audit.min_exponent == -1
    assert v.coeffs == (0, 0)


def test_non_integral_value_is_reported():
    K = make_field(3, 2)
    found = False
    for top, bottom in [([F(1, 2)], [F(1, 2)]), ([F(1, 4)], [F(3, 4)]), ([F(1, 8)], [F(5, 8)])]:
        for t in K.units():
            try:
                evaluate_G(GParams(top, bottom, t, K), 4)
            except NonIntegralValue:
                found = True
    assert found


def test_validation_errors():
    K = make_field(5, 1)
    with pytest.raises(NotPAdicInteger):
        GParams([F(1, 5)], [0], 1, K)
    with pytest.raises(ZeroArgument):
        GParams([F(1, 2)], [0], 0, K)
    with pytest.raises(ValueError):
        GParams([F(1, 2)], [0, 0], 1, K)


def test_default_precision():
    # 5^M > 4*25 first at M=3
    assert default_precision(5, 5, 3) == 5
