import json
from fractions import Fraction

import pytest

from diagcount.errors import HypothesisViolated, OutOfRange
from diagcount.ffield import make_field
from diagcount.pgamma import gamma_rational
from diagcount.surface import SurfaceSpec
from diagcount.verify import (
    VerificationReport,
    check_affine_identity,
    check_congruence_claim,
    check_floor_identities,
    check_gamma_products,
    check_reflection,
    congruence_solutions,
    floor_identity_sides,
    gamma_product_sides,
    verify_theorem1,
    verify_theorem2,
)


def test_dwork_cubic_report():
    F = make_field(5, 1)
    rep = verify_theorem1(SurfaceSpec(F, 3, (1, 1, 1), F.one))
    assert rep.match and rep.lhs == 7 and rep.g_value == -1
    assert all(ok for _, ok in rep.hypothesis_checks)


def test_theorem1_over_f9():
    F = make_field(3, 2)
    rep = verify_theorem1(SurfaceSpec(F, 5, (1, 2, 2), F.generator))
    assert rep.match


def test_theorem1_rejects_gcd():
    F = make_field(7, 1)
    with pytest.raises(HypothesisViolated) as exc:
        verify_theorem1(SurfaceSpec(F, 3, (1, 1, 1), F.one))
    assert exc.value.condition == "gcd(d,q-1)=1"
    names = [n for n, ok in exc.value.checks if not ok]
    assert names == ["gcd(d,q-1)=1"]


@pytest.mark.parametrize("p,r", [(7, 1), (5, 2)])
def test_theorem2_examples(p, r):
    F = make_field(p, r)
    rep = verify_theorem2(F, 3, 1, F.one)
    assert rep.match


@pytest.mark.parametrize("p,r", [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)])
def test_theorem2_double_line(p, r):
    F = make_field(p, r)
    rep = verify_theorem2(F, 2, 1, F.one)
    assert rep.lhs == 1 and rep.g_value == 0 and rep.match


def test_theorem2_rejects():
    F = make_field(5, 1)
    with pytest.raises(HypothesisViolated):
        verify_theorem2(F, 4, 2, F.one)
    with pytest.raises(HypothesisViolated) as exc:
        verify_theorem2(F, 6, 1, F.one)
    assert exc.value.condition == "p!|d*k*(d-k)"


def test_report_round_trip_and_determinism():
    F = make_field(5, 1)
    spec = SurfaceSpec(F, 3, (1, 1, 1), F(2))
    rep = verify_theorem1(spec)
    data = json.loads(json.dumps(rep.to_dict(timings=False)))
    back = VerificationReport.from_dict(data)
    assert back.to_dict(timings=False) == rep.to_dict(timings=False)
    assert back.rhs_residue == rep.rhs_residue
    assert verify_theorem1(spec).to_dict(timings=False) == rep.to_dict(timings=False)


def test_floor_examples():
    assert floor_identity_sides("d-lemma", 3, 1, 1, 0, d=4) == (-2, -2)
    assert check_floor_identities("d-lemma", 3, 1, 1, 0, d=4)
    assert floor_identity_sides("l-lemma", 5, 1, 3, 0, l=3) == (2, 2)
    assert check_floor_identities("l-lemma", 5, 1, 3, 0, l=3)
    # gcd(4, 3*2) != 1, so the combined lemma's hypothesis is not met here
    assert floor_identity_sides("combined", 3, 1, 1, 0, d=4, h=(1, 3)) == (-1, -1)
    with pytest.raises(HypothesisViolated):
        check_floor_identities("combined", 3, 1, 1, 0, d=4, h=(1, 3))


def test_floor_rejections():
    with pytest.raises(HypothesisViolated):
        check_floor_identities("d-lemma", 3, 1, 0, 0, d=4)
    with pytest.raises(HypothesisViolated):
        check_floor_identities("l-lemma", 5, 1, 1, 0, l=5)
    with pytest.raises(HypothesisViolated):
        check_floor_identities("d-lemma", 3, 2, 1, 2, d=4)


def test_gamma_product_examples():
    F = make_field(5, 1)
    for a in range(4):
        for variant in ("negative", "positive"):
            assert check_gamma_products(variant, F, 1, a, 6)
    lhs, rhs = gamma_product_sides("positive", F, 2, 1, 6)
    assert lhs == rhs == 1
    with pytest.raises(HypothesisViolated):
        check_gamma_products("positive", make_field(3, 1), 3, 1, 6)


def test_reflection_examples():
    F = make_field(5, 1)
    assert check_reflection(F, 2, 6)
    g = gamma_rational(Fraction(1, 2), 5, 6)
    assert (g * g).lift() == -1
    F9 = make_field(3, 2)
    assert all(check_reflection(F9, a, 6) for a in range(1, 8))
    with pytest.raises(OutOfRange):
        check_reflection(F, 0, 6)


def test_congruence_claim():
    F7 = make_field(7, 1)
    sols = congruence_solutions(3, 1, 7)
    assert sols == {(a, 2 * a % 6) for a in range(6)}
    assert check_congruence_claim(3, 1, F7)
    assert congruence_solutions(2, 1, 7) == {(a, a) for a in range(6)}
    with pytest.raises(HypothesisViolated):
        check_congruence_claim(4, 2, F7)


def test_affine_identity():
    F5 = make_field(5, 1)
    assert check_affine_identity(SurfaceSpec(F5, 3, (1, 1, 1), F5.one))
    assert check_affine_identity(SurfaceSpec(F5, 3, (1, 2), F5(3)))
    F7 = make_field(7, 1)
    assert check_affine_identity(SurfaceSpec(F7, 5, (2, 3), F7.one))


@pytest.mark.parametrize("p,d,h", [(5, 2, (1, 1)), (7, 3, (1, 2))])
def test_affine_identity_needs_gcd(p, d, h):
    F = make_field(p, 1)
    with pytest.raises(HypothesisViolated) as exc:
        check_affine_identity(SurfaceSpec(F, d, h, F.one))
    assert exc.value.condition == "gcd(d,q-1)=1"
