from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conftest import ratfuns, small_polys
from nevkit.errors import DegreeNotOne, IdenticallyZeroDenominator, PoleHit
from nevkit.poly import Poly
from nevkit.qmath import INF, NEG_INF, QC
from nevkit.ratfun import RatFun, reduce


def test_reduce_cancels_common_factor():
    r = reduce(Poly.from_roots([1, 2]), Poly.from_roots([2]))
    assert r.num == Poly.from_roots([1])
    assert r.den == Poly.const(1)
    assert [(rec.point, rec.mult) for rec in r.zeros()] == [(Fraction(1), 1)]
    assert [(rec.point, rec.mult) for rec in r.poles()] == [(INF, 1)]


def test_reduce_keeps_data():
    r = reduce(Poly.from_roots([1]), Poly.from_roots([2]))
    assert [(rec.point, rec.mult) for rec in r.zeros()] == [(Fraction(1), 1)]
    assert [(rec.point, rec.mult) for rec in r.poles()] == [(Fraction(2), 1)]
    assert r.gamma == 1


def test_reduce_multiplicities():
    r = RatFun.from_points([2, 2, 0], [1, 1, 3])
    assert [(rec.point, rec.mult) for rec in r.real_zeros] == \
        [(Fraction(0), 1), (Fraction(2), 2)]
    assert [(rec.point, rec.mult) for rec in r.real_poles] == \
        [(Fraction(1), 2), (Fraction(3), 1)]


def test_zero_denominator():
    with pytest.raises(IdenticallyZeroDenominator):
        reduce(Poly.const(1), Poly())


@settings(max_examples=50, deadline=None)
@given(ratfuns(3), small_polys(2, nonzero=True))
def test_reduce_common_multiple_is_identity(r, extra):
    assert reduce(r.num * extra, r.den * extra) == r


def test_sign_on_interval_examples():
    r = RatFun.from_points([1], [2])
    segs = r.sign_on_interval().segments
    assert [(s.lo, s.hi, s.sign) for s in segs] == [
        (NEG_INF, Fraction(1), 1), (Fraction(1), Fraction(2), -1),
        (Fraction(2), INF, 1)]

    sq = RatFun.from_points([1, 1], [])
    rep = sq.sign_on_interval()
    assert rep.is_nonnegative()
    assert rep.segments[0].touches == ((Fraction(1), "zero"),)

    r3 = RatFun.from_points([2, 2, 0], [1, 1, 3])
    neg = r3.sign_on_interval().negative_segments()
    assert len(neg) == 1
    seg = neg[0]
    assert (seg.lo, seg.hi) == (Fraction(0), Fraction(3))
    assert set(seg.touches) == {(Fraction(1), "pole"), (Fraction(2), "zero")}


@settings(max_examples=40, deadline=None)
@given(ratfuns(4))
def test_sign_report_matches_pointwise(r):
    assume(not r.num.is_zero)
    rep = r.sign_on_interval()
    for seg in rep.segments:
        x = r._sample_inside(seg.lo, seg.hi)
        assert r.sign_at(x) == seg.sign


def test_eta_count_examples():
    s = RatFun.from_points([1], [2])
    assert s.eta_count(1) == 1
    assert s.eta_count(2) == 0
    r3 = RatFun.from_points([2, 2, 0], [1, 1, 3])
    assert r3.eta_count(0) == 1


def test_eta_count_monotone_drop():
    r = RatFun.from_points([0, 2], [1, 5])
    counts = [r.eta_count(c) for c in
              [Fraction(-1), Fraction(0), Fraction(1), Fraction(2),
               Fraction(5), Fraction(6)]]
    assert counts == [4, 3, 2, 1, 0, 0]
    assert all(a >= b for a, b in zip(counts, counts[1:]))


def test_compose_mobius_examples():
    # identity-style: z composed with 1/lambda
    r = RatFun.x()
    tau = RatFun(Poly.const(1), Poly([0, 1]))
    assert r.compose_mobius(tau) == tau

    gamma, a, b = Fraction(2), Fraction(1), Fraction(3)
    rr = RatFun.from_points([a], [b], gamma)
    tau2 = RatFun(Poly([-1, (a + b) / 2]), Poly([0, 1]))
    lhs = rr.compose_mobius(tau2)
    rhs = RatFun.from_points([2 / (b - a)], [2 / (a - b)], -gamma)
    assert lhs == rhs

    r2 = RatFun.from_points([1, 2], [3])
    assert r2.compose_mobius(tau2).degree == r2.degree * tau2.degree


def test_compose_requires_degree_one():
    with pytest.raises(DegreeNotOne):
        RatFun.x().compose_mobius(RatFun.from_points([1, 2], []))


@settings(max_examples=40, deadline=None)
@given(ratfuns(3))
def test_compose_roundtrip(r):
    tau = RatFun(Poly([1, 2]), Poly([3, 1]))   # (2z+1)/(z+3)
    back = r.compose_mobius(tau).compose_mobius(tau.mobius_inverse())
    assert back == r


def test_eval_exact_and_pole():
    r = RatFun.from_points([1], [2])
    assert r.eval_q(0) == Fraction(1, 2)
    with pytest.raises(PoleHit):
        r.eval_q(2)
    z = QC.of(0, 1)
    val = r.eval_qc(z)
    assert complex(val) == pytest.approx(complex(-1 + 1j) / (-2 + 1j))


def test_ord_and_laurent():
    r = RatFun.from_points([2, 2, 0], [1, 1, 3])
    assert r.ord_at(Fraction(2)) == 2
    assert r.ord_at(Fraction(1)) == -2
    assert r.ord_at(Fraction(7)) == 0
    assert r.ord_at(INF) == 0
    # near 0: r ~ z * (0-2)^2/((0-1)^2 (0-3)) = -4/3 z
    assert r.laurent_lead(Fraction(0)) == Fraction(-4, 3)
    assert r.laurent_lead_sign(Fraction(0)) == -1


def test_irrational_roots_and_signs():
    # (z^2-2)/(z-5): zeros at +-sqrt(2), pole at 5
    r = RatFun(Poly([-2, 0, 1]), Poly([-5, 1]))
    zs = r.real_zeros
    assert len(zs) == 2 and all(rec.mult == 1 for rec in zs)
    assert r.eta_count(0) == 2    # sqrt(2) and the pole 5
    segs = r.sign_on_interval().segments
    assert [seg.sign for seg in segs] == [-1, 1, -1, 1]
