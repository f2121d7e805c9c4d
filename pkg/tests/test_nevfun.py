from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conftest import nevfuns, upper_half_points
from nevkit.errors import GapViolated, NotNevanlinna, PoleHit
from nevkit.nevfun import (AtomicMeasure, NevFun, is_nevanlinna,
                           nevfun_from_ratfun)
from nevkit.poly import Poly
from nevkit.qmath import INF, NEG_INF, QC
from nevkit.ratfun import RatFun

MINUS_INV = NevFun.of(0, 0, [(0, 1)])            # -1/z
LINE = NevFun.of(0, 1)                            # z
WORKED = NevFun.of(Fraction(-3, 5), 0, [(2, 1)])  # (z-1)/(2-z)


def test_evaluate_examples():
    assert MINUS_INV.evaluate(QC.of(0, 1)) == QC.of(0, 1)   # -1/i = i
    assert LINE.evaluate(QC.of(2, 3)) == QC.of(2, 3)
    assert WORKED.evaluate(0) == Fraction(-1, 2)
    with pytest.raises(PoleHit):
        WORKED.evaluate(2)


def test_to_ratfun_closed_form():
    assert WORKED.to_ratfun() == RatFun(Poly([1, -1]), Poly([-2, 1]))


def test_limit_examples():
    assert MINUS_INV.limit_at(0, "residue").value == 1
    assert LINE.limit_at(INF, "residue").value == 1
    assert WORKED.limit_at(NEG_INF, "value").value == -1


def test_limit_slope_forms():
    q = NevFun.of(0, Fraction(1, 2), [(1, 2), (-1, 3)])
    # at a point where q vanishes the slope limit is the derivative formula
    c = Fraction(0)
    val = q.evaluate(c)
    q0 = NevFun.of(q.alpha - val, q.beta, list(q.sigma))
    lim = q0.limit_at(c, "slope")
    assert lim.value == Fraction(1, 2) + 2 + 3
    # divergent case
    assert q.limit_at(Fraction(1, 3), "slope").kind == "inf"
    # slope at infinity recovers the negated total mass once the value is 0
    flat = NevFun.of(0, 0, [(0, 2)])
    assert flat.limit_at(INF, "slope").value == -2


def test_value_sides_at_atom():
    assert MINUS_INV.limit_at(0, "value", side="-").kind == "+inf"
    assert MINUS_INV.limit_at(0, "value", side="+").kind == "-inf"
    assert LINE.limit_at(INF, "value", side="-").kind == "-inf"
    assert LINE.limit_at(INF, "value", side="+").kind == "+inf"


def test_kac_examples():
    assert MINUS_INV.kac_membership(INF) is True
    assert MINUS_INV.kac_membership(0) is False
    assert LINE.kac_membership(INF) is False


def test_gap_characterize_examples():
    rep = WORKED.gap_characterize(-1, 2, "bounded_gap")
    assert rep.gap_holds and not rep.condition_holds
    assert rep.eta.kind == "+inf"

    rep2 = MINUS_INV.gap_characterize(0, shape="left_ray")
    assert rep2.condition_holds and rep2.eta.value == 0

    q3 = NevFun.of(Fraction(1, 2), 0, [(1, 1)])
    rep3 = q3.gap_characterize(2, 3, "bounded_gap")
    assert rep3.condition_holds
    assert rep3.eta.value == q3.evaluate(3)
    # measure transform w*(t-c)/(t-d) at t=1: 1*(1-2)/(1-3) = 1/2
    assert rep3.transformed_measure.atoms == ((Fraction(1), Fraction(1, 2)),)
    assert rep3.q_tilde.sigma.atoms == ((Fraction(1), Fraction(1, 2)),)


def test_gap_violated():
    with pytest.raises(GapViolated) as exc:
        WORKED.gap_characterize(0, 3, "bounded_gap")
    assert exc.value.atoms == (Fraction(2),)


def test_gap_identity_bounded():
    # the representative reproduces the function: Q = eta + (z-d)/(z-c) Qt
    q = NevFun.of(Fraction(1, 2), 0, [(1, 1), (5, 2)])
    c, d = Fraction(2), Fraction(4)
    rep = q.gap_characterize(c, d, "bounded_gap")
    assert rep.condition_holds
    lhs = q.to_ratfun()
    rhs = RatFun.const(rep.eta.value) + \
        RatFun(Poly([-d, 1]), Poly([-c, 1])) * rep.q_tilde.to_ratfun()
    assert lhs == rhs


def test_gap_identity_complement():
    q = NevFun.of(0, 0, [(1, 1), (2, 3)])
    rep = q.gap_characterize(0, 3, "complement_gap")
    assert rep.condition_holds
    lhs = q.to_ratfun()
    rhs = RatFun.const(rep.eta.value) + \
        RatFun(Poly([3, -1]), Poly([0, 1])) * rep.q_tilde.to_ratfun()
    assert lhs == rhs


def test_corollary_products_examples():
    res = MINUS_INV.corollary_products(0)
    assert res.results == (True, False)

    res2 = WORKED.corollary_products(1, 2)
    assert res2.results[1] is True     # (z-d)/(z-c) form

    res3 = LINE.corollary_products(0)
    assert res3.results == (False, True)


@settings(max_examples=40, deadline=None)
@given(nevfuns(3))
def test_corollary_products_match_direct_check(q):
    assume(not (q.is_constant and q.alpha == 0))
    pos = q.sigma.positions
    c = (min(pos) - 2) if pos else Fraction(-1)
    d = (max(pos) + 2) if pos else Fraction(1)
    res = q.corollary_products(c, d)
    q_rat = q.to_ratfun()
    f1 = RatFun(Poly([-c, 1]), Poly([-d, 1])) * q_rat
    f2 = RatFun(Poly([-d, 1]), Poly([-c, 1])) * q_rat
    f3 = RatFun(Poly([-c, 1]), Poly([d, -1])) * q_rat
    f4 = RatFun(Poly([-d, 1]), Poly([c, -1])) * q_rat
    assert res.results == tuple(is_nevanlinna(f) for f in (f1, f2, f3, f4))
    ray = q.corollary_products(c)
    g1 = RatFun(Poly([-c, 1]), Poly.const(1)) * q_rat
    g2 = RatFun(Poly.const(1), Poly([-c, 1])) * q_rat
    assert ray.results == (is_nevanlinna(g1), is_nevanlinna(g2))


@settings(max_examples=50, deadline=None)
@given(nevfuns(4), upper_half_points())
def test_symmetry_and_herglotz(q, z):
    v = q.evaluate(z)
    assert q.evaluate(z.conj()) == v.conj()
    assert v.im >= 0
    if not q.is_constant:
        assert v.im > 0


@settings(max_examples=30, deadline=None)
@given(nevfuns(4))
def test_monotone_on_gaps(q):
    assume(not q.is_constant)
    for lo, hi in q.spectral_gaps():
        a = (lo + 1) if lo is not NEG_INF else \
            ((hi - 3) if hi is not INF else Fraction(0))
        samples = [a + Fraction(k, 37) for k in range(6)]
        if hi is not INF:
            samples = [x for x in samples if x < hi]
        if lo is not NEG_INF:
            samples = [x for x in samples if x > lo]
        vals = [q.evaluate(x) for x in samples]
        assert all(u < v for u, v in zip(vals, vals[1:]))


@settings(max_examples=40, deadline=None)
@given(nevfuns(4))
def test_residue_equals_weight(q):
    for t, w in q.sigma:
        assert q.limit_at(t, "residue").value == w


@settings(max_examples=40, deadline=None)
@given(nevfuns(4))
def test_roundtrip_through_ratfun(q):
    assert nevfun_from_ratfun(q.to_ratfun()) == q


def test_is_nevanlinna_negatives():
    assert not is_nevanlinna(RatFun(Poly([0, -1]), Poly.const(1)))      # -z
    assert not is_nevanlinna(RatFun(Poly([0, 0, 1]), Poly.const(1)))    # z^2
    assert not is_nevanlinna(RatFun(Poly.const(1), Poly([0, 1])))       # 1/z
    assert not is_nevanlinna(RatFun(Poly.const(1), Poly([1, 0, 1])))    # cplx poles
    assert is_nevanlinna(RatFun(Poly([5]), Poly.const(1)))              # const
    with pytest.raises(NotNevanlinna):
        nevfun_from_ratfun(RatFun(Poly([0, -1]), Poly.const(1)))


def test_is_nevanlinna_irrational_poles():
    # -(z^2-2)' style: w/(sqrt2 - z) + w/(-sqrt2 - z) = -2z/(z^2-2)
    f = RatFun(Poly([0, -2]), Poly([-2, 0, 1]))
    assert is_nevanlinna(f)
    from nevkit.errors import NotRationalAtoms
    with pytest.raises(NotRationalAtoms):
        nevfun_from_ratfun(f)


def test_atomic_measure_validation():
    with pytest.raises(ValueError):
        AtomicMeasure.of([(1, 1), (1, 2)])
    with pytest.raises(ValueError):
        AtomicMeasure.of([(1, -1)])
