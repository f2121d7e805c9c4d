import random
from fractions import Fraction

import pytest

from nevkit.corpus import random_plain_pair, structured_plain_pair
from nevkit.errors import NotKacMember, SpectrumHit
from nevkit.nevfun import NevFun
from nevkit.poly import Poly
from nevkit.qmath import INF, QC
from nevkit.ratfun import RatFun
from nevkit.realize import (enumerate_zeros_poles, minimal_model,
                            model_spectral_check, model_weyl, transform_model)

MINUS_INV = NevFun.of(0, 0, [(0, 1)])
WORKED_Q = NevFun.of(Fraction(-3, 5), 0, [(2, 1)])
WORKED_R = RatFun.from_points([2, 2, 0], [1, 1, 3])

UHP = [QC.of(Fraction(n, 7), Fraction(d, 3))
       for n in range(-25, 25) for d in (1, 2)][:50]


def test_minimal_model_examples():
    m = minimal_model(MINUS_INV, INF)
    assert m.beta == 0 and m.sigma.atoms == ((Fraction(0), Fraction(1)),)
    assert m.omega_sq == ((Fraction(0), Fraction(1)),)
    assert m.eta == 0

    m2 = minimal_model(WORKED_Q, 0)
    assert m2.sigma.atoms == ((Fraction(2), Fraction(1)),)
    assert m2.omega_sq_at(2) == Fraction(1, 4)      # omega(2) = 1/2
    assert m2.eta == Fraction(-1, 2)

    m3 = minimal_model(NevFun.const(Fraction(5, 7)), 3)
    assert len(m3.sigma) == 0 and m3.eta == Fraction(5, 7)


def test_minimal_model_requires_membership():
    with pytest.raises(NotKacMember):
        minimal_model(MINUS_INV, 0)          # atom at the anchor
    with pytest.raises(NotKacMember):
        minimal_model(NevFun.of(0, 1), INF)  # mass at infinity


def test_model_weyl_examples():
    m = minimal_model(MINUS_INV, INF)
    z = QC.of(0, 1)
    assert model_weyl(m, z) == MINUS_INV.evaluate(z) == QC.of(0, 1)

    m2 = minimal_model(WORKED_Q, 0)
    assert model_weyl(m2, z) == WORKED_Q.evaluate(z)

    m3 = minimal_model(NevFun.const(Fraction(2)), 1)
    assert model_weyl(m3, QC.of(5, 3)) == QC.of(2)


def test_model_weyl_spectrum_hit():
    m = minimal_model(WORKED_Q, 0)
    with pytest.raises(SpectrumHit):
        model_weyl(m, Fraction(2))


def test_faithfulness_random():
    rng = random.Random(61)
    for _ in range(15):
        q, _r = random_plain_pair(rng)
        anchors = [INF] if q.beta == 0 else []
        gaps = [t - 1 for t in q.sigma.positions[:1]]
        anchors += [g for g in gaps if q.kac_membership(g)]
        for xi in anchors:
            m = minimal_model(q, xi)
            for z in UHP[:6]:
                assert model_weyl(m, z) == q.evaluate(z)


def test_enumeration_order():
    zs, ps = enumerate_zeros_poles(WORKED_R)
    assert zs == (Fraction(2), Fraction(2), Fraction(0))
    assert ps == (Fraction(1), Fraction(1), Fraction(3))
    zs2, ps2 = enumerate_zeros_poles(RatFun.x())
    assert zs2 == (Fraction(0),) and ps2 == (INF,)


def test_transform_worked_instance():
    m = minimal_model(WORKED_Q, 1)
    rep = transform_model(m, WORKED_R, WORKED_Q)
    assert rep.case == "both_finite"
    assert dict(rep.zetas) == {Fraction(1): Fraction(1, 2),
                               Fraction(3): Fraction(3, 2)}
    out = rep.model_out
    assert out.xi == 0 and out.eta == 0
    assert out.sigma.atoms == ((Fraction(1), Fraction(1)),
                               (Fraction(3), Fraction(1)))
    assert out.omega_sq_at(1) == Fraction(1, 2)
    assert out.omega_sq_at(3) == Fraction(1, 6)
    # the order-two zero removed the atom of the input measure at 2
    assert all(t != 2 for t in out.sigma.positions)
    for lam in UHP:
        assert model_weyl(out, lam) == \
            WORKED_R.eval_qc(lam) * WORKED_Q.evaluate(lam)
    assert model_spectral_check(m, out, WORKED_R)


def test_transform_pole_at_infinity():
    m = minimal_model(MINUS_INV, INF)
    rep = transform_model(m, RatFun.x(), MINUS_INV)
    assert rep.case == "bn_infinite"
    out = rep.model_out
    assert out.xi == 0 and out.eta == -1 and len(out.sigma) == 0
    assert out.beta == 0
    for lam in UHP[:5]:
        assert model_weyl(out, lam) == QC.of(-1)
    assert model_spectral_check(m, out, RatFun.x())


def test_transform_zero_at_infinity():
    # r = 1/z has its zero at infinity and its pole at 0; the worked q
    # satisfies q(0) < 0 with its zero and atom on the positive axis
    q = WORKED_Q
    r = RatFun(Poly.const(1), Poly([0, 1]))
    m = minimal_model(q, 0)
    rep = transform_model(m, r, q)
    assert rep.case == "an_infinite"
    out = rep.model_out
    assert out.xi is INF and out.beta == 0
    rq = r * q.to_ratfun()
    for lam in UHP[:8]:
        assert model_weyl(out, lam) == rq.eval_qc(lam)
    assert model_spectral_check(m, out, r)


def test_transform_random_pairs():
    rng = random.Random(67)
    done = 0
    while done < 10:
        q, r = random_plain_pair(rng, require_finite_pole=False)
        _zs, ps = enumerate_zeros_poles(r)
        if not ps:
            continue
        try:
            m = minimal_model(q, ps[0])
        except NotKacMember:
            continue
        rep = transform_model(m, r, q)
        rq = r * q.to_ratfun()
        for lam in UHP[:5]:
            assert model_weyl(rep.model_out, lam) == rq.eval_qc(lam)
        assert model_spectral_check(m, rep.model_out, r)
        assert all(z >= 0 for _b, z in rep.zetas)
        # minimality: no atom at any zero of r; atoms at poles only when the
        # acquired mass is positive
        zero_pts = {rec.point for rec in r.real_zeros if rec.is_rational}
        for t in rep.model_out.sigma.positions:
            assert t not in zero_pts
        for b, z in rep.zetas:
            if b is INF:
                continue
            has_atom = any(t == b for t in rep.model_out.sigma.positions)
            assert has_atom == (z > 0)
        done += 1


def test_transform_structured_pairs():
    rng = random.Random(71)
    for _ in range(4):
        q, r = structured_plain_pair(rng)
        _zs, ps = enumerate_zeros_poles(r)
        m = minimal_model(q, ps[0])
        rep = transform_model(m, r, q)
        rq = r * q.to_ratfun()
        for lam in UHP[:5]:
            assert model_weyl(rep.model_out, lam) == rq.eval_qc(lam)
        assert model_spectral_check(m, rep.model_out, r)
