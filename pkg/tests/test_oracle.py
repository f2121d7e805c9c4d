import random
from fractions import Fraction

import numpy as np
import pytest

from nevkit.corpus import random_nevfun
from nevkit.nevfun import NevFun
from nevkit.oracle import (InversionConfig, build_kernel_sample, gap_detect,
                           negative_squares, stieltjes_invert)
from nevkit.poly import Poly
from nevkit.ratfun import RatFun

MINUS_INV = NevFun.of(0, 0, [(0, 1)])


def test_negative_squares_examples():
    assert negative_squares(RatFun(Poly([0, -1]), Poly.const(1))) == 1
    assert negative_squares(RatFun(Poly([0, 1]), Poly.const(1))) == 0
    assert negative_squares(RatFun(Poly([0, 0, 0, 1]), Poly.const(1))) == 1


def test_negative_squares_deterministic():
    f = RatFun(Poly([0, 0, 0, 1]), Poly.const(1))
    a = negative_squares(f, seed=9)
    b = negative_squares(f, seed=9)
    assert a == b


def test_gram_positive_for_representations():
    rng = random.Random(3)
    for _ in range(10):
        q = random_nevfun(rng)
        assert negative_squares(q) == 0


def test_kernel_sample_hermitian():
    f = RatFun(Poly([0, 0, 1]), Poly.const(1))
    pts = np.array([0.3 + 0.2j, -1.0 + 1.5j, 2.0 + 0.1j])
    ks = build_kernel_sample(lambda z: f.eval_np(z), pts)
    assert np.allclose(ks.gram, ks.gram.conj().T)


def test_inversion_single_atom():
    cfg = InversionConfig(interval=(Fraction(-1, 2), Fraction(1, 2)))
    res = stieltjes_invert(MINUS_INV, cfg)
    assert abs(res.value - 1.0) < 1e-3

    cfg2 = InversionConfig(interval=(Fraction(1), Fraction(2)))
    res2 = stieltjes_invert(MINUS_INV, cfg2)
    assert abs(res2.value) < 1e-3


def test_inversion_product_mass():
    # mass 1/2 at 1 for -z(z-2)/((z-1)(z-3))
    f = RatFun(Poly([0, 2, -1]), Poly.from_roots([1, 3]))
    cfg = InversionConfig(interval=(Fraction(9, 10), Fraction(11, 10)))
    res = stieltjes_invert(f, cfg)
    assert abs(res.value - 0.5) < 1e-3


def test_inversion_endpoint_halves():
    # atom exactly at an endpoint contributes half its weight
    cfg = InversionConfig(interval=(Fraction(0), Fraction(1)))
    res = stieltjes_invert(MINUS_INV, cfg)
    assert abs(res.value - 0.5) < 2e-3


def test_inversion_weighted():
    q = NevFun.of(0, 0, [(Fraction(1, 2), Fraction(3, 2))])
    phi = RatFun(Poly([1, 0, 1]), Poly.const(1))   # 1 + t^2
    cfg = InversionConfig(interval=(Fraction(0), Fraction(1)))
    res = stieltjes_invert(q, cfg, phi=phi)
    assert abs(res.value - 1.5 * 1.25) < 3e-3


def test_inversion_linearity():
    q1 = NevFun.of(0, 0, [(0, 1)])
    q2 = NevFun.of(0, 0, [(Fraction(1, 4), 2)])
    both = NevFun.of(0, 0, [(0, 1), (Fraction(1, 4), 2)])
    cfg = InversionConfig(interval=(Fraction(-1, 2), Fraction(1, 2)))
    r1 = stieltjes_invert(q1, cfg)
    r2 = stieltjes_invert(q2, cfg)
    r12 = stieltjes_invert(both, cfg)
    assert abs(r12.value - (r1.value + r2.value)) < 2e-3


def test_inversion_levels_cauchy():
    cfg = InversionConfig(interval=(Fraction(-1, 2), Fraction(1, 2)))
    res = stieltjes_invert(MINUS_INV, cfg)
    diffs = [abs(a - b) for a, b in zip(res.per_level, res.per_level[1:])]
    assert all(d2 < d1 + 1e-9 for d1, d2 in zip(diffs, diffs[1:]))


def test_gap_detect_examples():
    assert gap_detect(MINUS_INV, (1, 2)) is True
    assert gap_detect(MINUS_INV, (-1, 1)) is False
    worked = NevFun.of(Fraction(-3, 5), 0, [(2, 1)])
    assert gap_detect(worked, (-10, 2)) is True


def test_phi_pole_rejected():
    phi = RatFun(Poly.const(1), Poly([0, 1]))
    cfg = InversionConfig(interval=(Fraction(-1), Fraction(1)))
    with pytest.raises(ValueError):
        stieltjes_invert(MINUS_INV, cfg, phi=phi)
