"""Fast self-contained invariant suite behind the selftest verb.

A curated subset of the full test suite: the worked instances plus a small
seeded corpus, each check printing one pass/fail line.  Runs in a few
seconds; the full property suite lives in the pytest tree.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import (chain_factorize, check_N00, interlacing_factorize,
                       membership, negative_closed_pieces, pieces_disjoint,
                       product_factorization)
from .gnev import GenNevFun, canonical_pair, canonical_rational
from .nevfun import NevFun, is_nevanlinna, nevfun_from_ratfun
from .oracle import negative_squares
from .poly import Poly
from .qmath import QC
from .ratfun import RatFun
from .realize import (minimal_model, model_spectral_check, model_weyl,
                      transform_model)


def worked_instance():
    """The running example: q = (z-1)/(2-z), r = (z-2)^2 z /((z-1)^2 (z-3))."""
    q = NevFun.of(Fraction(-3, 5), 0, [(2, 1)])
    r = RatFun.from_points([2, 2, 0], [1, 1, 3])
    return q, r


def run_selftest(seed: int = 0):
    rng = random.Random(seed)
    lines = []
    ok_all = True

    def check(name, fn):
        nonlocal ok_all
        try:
            fn()
            lines.append(f"PASS {name}")
        except Exception as exc:  # noqa: BLE001 - report and continue
            ok_all = False
            lines.append(f"FAIL {name}: {type(exc).__name__}: {exc}")

    q, r = worked_instance()

    def chk_canonical():
        psi, s0, _ = canonical_rational(r)
        assert psi * s0 == r
        assert s0 == RatFun.from_points([3], [0])
        assert is_nevanlinna(s0)
    check("canonical factorization of the worked multiplier", chk_canonical)

    def chk_product():
        w = product_factorization(GenNevFun.from_nevfun(q), r)
        assert w.phi.is_constant and w.kappa == 0
        expect = RatFun(Poly([0, 2, -1]), Poly.from_roots([1, 3]))
        assert w.q0.to_ratfun() == expect
    check("product factorization reproduces the worked witness", chk_product)

    def chk_chain():
        chain = chain_factorize(q, r)
        fs = [RatFun.from_points([2], [1]), RatFun.from_points([0], [3]),
              RatFun.from_points([2], [1])]
        assert list(chain.factors) == fs
    check("worked chain order", chk_chain)

    def chk_realize():
        m = minimal_model(q, 1)
        rep = transform_model(m, r, q)
        assert dict((b, z) for b, z in rep.zetas) == \
            {Fraction(1): Fraction(1, 2), Fraction(3): Fraction(3, 2)}
        lam = QC.of(Fraction(1, 3), Fraction(2, 5))
        lhs = model_weyl(rep.model_out, lam)
        rhs = r.eval_qc(lam) * q.evaluate(lam)
        assert lhs == rhs
        assert model_spectral_check(m, rep.model_out, r)
    check("worked model transfer", chk_realize)

    def chk_oracle():
        assert negative_squares(RatFun(Poly([0, -1]), Poly.const(1))) == 1
        assert negative_squares(RatFun(Poly([0, 1]), Poly.const(1))) == 0
        assert negative_squares(RatFun(Poly([0, 0, 0, 1]), Poly.const(1))) == 1
    check("negative-squares counts on cubics and lines", chk_oracle)

    def chk_corpus():
        from .corpus import random_symmetric_ratfun
        for _ in range(12):
            f = random_symmetric_ratfun(rng, max_degree=6)
            g = canonical_pair(f)
            assert negative_squares(f, seed=seed) == g.kappa
    check("oracle agreement on a seeded corpus", chk_corpus)

    def chk_interlace():
        from .corpus import random_interlacing_simple
        for _ in range(10):
            s = random_interlacing_simple(rng)
            fs = interlacing_factorize(s)
            prod = RatFun.const(1)
            for f in fs:
                prod = prod * f
            assert prod == s
            pieces = [negative_closed_pieces(f) for f in fs]
            for i in range(len(pieces)):
                for j in range(i + 1, len(pieces)):
                    assert pieces_disjoint(pieces[i], pieces[j])
    check("interlacing splits with disjoint negative sets", chk_interlace)

    def chk_pairs():
        from .corpus import random_plain_pair
        for _ in range(6):
            qq, rr = random_plain_pair(rng)
            assert check_N00(qq, rr).ok
            chain = chain_factorize(qq, rr)
            assert len(chain.partial_certificates) == len(chain.factors)
    check("generated plain pairs admit certified chains", chk_pairs)

    def chk_membership():
        g = GenNevFun.from_nevfun(nevfun_from_ratfun(
            RatFun(Poly.const(1), Poly([-1, -1]))))
        rep = membership(g, RatFun.x())
        assert rep.member and rep.kappa_tilde == 1
    check("membership flags the exceptional-pole mechanism", chk_membership)

    return ok_all, lines
