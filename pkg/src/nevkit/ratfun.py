"""Exact algebra of symmetric rational functions over the reals.

A :class:`RatFun` is a reduced pair of Fraction-coefficient polynomials with
bookkeeping for its zeros and poles on the extended real line: rational
points are exact, irrational real points are certified isolating intervals,
and conjugate-pair blocks are tracked by count only (they never take part in
sign decisions).  The point at infinity is first class: the zero or pole
multiplicity there is the degree imbalance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import DegreeNotOne, IdenticallyZeroDenominator, PoleHit
from .poly import (Poly, RealAlg, RPoint, compose_fractional, count_real_roots,
                   gcd, irreducible_factors, isolate_real_roots, point_cmp,
                   rat, rational_between, rational_roots_squarefree,
                   squarefree_decomposition)
from .qmath import INF, NEG_INF, QC, ExtSymbol, fmt_rat

Point = Union[Fraction, RealAlg, ExtSymbol]


@dataclass(frozen=True)
class RootRecord:
    """A real or infinite zero/pole with its exact multiplicity."""

    point: Point
    mult: int

    @property
    def parity(self) -> str:
        return "odd" if self.mult % 2 else "even"

    @property
    def is_rational(self) -> bool:
        return isinstance(self.point, Fraction)


@dataclass(frozen=True)
class ConjugatePairBlock:
    """Count of conjugate nonreal root pairs sharing one squarefree factor.

    ``factor`` also contains the factor's irrational real roots, if any, so
    it is only an exact polynomial witness of the pairs when
    ``real_roots == 0``.
    """

    factor: Poly
    pairs: int
    mult: int
    real_roots: int


class _Roots:
    __slots__ = ("real", "blocks")

    def __init__(self, real, blocks):
        self.real = real      # list[RootRecord], finite, ascending
        self.blocks = blocks  # list[ConjugatePairBlock]


def _analyze(p: Poly) -> _Roots:
    real: list[RootRecord] = []
    blocks: list[ConjugatePairBlock] = []
    for g, m in squarefree_decomposition(p):
        rationals = rational_roots_squarefree(g)
        res = g
        for r in rationals:
            real.append(RootRecord(r, m))
            res = res // Poly([-r, 1])
        if res.degree > 0:
            # classify per irreducible factor so pure conjugate-pair content
            # stays an exact polynomial witness
            for h in irreducible_factors(res):
                n_real = count_real_roots(h)
                for lo, hi in isolate_real_roots(h):
                    real.append(RootRecord(RealAlg(h, lo, hi), m))
                pairs = (h.degree - n_real) // 2
                if pairs:
                    blocks.append(ConjugatePairBlock(h, pairs, m, n_real))
    real.sort(key=lambda rec: rec.point if isinstance(rec.point, Fraction)
              else rec.point.approx())
    # isolating intervals were refined well below unit width, so the sort by
    # approximation above is exact for distinct roots of a reduced pair
    return _Roots(real, blocks)


@dataclass(frozen=True)
class SignSegment:
    """Maximal open interval of constant nonzero sign.

    ``touches`` lists the even-order zeros and poles strictly inside, where
    the function vanishes or blows up without changing sign.
    """

    lo: object  # Fraction | RealAlg | NEG_INF
    hi: object  # Fraction | RealAlg | INF
    sign: int
    touches: tuple = ()


@dataclass(frozen=True)
class SignReport:
    segments: tuple[SignSegment, ...]

    def is_nonnegative(self) -> bool:
        return all(s.sign > 0 for s in self.segments)

    def negative_segments(self) -> list[SignSegment]:
        return [s for s in self.segments if s.sign < 0]


class RatFun:
    """Reduced rational function; den is monic and coprime with num."""

    __slots__ = ("num", "den", "_roots_num", "_roots_den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero:
            raise IdenticallyZeroDenominator("denominator is identically zero")
        g = gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.lead
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_roots_num", None)
        object.__setattr__(self, "_roots_den", None)

    def __setattr__(self, *a):
        raise AttributeError("RatFun is immutable")

    # -- constructors ----------------------------------------------------------
    @staticmethod
    def from_coeffs(num_coeffs: Sequence, den_coeffs: Sequence) -> "RatFun":
        return RatFun(Poly(num_coeffs), Poly(den_coeffs))

    @staticmethod
    def const(x) -> "RatFun":
        return RatFun(Poly.const(x), Poly.const(1))

    @staticmethod
    def x() -> "RatFun":
        return RatFun(Poly.x(), Poly.const(1))

    @staticmethod
    def from_points(zeros: Sequence, poles: Sequence, gamma=1) -> "RatFun":
        """gamma * prod (z - zero) / prod (z - pole), all data rational."""
        return RatFun(Poly.from_roots(zeros, lead=rat(gamma)),
                      Poly.from_roots(poles))

    @staticmethod
    def degree_one(zero=None, pole=None, gamma=1) -> "RatFun":
        """gamma*(z-zero)/(z-pole) with None meaning the point at infinity."""
        zs = [] if zero is None else [zero]
        ps = [] if pole is None else [pole]
        r = RatFun.from_points(zs, ps, gamma)
        if r.degree != 1:
            raise DegreeNotOne("zero and pole coincide")
        return r

    # -- basic queries -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    @property
    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def gamma(self) -> Fraction:
        """Leading-coefficient ratio after reduction (den is monic)."""
        return self.num.lead

    def __eq__(self, other):
        return (isinstance(other, RatFun) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({list(map(str, self.num.c))} / {list(map(str, self.den.c))})"

    # -- arithmetic ----------------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, RatFun):
            return RatFun(self.num * other.num, self.den * other.den)
        return RatFun(self.num * rat(other), self.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, RatFun):
            return RatFun(self.num * other.den, self.den * other.num)
        return RatFun(self.num, self.den * rat(other))

    def __rtruediv__(self, other):
        return RatFun.const(other) / self

    def __add__(self, other):
        o = other if isinstance(other, RatFun) else RatFun.const(other)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __sub__(self, other):
        o = other if isinstance(other, RatFun) else RatFun.const(other)
        return self + (-o)

    def __rsub__(self, other):
        return RatFun.const(other) + (-self)

    def __pow__(self, n: int):
        if n < 0:
            return RatFun(self.den, self.num) ** (-n)
        return RatFun(self.num ** n, self.den ** n)

    def inverse(self) -> "RatFun":
        return RatFun(self.den, self.num)

    def deriv(self) -> "RatFun":
        return RatFun(self.num.deriv() * self.den - self.num * self.den.deriv(),
                      self.den * self.den)

    # -- evaluation ------------------------------------------------------------------
    def __call__(self, z):
        if isinstance(z, QC):
            return self.eval_qc(z)
        if isinstance(z, complex):
            return self.eval_c(z)
        if isinstance(z, np.ndarray):
            return self.eval_np(z)
        return self.eval_q(z)

    def eval_q(self, z) -> Fraction:
        z = rat(z)
        d = self.den.eval_q(z)
        if d == 0:
            raise PoleHit(f"evaluation at pole {fmt_rat(z)}")
        return self.num.eval_q(z) / d

    def eval_qc(self, z: QC) -> QC:
        d = self.den.eval_qc(z)
        if d.abs2() == 0:
            raise PoleHit("evaluation at complex pole")
        return self.num.eval_qc(z) / d

    def eval_c(self, z: complex) -> complex:
        return self.num.eval_c(z) / self.den.eval_c(z)

    def eval_np(self, z: np.ndarray) -> np.ndarray:
        nc = self.num.float_coeffs() or [0.0]
        dc = self.den.float_coeffs()
        return (np.polynomial.polynomial.polyval(z, nc)
                / np.polynomial.polynomial.polyval(z, dc))

    # -- root bookkeeping -------------------------------------------------------------
    def _num_roots(self) -> _Roots:
        if self._roots_num is None:
            object.__setattr__(self, "_roots_num", _analyze(self.num))
        return self._roots_num

    def _den_roots(self) -> _Roots:
        if self._roots_den is None:
            object.__setattr__(self, "_roots_den", _analyze(self.den))
        return self._roots_den

    @property
    def real_zeros(self) -> list[RootRecord]:
        return list(self._num_roots().real)

    @property
    def real_poles(self) -> list[RootRecord]:
        return list(self._den_roots().real)

    @property
    def complex_zero_blocks(self) -> list[ConjugatePairBlock]:
        return list(self._num_roots().blocks)

    @property
    def complex_pole_blocks(self) -> list[ConjugatePairBlock]:
        return list(self._den_roots().blocks)

    def ord_at_inf(self) -> int:
        """Positive for a zero at infinity, negative for a pole."""
        return self.den.degree - self.num.degree

    def zeros(self, include_inf: bool = True) -> list[RootRecord]:
        out = self.real_zeros
        m = self.ord_at_inf()
        if include_inf and m > 0:
            out.append(RootRecord(INF, m))
        return out

    def poles(self, include_inf: bool = True) -> list[RootRecord]:
        out = self.real_poles
        m = self.ord_at_inf()
        if include_inf and m < 0:
            out.append(RootRecord(INF, -m))
        return out

    # -- local structure ------------------------------------------------------------
    def ord_at(self, point: Point) -> int:
        """Order at a point: k > 0 for a zero of order k, k < 0 for a pole,
        0 when regular and nonzero."""
        if point is INF:
            return self.ord_at_inf()
        if isinstance(point, RealAlg):
            for rec in self.real_zeros:
                if isinstance(rec.point, RealAlg) and point.cmp_alg(rec.point) == 0:
                    return rec.mult
            for rec in self.real_poles:
                if isinstance(rec.point, RealAlg) and point.cmp_alg(rec.point) == 0:
                    return -rec.mult
            return 0
        point = rat(point)
        m = self.num.root_multiplicity(point)
        if m:
            return m
        return -self.den.root_multiplicity(point)

    def laurent_lead(self, point: Point) -> Fraction:
        """Exact coefficient c with f ~ c (z-a)^ord near a rational a, or
        f ~ c z^(-ord_at_inf) near infinity."""
        if point is INF:
            return self.gamma
        a = rat(point)
        mn = self.num.root_multiplicity(a)
        md = self.den.root_multiplicity(a)
        return (self.num.deflate(a, mn).eval_q(a)
                / self.den.deflate(a, md).eval_q(a))

    def laurent_lead_sign(self, point: Point) -> int:
        if point is INF or isinstance(point, (Fraction, int)):
            v = self.laurent_lead(point)
            return -1 if v < 0 else (1 if v > 0 else 0)
        x: RealAlg = point
        return (self._deflated_sign(self.num, self._num_roots(), x)
                * self._deflated_sign(self.den, self._den_roots(), x))

    @staticmethod
    def _deflated_sign(poly: Poly, roots: _Roots, x: RealAlg) -> int:
        """Sign of lim poly(z)/(z-x)^m at an irrational real x, where m is
        the multiplicity of x in poly (possibly 0)."""
        for rec in roots.real:
            if isinstance(rec.point, RealAlg) and x.cmp_alg(rec.point) == 0:
                # poly = g^mult * rest with g squarefree through x; near x,
                # g(z)/(z-x) tends to g'(x)
                g = rec.point.p
                sg = x.sign_of(g.deriv()) ** rec.mult
                rest = poly // (g ** rec.mult)
                return sg * x.sign_of(rest)
        return x.sign_of(poly)

    def sign_at(self, point: RPoint) -> int:
        """Exact sign at a real point; raises PoleHit at poles."""
        if isinstance(point, RealAlg):
            sd = point.sign_of(self.den)
            if sd == 0:
                raise PoleHit("sign query at pole")
            return point.sign_of(self.num) * sd
        v_den = self.den.eval_q(rat(point))
        if v_den == 0:
            raise PoleHit(f"sign query at pole {fmt_rat(rat(point))}")
        v = self.num.eval_q(rat(point)) / v_den
        return 0 if v == 0 else (-1 if v < 0 else 1)

    def value_at_inf_sign(self) -> int:
        """Sign of the limit along either real direction toward infinity:
        0 when there is a zero at infinity; otherwise the sign of gamma for
        the +inf direction (the -inf direction flips with odd imbalance)."""
        m = self.ord_at_inf()
        if m > 0:
            return 0
        return -1 if self.gamma < 0 else 1

    # -- ordered critical points -------------------------------------------------------
    def critical_points(self) -> list[tuple[RPoint, int, str]]:
        """Finite real zeros and poles merged in ascending order as
        (point, mult, kind)."""
        items = ([(r.point, r.mult, "zero") for r in self.real_zeros]
                 + [(r.point, r.mult, "pole") for r in self.real_poles])

        def key(it):
            p = it[0]
            return p if isinstance(p, Fraction) else p.approx()

        items.sort(key=key)
        return items

    def sign_on_interval(self, lo=NEG_INF, hi=INF) -> SignReport:
        """Maximal constant-sign subintervals of (lo, hi) with exact
        endpoints; only odd-order zeros and poles separate segments."""
        def inside(p: RPoint) -> bool:
            if lo is not NEG_INF and point_cmp(p, lo) <= 0:
                return False
            if hi is not INF and point_cmp(p, hi) >= 0:
                return False
            return True

        crit = [it for it in self.critical_points() if inside(it[0])]
        odd = [it for it in crit if it[1] % 2 == 1]
        bounds = [lo] + [it[0] for it in odd] + [hi]
        segments = []
        for i in range(len(bounds) - 1):
            a, b = bounds[i], bounds[i + 1]
            sample = self._sample_inside(a, b)
            sgn = self.sign_at(sample)
            touches = tuple((p, kind) for (p, m, kind) in crit
                            if m % 2 == 0 and _strictly_between(p, a, b))
            segments.append(SignSegment(a, b, sgn, touches))
        return SignReport(tuple(segments))

    def _sample_inside(self, a, b) -> Fraction:
        """A rational point strictly inside (a, b) that is neither a zero nor
        a pole.  Works because the critical points are finite in number."""
        inside = [p for (p, _m, _k) in self.critical_points()
                  if _strictly_between(p, a, b)]

        def lo_of(p):
            return p if isinstance(p, Fraction) else p.lo

        def hi_of(p):
            return p if isinstance(p, Fraction) else p.hi

        if a is NEG_INF:
            anchor = inside[0] if inside else (b if b is not INF else None)
            if anchor is None:
                return Fraction(0)
            return lo_of(anchor) - 1
        first = inside[0] if inside else (b if b is not INF else None)
        if first is None:
            return hi_of(a) + 1
        return rational_between(a, first)

    def eta_count(self, c) -> int:
        """Number of odd-order finite real zeros and poles strictly greater
        than the rational point c."""
        c = rat(c)
        n = 0
        for p, m, _kind in self.critical_points():
            if m % 2 == 1 and point_cmp(p, c) > 0:
                n += 1
        return n

    # -- composition ---------------------------------------------------------------------
    def compose_mobius(self, tau: "RatFun") -> "RatFun":
        """self o tau for a degree-one tau; degrees multiply."""
        if tau.degree != 1:
            raise DegreeNotOne(f"tau has degree {tau.degree}")
        d = self.degree
        num = compose_fractional(self.num, tau.num, tau.den, d)
        den = compose_fractional(self.den, tau.num, tau.den, d)
        return RatFun(num, den)

    def mobius_inverse(self) -> "RatFun":
        """Inverse of a degree-one rational function."""
        if self.degree != 1:
            raise DegreeNotOne("only degree-one functions invert")
        a = self.num.c[1] if self.num.degree >= 1 else Fraction(0)
        b = self.num.c[0] if self.num.c else Fraction(0)
        c = self.den.c[1] if self.den.degree >= 1 else Fraction(0)
        d = self.den.c[0] if self.den.c else Fraction(0)
        return RatFun(Poly([-b, d]), Poly([a, -c]))


def _strictly_between(p: RPoint, a, b) -> bool:
    if a is not NEG_INF and point_cmp(p, a) <= 0:
        return False
    if b is not INF and point_cmp(p, b) >= 0:
        return False
    return True


def reduce(num: Poly | Sequence, den: Poly | Sequence) -> RatFun:
    """Reduce a numerator/denominator pair to a RatFun in lowest terms."""
    n = num if isinstance(num, Poly) else Poly(num)
    d = den if isinstance(den, Poly) else Poly(den)
    return RatFun(n, d)
