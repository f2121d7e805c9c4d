"""Rational Herglotz-Nevanlinna functions in integral-representation form.

A :class:`NevFun` stores the representation data (alpha, beta, finite atomic
measure) exactly.  Everything here is closed form: evaluation, one-sided and
nontangential limits at real points and infinity, Kac-class membership, and
the spectral-gap characterizations with their transformed representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (GapViolated, NotNevanlinna, NotRationalAtoms, PoleHit)
from .poly import Poly, count_real_roots, gcd, rat
from .qmath import (INF, LIM_INF, LIM_NEG_INF, LIM_POS_INF, NEG_INF, QC,
                    LimitValue, fmt_rat)
from .ratfun import RatFun


@dataclass(frozen=True)
class AtomicMeasure:
    """Finite nonnegative measure with finitely many rational atoms.

    Atoms carry their full mass; the half-sum convention for distribution
    functions at jump points only matters for endpoint handling in the
    numeric inversion routine, never here."""

    atoms: tuple[tuple[Fraction, Fraction], ...]  # (position, weight), sorted

    @staticmethod
    def of(pairs) -> "AtomicMeasure":
        items = [(rat(t), rat(w)) for t, w in pairs]
        items = [(t, w) for t, w in items if w != 0]
        items.sort()
        for (t1, _), (t2, _) in zip(items, items[1:]):
            if t1 == t2:
                raise ValueError(f"duplicate atom position {fmt_rat(t1)}")
        for _, w in items:
            if w < 0:
                raise ValueError("atom weights must be positive")
        return AtomicMeasure(tuple(items))

    @staticmethod
    def empty() -> "AtomicMeasure":
        return AtomicMeasure(())

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    @property
    def positions(self) -> list[Fraction]:
        return [t for t, _ in self.atoms]

    def weight_at(self, t) -> Fraction:
        t = rat(t)
        for pos, w in self.atoms:
            if pos == t:
                return w
        return Fraction(0)

    def total_mass(self) -> Fraction:
        return sum((w for _, w in self.atoms), Fraction(0))

    def restrict(self, keep) -> "AtomicMeasure":
        return AtomicMeasure(tuple((t, w) for t, w in self.atoms if keep(t)))


@dataclass(frozen=True)
class NevFun:
    """Nevanlinna function alpha + beta z + sum w ((t-z)^-1 - t/(1+t^2))."""

    alpha: Fraction
    beta: Fraction
    sigma: AtomicMeasure

    @staticmethod
    def of(alpha, beta, atoms=()) -> "NevFun":
        b = rat(beta)
        if b < 0:
            raise ValueError("beta must be nonnegative")
        return NevFun(rat(alpha), b, AtomicMeasure.of(atoms))

    @staticmethod
    def const(c) -> "NevFun":
        return NevFun.of(c, 0)

    @property
    def is_constant(self) -> bool:
        return self.beta == 0 and len(self.sigma) == 0

    def scale(self, c) -> "NevFun":
        """Positive rescaling, again a Nevanlinna function."""
        c = rat(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return NevFun(self.alpha * c, self.beta * c,
                      AtomicMeasure(tuple((t, w * c) for t, w in self.sigma)))

    # -- evaluation ---------------------------------------------------------------
    def __call__(self, z):
        return self.evaluate(z)

    def evaluate(self, z):
        if isinstance(z, QC):
            if z.is_real:
                return QC.of(self.evaluate(z.re), 0)
            acc = QC.of(self.alpha) + QC.of(self.beta) * z
            for t, w in self.sigma:
                acc = acc + (QC.of(w) / (QC.of(t) - z)
                             - QC.of(w * t / (1 + t * t)))
            return acc
        if isinstance(z, complex):
            acc = float(self.alpha) + float(self.beta) * z
            for t, w in self.sigma:
                tf, wf = float(t), float(w)
                acc += wf / (tf - z) - wf * tf / (1 + tf * tf)
            return acc
        if isinstance(z, np.ndarray):
            acc = float(self.alpha) + float(self.beta) * z
            for t, w in self.sigma:
                tf, wf = float(t), float(w)
                acc = acc + wf / (tf - z) - wf * tf / (1 + tf * tf)
            return acc
        z = rat(z)
        if self.sigma.weight_at(z) != 0:
            raise PoleHit(f"evaluation at atom {fmt_rat(z)}")
        acc = self.alpha + self.beta * z
        for t, w in self.sigma:
            acc += w / (t - z) - w * t / (1 + t * t)
        return acc

    # -- structure ------------------------------------------------------------------
    def to_ratfun(self) -> RatFun:
        den = Poly.from_roots(self.sigma.positions)
        c0 = self.alpha
        for t, w in self.sigma:
            c0 -= w * t / (1 + t * t)
        num = Poly([c0, self.beta]) * den
        for t, w in self.sigma:
            num = num + Poly.from_roots(
                [s for s in self.sigma.positions if s != t]) * (-w)
        return RatFun(num, den)

    def zeros(self) -> list:
        """Finite real zeros (records) of the function."""
        return self.to_ratfun().real_zeros

    def support(self, include_inf: bool = True) -> list:
        """Spectral support: atom positions, plus INF when beta > 0."""
        pts: list = list(self.sigma.positions)
        if include_inf and self.beta > 0:
            pts.append(INF)
        return pts

    def spectral_gaps(self) -> list[tuple]:
        """Maximal open intervals free of atoms, as (lo, hi) with the
        symbols NEG_INF / INF at the unbounded ends."""
        pos = self.sigma.positions
        bounds = [NEG_INF] + pos + [INF]
        return [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1)]

    # -- limits -----------------------------------------------------------------------
    def limit_at(self, c, mode: str, side: Optional[str] = None) -> LimitValue:
        """Closed-form limits of the representation.

        mode "residue": lim (c-z) Q(z) at finite c (the mass at c), or
        lim Q(z)/z = beta at infinity.  mode "value": the limit of Q itself;
        at an atom the side "-" (from below) or "+" (from above) selects the
        improper limit; at infinity the side selects the real direction.
        mode "slope": lim Q(z)/(z-c) at finite c, or lim z Q(z) at infinity.
        """
        if c is INF or c is NEG_INF:
            return self._limit_at_inf(mode, c, side)
        c = rat(c)
        w_c = self.sigma.weight_at(c)
        if mode == "residue":
            return LimitValue.finite(w_c)
        if mode == "value":
            if w_c != 0:
                if side == "-":
                    return LIM_POS_INF
                if side == "+":
                    return LIM_NEG_INF
                return LIM_INF
            return LimitValue.finite(self.evaluate(c))
        if mode == "slope":
            if w_c != 0 or self.evaluate(c) != 0:
                return LIM_INF
            acc = self.beta
            for t, w in self.sigma:
                acc += w / (t - c) ** 2
            return LimitValue.finite(acc)
        raise ValueError(f"unknown limit mode {mode!r}")

    def _limit_at_inf(self, mode, c, side) -> LimitValue:
        direction = side if side is not None else ("-" if c is NEG_INF else None)
        if mode == "residue":
            return LimitValue.finite(self.beta)
        if mode == "value":
            if self.beta > 0:
                if direction == "-":
                    return LIM_NEG_INF
                if direction == "+":
                    return LIM_POS_INF
                return LIM_INF
            acc = self.alpha
            for t, w in self.sigma:
                acc -= w * t / (1 + t * t)
            return LimitValue.finite(acc)
        if mode == "slope":
            if self.beta > 0:
                return LIM_INF
            val = self._limit_at_inf("value", INF, None)
            if val.value != 0:
                return LIM_INF
            return LimitValue.finite(-self.sigma.total_mass())
        raise ValueError(f"unknown limit mode {mode!r}")

    # -- Kac-Donoghue classes ------------------------------------------------------------
    def kac_membership(self, xi) -> bool:
        """Local integrability class at xi: for finite xi this needs no atom
        exactly at xi; at infinity it needs beta = 0."""
        if xi is INF:
            return self.beta == 0
        return self.sigma.weight_at(rat(xi)) == 0

    # -- spectral-gap characterizations ----------------------------------------------------
    def gap_characterize(self, c, d=None, shape: str = "bounded_gap") -> "CharacterizationReport":
        c = rat(c)
        if shape == "bounded_gap":
            d = rat(d)
            if not c < d:
                raise ValueError("need c < d")
            offenders = [t for t in self.sigma.positions if c < t < d]
            if offenders:
                raise GapViolated("atoms inside the gap", offenders)
            eta = self.limit_at(d, "value", side="-")
            q_tilde = None
            transformed = None
            if eta.is_finite:
                f = (self.to_ratfun() - eta.value) \
                    * RatFun.from_points([c], [d])
                q_tilde = nevfun_from_ratfun(f)
                transformed = AtomicMeasure.of(
                    [(t, w * (t - c) / (t - d)) for t, w in self.sigma
                     if not (c < t <= d)])
            return CharacterizationReport("bounded_gap", True, eta.is_finite,
                                          eta, q_tilde, transformed)
        if shape == "complement_gap":
            d = rat(d)
            if not c < d:
                raise ValueError("need c < d")
            offenders = [t for t in self.sigma.positions if not c <= t <= d]
            if offenders or self.beta > 0:
                msg = ("atoms outside the compact interval" if offenders
                       else "mass at infinity")
                raise GapViolated(msg, offenders)
            eta = self.limit_at(d, "value", side="+")
            q_tilde = None
            transformed = None
            if eta.is_finite:
                f = (self.to_ratfun() - eta.value) \
                    * RatFun(Poly([-c, 1]), Poly([d, -1]))
                q_tilde = nevfun_from_ratfun(f)
                transformed = AtomicMeasure.of(
                    [(t, w * (t - c) / (d - t)) for t, w in self.sigma
                     if c <= t < d])
            return CharacterizationReport("complement_gap", True,
                                          eta.is_finite, eta, q_tilde,
                                          transformed)
        if shape == "left_ray":
            offenders = [t for t in self.sigma.positions if t < c]
            if offenders:
                raise GapViolated("atoms below the ray endpoint", offenders)
            eta = LimitValue.finite(self.alpha - sum(
                (w * t / (1 + t * t) for t, w in self.sigma), Fraction(0)))
            # representative with the linear part and the ray factor removed
            f1 = (self.to_ratfun() - RatFun(Poly([eta.value, self.beta]),
                                            Poly.const(1))) \
                * RatFun(Poly([-c, 1]), Poly.const(1))
            q_tilde = nevfun_from_ratfun(f1)
            eta2 = self.limit_at(c, "value", side="-")
            q_tilde2 = None
            if eta2.is_finite:
                f2 = (self.to_ratfun() - eta2.value) \
                    / RatFun(Poly([-c, 1]), Poly.const(1))
                q_tilde2 = nevfun_from_ratfun(f2)
            return CharacterizationReport("left_ray", True, True, eta,
                                          q_tilde, None, eta2, q_tilde2)
        raise ValueError(f"unknown gap shape {shape!r}")

    def corollary_products(self, c, d=INF) -> "ProductMembership":
        """Exact decision of the four bounded-gap product memberships, or the
        two ray products when d is the point at infinity."""
        c = rat(c)
        if d is INF:
            ray_ok = all(t >= c for t in self.sigma.positions)
            lim_down = self.limit_at(INF, "value", side="-")
            lim_up_c = self.limit_at(c, "value", side="-")
            res = (ray_ok and self.beta == 0 and lim_down.finite_nonneg(),
                   ray_ok and lim_up_c.finite_nonpos())
            labels = ("(z-c)*Q", "Q/(z-c)")
            return ProductMembership(res, labels)
        d = rat(d)
        gap_ok = all(not (c < t < d) for t in self.sigma.positions)
        comp_ok = (all(c <= t <= d for t in self.sigma.positions)
                   and self.beta == 0)
        lim_up_d = self.limit_at(d, "value", side="-")
        lim_down_c = self.limit_at(c, "value", side="+")
        lim_down_d = self.limit_at(d, "value", side="+")
        lim_up_c = self.limit_at(c, "value", side="-")
        res = (gap_ok and lim_up_d.finite_nonpos(),
               gap_ok and lim_down_c.finite_nonneg(),
               comp_ok and lim_down_d.finite_nonneg(),
               comp_ok and lim_up_c.finite_nonpos())
        labels = ("(z-c)/(z-d)*Q", "(z-d)/(z-c)*Q",
                  "(z-c)/(d-z)*Q", "(z-d)/(c-z)*Q")
        return ProductMembership(res, labels)

    def __repr__(self):
        atoms = ", ".join(f"({fmt_rat(t)},{fmt_rat(w)})" for t, w in self.sigma)
        return (f"NevFun(alpha={fmt_rat(self.alpha)}, beta={fmt_rat(self.beta)},"
                f" atoms=[{atoms}])")


@dataclass(frozen=True)
class CharacterizationReport:
    shape: str
    gap_holds: bool
    condition_holds: bool
    eta: LimitValue
    q_tilde: Optional[NevFun]
    transformed_measure: Optional[AtomicMeasure]
    eta_secondary: Optional[LimitValue] = None
    q_tilde_secondary: Optional[NevFun] = None


@dataclass(frozen=True)
class ProductMembership:
    results: tuple[bool, ...]
    labels: tuple[str, ...]


# -- exact Herglotz representation check ------------------------------------------


def is_nevanlinna(f: RatFun) -> bool:
    """Exact check whether a symmetric rational function is a Nevanlinna
    function: at most linear growth with nonnegative slope, all poles real
    and simple, and every residue strictly negative."""
    try:
        _herglotz_parts(f)
        return True
    except NotNevanlinna:
        return False


def _herglotz_parts(f: RatFun):
    """(beta, c0, [(pole, weight)...]) of f = c0 + beta z + sum w/(t-z),
    poles possibly irrational.  Raises NotNevanlinna."""
    q, rem = f.num.divmod(f.den)
    if q.degree > 1:
        raise NotNevanlinna("superlinear growth at infinity")
    beta = q.c[1] if q.degree == 1 else Fraction(0)
    if beta < 0:
        raise NotNevanlinna("negative slope at infinity")
    c0 = q.c[0] if not q.is_zero else Fraction(0)
    den = f.den
    if den.degree > 0:
        if gcd(den, den.deriv()).degree > 0:
            raise NotNevanlinna("multiple pole")
        if count_real_roots(den) != den.degree:
            raise NotNevanlinna("nonreal pole")
    pairs = []
    for recd in f.real_poles:
        t = recd.point
        # residue of rem/den at t is rem(t)/den'(t); need it negative, so
        # weight w = -residue is positive
        dp = den.deriv()
        if isinstance(t, Fraction):
            resid = rem.eval_q(t) / dp.eval_q(t)
            if resid >= 0:
                raise NotNevanlinna(f"nonnegative residue at {fmt_rat(t)}")
            pairs.append((t, -resid))
        else:
            s = t.sign_of(rem) * t.sign_of(dp)
            if s >= 0:
                raise NotNevanlinna("nonnegative residue at irrational pole")
            pairs.append((t, None))
    return beta, c0, pairs


def nevfun_from_ratfun(f: RatFun) -> NevFun:
    """Exact extraction of representation data from a rational Nevanlinna
    function.  Raises NotNevanlinna when the function is not one, and
    NotRationalAtoms when it is but its poles are irrational."""
    beta, c0, pairs = _herglotz_parts(f)
    atoms = []
    for t, w in pairs:
        if w is None:
            raise NotRationalAtoms("pole is not rational")
        atoms.append((t, w))
    alpha = c0 + sum((w * t / (1 + t * t) for t, w in atoms), Fraction(0))
    q = NevFun.of(alpha, beta, atoms)
    if q.to_ratfun() != f:
        raise AssertionError("representation extraction mismatch")
    return q
