"""Dense univariate polynomials over the exact rationals.

Provides the arithmetic, gcd and square-free machinery the rational-function
layer builds on, plus certified real-root location: rational roots are found
exactly; the remaining real roots are isolated into rational intervals by
Sturm bisection and represented as :class:`RealAlg` values supporting exact
sign queries and comparisons.
"""

from __future__ import annotations


import os
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .qmath import QC, rat

#: default width below which isolating intervals are refined on construction
DEFAULT_ISOLATION_WIDTH = Fraction(1, 2**64)


def isolation_width() -> Fraction:
    """Isolation width, overridable through NEVKIT_PRECISION (e.g. "1/2**80"
    is not accepted; use a plain rational such as "1/1208925819614629174706176")."""
    env = os.environ.get("NEVKIT_PRECISION")
    if env:
        return Fraction(env)
    return DEFAULT_ISOLATION_WIDTH


class Poly:
    """Immutable polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):  # trims trailing zeros
        cs = [rat(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "c", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- construction helpers -------------------------------------------------
    @staticmethod
    def const(x) -> "Poly":
        return Poly([rat(x)])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def from_roots(roots: Sequence, lead=1) -> "Poly":
        p = Poly.const(lead)
        for r in roots:
            p = p * Poly([-rat(r), 1])
        return p

    # -- basic queries ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.c

    @property
    def is_constant(self) -> bool:
        return len(self.c) <= 1

    @property
    def lead(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.c[-1]

    def __eq__(self, other):
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        if self.is_zero:
            return "Poly(0)"
        return "Poly[" + ", ".join(str(x) for x in self.c) + "]"

    # -- ring operations -------------------------------------------------------
    def __add__(self, other):
        o = other if isinstance(other, Poly) else Poly.const(other)
        n = max(len(self.c), len(o.c))
        return Poly([(self.c[i] if i < len(self.c) else 0)
                     + (o.c[i] if i < len(o.c) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.c])

    def __sub__(self, other):
        o = other if isinstance(other, Poly) else Poly.const(other)
        return self + (-o)

    def __rsub__(self, other):
        return Poly.const(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            k = rat(other)
            return Poly([k * x for x in self.c])
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.c) + len(other.c) - 1)
        for i, a in enumerate(self.c):
            if a == 0:
                continue
            for j, b in enumerate(other.c):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.c) - len(other.c) + 1)
        r = list(self.c)
        dlead = other.lead
        dn = len(other.c)
        while len(r) >= dn and any(x != 0 for x in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) < dn:
                break
            k = len(r) - dn
            f = r[-1] / dlead
            q[k] = f
            for i, b in enumerate(other.c):
                r[k + i] -= f * b
            r.pop()
        return Poly(q), Poly(r)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero or self.lead == 1:
            return self
        return self * (1 / self.lead)

    def deriv(self) -> "Poly":
        return Poly([i * self.c[i] for i in range(1, len(self.c))])

    # -- evaluation ------------------------------------------------------------
    def __call__(self, z):
        if isinstance(z, QC):
            return self.eval_qc(z)
        if isinstance(z, complex):
            return self.eval_c(z)
        return self.eval_q(z)

    def eval_q(self, z) -> Fraction:
        z = rat(z)
        acc = Fraction(0)
        for a in reversed(self.c):
            acc = acc * z + a
        return acc

    def eval_qc(self, z: QC) -> QC:
        acc = QC.of(0)
        for a in reversed(self.c):
            acc = acc * z + QC.of(a)
        return acc

    def eval_c(self, z: complex) -> complex:
        acc = 0j
        for a in reversed(self.c):
            acc = acc * z + float(a)
        return acc

    def float_coeffs(self) -> list[float]:
        return [float(a) for a in self.c]

    # -- structure -------------------------------------------------------------
    def root_multiplicity(self, r) -> int:
        """Exact multiplicity of the rational point r as a root."""
        r = rat(r)
        m = 0
        p = self
        lin = Poly([-r, 1])
        while not p.is_zero and p.eval_q(r) == 0:
            p = p // lin
            m += 1
        return m

    def deflate(self, r, mult: int) -> "Poly":
        p = self
        lin = Poly([-rat(r), 1])
        for _ in range(mult):
            p = p // lin
        return p

    def cauchy_bound(self) -> Fraction:
        """All real roots lie in (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.lead)
        return 1 + max(abs(a) for a in self.c[:-1]) / lead


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic polynomial gcd."""
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic() if not a.is_zero else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun decomposition: p = lead * prod g_i^i with g_i monic squarefree.

    Returns the nontrivial (g_i, i) pairs in increasing multiplicity order.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    d = p.deriv()
    a = gcd(p, d)
    b = p // a
    c = d // a
    out = []
    i = 1
    while b.degree > 0:
        d2 = c - b.deriv()
        g = gcd(b, d2)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = d2 // g
        i += 1
    return out


def irreducible_factors(p: Poly) -> list[Poly]:
    """Monic irreducible factors of p over the rationals, with repetition
    according to multiplicity (delegated to sympy's factorization)."""
    import sympy
    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator)
                     for c in reversed(p.c)], x, domain="QQ")
    _, factors = sp.factor_list()
    out = []
    for f, k in factors:
        coeffs = [Fraction(int(c.p), int(c.q))
                  for c in reversed(f.all_coeffs())]
        out.extend([Poly(coeffs).monic()] * k)
    return out


def rational_roots_squarefree(p: Poly) -> list[Fraction]:
    """All rational roots of a squarefree polynomial, ascending: the linear
    irreducible factors."""
    if p.degree < 1:
        return []
    roots = []
    for h in irreducible_factors(p):
        if h.degree == 1:
            roots.append(-h.c[0])   # factors come back monic
    return sorted(roots)


def roots_with_multiplicity(p: Poly) -> list[tuple[Fraction, int]]:
    """All rational roots of p with exact multiplicities, ascending."""
    out = {}
    for g, m in squarefree_decomposition(p):
        for r in rational_roots_squarefree(g):
            out[r] = m
    return sorted(out.items())


# -- Sturm machinery ----------------------------------------------------------

def sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.deriv()]
    while not chain[-1].is_zero:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        r = -r
        r = r * (1 / abs(r.lead))  # positive rescale keeps numbers small
        chain.append(r)
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _variations(vals: Sequence[Fraction]) -> int:
    signs = [(-1 if v < 0 else 1) for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _chain_signs_at_inf(chain: Sequence[Poly], positive: bool) -> int:
    vals = []
    for q in chain:
        if q.is_zero:
            continue
        s = q.lead
        if not positive and q.degree % 2 == 1:
            s = -s
        vals.append(s)
    return _variations(vals)


def count_real_roots(p: Poly, lo=None, hi=None, chain=None) -> int:
    """Number of distinct real roots of a squarefree p in (lo, hi].

    ``None`` endpoints mean the corresponding infinity.
    """
    if p.degree < 1:
        return 0
    if chain is None:
        chain = sturm_chain(p)
    va = (_chain_signs_at_inf(chain, positive=False) if lo is None
          else _variations([q.eval_q(lo) for q in chain]))
    vb = (_chain_signs_at_inf(chain, positive=True) if hi is None
          else _variations([q.eval_q(hi) for q in chain]))
    return va - vb


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Isolating open intervals for the real roots of a squarefree p with no
    rational roots.  Each interval (lo, hi) holds exactly one root and has
    nonzero endpoint values."""
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = p.cauchy_bound()
    lo, hi = -bound, bound
    total = count_real_roots(p, lo, hi, chain)
    out = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        # no rational roots, so p(mid) != 0 and the count splits cleanly
        nl = count_real_roots(p, a, mid, chain)
        stack.append((a, mid, nl))
        stack.append((mid, b, n - nl))
    out.sort()
    return out


class RealAlg:
    """A real algebraic number given by a squarefree defining polynomial with
    no rational roots and an isolating interval.  Supports exact comparisons
    and exact sign evaluation of other polynomials at the number.

    The value itself is immutable; the isolating box only ever shrinks and is
    replaced in a single attribute write, so concurrent refinement from
    several threads stays consistent."""

    __slots__ = ("p", "box")

    def __init__(self, p: Poly, lo: Fraction, hi: Fraction):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "box", (lo, hi))
        self._refine_to(isolation_width())

    def __setattr__(self, *a):
        raise AttributeError("RealAlg is immutable")

    @property
    def lo(self) -> Fraction:
        return self.box[0]

    @property
    def hi(self) -> Fraction:
        return self.box[1]

    def _set(self, lo, hi):
        object.__setattr__(self, "box", (lo, hi))

    def _step(self):
        lo, hi = self.box
        mid = (lo + hi) / 2
        # defining polynomial has no rational roots, so p(mid) != 0
        if self.p.eval_q(lo) * self.p.eval_q(mid) < 0:
            self._set(lo, mid)
        else:
            self._set(mid, hi)

    def _refine_to(self, width: Fraction):
        while self.hi - self.lo > width:
            self._step()

    # -- queries ----------------------------------------------------------------
    def approx(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.approx())

    def __repr__(self):
        return f"RealAlg~{float(self):.6g}"

    def cmp_rat(self, x) -> int:
        """Sign of (self - x) for rational x; never 0 (self is irrational)."""
        x = rat(x)
        while True:
            if x <= self.lo:
                return 1
            if x >= self.hi:
                return -1
            # x strictly inside: split on it
            if self.p.eval_q(self.lo) * self.p.eval_q(x) < 0:
                self._set(self.lo, x)
                return -1
            self._set(x, self.hi)
            return 1

    def sign_of(self, q: Poly) -> int:
        """Exact sign of q evaluated at this number."""
        if q.is_zero:
            return 0
        g = gcd(self.p, q)
        if g.degree > 0 and count_real_roots(g, self.lo, self.hi) > 0:
            # the only root of p in the interval is shared with q
            return 0
        # refine until q has no root in [lo, hi], then the sign is constant
        while count_real_roots(q, self.lo, self.hi) > 0 or q.eval_q(self.lo) == 0:
            self._step()
        v = q.eval_q(self.lo)
        return -1 if v < 0 else 1

    def cmp_alg(self, other: "RealAlg") -> int:
        if self is other:
            return 0
        g = gcd(self.p, other.p)
        for _ in range(256):
            if self.hi <= other.lo:
                return -1
            if other.hi <= self.lo:
                return 1
            lo = max(self.lo, other.lo)
            hi = min(self.hi, other.hi)
            if (g.degree > 0
                    and count_real_roots(g, lo, hi) > 0
                    and count_real_roots(self.p, lo, hi) == 1
                    and count_real_roots(other.p, lo, hi) == 1):
                return 0
            self._step()
            other._step()
        raise RuntimeError("failed to separate algebraic numbers")


RPoint = Union[Fraction, RealAlg]


def point_cmp(a: RPoint, b: RPoint) -> int:
    """Total order on rational and real algebraic points."""
    if isinstance(a, RealAlg):
        if isinstance(b, RealAlg):
            return a.cmp_alg(b)
        return a.cmp_rat(b)
    if isinstance(b, RealAlg):
        return -b.cmp_rat(a)
    a, b = rat(a), rat(b)
    return (a > b) - (a < b)


def point_eq(a: RPoint, b: RPoint) -> bool:
    return point_cmp(a, b) == 0


def point_float(a: RPoint) -> float:
    return float(a)


def poly_sign_at(q: Poly, x: RPoint) -> int:
    """Exact sign of q at a rational or real algebraic point."""
    if isinstance(x, RealAlg):
        return x.sign_of(q)
    v = q.eval_q(x)
    return 0 if v == 0 else (-1 if v < 0 else 1)


def rational_between(a: RPoint, b: RPoint) -> Fraction:
    """Some exact rational strictly between a < b."""
    if isinstance(a, RealAlg) or isinstance(b, RealAlg):
        # refine until the isolating boxes separate, then use the midpoint
        for _ in range(256):
            ahi = a.hi if isinstance(a, RealAlg) else rat(a)
            blo = b.lo if isinstance(b, RealAlg) else rat(b)
            if ahi < blo:
                return (ahi + blo) / 2
            if isinstance(a, RealAlg):
                a._step()
            if isinstance(b, RealAlg):
                b._step()
        raise RuntimeError("failed to separate points")
    a, b = rat(a), rat(b)
    if not a < b:
        raise ValueError("need a < b")
    return (a + b) / 2


def compose_fractional(p: Poly, num: Poly, den: Poly, pad_to: int) -> Poly:
    """p(num/den) * den**pad_to as a polynomial; requires pad_to >= deg p."""
    if pad_to < p.degree:
        raise ValueError("pad_to must be at least deg p")
    if p.is_zero:
        return Poly()
    acc = Poly()
    num_pow = Poly.const(1)
    dens = [Poly.const(1)]
    for _ in range(pad_to):
        dens.append(dens[-1] * den)
    for k, a in enumerate(p.c):
        if a != 0:
            acc = acc + num_pow * dens[pad_to - k] * a
        num_pow = num_pow * num
    return acc
