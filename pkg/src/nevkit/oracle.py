"""Independent numeric verification.

Negative-squares counting samples the difference-quotient kernel on
randomized point sets in the upper half plane and counts negative
eigenvalues of the Hermitian Gram matrix; the inversion routine recovers
spectral mass on an interval from boundary values along a shrinking
imaginary offset, with peak-tracked quadrature so that atom spikes stay
resolved at every level.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import EvaluationFailure, NonConvergent
from .qmath import rat

Evaluator = Callable[[np.ndarray], np.ndarray]


def as_evaluator(obj) -> Evaluator:
    """Vectorized complex evaluator for the function types or a callable."""
    if callable(obj) and not hasattr(obj, "evaluate") and not hasattr(obj, "eval_np"):
        def f(z: np.ndarray) -> np.ndarray:
            return np.asarray(obj(z), dtype=complex)
        return f
    if hasattr(obj, "eval_np"):
        return obj.eval_np
    if hasattr(obj, "evaluate"):
        def f(z: np.ndarray) -> np.ndarray:
            return np.asarray(obj.evaluate(z), dtype=complex)
        return f
    raise TypeError(f"cannot build an evaluator from {obj!r}")


@dataclass(frozen=True)
class KernelSample:
    points: np.ndarray
    gram: np.ndarray

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.gram)


def build_kernel_sample(f: Evaluator, points: np.ndarray) -> KernelSample:
    vals = f(points)
    z = points[:, None]
    w = points[None, :]
    num = vals[:, None] - np.conj(vals)[None, :]
    den = z - np.conj(w)
    gram = num / den
    gram = (gram + gram.conj().T) / 2
    return KernelSample(points, gram)


def _sample_points(rng: np.random.Generator, n: int) -> np.ndarray:
    """Half strip points near the real axis, half annulus points reaching
    far out; large moduli are needed to see behavior at infinity."""
    n_strip = (2 * n) // 3
    n_ann = n - n_strip
    x = rng.uniform(-10.0, 10.0, n_strip)
    y = 10.0 ** rng.uniform(-3.0, 0.0, n_strip)
    strip = x + 1j * y
    radius = 10.0 ** rng.uniform(-1.0, 3.0, n_ann)
    angle = rng.uniform(0.05 * np.pi, 0.95 * np.pi, n_ann)
    ann = radius * np.exp(1j * angle)
    return np.concatenate([strip, ann])


def negative_squares(f, n_points: int = 40, trials: int = 5,
                     seed: int = 0, tol_rel: float = 1e-9) -> int:
    """Maximum over trials of the count of negative kernel eigenvalues on
    randomized upper-half-plane point sets; deterministic for a given seed.
    """
    count, _tails = negative_squares_report(f, n_points, trials, seed,
                                            tol_rel)
    return count


def negative_squares_report(f, n_points: int = 40, trials: int = 5,
                            seed: int = 0, tol_rel: float = 1e-9):
    """As negative_squares, but also returns the per-trial lower eigenvalue
    tails of the balanced kernel for reporting."""
    ev = as_evaluator(f)
    best = 0
    tails = []
    for trial in range(trials):
        rng = np.random.default_rng(seed * 1_000_003 + trial)
        pts = None
        for _attempt in range(64):
            cand = _sample_points(rng, n_points)
            vals = ev(cand)
            good = np.isfinite(vals) & (np.abs(vals) < 1e100)
            if bool(np.all(good)):
                pts = cand
                break
        if pts is None:
            raise EvaluationFailure("sampling kept hitting poles or overflow")
        ks = build_kernel_sample(ev, pts)
        # positive diagonal congruence preserves the signature and tames the
        # dynamic range before thresholding
        d = np.sqrt(np.abs(np.diag(ks.gram)) + 1e-30)
        balanced = ks.gram / np.outer(d, d)
        norm_inf = float(np.max(np.sum(np.abs(balanced), axis=1)))
        thresh = -tol_rel * max(norm_inf, 1.0)
        eigs = np.linalg.eigvalsh(balanced)
        count = int(np.sum(eigs < thresh))
        tails.append([float(x) for x in eigs[:max(count + 2, 4)]])
        best = max(best, count)
    return best, tails


@dataclass(frozen=True)
class InversionConfig:
    eps_schedule: tuple[float, ...] = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7)
    quadrature_points: int = 4096
    interval: tuple = (Fraction(-1), Fraction(1))

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps_schedule)
        if any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])) or not eps:
            raise ValueError("schedule must decrease strictly")
        if self.quadrature_points < 64:
            raise ValueError("need at least 64 quadrature points")


@dataclass(frozen=True)
class InversionResult:
    value: float
    error: float
    per_level: tuple[float, ...]
    peaks: tuple[float, ...]


def _level_integral(ev, phi_ev, c: float, d: float, eps: float,
                    n: int, peaks: Sequence[float]):
    """One boundary-offset level: base trapezoid plus substituted windows
    around known peaks so spikes of width eps stay resolved.  Returns the
    integral together with the peak positions re-located on the window
    grids, which keeps the windows centered as eps shrinks."""

    def integrand(x: np.ndarray) -> np.ndarray:
        z = x + 1j * eps
        v = ev(z)
        if phi_ev is not None:
            v = v * phi_ev(z)
        return np.imag(v) / np.pi

    windows = []
    for p in peaks:
        w = max(2e3 * eps, 16 * (d - c) / n)
        lo, hi = max(c, p - w), min(d, p + w)
        if lo < hi:
            windows.append((lo, hi, p))
    windows.sort()
    merged = []
    for lo, hi, p in windows:
        if merged and lo <= merged[-1][1]:
            mlo, mhi, mp = merged[-1]
            merged[-1] = (mlo, max(mhi, hi), mp)
        else:
            merged.append((lo, hi, p))

    refined = []
    total = 0.0
    cursor = c
    for lo, hi, p in merged:
        if cursor < lo:
            xs = np.linspace(cursor, lo, max(n // 8, 64))
            total += float(np.trapezoid(integrand(xs), xs))
        # angle substitution x = p + eps*tan(theta) concentrates nodes at p
        t_lo = np.arctan((lo - p) / eps)
        t_hi = np.arctan((hi - p) / eps)
        th = np.linspace(t_lo, t_hi, 2048)
        xs = p + eps * np.tan(th)
        jac = eps / np.cos(th) ** 2
        vals = integrand(xs)
        total += float(np.trapezoid(vals * jac, th))
        gs = np.abs(vals)
        top = float(np.max(gs))
        if top > 0:
            for i in range(len(xs)):
                left_ok = i == 0 or gs[i] >= gs[i - 1]
                right_ok = i == len(xs) - 1 or gs[i] >= gs[i + 1]
                if left_ok and right_ok and gs[i] > 0.005 * top:
                    refined.append(float(xs[i]))
        cursor = hi
    if cursor < d:
        xs = np.linspace(cursor, d, n)
        total += float(np.trapezoid(integrand(xs), xs))
    if not merged:
        xs = np.linspace(c, d, n)
        total = float(np.trapezoid(integrand(xs), xs))
    return total, refined


def _detect_peaks(ev, phi_ev, c: float, d: float, eps: float,
                  n: int) -> list[float]:
    xs = np.linspace(c, d, n)
    z = xs + 1j * eps
    v = ev(z)
    if phi_ev is not None:
        v = v * phi_ev(z)
    g = np.abs(np.imag(v)) / np.pi
    scale = max(float(np.median(g)), 1e-12)
    peaks = []
    for i in range(len(xs)):
        left_ok = i == 0 or g[i] >= g[i - 1]
        right_ok = i == len(xs) - 1 or g[i] >= g[i + 1]
        if left_ok and right_ok and g[i] > 20 * scale:
            peaks.append(float(xs[i]))
    merged = []
    for p in peaks:
        if merged and abs(p - merged[-1]) < 10 * eps:
            continue
        merged.append(p)
    return merged


def stieltjes_invert(f, cfg: InversionConfig, phi=None,
                     tol: float = 1e-2) -> InversionResult:
    """Recover the phi-weighted spectral mass of f over the closed interval
    (interior mass plus half the endpoint masses) by shrinking the boundary
    offset along the schedule and extrapolating the linear-in-offset error.
    """
    ev = as_evaluator(f)
    phi_ev = None
    if phi is not None:
        _check_phi(phi, cfg)
        phi_ev = as_evaluator(phi)
    c = float(rat(cfg.interval[0]) if not isinstance(cfg.interval[0], float)
              else cfg.interval[0])
    d = float(rat(cfg.interval[1]) if not isinstance(cfg.interval[1], float)
              else cfg.interval[1])
    if not c < d:
        raise ValueError("interval must be nondegenerate")
    peaks: list[float] = []
    per_level = []
    spacing = (d - c) / cfg.quadrature_points
    for eps in cfg.eps_schedule:
        found = _detect_peaks(ev, phi_ev, c, d, eps, cfg.quadrature_points)
        peaks = _merge_peaks(peaks, found, 2 * spacing)
        value, refined = _level_integral(ev, phi_ev, c, d, eps,
                                         cfg.quadrature_points, peaks)
        per_level.append(value)
        if refined:
            peaks = _merge_peaks([], sorted(refined), 3 * eps)
    value, err = _extrapolate(cfg.eps_schedule, per_level)
    if len(per_level) >= 2 and abs(per_level[-1] - per_level[-2]) > \
            max(tol, 10 * err + tol):
        raise NonConvergent(
            f"levels disagree: {per_level[-2]:.6g} vs {per_level[-1]:.6g}")
    return InversionResult(value, err, tuple(per_level), tuple(peaks))


def _merge_peaks(old: list[float], new: list[float], tol: float) -> list[float]:
    """Stored locations win; new candidates join only when genuinely apart."""
    out = list(old)
    for p in new:
        if all(abs(p - q) > tol for q in out):
            out.append(p)
    return sorted(out)


def _extrapolate(eps: Sequence[float], vals: Sequence[float]):
    """Neville extrapolation to zero offset assuming smooth dependence."""
    xs = list(eps)
    table = [list(vals)]
    m = len(xs)
    for level in range(1, min(m, 4)):
        row = []
        prev = table[-1]
        for i in range(len(prev) - 1):
            x0 = xs[i]
            x1 = xs[i + level]
            row.append((prev[i + 1] * x0 - prev[i] * x1) / (x0 - x1))
        table.append(row)
    best = table[-1][-1]
    prev_best = table[-2][-1] if len(table) > 1 else vals[-1]
    return best, abs(best - prev_best)


def _check_phi(phi, cfg: InversionConfig):
    from .ratfun import RatFun
    from .poly import count_real_roots
    if isinstance(phi, RatFun):
        lo, hi = rat(cfg.interval[0]), rat(cfg.interval[1])
        if phi.den.degree > 0:
            bad = (count_real_roots(phi.den, lo, hi) > 0
                   or phi.den.eval_q(lo) == 0)
            if bad:
                raise ValueError("weight has a pole inside the interval")


def gap_detect(f, interval, samples: int = 128, mass_tol: float = 1e-3) -> bool:
    """True when the open interval carries no recovered mass and the
    boundary values look real and increasing along it.  Endpoints are padded
    inward so that boundary atoms do not count against the gap."""
    ev = as_evaluator(f)
    c, d = float(interval[0]), float(interval[1])
    pad = (d - c) * 1e-3
    cfg = InversionConfig(
        interval=(Fraction(c + pad).limit_denominator(10**9),
                  Fraction(d - pad).limit_denominator(10**9)))
    try:
        res = stieltjes_invert(ev, cfg)
    except NonConvergent:
        return False
    if abs(res.value) > mass_tol:
        return False
    xs = np.linspace(c + pad, d - pad, samples) + 1j * 1e-9
    vals = ev(xs)
    if np.any(np.abs(np.imag(vals)) > 1e-5 * (1 + np.abs(vals))):
        return False
    re = np.real(vals)
    return bool(np.all(np.diff(re) > -1e-9 * (1 + np.abs(re[:-1]))))
