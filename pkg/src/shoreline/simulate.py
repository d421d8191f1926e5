"""Independent verification oracles.

Nothing here trusts the closed forms it is used to check: spiral first
contacts are found by marching the trajectory against the line and
bisecting the detected sign change; coil travel distances are found by
walking the zig-zag segments and solving each linear piece exactly; the
Monte Carlo drivers average those primitive measurements over seeded,
reproducible random draws.

The random stream is counter-based, so a run of n samples always consumes
stream positions 0..n-1.  Shards are fixed blocks of SHARD_SIZE positions:
shard k of seed s is the stream (s, position = k * SHARD_SIZE), which makes
any sharded execution merge to the same result as a serial one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .numerics import NumericalError, RandomStream, uniform_block
from .spiral_geometry import Spiral, arclength, tangent_contact

__all__ = [
    "SimConfig",
    "SampleStats",
    "SHARD_SIZE",
    "shard_stream",
    "summarize",
    "spiral_first_contact",
    "monte_carlo_mean_arclength",
    "coil_marching_distance",
    "mixed_strategy_sample",
    "scan_worst_ratio",
]

TWO_PI = 2.0 * math.pi

# Fixed shard width for Monte Carlo runs (positions per shard).
SHARD_SIZE = 65536

# A line counts as touched when the marched distance comes within this of
# zero at a local maximum; tangential grazes then resolve to the maximum
# point instead of to a contact a full turn later.
_GRAZE_TOL = 1e-9


@dataclass(frozen=True)
class SimConfig:
    """Simulation parameters.

    ``march_step`` is in radians for the spiral march (t-units are not
    needed: coil marching is segment-exact).  The bisection refinement makes
    the final contact angle accurate to ``refine_tol`` regardless of the
    march step; the step only controls how finely crossings are scouted, so
    large Monte Carlo runs may use a coarser step (0.01-0.02) than the
    single-contact default, near-tangent cases being caught by the grazing
    band and re-resolved at a fine step.
    """

    seed: int = 0
    samples: int = 100_000
    march_step: float = 1e-3
    refine_tol: float = 1e-10

    def __post_init__(self) -> None:
        if self.samples <= 0:
            raise ValueError("samples must be positive")
        if not (math.isfinite(self.march_step) and self.march_step > 0.0):
            raise ValueError("march_step must be positive")
        if not (math.isfinite(self.refine_tol) and self.refine_tol > 0.0):
            raise ValueError("refine_tol must be positive")


@dataclass(frozen=True)
class SampleStats:
    """Summary of a Monte Carlo sample."""

    mean: float
    std_error: float
    n: int
    min: float
    max: float

    def __post_init__(self) -> None:
        if self.std_error < 0.0 or not self.min <= self.mean <= self.max:
            raise ValueError("inconsistent sample statistics")


def shard_stream(seed: int, shard: int) -> RandomStream:
    """Stream for shard ``shard`` of a run seeded with ``seed``."""
    if shard < 0:
        raise ValueError("shard index must be non-negative")
    return RandomStream(seed, position=shard * SHARD_SIZE)


def summarize(values: np.ndarray) -> SampleStats:
    """SampleStats of a 1-D array (standard error uses the n-1 denominator)."""
    n = int(values.size)
    mean = float(values.mean())
    se = float(values.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return SampleStats(mean=mean, std_error=se, n=n,
                       min=float(values.min()), max=float(values.max()))


def _signed_distance(kappa: float, omega: float, theta: float) -> float:
    # Distance from the spiral point at theta to the line tangent to the
    # unit circle at angle omega, measured along the line's unit normal.
    return math.exp(kappa * theta) * math.cos(theta - omega) - 1.0


def _bisect_contact(kappa: float, omega: float, lo: float, hi: float, tol: float) -> float:
    # invariant: d(lo) < 0 <= d(hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        if _signed_distance(kappa, omega, mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def _refine_local_max(kappa: float, omega: float, lo: float, hi: float) -> Tuple[float, float]:
    """Golden-section maximization of the signed distance on [lo, hi]."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - inv_phi * (hi - lo)
    d = lo + inv_phi * (hi - lo)
    fc = _signed_distance(kappa, omega, c)
    fd = _signed_distance(kappa, omega, d)
    while hi - lo > 1e-10:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - inv_phi * (hi - lo)
            fc = _signed_distance(kappa, omega, c)
        else:
            lo, c, fc = c, d, fd
            d = lo + inv_phi * (hi - lo)
            fd = _signed_distance(kappa, omega, d)
    mid = 0.5 * (lo + hi)
    return mid, _signed_distance(kappa, omega, mid)


def spiral_first_contact(kappa: float, omega: float, cfg: SimConfig) -> Tuple[float, float]:
    """First contact of the spiral with the line tangent to the unit circle
    at angle ``omega``, by trajectory marching.

    Marches theta upward from min(0, omega) - 2*pi in steps of
    ``cfg.march_step`` watching the signed distance d(theta); the first sign
    change is bisected to ``cfg.refine_tol``.  A marched local maximum of d
    inside the grazing band (width ~ |d''| * step^2) is refined by
    golden-section search: if the refined peak is positive the left crossing
    of the narrow excursion is bisected; if it is within _GRAZE_TOL of zero
    the contact is tangential and the peak itself is returned (accurate to
    ~1e-6 at an exact double root, where transversal refinement is
    impossible); otherwise the near miss is real and the march continues.

    Returns (theta_hit, arclength to theta_hit).
    """
    if kappa <= 0.0:
        raise ValueError("require kappa > 0")
    h = cfg.march_step
    band = (1.0 + kappa * kappa) ** 1.5 * h * h
    theta_start = min(0.0, omega) - TWO_PI
    guard_end = theta_start + math.pi
    limit = theta_start + 8.0 * math.pi
    theta = theta_start
    d = _signed_distance(kappa, omega, theta)
    if d >= 0.0:
        raise NumericalError("march started on or past the line")
    while theta < limit:
        theta2 = theta + h
        d2 = _signed_distance(kappa, omega, theta2)
        if d2 >= 0.0:
            if theta2 <= guard_end:
                raise NumericalError("contact inside the safety margin of the march")
            hit = _bisect_contact(kappa, omega, theta, theta2, cfg.refine_tol)
            return hit, arclength(kappa, hit)
        if d >= -band and d2 < d:
            peak, d_peak = _refine_local_max(kappa, omega, theta - h, theta2)
            if d_peak > 0.0:
                hit = _bisect_contact(kappa, omega, theta - h, peak, cfg.refine_tol)
                return hit, arclength(kappa, hit)
            if d_peak >= -_GRAZE_TOL:
                return peak, arclength(kappa, peak)
        theta, d = theta2, d2
    raise NumericalError("no contact found")


def _march_first_contacts(kappa: float, omegas: np.ndarray, march_step: float,
                          refine_tol: float) -> np.ndarray:
    """Vectorized version of the `spiral_first_contact` march.

    Same grid and the same detection rules; exp/cos along the march are
    advanced by per-step recurrences (one scalar factor for the radius, one
    rotation for the phase), which bisection later replaces with exact
    evaluations.  Grazing-band suspects are handed back to the scalar
    routine at a fine march step.
    """
    n = omegas.size
    theta_hit = np.empty(n, dtype=np.float64)
    h = march_step
    band = (1.0 + kappa * kappa) ** 1.5 * h * h
    growth = math.exp(kappa * h)
    ch, sh = math.cos(h), math.sin(h)
    guard_steps = int(math.ceil(math.pi / h))
    max_steps = int(math.ceil(8.0 * math.pi / h))

    theta = np.minimum(0.0, omegas) - TWO_PI
    radial = np.exp(kappa * theta)
    cos_ph = np.cos(theta - omegas)
    sin_ph = np.sin(theta - omegas)
    d_prev = radial * cos_ph - 1.0
    if (d_prev >= 0.0).any():
        raise NumericalError("march started on or past the line")
    idx = np.arange(n)

    suspects: List[int] = []
    cross_idx: List[np.ndarray] = []
    cross_hi: List[np.ndarray] = []
    steps = 0
    while idx.size:
        steps += 1
        if steps > max_steps:
            raise NumericalError("no contact found")
        radial *= growth
        cos_new = cos_ph * ch - sin_ph * sh
        sin_ph = sin_ph * ch + cos_ph * sh
        cos_ph = cos_new
        theta += h
        d = radial * cos_ph - 1.0
        crossed = d >= 0.0
        graze = (d_prev >= -band) & (d < d_prev) & ~crossed
        if crossed.any() or graze.any():
            if crossed.any():
                if steps <= guard_steps:
                    raise NumericalError("contact inside the safety margin of the march")
                cross_idx.append(idx[crossed])
                cross_hi.append(theta[crossed].copy())
            if graze.any():
                suspects.extend(idx[graze].tolist())
            keep = ~(crossed | graze)
            idx = idx[keep]
            theta = theta[keep]
            radial = radial[keep]
            cos_ph = cos_ph[keep]
            sin_ph = sin_ph[keep]
            d_prev = d[keep]
        else:
            d_prev = d

    if cross_idx:
        ci = np.concatenate(cross_idx)
        hi = np.concatenate(cross_hi)
        lo = hi - h
        om = omegas[ci]
        for _ in range(max(1, int(math.ceil(math.log2(h / refine_tol))))):
            mid = 0.5 * (lo + hi)
            on_or_past = np.exp(kappa * mid) * np.cos(mid - om) - 1.0 >= 0.0
            hi = np.where(on_or_past, mid, hi)
            lo = np.where(on_or_past, lo, mid)
        theta_hit[ci] = 0.5 * (lo + hi)

    if suspects:
        fine = SimConfig(seed=0, samples=1, march_step=min(march_step, 1e-3),
                         refine_tol=refine_tol)
        for s in suspects:
            theta_hit[s] = spiral_first_contact(kappa, float(omegas[s]), fine)[0]
    return theta_hit


def monte_carlo_mean_arclength(kappa: float, cfg: SimConfig) -> SampleStats:
    """Mean first-contact arclength over shoreline directions drawn
    uniformly from one full period [omega0, omega0 + 2*pi)."""
    if kappa <= 0.0:
        raise ValueError("require kappa > 0")
    _, omega0 = tangent_contact(Spiral(kappa, 1.0))
    us = uniform_block(cfg.seed, 0, cfg.samples)
    omegas = omega0 + TWO_PI * us
    hits = _march_first_contacts(kappa, omegas, cfg.march_step, cfg.refine_tol)
    factor = math.sqrt(1.0 + kappa * kappa) / kappa
    return summarize(factor * np.exp(kappa * hits))


def coil_marching_distance(gamma: float, x: float, cfg: SimConfig) -> float:
    """Travel distance to the signed target ``x``, found by walking the coil
    trajectory segment by segment.

    Starts a few segments below any that could reach ``x`` and solves each
    linear sweep exactly for position = x, so the result is exact up to
    floating point; no step size is involved.
    """
    if gamma <= 1.0:
        raise ValueError("require gamma > 1")
    if x == 0.0:
        raise ValueError("target at origin")
    ln_ratio = math.log(abs(x)) / math.log(gamma)
    k = min(math.floor(2.0 * ln_ratio) - 6, math.floor(ln_ratio) - 2)
    for _ in range(1000):
        start = (-gamma) ** k
        end = (-gamma) ** (k + 1)
        if math.isinf(start) or math.isinf(end):
            raise NumericalError("overflow: target beyond representable sweeps")
        if end != start:
            tau = (x - start) / (end - start)
            if 0.0 <= tau <= 1.0:
                return (gamma + 1.0) * gamma ** k * (1.0 / (gamma - 1.0) + tau)
        k += 1
    raise NumericalError("no segment reached the target")


def _ratio_at(gamma: float, xs: np.ndarray) -> np.ndarray:
    """Vectorized delta(x)/|x| via the bracket rule (both signs)."""
    out = np.empty(xs.size, dtype=np.float64)
    lg = math.log(gamma)
    pos = xs > 0.0
    if pos.any():
        x = xs[pos]
        i = np.ceil(np.log(x) / (2.0 * lg) - 1.0)
        i = np.where(gamma ** (2.0 * i) >= x, i - 1.0, i)
        i = np.where(gamma ** (2.0 * i + 2.0) < x, i + 1.0, i)
        out[pos] = 1.0 + 2.0 * gamma ** (2.0 * i + 2.0) / ((gamma - 1.0) * x)
    if (~pos).any():
        xa = -xs[~pos]
        j = np.ceil(np.log(xa) / (2.0 * lg) - 0.5)
        j = np.where(gamma ** (2.0 * j - 1.0) >= xa, j - 1.0, j)
        j = np.where(gamma ** (2.0 * j + 1.0) < xa, j + 1.0, j)
        out[~pos] = 1.0 + 2.0 * gamma ** (2.0 * j + 1.0) / ((gamma - 1.0) * xa)
    return out


def mixed_strategy_sample(gamma: float, x: float, cfg: SimConfig) -> SampleStats:
    """Sampled travel ratio delta(x)/x of the phase-randomized coil.

    Each sample draws a phase H uniform on [0, 2), shifts every turning
    point to +-gamma^(k+H), brackets the (positive) target by
    gamma^(2i+H) < x <= gamma^(2i+2+H), and pays
    delta = x + 2*gamma^(2i+2+H)/(gamma-1).
    """
    if gamma <= 1.0:
        raise ValueError("require gamma > 1")
    if x <= 0.0:
        raise ValueError("require a positive target")
    phases = uniform_block(cfg.seed, 0, cfg.samples, 0.0, 2.0)
    target_exp = math.log(x) / math.log(gamma)
    i = np.ceil((target_exp - phases) / 2.0) - 1.0
    i = np.where(gamma ** (2.0 * i + phases) >= x, i - 1.0, i)
    i = np.where(gamma ** (2.0 * i + 2.0 + phases) < x, i + 1.0, i)
    ratios = 1.0 + 2.0 * gamma ** (2.0 * i + 2.0 + phases) / ((gamma - 1.0) * x)
    return summarize(ratios)


def scan_worst_ratio(gamma: float, points: int) -> float:
    """Scanned maximum of delta(x)/|x| over a log-spaced grid of signed
    targets covering three periods, plus probes just above the jump points
    gamma^(2k) (positive side) and -gamma^(2k-1) (negative side) where the
    supremum is approached."""
    if gamma <= 1.0:
        raise ValueError("require gamma > 1")
    if points < 100:
        raise ValueError("require points >= 100")
    half = points // 2
    exps = np.linspace(-3.0, 3.0, half)
    ks = np.array([-1.0, 0.0, 1.0])
    probe_pos = gamma ** (2.0 * ks) * (1.0 + 1e-9)
    probe_neg = -(gamma ** (2.0 * ks - 1.0)) * (1.0 + 1e-9)
    xs = np.concatenate([gamma ** exps, -(gamma ** exps), probe_pos, probe_neg])
    return float(_ratio_at(gamma, xs).max())
