"""The 1-D logarithmic coil: a zig-zag search of the line with turning
points at +gamma^(2i) and -gamma^(2i-1).

Covers the trajectory and its cumulative path length, the travel distance
delta(X) to a signed target, the worst-case ratio sup delta(X)/|X| with its
optimal expansion ratio, the normalized average of delta(x)/|x| over
symmetric intervals (a log-periodic function of the interval radius, whose
period extrema give two deterministic mean criteria), and the
phase-randomized mixed strategy with its expected ratio 1 + (gamma+1)/ln(gamma).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Tuple

from .numerics import Bracket, lambert_w0, minimize_scalar

__all__ = [
    "Coil",
    "CoilHit",
    "RatioExtrema",
    "MixedStrategy",
    "MeanOptima",
    "position",
    "path_length_to",
    "bracket_index",
    "travel_distance",
    "worst_case_ratio",
    "optimal_minmax_coil",
    "bracket_integral_pos",
    "bracket_integral_neg",
    "average_ratio",
    "ratio_extrema",
    "optimal_minmean_coil",
    "mixed_expected_ratio",
    "optimal_mixed",
]


@dataclass(frozen=True)
class Coil:
    """Expansion ratio ``gamma`` > 1."""

    gamma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.gamma) and self.gamma > 1.0):
            raise ValueError("coil requires gamma > 1")


@dataclass(frozen=True)
class CoilHit:
    """A resolved target: signed position ``target``, its bracket ``index``,
    and the travel distance ``delta`` to reach it."""

    target: float
    index: int
    delta: float

    def __post_init__(self) -> None:
        if not self.delta >= abs(self.target) > 0.0:
            raise ValueError("delta must be at least |target| > 0")


@dataclass(frozen=True)
class RatioExtrema:
    """Extrema of the normalized average ratio over one log-period."""

    min_value: float
    max_value: float

    def __post_init__(self) -> None:
        if not 1.0 < self.min_value < self.max_value:
            raise ValueError("require 1 < min_value < max_value")


@dataclass(frozen=True)
class MixedStrategy:
    """A phase-randomized coil and its target-independent expected ratio
    1 + (gamma + 1)/ln(gamma)."""

    gamma: float
    expected_ratio: float

    def __post_init__(self) -> None:
        if self.gamma <= 1.0:
            raise ValueError("require gamma > 1")
        want = 1.0 + (self.gamma + 1.0) / math.log(self.gamma)
        if abs(self.expected_ratio - want) > 1e-12 * max(1.0, abs(want)):
            raise ValueError("expected_ratio inconsistent with gamma")


class MeanOptima(NamedTuple):
    gamma_for_min: float
    mean_min: float
    gamma_for_max: float
    mean_max: float


def position(coil: Coil, t: float) -> float:
    """Position at time ``t``: x = (-gamma)^floor(t) * (1 - (gamma+1)*(t - floor(t))).

    Continuous in t; local maxima at (gamma^(2i), t = 2i), local minima at
    (-gamma^(2i-1), t = 2i-1).
    """
    g = coil.gamma
    k = math.floor(t)
    return (-g) ** k * (1.0 - (g + 1.0) * (t - k))


def path_length_to(coil: Coil, t: float) -> float:
    """Cumulative |dx| travelled up to time ``t`` (from t = -infinity).

    Segment k has length gamma^k * (gamma + 1), so at integer t = k the total
    is (gamma+1) * gamma^k / (gamma-1), interpolating linearly in between.
    """
    g = coil.gamma
    k = math.floor(t)
    return (g + 1.0) * g ** k * (1.0 / (g - 1.0) + (t - k))


def bracket_index(coil: Coil, target: float) -> int:
    """Bracket index of a signed target.

    For X > 0 the index i satisfies gamma^(2i) < X <= gamma^(2i+2); for
    X < 0 it satisfies gamma^(2i-1) < -X <= gamma^(2i+1).  The ceiling
    formula ceil(ln|X| / (2 ln gamma) - 1) (resp. - 1/2) is evaluated first
    and then nudged until the defining inequalities hold exactly, since the
    ceiling can misround in floating point when X sits at a power of gamma;
    the inequalities are authoritative.
    """
    g = coil.gamma
    if target == 0.0:
        raise ValueError("target at origin")
    lg = math.log(g)
    if target > 0.0:
        i = math.ceil(math.log(target) / (2.0 * lg) - 1.0)
        while g ** (2 * i) >= target:
            i -= 1
        while g ** (2 * i + 2) < target:
            i += 1
    else:
        xa = -target
        i = math.ceil(math.log(xa) / (2.0 * lg) - 0.5)
        while g ** (2 * i - 1) >= xa:
            i -= 1
        while g ** (2 * i + 1) < xa:
            i += 1
    return i


def travel_distance(coil: Coil, target: float) -> CoilHit:
    """Travel distance to reach a signed target, in closed form.

    delta = X + 2*gamma^(2i+2)/(gamma-1) for X > 0 and
    delta = -X + 2*gamma^(2i+1)/(gamma-1) for X < 0, equal to the path
    length at the first trajectory time with position(t) = X.
    """
    g = coil.gamma
    i = bracket_index(coil, target)
    if target > 0.0:
        delta = target + 2.0 * g ** (2 * i + 2) / (g - 1.0)
    else:
        delta = -target + 2.0 * g ** (2 * i + 1) / (g - 1.0)
    return CoilHit(target=target, index=i, delta=delta)


def worst_case_ratio(coil: Coil) -> float:
    """sup over targets of delta(X)/|X|, equal to (2*gamma^2 + gamma - 1)/(gamma - 1).

    The supremum is approached, not attained, as X -> gamma^(2k) from above
    (and -X -> gamma^(2k-1) from above on the negative side).
    """
    g = coil.gamma
    return (2.0 * g * g + g - 1.0) / (g - 1.0)


def optimal_minmax_coil() -> Tuple[float, float]:
    """The expansion ratio minimizing the worst-case ratio: (2, 9).

    Found by bracketed minimization on [1.2, 5] and checked against the
    analytic critical point gamma = 2 of (2g^2 + g - 1)/(g - 1).
    """
    report = minimize_scalar(lambda g: worst_case_ratio(Coil(g)), Bracket(1.2, 5.0),
                             tol=1e-10)
    gamma = report.root_or_argmin
    if abs(gamma - 2.0) > 1e-9:
        raise AssertionError(f"minimizer {gamma!r} disagrees with analytic critical point 2")
    return gamma, report.residual_or_value


def bracket_integral_pos(i: int, gamma: float, x: float) -> float:
    """Integral of delta(s)/s over [gamma^(2i), x] for x inside bracket i:
    (x - gamma^(2i)) + (2*gamma^(2i+2)/(gamma-1)) * (ln x - 2i ln gamma)."""
    return (x - gamma ** (2 * i)) + (2.0 * gamma ** (2 * i + 2) / (gamma - 1.0)) * (
        math.log(x) - 2 * i * math.log(gamma))


def bracket_integral_neg(j: int, gamma: float, x: float) -> float:
    """Integral of delta(s)/s over [x, -gamma^(2j-1)] for negative x inside
    bracket j: (x + gamma^(2j-1)) - (2*gamma^(2j+1)/(gamma-1)) * (ln(-x) - (2j-1) ln gamma).

    Note the integrand is delta(s)/s, not delta(s)/|s|, so the value is
    negative; the averaging below subtracts it.
    """
    return (x + gamma ** (2 * j - 1)) - (2.0 * gamma ** (2 * j + 1) / (gamma - 1.0)) * (
        math.log(-x) - (2 * j - 1) * math.log(gamma))


def average_ratio(coil: Coil, x: float) -> float:
    """Normalized average (1/(2x)) * integral of delta(s)/|s| over [-x, x].

    The infinite stacks of whole-bracket pieces below the current brackets
    are geometric series and are summed in closed form
    (sum of gamma^(2p) for p <= i-1 equals gamma^(2i)/(gamma^2 - 1));
    only the two partial brackets need the logarithmic terms.  Log-periodic
    in x with period gamma^2.
    """
    if x <= 0.0:
        raise ValueError("require x > 0")
    g = coil.gamma
    lg = math.log(g)
    i = bracket_index(coil, x)
    j = bracket_index(coil, -x)
    series = 4.0 * lg / ((g - 1.0) ** 2 * (g + 1.0))
    whole_pos = g ** (2 * i) + series * g ** (2 * i + 2)
    whole_neg = g ** (2 * j - 1) + series * g ** (2 * j + 1)
    partial_pos = bracket_integral_pos(i, g, x)
    partial_neg = bracket_integral_neg(j, g, -x)
    return (whole_pos + partial_pos + whole_neg - partial_neg) / (2.0 * x)


def _ratio_min(g: float) -> float:
    return 1.0 + g * (g + 1.0) * math.log(g) / (g - 1.0) ** 2


def _ratio_max(g: float) -> float:
    return 1.0 + (g + 1.0) / (g - 1.0) * g ** (g / (g - 1.0)) / math.e


def ratio_extrema(coil: Coil) -> RatioExtrema:
    """Closed-form extrema of the normalized average ratio over one period:

        min = 1 + gamma*(gamma+1)*ln(gamma)/(gamma-1)^2
        max = 1 + (1/e) * (gamma+1)/(gamma-1) * gamma^(gamma/(gamma-1))

    The minimum is attained at interval radii x = gamma^(2k); the maximum at
    an interior point of each period.
    """
    g = coil.gamma
    return RatioExtrema(min_value=_ratio_min(g), max_value=_ratio_max(g))


def optimal_minmean_coil() -> MeanOptima:
    """Expansion ratios minimizing each period extremum of the normalized
    average: the period-minimum criterion gives gamma = 5.7041372673... with
    mean 4.0089813375..., the period-maximum criterion gamma = 3.2232549401...
    with mean 4.8131558458....  Both are returned; neither dominates the
    other a priori."""
    rmin = minimize_scalar(_ratio_min, Bracket(1.5, 12.0), tol=1e-10)
    rmax = minimize_scalar(_ratio_max, Bracket(1.5, 12.0), tol=1e-10)
    return MeanOptima(gamma_for_min=rmin.root_or_argmin, mean_min=rmin.residual_or_value,
                      gamma_for_max=rmax.root_or_argmin, mean_max=rmax.residual_or_value)


def mixed_expected_ratio(gamma: float) -> MixedStrategy:
    """Expected ratio E[delta(X)]/X of the phase-randomized coil family,
    1 + (gamma+1)/ln(gamma); independent of the (positive) target."""
    if gamma <= 1.0:
        raise ValueError("require gamma > 1")
    return MixedStrategy(gamma=gamma,
                         expected_ratio=1.0 + (gamma + 1.0) / math.log(gamma))


def optimal_mixed() -> MixedStrategy:
    """The expansion ratio minimizing the mixed-strategy expected ratio:
    gamma = 1/W(1/e) = 3.591121476669..., where stationarity forces
    ln(gamma) = 1 + 1/gamma and hence an expected ratio of exactly 1 + gamma.

    The closed form is cross-checked against bracketed minimization of
    ``mixed_expected_ratio`` on [1.5, 10].
    """
    gamma = 1.0 / lambert_w0(math.exp(-1.0))
    report = minimize_scalar(lambda g: 1.0 + (g + 1.0) / math.log(g), Bracket(1.5, 10.0),
                             tol=1e-10)
    if abs(report.root_or_argmin - gamma) > 1e-9:
        raise AssertionError(
            f"minimizer {report.root_or_argmin!r} disagrees with 1/W(1/e) = {gamma!r}")
    return mixed_expected_ratio(gamma)
