"""Objective functions over the spiral growth rate kappa and their optima.

Two criteria are covered, both with the shoreline distance normalized to
R = 1 (lengths simply scale by R, kappa does not change):

* min-max: worst-case arclength until every candidate shoreline at distance
  1 has been met, i.e. sqrt(1 + kappa^2)/kappa * e^(kappa*theta1).
* min-mean: arclength to first contact averaged over a uniformly random
  shoreline direction.

Each optimum can be found two independent ways: directly, by bracketed
scalar minimization of the objective, and through a 2-D trigonometric
system in the angles (alpha, beta) where tan(alpha) = kappa and
sec(beta) = e^(kappa*theta1).  Both routes are exposed and must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .numerics import Bracket, SolveReport, minimize_scalar, solve_system2
from .spiral_geometry import Spiral, second_contact

__all__ = [
    "AnglePair",
    "Optimum",
    "minmax_objective",
    "erroneous_objective",
    "minmean_objective",
    "minimize_minmax",
    "minimize_minmean",
    "minmax_system_residuals",
    "solve_minmax_system",
    "phi",
    "psi",
    "xi",
    "minmean_system_residuals",
    "solve_minmean_system",
    "MINMAX_BRACKET",
    "MINMEAN_BRACKET",
]

TWO_PI = 2.0 * math.pi

# Search brackets: both contain the optima with wide margin and stay clear of
# the kappa -> 0 divergence.  Unimodality on them is checked by a scan in the
# test suite rather than assumed.
MINMAX_BRACKET = Bracket(0.05, 1.0)
MINMEAN_BRACKET = Bracket(0.1, 1.0)


@dataclass(frozen=True)
class AnglePair:
    """The unknowns (alpha, beta) of the trigonometric systems, both in
    (0, pi/2)."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 0.5 * math.pi and 0.0 < self.beta < 0.5 * math.pi):
            raise ValueError("angles must lie in (0, pi/2)")


@dataclass(frozen=True)
class Optimum:
    """A spiral optimum: kappa, the objective value, the equivalent angle
    pair, and the scalar-minimizer report."""

    kappa: float
    objective_value: float
    alpha: float
    beta: float
    report: SolveReport

    def __post_init__(self) -> None:
        if abs(self.kappa - math.tan(self.alpha)) > 1e-9:
            raise ValueError("kappa and alpha inconsistent: kappa != tan(alpha)")
        if not self.objective_value > 0.0:
            raise ValueError("objective value must be positive")


def _contact_angles(kappa: float):
    contact = second_contact(Spiral(kappa, 1.0))
    return contact.theta0, contact.omega0, contact.theta1


def _angles_for(kappa: float) -> Tuple[float, float]:
    """(alpha, beta) for a given kappa along the constraint curve:
    alpha = arctan(kappa), beta = theta0 + 2*pi - alpha - theta1."""
    theta0, _, theta1 = _contact_angles(kappa)
    alpha = math.atan(kappa)
    return alpha, theta0 + TWO_PI - alpha - theta1


def minmax_objective(kappa: float) -> float:
    """Worst-case search arclength sqrt(1 + kappa^2)/kappa * e^(kappa*theta1)
    at R = 1."""
    _, _, theta1 = _contact_angles(kappa)
    return math.sqrt(1.0 + kappa * kappa) / kappa * math.exp(kappa * theta1)


def erroneous_objective(kappa: float) -> float:
    """e^(kappa*theta1)/kappa: a historically mis-used stand-in for the
    worst-case arclength that omits the sqrt(1 + kappa^2) slope factor.
    Kept so the mistaken published estimates (0.22325, 13.49) are
    reproducible; never use it as the real objective."""
    _, _, theta1 = _contact_angles(kappa)
    return math.exp(kappa * theta1) / kappa


def minmean_objective(kappa: float) -> float:
    """Mean first-contact arclength over a uniform shoreline direction, R = 1.

    Closed form, with u = e^(kappa*theta0) and v = e^(kappa*theta1):

        sqrt(1 + kappa^2) / (2*pi*kappa) *
            [ v/kappa + ln(v + sqrt(v^2 - 1)) - u/kappa + ln(u + sqrt(u^2 - 1)) ]

    Equivalently w*csc(alpha)/(2*pi) with w = (v - u)*cot(alpha)
    + ln(v + sqrt(v^2 - 1)) + ln(u + sqrt(u^2 - 1)); the test suite checks
    both forms against each other and against direct quadrature.
    """
    theta0, _, theta1 = _contact_angles(kappa)
    u = math.exp(kappa * theta0)
    v = math.exp(kappa * theta1)
    return math.sqrt(1.0 + kappa * kappa) / (TWO_PI * kappa) * (
        v / kappa + math.log(v + math.sqrt(v * v - 1.0))
        - u / kappa + math.log(u + math.sqrt(u * u - 1.0)))


def _optimum_from(kappa_report: SolveReport) -> Optimum:
    kappa = kappa_report.root_or_argmin
    alpha, beta = _angles_for(kappa)
    return Optimum(kappa=kappa, objective_value=kappa_report.residual_or_value,
                   alpha=alpha, beta=beta, report=kappa_report)


def minimize_minmax() -> Optimum:
    """Minimize the worst-case arclength over kappa in [0.05, 1.0]."""
    return _optimum_from(minimize_scalar(minmax_objective, MINMAX_BRACKET, tol=1e-10))


def minimize_minmean() -> Optimum:
    """Minimize the mean arclength over kappa in [0.1, 1.0]."""
    return _optimum_from(minimize_scalar(minmean_objective, MINMEAN_BRACKET, tol=1e-10))


def minmax_system_residuals(pair: AnglePair) -> Tuple[float, float]:
    """Residuals of the two simultaneous equations characterizing the
    min-max optimum:

        cot(a) + cot(b) - (2*pi - a - b) * sec(a)^2             (stationarity)
        cos(a)/cos(b) - e^((2*pi - a - b) * tan(a))             (contact constraint)

    The second vanishes along the whole constraint curve beta(alpha), not
    just at the optimum.
    """
    a, b = pair.alpha, pair.beta
    r1 = 1.0 / math.tan(a) + 1.0 / math.tan(b) - (TWO_PI - a - b) / math.cos(a) ** 2
    r2 = math.cos(a) / math.cos(b) - math.exp((TWO_PI - a - b) * math.tan(a))
    return r1, r2


# Newton starting points, read off the known optima: alpha = arctan(kappa*)
# rounded to (0.2, 0.36), beta from sec(beta) = objective * sin(alpha) for the
# min-max case and from the contact constraint for the min-mean case.
MINMAX_GUESS = AnglePair(0.2, 1.2)
MINMEAN_GUESS = AnglePair(0.36, 1.1)


def solve_minmax_system(guess: AnglePair = MINMAX_GUESS) -> AnglePair:
    """Solve the min-max angle system by damped Newton iteration."""
    a, b = solve_system2(
        lambda x, y: minmax_system_residuals(AnglePair(x, y)), (guess.alpha, guess.beta),
        tol=1e-13)
    return AnglePair(a, b)


def phi(pair: AnglePair) -> float:
    """First aggregate of the mean-arclength stationarity identity:
    (-2*csc(a) + ln(sec(a) + tan(a)) + ln(sec(b) + tan(b))) * (cot(a) + cot(b))."""
    a, b = pair.alpha, pair.beta
    return ((-2.0 / math.sin(a)
             + math.log(1.0 / math.cos(a) + math.tan(a))
             + math.log(1.0 / math.cos(b) + math.tan(b)))
            * (1.0 / math.tan(a) + 1.0 / math.tan(b)))


def psi(pair: AnglePair) -> float:
    """Second aggregate: (a + b - 2*pi) * (sec(a)*csc(b) + csc(a)*sec(b)) * sec(a).
    Negative for every valid pair, since a + b < 2*pi."""
    a, b = pair.alpha, pair.beta
    return ((a + b - TWO_PI)
            * (1.0 / (math.cos(a) * math.sin(b)) + 1.0 / (math.sin(a) * math.cos(b)))
            / math.cos(a))


def xi(pair: AnglePair) -> float:
    """Third aggregate: sec(a) - cot(a)*csc(b)
    + (tan(a)*cot(b) - csc(a)*csc(b))*sec(a) - (cot(a)^2 + csc(a)^2)*sec(b)."""
    a, b = pair.alpha, pair.beta
    return (1.0 / math.cos(a)
            - (1.0 / math.tan(a)) / math.sin(b)
            + (math.tan(a) / math.tan(b) - 1.0 / (math.sin(a) * math.sin(b))) / math.cos(a)
            - (1.0 / math.tan(a) ** 2 + 1.0 / math.sin(a) ** 2) / math.cos(b))


def minmean_system_residuals(pair: AnglePair) -> Tuple[float, float]:
    """Residuals characterizing the min-mean optimum: the stationarity
    balance phi + psi - xi (kept term-for-term, no simplification) and the
    same contact constraint as the min-max system."""
    a, b = pair.alpha, pair.beta
    r1 = phi(pair) + psi(pair) - xi(pair)
    r2 = math.cos(a) / math.cos(b) - math.exp((TWO_PI - a - b) * math.tan(a))
    return r1, r2


def solve_minmean_system(guess: AnglePair = MINMEAN_GUESS) -> AnglePair:
    """Solve the min-mean angle system by damped Newton iteration."""
    def residuals(x: float, y: float) -> Tuple[float, float]:
        if not (0.0 < x < 0.5 * math.pi and 0.0 < y < 0.5 * math.pi):
            raise ValueError("outside angle domain")
        return minmean_system_residuals(AnglePair(x, y))

    a, b = solve_system2(residuals, (guess.alpha, guess.beta), tol=1e-13)
    return AnglePair(a, b)
