"""Exact geometry of the outward logarithmic spiral r = e^(kappa * theta).

Tangent lines of the spiral and of the distance-R circle, the unique line
tangent to both (with its spiral-side contact angle theta0, circle-side
tangency angle omega0, and second spiral contact theta1), the scaling of
theta1 in R, and the arclength function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .numerics import Bracket, find_root

__all__ = [
    "Spiral",
    "LineGeneral",
    "TangentContact",
    "line_distance_to_origin",
    "circle_tangent_radius",
    "spiral_tangent_slope",
    "tangent_contact",
    "second_contact",
    "scale_theta1",
    "arclength",
]

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Spiral:
    """Growth rate ``kappa`` (> 0) and shoreline distance ``radius`` (> 0)."""

    kappa: float
    radius: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.kappa) and self.kappa > 0.0):
            raise ValueError("spiral requires kappa > 0")
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise ValueError("spiral requires radius > 0")


@dataclass(frozen=True)
class LineGeneral:
    """A line in general form a*x + b*y + c = 0 with (a, b) != (0, 0)."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("degenerate line: (a, b) must not both be zero")


@dataclass(frozen=True)
class TangentContact:
    """Contact angles of the doubly tangent line: tangency at ``theta0`` on
    the spiral and ``omega0`` on the circle, and the second spiral contact
    ``theta1``.  Angles are unwrapped, so omega0 < theta0 < theta1 < theta0 + 2*pi.
    """

    theta0: float
    omega0: float
    theta1: float

    def __post_init__(self) -> None:
        if not self.omega0 < self.theta0 < self.theta1 < self.theta0 + TWO_PI:
            raise ValueError("contact angles out of order")


def line_distance_to_origin(line: LineGeneral) -> float:
    """Distance from the origin to the line a*x + b*y + c = 0."""
    return abs(line.c) / math.hypot(line.a, line.b)


def circle_tangent_radius(R: float, omega: float, theta: float) -> float:
    """Polar radius r(theta) of the line tangent to the radius-R circle at
    polar angle ``omega``: r = R * sec(theta - omega).

    Only the half-plane cos(theta - omega) > 0 belongs to the line.
    """
    c = math.cos(theta - omega)
    if c <= 0.0:
        raise ValueError("angle outside line's half-plane")
    return R / c


def spiral_tangent_slope(kappa: float, theta: float) -> float:
    """Slope of the spiral's tangent line at parameter ``theta``.

    m = (kappa*sin(theta) + cos(theta)) / (kappa*cos(theta) - sin(theta)).
    Raises where the tangent is vertical; callers needing the vertical case
    should build the LineGeneral form instead.
    """
    num = kappa * math.sin(theta) + math.cos(theta)
    den = kappa * math.cos(theta) - math.sin(theta)
    if den == 0.0:
        raise ValueError("vertical tangent: slope undefined")
    return num / den


def tangent_contact(spiral: Spiral) -> Tuple[float, float]:
    """Contact angles (theta0, omega0) of the one line tangent to both the
    spiral and the circle of radius ``spiral.radius``.

    theta0 = (ln R + ln(1 + kappa^2) / 2) / kappa in closed form, with
    omega0 = theta0 - arctan(kappa); arctan(kappa) equals
    arccos(1 / sqrt(1 + kappa^2)) and is the better-conditioned form.
    """
    k = spiral.kappa
    theta0 = (math.log(spiral.radius) + 0.5 * math.log1p(k * k)) / k
    omega0 = theta0 - math.atan(k)
    return theta0, omega0


def _offset_line_residual(k: float, R: float, omega0: float, theta: float) -> float:
    # Product form e^(k*theta) * cos(theta - omega0) - R; no secant poles.
    return math.exp(k * theta) * math.cos(theta - omega0) - R


def second_contact(spiral: Spiral) -> TangentContact:
    """The full contact triple (theta0, omega0, theta1).

    theta1 is the unique second solution of
    e^(kappa*theta) * cos(theta - omega0) = R with theta0 < theta < theta0 + 2*pi.
    The root is bracketed on [omega0 + 3*pi/2, omega0 + 2*pi]: the residual
    is exactly -R at the left end, positive at the right end, and strictly
    increasing between (cos > 0 and sin < 0 there), so the bracket always
    contains exactly one root.  The tangency at theta0 itself is a double
    root and is never solved numerically.
    """
    k, R = spiral.kappa, spiral.radius
    theta0, omega0 = tangent_contact(spiral)
    lo = omega0 + 1.5 * math.pi
    hi = omega0 + TWO_PI
    f_lo = _offset_line_residual(k, R, omega0, lo)
    f_hi = _offset_line_residual(k, R, omega0, hi)
    if not (f_lo < 0.0 < f_hi):
        raise ValueError(
            "second-contact bracket sign conditions violated for "
            f"kappa={k!r}, radius={R!r}")
    report = find_root(lambda th: _offset_line_residual(k, R, omega0, th),
                       Bracket(lo, hi), tol=1e-15)
    return TangentContact(theta0=theta0, omega0=omega0, theta1=report.root_or_argmin)


def scale_theta1(kappa: float, theta1_at_unit: float, R: float) -> float:
    """theta1 for shoreline distance ``R`` given theta1 at R = 1:
    theta1(R) = theta1(1) + ln(R) / kappa."""
    if kappa <= 0.0:
        raise ValueError("require kappa > 0")
    if R <= 0.0:
        raise ValueError("require R > 0")
    return theta1_at_unit + math.log(R) / kappa


def arclength(kappa: float, Theta: float) -> float:
    """Arclength of r = e^(kappa*theta) from theta = -infinity up to ``Theta``:
    sqrt(1 + kappa^2) / kappa * e^(kappa*Theta)."""
    if kappa <= 0.0:
        raise ValueError("require kappa > 0")
    return math.sqrt(1.0 + kappa * kappa) / kappa * math.exp(kappa * Theta)
