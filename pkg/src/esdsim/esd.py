"""Dephasing scenarios and entanglement-sudden-death analysis.

The one-parameter family evolves under local phase damping with its
corner coherence scaled by g(t), the product of the active decay
factors. Its negativity is max{0, x*g(t) - 1/8}: for x > 1/8 it hits
zero at a finite time (sudden death) while the coherence x*g(t) itself
only decays asymptotically. Closed forms used here:

    PT spectrum   {1/4, 1/4, 1/8, 1/8, (1 +/- 8*x*g(t))/8}
    negativity    max{0, x*g(t) - 1/8}
    death time    t* = 2*ln(8x) / rate_eff   (from g(t*) = 1/(8x))

where rate_eff is the sum of the active dephasing rates. The death-time
expression is derived by inverting the exponential decay factors; the
numeric bisection path below double-checks it rather than trusting it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import channels
from .channels import DephasingParams
from .entanglement import negativity
from .states import ANSATZ_X_MAX, DensityMatrix, ansatz_x, extract_corner

#: Corner values at or below 1/8 never produce entanglement.
ENTANGLEMENT_THRESHOLD_X = 0.125

_BISECTION_TOL = 1e-10


class ScenarioKind(enum.Enum):
    QUBIT_ONLY = "qubit"
    QUTRIT_ONLY = "qutrit"
    MULTI_LOCAL = "multilocal"


class EsdOutcome(enum.Enum):
    """Non-numeric death-time results."""

    NEVER_ENTANGLED = "never-entangled"
    NO_DEATH = "no-death"


EsdTime = Union[float, EsdOutcome]


class BracketError(RuntimeError):
    """The search window never reached the negativity-zero region."""


@dataclass(frozen=True)
class Scenario:
    """Which subsystems are noisy, the initial corner x, and the rates.

    rate_a is ignored by QUTRIT_ONLY and rate_b by QUBIT_ONLY; both act
    in MULTI_LOCAL.
    """

    kind: ScenarioKind
    x: float
    rate_a: float = 1.0
    rate_b: float = 1.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.x <= ANSATZ_X_MAX:
            raise ValueError(f"x must lie in [0, {ANSATZ_X_MAX}], got {self.x}")
        for name, rate in (("rate_a", self.rate_a), ("rate_b", self.rate_b)):
            if not math.isfinite(rate) or rate < 0.0:
                raise ValueError(f"{name} must be finite and >= 0, got {rate}")

    @property
    def noisy_a(self) -> bool:
        return self.kind in (ScenarioKind.QUBIT_ONLY, ScenarioKind.MULTI_LOCAL)

    @property
    def noisy_b(self) -> bool:
        return self.kind in (ScenarioKind.QUTRIT_ONLY, ScenarioKind.MULTI_LOCAL)

    def effective_rate(self) -> float:
        """Sum of the rates that actually act in this scenario."""
        rate = 0.0
        if self.noisy_a:
            rate += self.rate_a
        if self.noisy_b:
            rate += self.rate_b
        return rate

    def gamma_factors(self, t: float) -> tuple:
        """(gamma_a, gamma_b) at time t; an idle subsystem keeps factor 1."""
        ga = DephasingParams(self.rate_a, t).gamma if self.noisy_a else 1.0
        gb = DephasingParams(self.rate_b, t).gamma if self.noisy_b else 1.0
        return ga, gb

    def gamma_product(self, t: float) -> float:
        ga, gb = self.gamma_factors(t)
        return ga * gb


def evolve(scenario: Scenario, t: float) -> DensityMatrix:
    """Numerically evolve the x-state to time t through the Kraus channels."""
    rho = ansatz_x(scenario.x)
    if scenario.kind is ScenarioKind.QUBIT_ONLY:
        return channels.apply(channels.dephasing_qubit(DephasingParams(scenario.rate_a, t)), rho)
    if scenario.kind is ScenarioKind.QUTRIT_ONLY:
        return channels.apply(channels.dephasing_qutrit(DephasingParams(scenario.rate_b, t)), rho)
    return channels.apply_multilocal(
        channels.dephasing_qubit(DephasingParams(scenario.rate_a, t)),
        channels.dephasing_qutrit(DephasingParams(scenario.rate_b, t)),
        rho,
    )


def analytic_negativity(scenario: Scenario, t: float) -> float:
    """Closed-form negativity max{0, x*g(t) - 1/8}."""
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t}")
    return max(0.0, scenario.x * scenario.gamma_product(t) - 0.125)


def pt_spectrum_closed_form(scenario: Scenario, t: float) -> np.ndarray:
    """Closed-form PT spectrum of the evolved x-state, ascending."""
    g = scenario.gamma_product(t)
    xg = scenario.x * g
    return np.sort(np.array([0.25, 0.25, 0.125, 0.125, (1.0 + 8.0 * xg) / 8.0, (1.0 - 8.0 * xg) / 8.0]))


def analytic_esd_time(scenario: Scenario) -> EsdTime:
    """Closed-form death time, or the variant explaining why there is none.

    NEVER_ENTANGLED when x <= 1/8 (negativity starts at zero); NO_DEATH
    when x > 1/8 but no noise acts, so the entanglement persists forever.
    """
    if scenario.x <= ENTANGLEMENT_THRESHOLD_X:
        return EsdOutcome.NEVER_ENTANGLED
    rate = scenario.effective_rate()
    if rate == 0.0:
        return EsdOutcome.NO_DEATH
    return 2.0 * math.log(8.0 * scenario.x) / rate


def default_bracket(scenario: Scenario) -> float:
    """Search window generous enough for any x in range: 10x the worst t*."""
    rate = scenario.effective_rate()
    if rate == 0.0:
        raise BracketError("no noise acts in this scenario; negativity never decays")
    return 10.0 * (2.0 * math.log(2.0)) / rate


def numeric_esd_time(scenario: Scenario, t_max: float | None = None, tol: float = _BISECTION_TOL) -> EsdTime:
    """Find the death time by bisection on the numeric negativity.

    Evaluates the full evolve -> partial transpose -> eigenvalue pipeline
    at each probe, so this is an independent check on the closed form.
    Returns NEVER_ENTANGLED when the state starts with zero negativity.
    Raises BracketError when negativity is still positive at t_max.
    """
    if negativity(evolve(scenario, 0.0)).value == 0.0:
        return EsdOutcome.NEVER_ENTANGLED
    if t_max is None:
        t_max = default_bracket(scenario)
    if t_max <= 0.0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    if negativity(evolve(scenario, t_max)).value > 0.0:
        raise BracketError(
            f"negativity is still positive at t_max = {t_max}; enlarge the search window"
        )
    lo, hi = 0.0, float(t_max)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if negativity(evolve(scenario, mid)).value > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class CurvePoint:
    """One sampled time along a dephasing trajectory."""

    t: float
    gamma_a: float
    gamma_b: float
    corner: float
    negativity_numeric: float
    negativity_analytic: float
    min_pt_eigenvalue: float


@dataclass(frozen=True)
class EsdReport:
    """A sampled negativity curve plus both death-time determinations."""

    scenario: Scenario
    esd_time: EsdTime
    analytic_time: EsdTime
    curve: tuple


def sweep(scenario: Scenario, t_grid: Sequence[float]) -> EsdReport:
    """Sample the trajectory on t_grid and determine the death time.

    Each point runs the numeric pipeline and the closed form side by
    side. esd_time comes from bisection when the analytic result is
    finite and mirrors the analytic variant otherwise.
    """
    points = []
    for t in t_grid:
        t = float(t)
        rho = evolve(scenario, t)
        res = negativity(rho)
        ga, gb = scenario.gamma_factors(t)
        points.append(
            CurvePoint(
                t=t,
                gamma_a=ga,
                gamma_b=gb,
                corner=extract_corner(rho),
                negativity_numeric=res.value,
                negativity_analytic=analytic_negativity(scenario, t),
                min_pt_eigenvalue=res.min_pt_eigenvalue,
            )
        )
    analytic_time = analytic_esd_time(scenario)
    if isinstance(analytic_time, EsdOutcome):
        esd_time: EsdTime = analytic_time
    else:
        esd_time = numeric_esd_time(scenario)
    return EsdReport(scenario=scenario, esd_time=esd_time, analytic_time=analytic_time, curve=tuple(points))
