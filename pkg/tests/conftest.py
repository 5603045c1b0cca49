"""Shared oracles and reporting helpers for the test suite.

Three independent sources of truth back the library code:

* 60-digit partial sums of the Mittag-Leffler series (mpmath) for the linear
  relaxation problem,
* classical closed forms at alpha = 1 (logistic and quadratic-linear laws),
* a perturb-and-integrate probe that tags an equilibrium by whether nearby
  trajectories approach it or escape from it.

Acceptance tests register one verdict line each through record_acceptance;
the terminal-summary hook reprints them after the run so the per-criterion
results stay visible regardless of output capturing.
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np

from fracpop import (
    Classification,
    Cubic,
    CubicCoefficients,
    BlowUpError,
    FractionalIVP,
    frac_adams_pece,
)

mp.mp.dps = 60

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(criterion: str, ok: bool, detail: str) -> bool:
    """Store and print one acceptance verdict line."""
    line = f"ACCEPTANCE {criterion} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def ml_series(alpha: float, z: float, terms: int = 200) -> float:
    """Partial sum of the Mittag-Leffler series in 60-digit arithmetic."""
    total = mp.mpf(0)
    for k in range(terms + 1):
        total += mp.mpf(z) ** k / mp.gamma(mp.mpf(alpha) * k + 1)
    return float(total)


def mp_gamma(t: float) -> float:
    """Gamma in 60-digit arithmetic, rounded to double."""
    return float(mp.gamma(mp.mpf(t)))


def classical_logistic(r: float, K: float, x0: float, t: float) -> float:
    """Exact solution of x' = r x (1 - x/K)."""
    e = math.exp(r * t)
    return K * x0 * e / (K + x0 * (e - 1.0))


def classical_quadratic_linear(b: float, c: float, x0: float, t: float) -> float:
    """Exact solution of x' = b x**2 + c x (c may not vanish)."""
    e = math.exp(c * t)
    return c * x0 * e / (c - b * x0 * (e - 1.0))


def simulated_tag(
    coeffs: CubicCoefficients,
    x_eq: float,
    lam: float,
    delta: float = 1e-3,
) -> Classification | None:
    """Tag an equilibrium by integrating from x_eq +/- delta at alpha = 1.

    The horizon starts at a few linear e-folding times of the eigenvalue and
    is tripled until both perturbed runs give a verdict: escape to ten times
    the perturbation means unstable, decay to a tenth of it on both sides
    means asymptotically stable.  Tags are alpha independent for this scalar
    problem, so probing at alpha = 1 settles every order.
    """
    horizon = 1.5 * math.log(10.0) / abs(lam)
    model = Cubic(coeffs.a, coeffs.b, coeffs.c)
    for _ in range(4):
        verdicts = []
        for sign in (1.0, -1.0):
            ivp = FractionalIVP(1.0, model, x_eq + sign * delta, horizon)
            try:
                trajectory = frac_adams_pece(ivp, 400)
            except BlowUpError:
                verdicts.append("escape")
                continue
            dist = np.abs(trajectory.values - x_eq)
            if np.max(dist) >= 10.0 * delta:
                verdicts.append("escape")
            elif dist[-1] <= delta / 10.0:
                verdicts.append("approach")
            else:
                verdicts.append("undecided")
        if "escape" in verdicts:
            return Classification.UNSTABLE
        if verdicts == ["approach", "approach"]:
            return Classification.ASYMPTOTICALLY_STABLE
        horizon *= 3.0
    return None


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
