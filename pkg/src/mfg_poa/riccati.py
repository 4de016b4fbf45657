"""Closed-form scalar Riccati terminal-value problems with constant coefficients.

The equation solved here is

    rho' - B rho^2 - 2 A rho + C = 0 on [0, T],   rho(T) = D.

For B != 0, B*D >= 0 and B*C > 0 the unique global solution is

    rho_t = [C (1 - E) + D (dp - dm E)] / [B D (1 - E) + dp E - dm],
    E = exp(-(dp - dm) (T - t)),   dp/dm = -A +/- sqrt(A^2 + B C),

which only ever exponentiates non-positive arguments, so it stays finite
for arbitrarily stiff coefficients.  Degenerate B (and additionally
degenerate A) fall back to the linear-equation limits

    rho_t = (D - C / (2A)) exp(-2A (T - t)) + C / (2A),
    rho_t = D + C (T - t),

selected by relative thresholds on |B| and |A|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import BadGrid, IllPosed, OutOfDomain
from .quadrature import simpson

REGIME_FULL = "FULL"
REGIME_LINEAR_A = "LINEAR_A"
REGIME_LINEAR_0 = "LINEAR_0"

# Relative degeneracy thresholds for regime selection.
_B_RTOL = 1e-12
_A_RTOL = 1e-12

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class RiccatiSpec:
    """Constant coefficients (A, B, C, D) of one scalar Riccati problem."""

    A: float
    B: float
    C: float
    D: float

    def __post_init__(self):
        for name in ("A", "B", "C", "D"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"coefficient {name} must be finite")

    def discriminant(self) -> float:
        """B D^2 + 2 A D - C, whose sign fixes the monotonicity of the solution."""
        return self.B * self.D * self.D + 2.0 * self.A * self.D - self.C


@dataclass(frozen=True)
class RiccatiEval:
    """Evaluator for one solved Riccati problem on [0, T].

    ``delta_plus``/``delta_minus`` are the characteristic roots
    -A +/- sqrt(A^2 + B C); they are only defined in the FULL regime.
    """

    spec: RiccatiSpec
    T: float
    regime: str
    delta_plus: float | None = None
    delta_minus: float | None = None

    def _check_domain(self, t: np.ndarray) -> None:
        if np.any(t < 0.0) or np.any(t > self.T):
            raise OutOfDomain(f"t must lie in [0, {self.T}]")

    def evaluate(self, t: ArrayLike) -> ArrayLike:
        """Solution value at time(s) t in [0, T]."""
        t_arr = np.asarray(t, dtype=float)
        self._check_domain(t_arr)
        A, B, C, D = self.spec.A, self.spec.B, self.spec.C, self.spec.D
        if self.regime == REGIME_FULL:
            gap = self.delta_plus - self.delta_minus
            e = np.exp(-gap * (self.T - t_arr))
            num = C * (1.0 - e) + D * (self.delta_plus - self.delta_minus * e)
            den = B * D * (1.0 - e) + self.delta_plus * e - self.delta_minus
            out = num / den
        elif self.regime == REGIME_LINEAR_A:
            c2a = C / (2.0 * A)
            out = (D - c2a) * np.exp(-2.0 * A * (self.T - t_arr)) + c2a
        else:
            out = D + C * (self.T - t_arr)
        return float(out) if np.ndim(t) == 0 else out

    def derivative(self, t: ArrayLike) -> ArrayLike:
        """Exact time derivative of the solution at t in [0, T]."""
        t_arr = np.asarray(t, dtype=float)
        self._check_domain(t_arr)
        A, B, C, D = self.spec.A, self.spec.B, self.spec.C, self.spec.D
        if self.regime == REGIME_FULL:
            gap = self.delta_plus - self.delta_minus
            e = np.exp(-gap * (self.T - t_arr))
            den = B * D * (1.0 - e) + self.delta_plus * e - self.delta_minus
            out = self.spec.discriminant() * gap * gap * e / (den * den)
        elif self.regime == REGIME_LINEAR_A:
            out = (2.0 * A * D - C) * np.exp(-2.0 * A * (self.T - t_arr))
        else:
            out = -C * np.ones_like(t_arr)
        return out if isinstance(out, np.ndarray) and np.ndim(t) else float(out)

    def integrate(self, t0: float, t1: float, n: int) -> float:
        """Composite-Simpson integral of the solution over [t0, t1] on n points."""
        if n < 3 or n % 2 == 0:
            raise BadGrid(f"need odd n >= 3, got {n}")
        if not (0.0 <= t0 <= t1 <= self.T):
            raise OutOfDomain(f"need 0 <= t0 <= t1 <= {self.T}")
        if t0 == t1:
            return 0.0
        ts = np.linspace(t0, t1, n)
        return simpson(self.evaluate(ts), ts[1] - ts[0])


def solve(spec: RiccatiSpec, T: float) -> RiccatiEval:
    """Select the regime for ``spec`` on [0, T] and return its evaluator.

    Raises IllPosed when |B| is non-degenerate but the sign conditions
    B*D >= 0, B*C > 0 fail, since global existence is then not guaranteed.
    """
    if not (T > 0.0, np.isfinite(T)) == (True, True):
        raise ValueError(f"horizon T must be positive and finite, got {T}")
    A, B, C, D = spec.A, spec.B, spec.C, spec.D
    b_scale = max(1.0, abs(A), abs(C), abs(D))
    if abs(B) < _B_RTOL * b_scale:
        a_scale = max(1.0, abs(C), abs(D))
        if abs(A) < _A_RTOL * a_scale:
            return RiccatiEval(spec, T, REGIME_LINEAR_0)
        return RiccatiEval(spec, T, REGIME_LINEAR_A)
    if B * D < 0.0:
        raise IllPosed(f"B*D = {B * D} < 0")
    if B * C <= 0.0:
        raise IllPosed(f"B*C = {B * C} <= 0")
    root = np.sqrt(A * A + B * C)
    return RiccatiEval(spec, T, REGIME_FULL, delta_plus=-A + root, delta_minus=-A - root)
