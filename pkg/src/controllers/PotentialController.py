from .BaseController import BaseController
from models.schemes.potential import (
    PotentialSpec, PotentialTerm, ConditionReport,
    ConditionS1, ConditionS2, ConditionS3, ConditionS4,
)
from typing import Optional
import numpy as np
import logging

logger = logging.getLogger(__name__)

class PotentialController(BaseController):
    """Polynomial potentials V(a) = m^2 a^2/2 - sum c a^(p+1)/(p+1) and their
    force f(psi) = (-m^2 + sum c |psi|^(p-1)) psi."""

    def __init__(self, spec: PotentialSpec, settings=None):
        super().__init__(settings=settings)

        self.spec = spec

    @staticmethod
    def canonical_cubic(mass_sq: float = 1.0, coupling: float = 1.0,
                        amplitude_cap: float = None) -> PotentialSpec:
        if amplitude_cap is None:
            # ten times the zero-frequency turning point sqrt(2 m^2 / b)
            amplitude_cap = 10.0 * np.sqrt(2.0 * mass_sq / coupling) if coupling > 0 else 10.0

        return PotentialSpec(
            mass_sq=mass_sq,
            terms=[PotentialTerm(coupling=coupling, exponent=3)],
            amplitude_cap=amplitude_cap,
        )

    def evaluate_potential(self, a):
        a = np.asarray(a, dtype=float)
        value = 0.5 * self.spec.mass_sq * a ** 2
        for term in self.spec.terms:
            value = value - term.coupling * np.abs(a) ** (term.exponent + 1) / (term.exponent + 1)

        return value if value.ndim else float(value)

    def potential_derivative(self, a):
        """V'(a) for real a >= 0."""
        a = np.asarray(a, dtype=float)
        value = self.spec.mass_sq * a
        for term in self.spec.terms:
            value = value - term.coupling * a ** term.exponent

        return value if value.ndim else float(value)

    def potential_second_derivative(self, a):
        a = np.asarray(a, dtype=float)
        value = np.full_like(a, self.spec.mass_sq)
        for term in self.spec.terms:
            value = value - term.coupling * term.exponent * a ** (term.exponent - 1)

        return value if value.ndim else float(value)

    def force_multiplier(self, modulus):
        """Real g(|psi|)/|psi|, so that f(psi) = multiplier * psi."""
        modulus = np.asarray(modulus, dtype=float)
        multiplier = np.full_like(modulus, -self.spec.mass_sq)
        for term in self.spec.terms:
            multiplier = multiplier + term.coupling * modulus ** (term.exponent - 1)

        return multiplier

    def evaluate_force(self, psi):
        psi = np.asarray(psi)
        force = self.force_multiplier(np.abs(psi)) * psi

        return force if force.ndim else force.item()

    def _polynomial(self, omega_sq_shift: float) -> np.ndarray:
        """Coefficients (highest degree first) of V(a) + omega_sq_shift * a^2 / 2."""
        degree = max([2] + [term.exponent + 1 for term in self.spec.terms])
        coefficients = np.zeros(degree + 1)
        coefficients[degree - 2] += 0.5 * (self.spec.mass_sq + omega_sq_shift)
        for term in self.spec.terms:
            p = term.exponent + 1
            coefficients[degree - p] -= term.coupling / p

        return coefficients

    def _scan_points(self, coefficients: np.ndarray) -> np.ndarray:
        cap = self.spec.amplitude_cap
        grid = np.linspace(0.0, cap, self.app_settings.CONDITION_SCAN_POINTS + 1)[1:]

        stationary = np.roots(np.polyder(coefficients)) if np.any(coefficients[:-1]) else []
        stationary = [
            float(root.real) for root in np.atleast_1d(stationary)
            if abs(root.imag) <= 1e-12 * max(1.0, abs(root.real)) and 0.0 < root.real <= cap
        ]

        return np.unique(np.concatenate([grid, np.asarray(stationary, dtype=float)]))

    def _first_negative(self, coefficients: np.ndarray) -> Optional[float]:
        points = self._scan_points(coefficients)
        values = np.polyval(coefficients, points)
        # points within rounding of a root are not witnesses
        rounding = 64.0 * np.finfo(float).eps * np.polyval(np.abs(coefficients), points)
        negative = np.flatnonzero(values < -rounding)
        if negative.size == 0:
            return None

        return float(points[negative[0]])

    def expected_amplitude(self, omega: float) -> Optional[float]:
        """Smallest positive root of V(a) - omega^2 a^2/2, the 1D turning amplitude."""
        coefficients = self._polynomial(-omega ** 2)
        reduced = np.trim_zeros(coefficients[:-2], "f")
        if reduced.size < 2:
            return None

        roots = [
            float(root.real) for root in np.roots(reduced)
            if abs(root.imag) <= 1e-12 * max(1.0, abs(root.real)) and root.real > 0.0
        ]
        return min(roots) if roots else None

    def check_conditions(self, omega: float, n: int) -> ConditionReport:

        omega_sq = omega ** 2
        s1_value = omega_sq - self.spec.mass_sq
        s1 = ConditionS1(holds=bool(np.isfinite(s1_value) and s1_value < 0.0), value=s1_value)

        witness = self._first_negative(self._polynomial(-omega_sq))
        s2 = ConditionS2(holds=witness is not None, witness=witness)

        s3 = self._check_s3(n)

        s4_coefficients = self._polynomial(omega_sq)
        first_violation = self._first_negative(s4_coefficients)
        leading = np.trim_zeros(s4_coefficients, "f")
        s4 = ConditionS4(
            holds_on_cap_range=first_violation is None,
            first_violation=first_violation,
            holds_beyond_cap=bool(leading.size == 0 or leading[0] >= 0.0),
        )

        report = ConditionReport(
            omega=omega, n=n, s1=s1, s2=s2, s3=s3, s4=s4,
            negative_mass_regime=self.negative_mass_regime_from(omega, s2.holds),
        )

        if not s1.holds:
            logger.warning(f"S1 fails at omega={omega}: omega^2 - m^2 = {s1_value}")
        if report.negative_mass_regime:
            logger.warning("omega = 0 with S2 holding: S4 cannot hold, negative-mass regime")

        return report

    def _check_s3(self, n: int) -> ConditionS3:
        if n <= 2:
            return ConditionS3(applicable=False, note="not applicable, n <= 2")

        critical = (n + 2.0) / (n - 2.0)
        leading = self.spec.leading_term()
        if leading is None or leading.exponent < critical:
            return ConditionS3(applicable=True, holds=True, critical_exponent=critical)

        if leading.exponent == critical:
            # f ~ c a^l, so alpha = -c must be non-negative
            return ConditionS3(
                applicable=True, holds=leading.coupling <= 0.0, critical_exponent=critical
            )

        return ConditionS3(
            applicable=True, holds=False, critical_exponent=critical,
            note=f"leading exponent {leading.exponent} exceeds {critical:g}",
        )

    @staticmethod
    def negative_mass_regime_from(omega: float, s2_holds: bool) -> bool:
        return omega == 0.0 and s2_holds

    def negative_mass_regime(self, report: ConditionReport, omega: float) -> bool:
        return self.negative_mass_regime_from(omega, report.s2.holds)

    @staticmethod
    def s4_violation_is_fatal(report: ConditionReport, attained_amplitude: float) -> bool:
        violation = report.s4.first_violation
        return violation is not None and violation <= attained_amplitude
