from .BaseController import BaseController
from .PotentialController import PotentialController
from .RadialSolverController import RadialSolverController
from helpers.errors import TailNotCertified, SuperluminalVelocity, IdentityCheckFailed
from models.enums.ProvenanceEnum import ProvenanceEnum
from models.schemes.potential import PotentialSpec, ConditionReport
from models.schemes.radial import SolitaryWave, RadialTail
from models.schemes.functionals import FunctionalReport, EnergyMomentum
from models.schemes.fields import GridSpec
from utils.quadrature import uniform_simpson, tail_power_integral
import numpy as np
import logging

logger = logging.getLogger(__name__)

SPHERE_AREAS = {1: 2.0, 2: 2.0 * np.pi, 3: 4.0 * np.pi}

class FunctionalsController(BaseController):

    def __init__(self, spec: PotentialSpec, settings=None):
        super().__init__(settings=settings)

        self.spec = spec
        self.potential = PotentialController(spec, settings=self.app_settings)

    # closed-form tail pieces, all of the form C^m r^power e^{-rate r}

    @staticmethod
    def _tail_square(tail: RadialTail, n: int) -> float:
        """Tail of the integral of R^2 r^(n-1)."""
        return tail.prefactor ** 2 * tail_power_integral(
            n - 1 - 2.0 * tail.power, 2.0 * tail.delta, tail.match_radius
        )

    @staticmethod
    def _tail_slope_square(tail: RadialTail, n: int, k: int = 0) -> float:
        """Tail of the integral of (R'^2 + k^2 R^2 / r^2) r^(n-1)."""
        base = n - 1 - 2.0 * tail.power
        rate = 2.0 * tail.delta
        start = tail.match_radius
        q = tail.power
        total = (
            tail.delta ** 2 * tail_power_integral(base, rate, start)
            + 2.0 * tail.delta * q * tail_power_integral(base - 1.0, rate, start)
            + (q ** 2 + k ** 2) * tail_power_integral(base - 2.0, rate, start)
        )
        return tail.prefactor ** 2 * total

    def _tail_potential(self, tail: RadialTail, n: int) -> float:
        """Tail of the integral of V(R) r^(n-1)."""
        total = 0.5 * self.spec.mass_sq * self._tail_square(tail, n)
        for term in self.spec.terms:
            p = term.exponent + 1
            total -= term.coupling / p * tail.prefactor ** p * tail_power_integral(
                n - 1 - p * tail.power, p * tail.delta, tail.match_radius
            )
        return total

    def compute_functionals(self, wave: SolitaryWave) -> FunctionalReport:

        profile = wave.profile
        tail = profile.tail
        if tail is None:
            raise TailNotCertified("profile has no fitted tail", n=wave.n, k=wave.k)

        n, k = wave.n, wave.k
        h = profile.spacing
        r = profile.r_grid
        values = profile.values
        slopes = profile.derivative
        weight = r ** (n - 1)
        potential = self.potential.evaluate_potential(np.abs(values))

        if k == 0:
            area = SPHERE_AREAS[n]
            mass = area * (uniform_simpson(values ** 2 * weight, h) + self._tail_square(tail, n))
            gradient = area * (
                uniform_simpson(slopes ** 2 * weight, h) + self._tail_slope_square(tail, n)
            )
            i0 = 0.5 * mass
            i_k = [gradient / (2.0 * n)] * n
            v0 = area * (uniform_simpson(potential * weight, h) + self._tail_potential(tail, n))
        else:
            # in polar coordinates each Cartesian gradient functional takes half of the
            # angular average of R'^2 + k^2 R^2 / r^2
            centrifugal = np.zeros_like(r)
            centrifugal[1:] = k ** 2 * values[1:] ** 2 / r[1:]
            angular = 0.5 * np.pi * (
                uniform_simpson(slopes ** 2 * r + centrifugal, h)
                + self._tail_slope_square(tail, 2, k)
            )
            i_k = [angular, angular]
            i0 = np.pi * (uniform_simpson(values ** 2 * r, h) + self._tail_square(tail, 2))
            v0 = 2.0 * np.pi * (uniform_simpson(potential * r, h) + self._tail_potential(tail, 2))

        return self._assemble(i0, i_k, v0, wave.omega, n, k)

    def _assemble(self, i0: float, i_k, v0: float, omega: float, n: int, k: int) -> FunctionalReport:
        i_k = [float(value) for value in i_k]
        report = FunctionalReport(
            i0=float(i0),
            i_k=i_k,
            v0=float(v0),
            e0=float(sum(i_k) + omega ** 2 * i0 + v0),
            pokhozhaev_residual=0.0,
            isotropy_defect=0.0,
            omega=omega,
            n=n,
            k=k,
            negative_mass_regime=omega == 0.0 and self.potential.check_conditions(omega, n).s2.holds,
        )
        return report.model_copy(update={
            "pokhozhaev_residual": self.pokhozhaev_residual(report),
            "isotropy_defect": self.isotropy_defect(report),
        })

    def pokhozhaev_residual(self, report: FunctionalReport) -> float:
        n = report.n
        gradient = report.gradient_sum
        frequency = report.omega ** 2 * report.i0
        numerator = abs((n - 2) * gradient + n * (report.v0 - frequency))
        denominator = (
            abs(n * report.v0) + abs(n * frequency) + abs((n - 2) * gradient)
            + self.app_settings.RESIDUAL_FLOOR
        )
        return float(numerator / denominator)

    @staticmethod
    def isotropy_defect(report: FunctionalReport) -> float:
        return float(report.i_k[0] * (report.n - 1) - sum(report.i_k[1:]))

    @staticmethod
    def rest_energy_variants(report: FunctionalReport) -> dict:
        n = report.n
        return {
            "direct": report.gradient_sum + report.omega ** 2 * report.i0 + report.v0,
            "pokhozhaev_form": (2.0 * n - 2.0) / n * report.gradient_sum + 2.0 * report.v0,
        }

    @staticmethod
    def frequency_identity_residual(report: FunctionalReport) -> float:
        n = report.n
        return float(report.omega ** 2 * report.i0 - (n - 2.0) / n * report.gradient_sum - report.v0)

    # moving-wave predictions

    @staticmethod
    def boost_geometry(velocity, n: int = None):
        """Lorentz factor, speed and unit boost axis (zero vector at rest)."""
        velocity = np.atleast_1d(np.asarray(velocity, dtype=float))
        if n is not None and velocity.size == 1 and n > 1:
            velocity = np.concatenate([velocity, np.zeros(n - 1)])

        speed = float(np.linalg.norm(velocity))
        if not speed < 1.0:
            raise SuperluminalVelocity(f"|v| = {speed} is not below 1", velocity=velocity.tolist())

        gamma = 1.0 / np.sqrt(1.0 - speed ** 2)
        axis = velocity / speed if speed > 0.0 else np.zeros_like(velocity)
        return float(gamma), speed, axis, velocity

    def predict_energy_momentum(self, report: FunctionalReport, velocity,
                                mode: ProvenanceEnum = ProvenanceEnum.CLOSED_FORM) -> EnergyMomentum:

        gamma, speed, axis, velocity = self.boost_geometry(velocity, report.n)

        if mode == ProvenanceEnum.CLOSED_FORM:
            energy = gamma * report.e0
            momentum = energy * velocity
        elif mode == ProvenanceEnum.GENERAL_FORMULA:
            energy = gamma * report.e0 + gamma * (2.0 * speed ** 2 / report.n) * report.isotropy_defect
            momentum = self.momentum_general(report, velocity)
        else:
            raise ValueError(f"no prediction for provenance {mode}")

        return EnergyMomentum(
            energy=float(energy),
            momentum=[float(value) for value in momentum],
            velocity=[float(value) for value in velocity],
            provenance=mode,
        )

    def momentum_general(self, report: FunctionalReport, velocity) -> np.ndarray:
        gamma, speed, axis, velocity = self.boost_geometry(velocity, report.n)
        return gamma * speed * 2.0 * (report.i_k[0] + report.omega ** 2 * report.i0) * axis

    # functionals of sampled amplitudes

    def report_from_grid(self, field: np.ndarray, grid: GridSpec, omega: float, k: int = 0) -> FunctionalReport:
        stencil = self.get_stencil()
        volume = grid.cell_volume

        i0 = 0.5 * float(np.sum(np.abs(field) ** 2)) * volume
        i_k = [
            0.5 * float(np.sum(np.abs(stencil.gradient(field, axis, h)) ** 2)) * volume
            for axis, h in enumerate(grid.spacing)
        ]
        v0 = float(np.sum(self.potential.evaluate_potential(np.abs(field)))) * volume

        return self._assemble(i0, i_k, v0, omega, grid.n, k)

    def stretched_report(self, wave: SolitaryWave, stretch: float, grid: GridSpec) -> FunctionalReport:
        """Functionals of R(|(x_1/stretch, x_2, ...)|), an anisotropic amplitude."""
        coordinates = grid.mesh()
        radius_sq = (coordinates[0] / stretch) ** 2
        for axis in coordinates[1:]:
            radius_sq = radius_sq + axis ** 2
        field = RadialSolverController.profile_value(wave.profile, np.sqrt(radius_sq))

        return self.report_from_grid(field.astype(np.complex128), grid, wave.omega, wave.k)

    def verify_rest_energy(self, report: FunctionalReport, conditions: ConditionReport,
                           attained_amplitude: float) -> bool:
        """Positive rest energy is guaranteed for omega != 0 when S4 holds up to the attained amplitude."""
        if report.omega == 0.0:
            logger.warning(
                f"omega = 0: S2 and S4 exclude each other, rest energy reported as computed ({report.e0!r})"
            )
            return True

        if PotentialController.s4_violation_is_fatal(conditions, attained_amplitude):
            logger.warning(
                f"S4 fails at a={conditions.s4.first_violation:.6g} inside the attained amplitude "
                f"{attained_amplitude:.6g}; positivity of E0 is not guaranteed"
            )
            return True

        if not conditions.s4.holds_on_cap_range:
            logger.warning(
                f"S4 fails at a={conditions.s4.first_violation:.6g}, beyond the attained amplitude"
            )

        if report.e0 <= 0.0:
            raise IdentityCheckFailed(f"rest energy {report.e0!r} is not positive", e0=report.e0)

        return True
