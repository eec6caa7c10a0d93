from .BaseController import BaseController
from .PotentialController import PotentialController
from .RadialSolverController import RadialSolverController
from .FunctionalsController import FunctionalsController
from helpers.errors import GridTooSmall, ZeroField, ConfigError
from models.enums.ProvenanceEnum import ProvenanceEnum
from models.schemes.potential import PotentialSpec
from models.schemes.radial import SolitaryWave
from models.schemes.functionals import FunctionalReport, EnergyMomentum
from models.schemes.fields import GridSpec, FieldSample, BoostScanRow
from utils.workers import parallel_map
from scipy.optimize import brentq
from typing import List, Sequence
import numpy as np
import logging

logger = logging.getLogger(__name__)

class BoostController(BaseController):
    """Samples moving solitary waves on Cartesian grids and measures their energy and momentum."""

    def __init__(self, spec: PotentialSpec, settings=None):
        super().__init__(settings=settings)

        self.spec = spec
        self.potential = PotentialController(spec, settings=self.app_settings)
        self.functionals = FunctionalsController(spec, settings=self.app_settings)
        self.stencil = self.get_stencil()

    def boost_geometry(self, velocity, n: int = None):
        return FunctionalsController.boost_geometry(velocity, n)

    @staticmethod
    def rotation_matrix(angle: float) -> np.ndarray:
        return np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])

    def rotate_vector(self, vector, angle: float) -> np.ndarray:
        vector = np.asarray(vector, dtype=float)
        if vector.size != 2:
            raise ConfigError("rotations are defined for n = 2 vectors only")
        return self.rotation_matrix(angle) @ vector

    def rotate_velocity(self, velocity, angle: float) -> np.ndarray:
        return self.rotate_vector(velocity, angle)

    def amplitude_field(self, wave: SolitaryWave, coordinates: Sequence[np.ndarray]):
        """a(y) = R(|y|) e^{ik arg y} and its Cartesian gradient at the points y."""
        profile = wave.profile
        radius_sq = np.zeros_like(coordinates[0])
        for axis in coordinates:
            radius_sq = radius_sq + axis ** 2
        radius = np.sqrt(radius_sq)

        values = RadialSolverController.profile_value(profile, radius)
        slopes = RadialSolverController.profile_derivative(profile, radius)

        safe = np.where(radius > 0.0, radius, 1.0)
        if wave.k == 0:
            amplitude = values.astype(np.complex128)
            gradient = [
                np.where(radius > 0.0, slopes * axis / safe, 0.0).astype(np.complex128)
                for axis in coordinates
            ]
            return amplitude, gradient

        k = wave.k
        cos_phi = np.where(radius > 0.0, coordinates[0] / safe, 1.0)
        sin_phi = np.where(radius > 0.0, coordinates[1] / safe, 0.0)
        phase = (cos_phi + 1j * sin_phi) ** k
        # R/r tends to R'(0) for k = 1 and to 0 for k >= 2
        over_r = np.where(radius > 0.0, values / safe, slopes if k == 1 else 0.0)

        amplitude = values * phase
        gradient = [
            phase * (slopes * cos_phi - 1j * k * over_r * sin_phi),
            phase * (slopes * sin_phi + 1j * k * over_r * cos_phi),
        ]
        return amplitude, gradient

    def sample_boosted(self, wave: SolitaryWave, velocity, grid: GridSpec, t: float = 0.0,
                       origin=None) -> FieldSample:

        if grid.n != wave.n:
            raise ConfigError(f"grid dimension {grid.n} does not match wave dimension {wave.n}")

        gamma, speed, axis, velocity = self.boost_geometry(velocity, wave.n)
        x = grid.mesh()
        if origin is not None:
            x = [xi - float(oi) for xi, oi in zip(x, np.atleast_1d(origin))]

        parallel = sum(axis_j * x_j for axis_j, x_j in zip(axis, x))
        y = [
            x_j + (gamma - 1.0) * parallel * axis_j - gamma * v_j * t
            for x_j, axis_j, v_j in zip(x, axis, velocity)
        ]

        amplitude, gradient = self.amplitude_field(wave, y)
        v_dot_x = sum(v_j * x_j for v_j, x_j in zip(velocity, x))
        phase = np.exp(-1j * wave.omega * gamma * (t - v_dot_x))

        directional = sum(v_j * g_j for v_j, g_j in zip(velocity, gradient))
        psi = amplitude * phase
        psi_dot = (-gamma * directional - 1j * gamma * wave.omega * amplitude) * phase

        sample = FieldSample(
            grid=grid,
            time=float(t),
            psi=psi,
            psi_dot=psi_dot,
            source={"n": wave.n, "k": wave.k, "omega": wave.omega, "velocity": velocity.tolist()},
        )
        self.check_support(sample)

        return sample

    def boundary_ratio(self, sample: FieldSample) -> float:
        modulus = np.abs(sample.psi)
        peak = float(np.max(modulus))
        if peak == 0.0:
            return 0.0

        edge = 0.0
        for axis in range(modulus.ndim):
            first = np.take(modulus, 0, axis=axis)
            last = np.take(modulus, -1, axis=axis)
            edge = max(edge, float(np.max(first)), float(np.max(last)))
        return edge / peak

    def check_support(self, sample: FieldSample):
        ratio = self.boundary_ratio(sample)
        if ratio >= self.app_settings.BOUNDARY_FRACTION:
            velocity = sample.source.get("velocity")
            raise GridTooSmall(
                f"boundary amplitude ratio {ratio:.3e} at v={velocity} exceeds "
                f"{self.app_settings.BOUNDARY_FRACTION:.0e}; enlarge the grid",
                velocity=velocity, time=sample.time,
            )

    def support_radius(self, wave: SolitaryWave) -> float:
        """Radius beyond which the profile stays below a tenth of the boundary fraction."""
        profile = wave.profile
        tail = profile.tail
        delta = tail.delta if tail else float(np.sqrt(self.spec.mass_sq - wave.omega ** 2))
        radius = profile.match_radius + 10.0 / delta
        if tail is None:
            return radius

        target = 0.1 * self.app_settings.BOUNDARY_FRACTION * wave.amplitude
        if tail.value(radius) <= target:
            return radius

        def excess(r):
            return np.log(tail.prefactor) - tail.power * np.log(r) - tail.delta * r - np.log(target)

        return float(brentq(excess, radius, radius + 200.0 / delta))

    def suggest_grid(self, wave: SolitaryWave, v_max, t_max: float = 0.0,
                     spacing: float = 0.05) -> GridSpec:
        gamma, speed, axis, velocity = self.boost_geometry(v_max, wave.n)
        delta = wave.profile.tail.delta if wave.profile.tail else float(
            np.sqrt(self.spec.mass_sq - wave.omega ** 2)
        )
        support = self.support_radius(wave)
        match = wave.profile.match_radius

        half_widths = []
        for axis_j, v_j in zip(axis, velocity):
            if speed > 0.0 and abs(abs(axis_j) - 1.0) < 1e-12:
                # contracted along a coordinate-aligned boost
                reach = max(match / gamma + 10.0 / delta, support / gamma)
            else:
                reach = max(match + 10.0 / delta, support)
            half_widths.append(reach + abs(v_j) * t_max)

        points = [2 * int(np.ceil(L / spacing)) for L in half_widths]
        return GridSpec(
            n=wave.n,
            extent=[N * spacing / 2.0 for N in points],
            points=points,
        )

    # grid measurements

    def gradients(self, sample: FieldSample) -> List[np.ndarray]:
        return [
            self.stencil.gradient(sample.psi, axis, h)
            for axis, h in enumerate(sample.grid.spacing)
        ]

    def energy_density(self, sample: FieldSample, gradient: List[np.ndarray] = None) -> np.ndarray:
        gradient = gradient if gradient is not None else self.gradients(sample)
        density = 0.5 * np.abs(sample.psi_dot) ** 2
        for component in gradient:
            density = density + 0.5 * np.abs(component) ** 2
        return density + self.potential.evaluate_potential(np.abs(sample.psi))

    def measure_energy(self, sample: FieldSample) -> float:
        return float(np.sum(self.energy_density(sample))) * sample.grid.cell_volume

    def measure_momentum(self, sample: FieldSample, gradient: List[np.ndarray] = None) -> np.ndarray:
        gradient = gradient if gradient is not None else self.gradients(sample)
        volume = sample.grid.cell_volume
        return np.array([
            -float(np.sum(np.real(sample.psi_dot * np.conj(component)))) * volume
            for component in gradient
        ])

    def center_of_energy(self, sample: FieldSample) -> np.ndarray:
        density = self.energy_density(sample)
        total = float(np.sum(density))
        if abs(total) * sample.grid.cell_volume < self.app_settings.ENERGY_FLOOR:
            raise ZeroField("total energy vanishes, center of energy undefined", time=sample.time)

        return np.array([float(np.sum(x * density)) / total for x in sample.grid.mesh()])

    def measure(self, sample: FieldSample):
        """Energy and momentum from one shared gradient evaluation."""
        gradient = self.gradients(sample)
        energy = float(np.sum(self.energy_density(sample, gradient))) * sample.grid.cell_volume
        return energy, self.measure_momentum(sample, gradient)

    def measure_pair(self, sample: FieldSample) -> EnergyMomentum:
        energy, momentum = self.measure(sample)
        return EnergyMomentum(
            energy=energy,
            momentum=[float(value) for value in momentum],
            velocity=list(sample.source.get("velocity", [0.0] * sample.grid.n)),
            provenance=ProvenanceEnum.GRID_MEASURED,
        )

    def boost_scan(self, wave: SolitaryWave, velocities: list, grid: GridSpec,
                   report: FunctionalReport = None) -> List[BoostScanRow]:

        report = report if report else self.functionals.compute_functionals(wave)
        boosts = [self.boost_geometry(v, wave.n)[3] for v in velocities]
        boosts = sorted(boosts, key=lambda v: float(np.linalg.norm(v)))

        def run(velocity):
            sample = self.sample_boosted(wave, velocity, grid, t=0.0)
            measured = self.measure_pair(sample)
            energy, momentum = measured.energy, np.asarray(measured.momentum)
            prediction = self.functionals.predict_energy_momentum(
                report, velocity, ProvenanceEnum.CLOSED_FORM
            )
            predicted_momentum = np.asarray(prediction.momentum)

            rel_err_e = abs(energy / prediction.energy - 1.0)
            norm_p = float(np.linalg.norm(predicted_momentum))
            if norm_p > 0.0:
                rel_err_p = float(np.linalg.norm(momentum - predicted_momentum)) / norm_p
            else:
                rel_err_p = float(np.linalg.norm(momentum)) / abs(prediction.energy)

            logger.debug(f"v={velocity.tolist()}: E={energy!r} (rel {rel_err_e:.2e}), P rel {rel_err_p:.2e}")
            return BoostScanRow(
                velocity=velocity,
                e_measured=energy,
                p_measured=momentum,
                e_predicted=prediction.energy,
                p_predicted=predicted_momentum,
                rel_err_e=float(rel_err_e),
                rel_err_p=float(rel_err_p),
            )

        rows = parallel_map(
            run, boosts,
            max_workers=self.app_settings.SOLITON_THREADS,
            show_progress=self.app_settings.SHOW_PROGRESS,
            description="boost scan",
        )
        logger.info(f"boost scan measured {len(rows)} velocities on grid {grid.points}")

        return rows
