from .BaseController import BaseController
from .PotentialController import PotentialController
from .BoostController import BoostController
from helpers.errors import SolitonError, ConfigError, CflViolation, NonFinite, ZeroField
from models.schemes.potential import PotentialSpec
from models.schemes.fields import FieldSample, EvolutionState, DiagnosticRecord
from typing import Callable, List, Optional
from tqdm import tqdm
import numpy as np
import logging

logger = logging.getLogger(__name__)

class EvolverController(BaseController):
    """Leapfrog integration of psi_tt = Laplacian(psi) + f(psi) on a periodic grid."""

    def __init__(self, spec: PotentialSpec, settings=None):
        super().__init__(settings=settings)

        self.spec = spec
        self.potential = PotentialController(spec, settings=self.app_settings)
        self.measurements = BoostController(spec, settings=self.app_settings)
        self.stencil = self.measurements.stencil

    def acceleration(self, psi: np.ndarray, spacing) -> np.ndarray:
        return self.stencil.laplacian(psi, spacing) + self.potential.evaluate_force(psi)

    def max_time_step(self, sample: FieldSample) -> float:
        return self.app_settings.CFL_NUMBER * min(sample.grid.spacing)

    def _check_step(self, sample: FieldSample, dt: float):
        if sample.grid.n not in (1, 2):
            raise ConfigError(f"time evolution supports n = 1 and n = 2, got n = {sample.grid.n}")

        bound = self.max_time_step(sample)
        if not 0.0 < dt <= bound * (1.0 + 1e-12):
            raise CflViolation(
                f"dt={dt} violates the bound {bound} = {self.app_settings.CFL_NUMBER} * min h",
                time=sample.time, dt=dt,
            )

    def step(self, state: EvolutionState, dt: float) -> EvolutionState:

        sample = state.sample
        self._check_step(sample, dt)
        spacing = sample.grid.spacing
        psi = sample.psi

        with np.errstate(over="ignore", invalid="ignore"):
            acceleration = state.acceleration
            if acceleration is None:
                acceleration = self.acceleration(psi, spacing)

            if state.prev_psi is None:
                # Taylor start from (psi, psi_dot)
                psi_next = psi + dt * sample.psi_dot + 0.5 * dt * dt * acceleration
            else:
                psi_next = 2.0 * psi - state.prev_psi + dt * dt * acceleration

            acceleration_next = self.acceleration(psi_next, spacing)
            # centred difference with the leapfrog value one step ahead
            psi_after = 2.0 * psi_next - psi + dt * dt * acceleration_next
            psi_dot_next = (psi_after - psi) / (2.0 * dt)

        time = sample.time + dt
        if not (np.all(np.isfinite(psi_next)) and np.all(np.isfinite(psi_dot_next))):
            raise NonFinite(f"field left the finite range at t={time:.6g}", time=time)

        next_sample = FieldSample(
            grid=sample.grid,
            time=time,
            psi=psi_next,
            psi_dot=psi_dot_next,
            source=sample.source,
        )
        return EvolutionState(
            sample=next_sample,
            prev_psi=psi,
            acceleration=acceleration_next,
            steps_taken=state.steps_taken + 1,
            diagnostics=state.diagnostics,
        )

    def diagnose(self, sample: FieldSample) -> DiagnosticRecord:
        energy, momentum = self.measurements.measure(sample)
        try:
            center = self.measurements.center_of_energy(sample)
        except ZeroField:
            # the zero field is a fixed point without a center
            center = np.full(sample.grid.n, np.nan)

        return DiagnosticRecord(time=sample.time, energy=energy, momentum=momentum, center=center)

    def evolve(self, initial: FieldSample, t_final: float, dt: float, diag_stride: int = 1,
               on_diagnostic: Optional[Callable[[EvolutionState, DiagnosticRecord], None]] = None
               ) -> EvolutionState:

        if diag_stride < 1:
            raise ConfigError(f"diag_stride must be at least 1, got {diag_stride}")
        self._check_step(initial, dt)

        total_steps = int(round((t_final - initial.time) / dt))
        state = EvolutionState(sample=initial)
        self._record(state, on_diagnostic)

        progress = tqdm(
            total=total_steps, desc="evolve", disable=not self.app_settings.SHOW_PROGRESS
        )
        try:
            for index in range(1, total_steps + 1):
                state = self.step(state, dt)
                if index % diag_stride == 0 or index == total_steps:
                    self._record(state, on_diagnostic)
                progress.update(1)
        except SolitonError as error:
            error.context.setdefault("time", state.sample.time + dt)
            logger.error(f"evolution stopped: {error.message}")
            raise
        finally:
            progress.close()

        logger.info(
            f"evolved {total_steps} steps to t={state.sample.time:.6g}, "
            f"energy drift {self.energy_drift(state.diagnostics):.3e}"
        )
        return state

    def _record(self, state: EvolutionState, on_diagnostic):
        record = self.diagnose(state.sample)
        if state.diagnostics and record.time <= state.diagnostics[-1].time:
            return
        state.diagnostics.append(record)
        if on_diagnostic is not None:
            on_diagnostic(state, record)

    @staticmethod
    def energy_drift(diagnostics: List[DiagnosticRecord]) -> float:
        if not diagnostics:
            return 0.0
        initial = diagnostics[0].energy
        worst = max(abs(record.energy - initial) for record in diagnostics)
        return float(worst / abs(initial)) if initial != 0.0 else float(worst)

    @staticmethod
    def fit_speed(diagnostics: List[DiagnosticRecord]) -> np.ndarray:
        times = np.array([record.time for record in diagnostics])
        centers = np.array([record.center for record in diagnostics])
        if times.size < 2:
            return np.zeros(centers.shape[1] if centers.ndim == 2 else 0)

        return np.array([np.polyfit(times, centers[:, axis], 1)[0] for axis in range(centers.shape[1])])

    @staticmethod
    def relative_l2_distance(a: np.ndarray, b: np.ndarray) -> float:
        reference = float(np.linalg.norm(b))
        difference = float(np.linalg.norm(np.asarray(a) - np.asarray(b)))
        return difference / reference if reference > 0.0 else difference
