from controllers import RadialSolverController
from helpers.config import Settings
from models.enums.ResponseEnums import ResponseSignal
from stores.artifacts import ArtifactStore
from .base import solve_wave
from .schemes import RunConfig
import logging

logger = logging.getLogger(__name__)

def cmd_solve(config: RunConfig, store: ArtifactStore, settings: Settings, wave=None) -> dict:

    solver = RadialSolverController(config.potential_spec(), settings=settings)
    wave = wave if wave else solve_wave(config, settings)
    solver.save_profile(wave, store)

    profile = wave.profile
    summary = {
        "signal": ResponseSignal.SOLVE_SUCCESS.value,
        "shoot_param": profile.shoot_param,
        "delta": profile.tail.delta,
        "fitted_delta": solver.fitted_delta(profile, wave.n, wave.k),
        "node_count": profile.node_count,
        "match_radius": profile.match_radius,
        "equation_residual": solver.equation_residual(wave),
    }
    logger.info(f"solved n={wave.n}, k={wave.k}, omega={wave.omega}: s={profile.shoot_param!r}")

    return summary
