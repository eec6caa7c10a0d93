from controllers import BoostController, EvolverController
from helpers.config import Settings
from helpers.errors import SpeedCheckFailed
from models.enums.ResponseEnums import ResponseSignal
from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from models.schemes.fields import DiagnosticRecord
from stores.artifacts import ArtifactStore, save_field_sample
from .base import solve_wave
from .schemes import RunConfig
from typing import List
import pandas as pd
import numpy as np
import logging

logger = logging.getLogger(__name__)

def diagnostics_table(diagnostics: List[DiagnosticRecord], n: int) -> pd.DataFrame:
    columns = ["time", "E"] + [f"P{j}" for j in range(1, n + 1)] + [f"X{j}" for j in range(1, n + 1)]
    records = [
        [record.time, record.energy, *record.momentum, *record.center]
        for record in diagnostics
    ]
    return pd.DataFrame(records, columns=columns)

def snapshot_name(index: int) -> str:
    return (
        f"{ArtifactTypeEnum.SNAPSHOT_PREFIX.value}{index:06d}"
        f"{ArtifactTypeEnum.SNAPSHOT_SUFFIX.value}"
    )

def check_speed(config: RunConfig, velocity: np.ndarray, fitted: np.ndarray,
                diagnostics: List[DiagnosticRecord], spacing: List[float]):

    speed = float(np.linalg.norm(velocity))
    if speed > 0.0:
        measured = float(np.dot(fitted, velocity / speed))
        relative = abs(measured - speed) / speed
        if relative > config.tolerances.speed_rel_err:
            raise SpeedCheckFailed(
                f"fitted speed {measured!r} differs from {speed!r} by {relative:.2e}",
                fitted_speed=measured, relative_error=relative,
            )
        return

    shift = float(np.linalg.norm(diagnostics[-1].center - diagnostics[0].center))
    if shift > min(spacing):
        raise SpeedCheckFailed(
            f"wave at rest drifted by {shift:.3e}, more than one grid spacing",
            drift=shift,
        )

def cmd_evolve(config: RunConfig, store: ArtifactStore, settings: Settings, wave=None) -> dict:

    spec = config.potential_spec()
    boost = BoostController(spec, settings=settings)
    evolver = EvolverController(spec, settings=settings)
    wave = wave if wave else solve_wave(config, settings)

    velocity = np.asarray(config.evolve_velocity())
    run = config.evolve
    grid = config.grid_spec()
    if grid is None:
        grid = boost.suggest_grid(wave, velocity, t_max=run.t_final, spacing=config.grid.spacing)

    initial = boost.sample_boosted(wave, velocity, grid, t=0.0)

    def on_diagnostic(state, record):
        count = len(state.diagnostics) - 1
        if config.snapshot_every and count % config.snapshot_every == 0:
            save_field_sample(state.sample, store, snapshot_name(count))

    state = evolver.evolve(
        initial, run.t_final, run.dt, diag_stride=run.diag_stride, on_diagnostic=on_diagnostic
    )
    diagnostics = state.diagnostics
    store.write_table(ArtifactTypeEnum.DIAGNOSTICS.value, diagnostics_table(diagnostics, wave.n))

    final = state.sample
    exact = boost.sample_boosted(wave, velocity, grid, t=final.time)
    fitted = evolver.fit_speed(diagnostics)

    summary = {
        "signal": ResponseSignal.EVOLVE_SUCCESS.value,
        "velocity": velocity.tolist(),
        "t_final": final.time,
        "steps": state.steps_taken,
        "grid": {"extent": grid.extent, "points": grid.points, "spacing": grid.spacing},
        "fitted_velocity": fitted.tolist(),
        "energy_drift": evolver.energy_drift(diagnostics),
        "modulus_l2_error": evolver.relative_l2_distance(np.abs(final.psi), np.abs(exact.psi)),
        "field_l2_error": evolver.relative_l2_distance(final.psi, exact.psi),
    }
    store.write_json(ArtifactTypeEnum.EVOLVE_SUMMARY.value, summary)

    if config.check_speed:
        check_speed(config, velocity, fitted, diagnostics, grid.spacing)

    logger.info(
        f"evolved to t={final.time:.6g}: fitted velocity {fitted.tolist()}, "
        f"modulus error {summary['modulus_l2_error']:.3e}"
    )
    return summary
