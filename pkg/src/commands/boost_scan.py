from controllers import BoostController, FunctionalsController
from helpers.config import Settings
from helpers.errors import ScanToleranceExceeded
from models.enums.ResponseEnums import ResponseSignal
from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from models.schemes.fields import BoostScanRow
from stores.artifacts import ArtifactStore
from .base import solve_wave
from .schemes import RunConfig
from typing import List
import pandas as pd
import logging

logger = logging.getLogger(__name__)

def scan_columns(n: int) -> List[str]:
    axes = range(1, n + 1)
    return (
        ["v"] + [f"v{j}" for j in axes]
        + ["E_meas"] + [f"P{j}_meas" for j in axes]
        + ["E_pred"] + [f"P{j}_pred" for j in axes]
        + ["relE", "relP"]
    )

def scan_table(rows: List[BoostScanRow], n: int) -> pd.DataFrame:
    records = [
        [row.speed, *row.velocity, row.e_measured, *row.p_measured,
         row.e_predicted, *row.p_predicted, row.rel_err_e, row.rel_err_p]
        for row in rows
    ]
    return pd.DataFrame(records, columns=scan_columns(n))

def cmd_boost_scan(config: RunConfig, store: ArtifactStore, settings: Settings, wave=None) -> dict:

    spec = config.potential_spec()
    boost = BoostController(spec, settings=settings)
    wave = wave if wave else solve_wave(config, settings)

    grid = config.grid_spec()
    if grid is None:
        # sized for the rest frame, contracted waves only shrink along the boost
        grid = boost.suggest_grid(wave, 0.0, spacing=config.grid.spacing)

    report = FunctionalsController(spec, settings=settings).compute_functionals(wave)
    rows = boost.boost_scan(wave, config.velocity_vectors(), grid, report=report)

    store.write_table(ArtifactTypeEnum.SCAN_CSV.value, scan_table(rows, wave.n))

    worst_e = max((row.rel_err_e for row in rows), default=0.0)
    worst_p = max((row.rel_err_p for row in rows), default=0.0)
    summary = {
        "signal": ResponseSignal.BOOST_SCAN_SUCCESS.value,
        "e0": report.e0,
        "grid": {"extent": grid.extent, "points": grid.points, "spacing": grid.spacing},
        "velocities": len(rows),
        "max_rel_err_e": worst_e,
        "max_rel_err_p": worst_p,
        "tolerance": config.tolerances.scan_rel_err,
    }
    store.write_json(ArtifactTypeEnum.SCAN_SUMMARY.value, summary)

    tolerance = config.tolerances.scan_rel_err
    failing = [row.speed for row in rows if max(row.rel_err_e, row.rel_err_p) > tolerance]
    if failing:
        raise ScanToleranceExceeded(
            f"{len(failing)} velocities exceed the relative tolerance {tolerance:.1e}",
            speeds=failing, max_rel_err_e=worst_e, max_rel_err_p=worst_p,
        )

    return summary
