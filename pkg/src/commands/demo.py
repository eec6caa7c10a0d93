from helpers.config import Settings
from models.enums.ResponseEnums import ResponseSignal
from stores.artifacts import ArtifactStore
from .base import solve_wave
from .schemes import RunConfig
from .solve import cmd_solve
from .check import cmd_check
from .boost_scan import cmd_boost_scan
from .evolve import cmd_evolve
import logging

logger = logging.getLogger(__name__)

DEMO_VELOCITIES = [0.0, 0.3, 0.6, 0.9]

def demo_config(output_dir: str = "outputs") -> RunConfig:
    """The 1D cubic ground state at omega = 0.8, scanned at four speeds and evolved at v = 0.6."""
    return RunConfig.model_validate({
        "omega": 0.8,
        "n": 1,
        "velocities": DEMO_VELOCITIES,
        "grid": {"spacing": 0.02},
        "evolve": {"t_final": 10.0, "dt": 0.01, "diag_stride": 10, "velocity": 0.6},
        "output_dir": output_dir,
        "check_speed": True,
    })

def cmd_demo(config: RunConfig, store: ArtifactStore, settings: Settings, wave=None) -> dict:

    wave = wave if wave else solve_wave(config, settings)

    summary = {"signal": ResponseSignal.DEMO_SUCCESS.value}
    for name, handler in (
        ("solve", cmd_solve), ("check", cmd_check),
        ("boost_scan", cmd_boost_scan), ("evolve", cmd_evolve),
    ):
        logger.info(f"demo step: {name}")
        summary[name] = handler(config, store, settings, wave=wave)

    return summary
