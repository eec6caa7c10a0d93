from controllers import BaseController
from controllers.RadialSolverController import RadialSolverController
from helpers.config import Settings
from helpers.errors import SolitonError
from models.enums.ResponseEnums import ExitCode
from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from models.schemes.radial import SolitaryWave
from stores.artifacts import ArtifactStore
from utils.json_format import dumps_fixed
from .schemes import RunConfig
from typing import Callable
import logging

logger = logging.getLogger(__name__)

def open_store(config: RunConfig, settings: Settings) -> ArtifactStore:
    output_path = BaseController(settings=settings).get_output_path(config.output_dir)
    store = ArtifactStore(output_path, app_name=settings.APP_NAME, app_version=settings.APP_VERSION)
    store.write_json(ArtifactTypeEnum.CONFIG.value, config.normalized())
    return store

def solve_wave(config: RunConfig, settings: Settings) -> SolitaryWave:
    solver = RadialSolverController(config.potential_spec(), settings=settings)
    if config.k == 0:
        return solver.find_ground_state(config.omega, config.n, tol_s=config.tolerances.tol_s)
    return solver.find_excited_state(config.omega, config.k, tol_s=config.tolerances.tol_s)

def execute(name: str, handler: Callable, config: RunConfig, settings: Settings, emit=print) -> int:
    """Run one command, write the manifest and map failures onto the exit-code contract."""
    store = open_store(config, settings)
    try:
        summary = handler(config, store, settings)
    except SolitonError as error:
        logger.error(f"{name} failed with {error.signal.value}: {error.message}")
        store.write_manifest(config.normalized())
        emit(dumps_fixed(error.to_dict()))
        return int(error.exit_code)

    store.write_manifest(config.normalized())
    emit(dumps_fixed(summary))
    return int(ExitCode.SUCCESS)
