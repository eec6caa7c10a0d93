from controllers import FunctionalsController, PotentialController
from helpers.config import Settings
from helpers.errors import IdentityCheckFailed
from models.enums.ResponseEnums import ResponseSignal
from models.enums.ArtifactTypeEnum import ArtifactTypeEnum
from stores.artifacts import ArtifactStore
from .base import solve_wave
from .schemes import RunConfig
import logging

logger = logging.getLogger(__name__)

def cmd_check(config: RunConfig, store: ArtifactStore, settings: Settings, wave=None) -> dict:

    spec = config.potential_spec()
    functionals = FunctionalsController(spec, settings=settings)
    wave = wave if wave else solve_wave(config, settings)

    report = functionals.compute_functionals(wave)
    conditions = PotentialController(spec, settings=settings).check_conditions(wave.omega, wave.n)

    payload = report.model_dump(mode="json")
    payload["rest_energy_variants"] = functionals.rest_energy_variants(report)
    payload["conditions"] = conditions.model_dump(mode="json")
    store.write_json(ArtifactTypeEnum.REPORT.value, payload)

    functionals.verify_rest_energy(report, conditions, wave.amplitude)

    tolerance = config.tolerances.quadrature_tol
    if report.pokhozhaev_residual > tolerance:
        raise IdentityCheckFailed(
            f"Pokhozhaev residual {report.pokhozhaev_residual:.3e} exceeds {tolerance:.3e}",
            pokhozhaev_residual=report.pokhozhaev_residual,
        )
    if abs(report.isotropy_defect) > tolerance * abs(report.e0):
        raise IdentityCheckFailed(
            f"isotropy defect {report.isotropy_defect:.3e} exceeds {tolerance:.3e} * E0",
            isotropy_defect=report.isotropy_defect,
        )

    logger.info(f"identities hold: residual {report.pokhozhaev_residual:.3e}, E0={report.e0!r}")
    return {"signal": ResponseSignal.CHECK_SUCCESS.value, **payload}
