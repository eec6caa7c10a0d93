from functools import lru_cache
from pydantic import Field
from pydantic_settings import BaseSettings

class Settings(BaseSettings):

    APP_NAME: str = "soliton-lab"
    APP_VERSION: str = "0.1.0"
    LOG_LEVEL: str = "INFO"

    SOLITON_THREADS: int = Field(default=1, ge=1)
    SHOW_PROGRESS: bool = False

    RADIAL_ODE_METHOD: str = "RK45"
    RADIAL_ODE_RTOL: float = 1e-10
    RADIAL_ODE_ATOL: float = 1e-14
    RADIAL_STEP: float = Field(default=1e-3, gt=0.0)
    RADIAL_TOL_S: float = 1e-13
    RADIAL_SCAN_POINTS: int = Field(default=64, ge=2)
    RADIAL_SCAN_DECADES: float = 4.0
    RADIAL_DIVERGENCE_FACTOR: float = 3.0
    RADIAL_DECAY_FRACTION: float = 1e-3
    RADIAL_MATCH_FRACTION: float = 1e-8
    RADIAL_TRUST_TOLERANCE: float = 1e-6
    RADIAL_SPLICE_WARN_FRACTION: float = 1e-3
    RADIAL_START_FACTOR: float = 1e-6
    RADIAL_RMAX_FACTOR: float = 40.0
    RADIAL_MAX_BISECTIONS: int = 200

    CONDITION_SCAN_POINTS: int = 10000

    STENCIL_ORDER: int = 2
    CFL_NUMBER: float = 0.5
    BOUNDARY_FRACTION: float = 1e-8
    ENERGY_FLOOR: float = 1e-20
    RESIDUAL_FLOOR: float = 1e-30

    class Config:
        env_file = ".env"
        extra = "ignore"

@lru_cache
def get_settings():
    return Settings()
