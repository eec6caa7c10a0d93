from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from typing import List, Optional, Union
from helpers.errors import ConfigError
from models.schemes.potential import PotentialSpec, PotentialTerm
from models.schemes.fields import GridSpec
from controllers.PotentialController import PotentialController
import numpy as np
import json

Velocity = Union[float, List[float]]

class PotentialConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    mass_sq: float = Field(default=1.0, ge=0.0)
    terms: List[PotentialTerm] = Field(
        default_factory=lambda: [PotentialTerm(coupling=1.0, exponent=3)]
    )
    amplitude_cap: Optional[float] = Field(default=None, gt=0.0)

class GridConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    spacing: float = Field(default=0.05, gt=0.0)
    extent: Optional[List[float]] = None
    points: Optional[List[int]] = None

class EvolveConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    t_final: float = Field(default=10.0, gt=0.0)
    dt: float = Field(default=0.01, gt=0.0)
    diag_stride: int = Field(default=10, ge=1)
    velocity: Velocity = 0.0

class Tolerances(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tol_s: float = Field(default=1e-13, gt=0.0)
    quadrature_tol: float = Field(default=1e-6, ge=0.0)
    scan_rel_err: float = Field(default=1e-3, ge=0.0)
    speed_rel_err: float = Field(default=1e-2, ge=0.0)

def _speed(velocity: Velocity) -> float:
    return float(np.linalg.norm(np.atleast_1d(np.asarray(velocity, dtype=float))))

class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    potential: PotentialConfig = Field(default_factory=PotentialConfig)
    omega: float = 0.8
    n: int = 1
    k: int = Field(default=0, ge=0)
    grid: GridConfig = Field(default_factory=GridConfig)
    velocities: List[Velocity] = Field(default_factory=list)
    evolve: EvolveConfig = Field(default_factory=EvolveConfig)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    output_dir: str = "outputs"
    snapshot_every: int = Field(default=0, ge=0)
    check_speed: bool = False

    @field_validator("n")
    @classmethod
    def check_dimension(cls, n: int):
        if n not in (1, 2, 3):
            raise ValueError(f"n must be 1, 2 or 3, got {n}")
        return n

    @model_validator(mode="after")
    def check_cross_fields(self):
        if self.k >= 1 and self.n != 2:
            raise ValueError(f"angular index k={self.k} requires n=2, got n={self.n}")

        gap = self.omega ** 2 - self.potential.mass_sq
        if not gap < 0.0:
            raise ValueError(f"S1 fails: omega^2 - mass_sq = {gap:g} >= 0")

        for velocity in list(self.velocities) + [self.evolve.velocity]:
            size = np.atleast_1d(np.asarray(velocity, dtype=float)).size
            if size not in (1, self.n):
                raise ValueError(f"velocity {velocity} must be a speed or an {self.n}-vector")
            if not _speed(velocity) < 1.0:
                raise ValueError(f"velocity {velocity} is not subluminal")

        grid = self.grid
        if (grid.extent is None) != (grid.points is None):
            raise ValueError("grid.extent and grid.points must be given together")
        if grid.extent is not None:
            GridSpec(n=self.n, extent=grid.extent, points=grid.points)

        if self.potential.amplitude_cap is None:
            self.potential.amplitude_cap = self._default_cap()
        return self

    def _default_cap(self) -> float:
        spec = PotentialSpec(
            mass_sq=self.potential.mass_sq, terms=self.potential.terms, amplitude_cap=1.0
        )
        amplitude = PotentialController(spec).expected_amplitude(self.omega)
        return 10.0 * amplitude if amplitude else 10.0

    def potential_spec(self) -> PotentialSpec:
        return PotentialSpec(
            mass_sq=self.potential.mass_sq,
            terms=self.potential.terms,
            amplitude_cap=self.potential.amplitude_cap,
        )

    def grid_spec(self) -> Optional[GridSpec]:
        if self.grid.extent is None:
            return None
        return GridSpec(n=self.n, extent=self.grid.extent, points=self.grid.points)

    def velocity_vectors(self) -> List[List[float]]:
        return [self._as_vector(velocity) for velocity in self.velocities]

    def evolve_velocity(self) -> List[float]:
        return self._as_vector(self.evolve.velocity)

    def _as_vector(self, velocity: Velocity) -> List[float]:
        vector = np.atleast_1d(np.asarray(velocity, dtype=float))
        if vector.size == 1 and self.n > 1:
            vector = np.concatenate([vector, np.zeros(self.n - 1)])
        return [float(value) for value in vector]

    def normalized(self) -> dict:
        return self.model_dump(mode="json")

def apply_override(payload: dict, assignment: str) -> dict:
    """Set a dotted key from `key=value`; the value is parsed as JSON when possible."""
    if "=" not in assignment:
        raise ConfigError(f"override '{assignment}' must look like key=value")

    key, raw = assignment.split("=", 1)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw

    node = payload
    parts = key.strip().split(".")
    for part in parts[:-1]:
        child = node.get(part)
        if child is None:
            child = node[part] = {}
        if not isinstance(child, dict):
            raise ConfigError(f"override '{key}' descends into non-object '{part}'")
        node = child
    node[parts[-1]] = value

    return payload

def load_run_config(path: str = None, overrides: List[str] = None) -> RunConfig:
    payload = {}
    if path:
        try:
            with open(path, encoding="utf-8") as handle:
                payload = json.load(handle)
        except (OSError, json.JSONDecodeError) as error:
            raise ConfigError(f"cannot read config {path}: {error}")
        if not isinstance(payload, dict):
            raise ConfigError(f"config {path} must hold a JSON object")

    for assignment in overrides or []:
        apply_override(payload, assignment)

    try:
        return RunConfig.model_validate(payload)
    except ValidationError as error:
        raise ConfigError(f"invalid run configuration: {error}")
