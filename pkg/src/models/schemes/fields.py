from dataclasses import dataclass, field
from pydantic import BaseModel, ConfigDict, Field, model_validator
from typing import List, Optional
import numpy as np

class GridSpec(BaseModel):
    """Cell-centred Cartesian grid covering [-L_j, L_j) on every axis."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, le=3)
    extent: List[float]
    points: List[int]

    @model_validator(mode="after")
    def check_axes(self):
        if len(self.extent) != self.n or len(self.points) != self.n:
            raise ValueError(f"grid needs {self.n} extents and point counts")
        if any(L <= 0.0 for L in self.extent):
            raise ValueError("grid half-widths must be positive")
        if any(N <= 0 or N % 2 for N in self.points):
            raise ValueError("grid point counts must be positive and even")
        return self

    @classmethod
    def uniform(cls, n: int, half_width: float, spacing: float):
        points = 2 * int(np.ceil(half_width / spacing))
        return cls(n=n, extent=[points * spacing / 2.0] * n, points=[points] * n)

    @property
    def spacing(self) -> List[float]:
        return [2.0 * L / N for L, N in zip(self.extent, self.points)]

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    @property
    def shape(self) -> tuple:
        return tuple(self.points)

    def axes(self) -> List[np.ndarray]:
        return [
            -L + (np.arange(N) + 0.5) * h
            for L, N, h in zip(self.extent, self.points, self.spacing)
        ]

    def mesh(self) -> List[np.ndarray]:
        return np.meshgrid(*self.axes(), indexing="ij")

@dataclass(frozen=True)
class FieldSample:

    grid: GridSpec
    time: float
    psi: np.ndarray
    psi_dot: np.ndarray
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.psi.shape != self.grid.shape or self.psi_dot.shape != self.grid.shape:
            raise ValueError(
                f"field arrays {self.psi.shape}/{self.psi_dot.shape} do not match grid {self.grid.shape}"
            )

@dataclass(frozen=True)
class DiagnosticRecord:

    time: float
    energy: float
    momentum: np.ndarray
    center: np.ndarray

@dataclass
class EvolutionState:

    sample: FieldSample
    prev_psi: Optional[np.ndarray] = None
    acceleration: Optional[np.ndarray] = None
    steps_taken: int = 0
    diagnostics: List[DiagnosticRecord] = field(default_factory=list)

@dataclass(frozen=True)
class BoostScanRow:

    velocity: np.ndarray
    e_measured: float
    p_measured: np.ndarray
    e_predicted: float
    p_predicted: np.ndarray
    rel_err_e: float
    rel_err_p: float

    @property
    def speed(self) -> float:
        return float(np.linalg.norm(self.velocity))
