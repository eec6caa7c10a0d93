from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple
import numpy as np
from scipy.interpolate import CubicHermiteSpline

from models.enums.ShootOutcomeEnum import ShootOutcomeEnum
from .potential import PotentialSpec

@dataclass(frozen=True)
class RadialTail:
    """R(r) ~ prefactor * r^(-(n-1)/2) * exp(-delta*r) for r >= match_radius."""

    delta: float
    prefactor: float
    match_radius: float
    power: float

    def value(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return self.prefactor * r ** (-self.power) * np.exp(-self.delta * r)

    def derivative(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return -self.value(r) * (self.delta + self.power / r)

@dataclass(frozen=True)
class RadialProfile:

    r_grid: np.ndarray
    values: np.ndarray
    derivative: np.ndarray
    curvature: np.ndarray
    tail: Optional[RadialTail]
    node_count: int
    shoot_param: float
    bracket: Tuple[float, float] = (0.0, 0.0)

    @property
    def spacing(self) -> float:
        return float(self.r_grid[1] - self.r_grid[0])

    @property
    def match_radius(self) -> float:
        return float(self.r_grid[-1])

    @cached_property
    def value_spline(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.r_grid, self.values, self.derivative)

    @cached_property
    def slope_spline(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.r_grid, self.derivative, self.curvature)

@dataclass(frozen=True)
class SolitaryWave:

    n: int
    k: int
    omega: float
    profile: RadialProfile
    spec: PotentialSpec

    @property
    def amplitude(self) -> float:
        return float(np.max(np.abs(self.profile.values)))

@dataclass
class ShootResult:

    outcome: ShootOutcomeEnum
    departure: Optional[ShootOutcomeEnum]
    shoot_param: float
    r_start: float
    r_end: float
    solution: object = field(repr=False)

    def evaluate(self, r: np.ndarray) -> np.ndarray:
        return self.solution(np.asarray(r, dtype=float))
