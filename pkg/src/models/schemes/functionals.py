from pydantic import BaseModel
from typing import List

from models.enums.ProvenanceEnum import ProvenanceEnum

class FunctionalReport(BaseModel):

    i0: float
    i_k: List[float]
    v0: float
    e0: float
    pokhozhaev_residual: float
    isotropy_defect: float
    omega: float
    n: int
    k: int = 0
    negative_mass_regime: bool = False

    @property
    def gradient_sum(self) -> float:
        return float(sum(self.i_k))

class EnergyMomentum(BaseModel):

    energy: float
    momentum: List[float]
    velocity: List[float]
    provenance: ProvenanceEnum
