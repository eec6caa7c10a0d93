from pydantic import BaseModel, ConfigDict, Field
from typing import List, Optional

class PotentialTerm(BaseModel):
    """One monomial of the self-interaction: +coupling*a^exponent in f(a),
    -coupling*a^(exponent+1)/(exponent+1) in V(a)."""

    model_config = ConfigDict(frozen=True)

    coupling: float
    exponent: int = Field(ge=3)

class PotentialSpec(BaseModel):

    model_config = ConfigDict(frozen=True)

    mass_sq: float = Field(ge=0.0)
    terms: List[PotentialTerm] = Field(default_factory=list)
    amplitude_cap: float = Field(gt=0.0)

    def leading_term(self) -> Optional[PotentialTerm]:
        active = [term for term in self.terms if term.coupling != 0.0]
        if not active:
            return None
        return max(active, key=lambda term: term.exponent)

class ConditionS1(BaseModel):
    holds: bool
    value: float

class ConditionS2(BaseModel):
    holds: bool
    witness: Optional[float] = None

class ConditionS3(BaseModel):
    applicable: bool
    holds: Optional[bool] = None
    critical_exponent: Optional[float] = None
    note: str = ""

class ConditionS4(BaseModel):
    holds_on_cap_range: bool
    first_violation: Optional[float] = None
    holds_beyond_cap: bool = True

class ConditionReport(BaseModel):
    omega: float
    n: int
    s1: ConditionS1
    s2: ConditionS2
    s3: ConditionS3
    s4: ConditionS4
    negative_mass_regime: bool = False
