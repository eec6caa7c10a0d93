from .potential import PotentialTerm, PotentialSpec, ConditionReport
from .radial import RadialTail, RadialProfile, SolitaryWave, ShootResult
from .functionals import FunctionalReport, EnergyMomentum
from .fields import GridSpec, FieldSample, DiagnosticRecord, EvolutionState, BoostScanRow
