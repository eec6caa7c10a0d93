from .enums.ResponseEnums import ResponseSignal, ExitCode
from .enums.ShootOutcomeEnum import ShootOutcomeEnum
from .enums.ProvenanceEnum import ProvenanceEnum
from .enums.ArtifactTypeEnum import ArtifactTypeEnum
