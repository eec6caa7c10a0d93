from models.enums.ResponseEnums import ResponseSignal, ExitCode

class SolitonError(Exception):

    signal = ResponseSignal.STEP_FAILURE
    exit_code = ExitCode.NUMERICAL_FAILURE

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def __getattr__(self, name):
        # context entries (time, velocity, ...) read like attributes
        context = self.__dict__.get("context", {})
        if name in context:
            return context[name]
        raise AttributeError(name)

    def to_dict(self) -> dict:
        return {
            "signal": self.signal.value,
            "exit_code": int(self.exit_code),
            "message": self.message,
            **{key: value for key, value in self.context.items()},
        }

class ConfigError(SolitonError):
    signal = ResponseSignal.CONFIG_INVALID
    exit_code = ExitCode.CONFIG_ERROR

class NoBracket(SolitonError):
    signal = ResponseSignal.NO_BRACKET

class StepFailure(SolitonError):
    signal = ResponseSignal.STEP_FAILURE

class NodeCountMismatch(SolitonError):
    signal = ResponseSignal.NODE_COUNT_MISMATCH

class TailNotCertified(SolitonError):
    signal = ResponseSignal.TAIL_NOT_CERTIFIED

class SuperluminalVelocity(SolitonError):
    signal = ResponseSignal.SUPERLUMINAL_VELOCITY
    exit_code = ExitCode.CONFIG_ERROR

class GridTooSmall(SolitonError):
    signal = ResponseSignal.GRID_TOO_SMALL

class CflViolation(SolitonError):
    signal = ResponseSignal.CFL_VIOLATION

class NonFinite(SolitonError):
    signal = ResponseSignal.NON_FINITE

class ZeroField(SolitonError):
    signal = ResponseSignal.ZERO_FIELD

class IdentityCheckFailed(SolitonError):
    signal = ResponseSignal.IDENTITY_CHECK_FAILED

class ScanToleranceExceeded(SolitonError):
    signal = ResponseSignal.SCAN_TOLERANCE_EXCEEDED

class SpeedCheckFailed(SolitonError):
    signal = ResponseSignal.SPEED_CHECK_FAILED

class ConditionViolation(ConfigError):
    signal = ResponseSignal.CONDITION_S1_FAILED
