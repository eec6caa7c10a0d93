from enum import Enum, IntEnum

class ResponseSignal(Enum):

    SOLVE_SUCCESS = "solve_success"
    CHECK_SUCCESS = "check_success"
    BOOST_SCAN_SUCCESS = "boost_scan_success"
    EVOLVE_SUCCESS = "evolve_success"
    DEMO_SUCCESS = "demo_success"

    CONFIG_INVALID = "config_invalid"
    CONDITION_S1_FAILED = "condition_s1_failed"
    NO_BRACKET = "no_bracket_found"
    STEP_FAILURE = "integrator_step_failure"
    NODE_COUNT_MISMATCH = "node_count_mismatch"
    TAIL_NOT_CERTIFIED = "tail_not_certified"
    SUPERLUMINAL_VELOCITY = "superluminal_velocity"
    GRID_TOO_SMALL = "grid_too_small"
    CFL_VIOLATION = "cfl_violation"
    NON_FINITE = "non_finite_field"
    ZERO_FIELD = "zero_field"
    IDENTITY_CHECK_FAILED = "identity_check_failed"
    SCAN_TOLERANCE_EXCEEDED = "scan_tolerance_exceeded"
    SPEED_CHECK_FAILED = "speed_check_failed"

class ExitCode(IntEnum):

    SUCCESS = 0
    CONFIG_ERROR = 1
    NUMERICAL_FAILURE = 2
