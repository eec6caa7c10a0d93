from .schemes import RunConfig, load_run_config
from .base import execute
from .solve import cmd_solve
from .check import cmd_check
from .boost_scan import cmd_boost_scan
from .evolve import cmd_evolve
from .demo import cmd_demo, demo_config

COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "boost-scan": cmd_boost_scan,
    "evolve": cmd_evolve,
    "demo": cmd_demo,
}
