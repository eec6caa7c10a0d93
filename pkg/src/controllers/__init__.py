from .BaseController import BaseController
from .PotentialController import PotentialController
from .RadialSolverController import RadialSolverController
from .FunctionalsController import FunctionalsController
from .BoostController import BoostController
from .EvolverController import EvolverController
