from .CentralSecondOrderStencil import CentralSecondOrderStencil
from .CentralFourthOrderStencil import CentralFourthOrderStencil
