from .StencilEnums import StencilEnums
from .providers import CentralSecondOrderStencil, CentralFourthOrderStencil

class StencilProviderFactory:
    def __init__(self, config):
        self.config = config

    def create(self, order: int = None):
        order = order if order else self.config.STENCIL_ORDER

        if order == StencilEnums.SECOND_ORDER.value:
            return CentralSecondOrderStencil()

        if order == StencilEnums.FOURTH_ORDER.value:
            return CentralFourthOrderStencil()

        return None
