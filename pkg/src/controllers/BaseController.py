from helpers.config import get_settings, Settings
from helpers.errors import ConfigError
from stores.stencils import StencilProviderFactory
import os

class BaseController:

    def __init__(self, settings: Settings = None):

        self.app_settings = settings if settings else get_settings()

        self.base_dir = os.path.dirname( os.path.dirname(__file__) )

    def get_output_path(self, output_dir: str):

        output_path = output_dir if os.path.isabs(output_dir) else os.path.join(
            os.getcwd(), output_dir
        )

        if not os.path.exists(output_path):
            os.makedirs(output_path)

        return output_path

    def get_stencil(self, order: int = None):

        stencil = StencilProviderFactory(self.app_settings).create(order=order)
        if stencil is None:
            raise ConfigError(
                f"unsupported stencil order {order or self.app_settings.STENCIL_ORDER}; use 2 or 4"
            )

        return stencil
