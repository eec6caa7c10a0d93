from .StencilEnums import StencilEnums
from .StencilInterface import StencilInterface
from .StencilProviderFactory import StencilProviderFactory
