from enum import Enum

class StencilEnums(Enum):
    SECOND_ORDER = 2
    FOURTH_ORDER = 4
