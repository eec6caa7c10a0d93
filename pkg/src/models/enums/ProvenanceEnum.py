from enum import Enum

class ProvenanceEnum(Enum):

    CLOSED_FORM = "closed_form"
    GENERAL_FORMULA = "general_formula"
    GRID_MEASURED = "grid_measured"
