from enum import Enum

class ShootOutcomeEnum(Enum):

    DECAYED = "decayed"
    UNDERSHOT = "undershot"
    OVERSHOT = "overshot"
