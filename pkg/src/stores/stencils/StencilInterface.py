from abc import ABC, abstractmethod
from typing import Sequence
import numpy as np

class StencilInterface(ABC):
    """Periodic finite-difference operators on uniform Cartesian grids."""

    @abstractmethod
    def gradient(self, field: np.ndarray, axis: int, spacing: float) -> np.ndarray:
        pass

    @abstractmethod
    def laplacian(self, field: np.ndarray, spacings: Sequence[float]) -> np.ndarray:
        pass
