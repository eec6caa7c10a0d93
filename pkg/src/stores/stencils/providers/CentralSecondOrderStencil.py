from ..StencilInterface import StencilInterface
from typing import Sequence
import numpy as np

class CentralSecondOrderStencil(StencilInterface):

    order = 2

    def gradient(self, field: np.ndarray, axis: int, spacing: float) -> np.ndarray:
        forward = np.roll(field, -1, axis=axis)
        backward = np.roll(field, 1, axis=axis)
        return (forward - backward) / (2.0 * spacing)

    def laplacian(self, field: np.ndarray, spacings: Sequence[float]) -> np.ndarray:
        result = np.zeros_like(field)
        for axis, h in enumerate(spacings):
            result += (
                np.roll(field, -1, axis=axis) - 2.0 * field + np.roll(field, 1, axis=axis)
            ) / (h * h)
        return result
