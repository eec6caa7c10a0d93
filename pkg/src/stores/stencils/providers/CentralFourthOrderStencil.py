from ..StencilInterface import StencilInterface
from typing import Sequence
import numpy as np

class CentralFourthOrderStencil(StencilInterface):

    order = 4

    def gradient(self, field: np.ndarray, axis: int, spacing: float) -> np.ndarray:
        p1 = np.roll(field, -1, axis=axis)
        p2 = np.roll(field, -2, axis=axis)
        m1 = np.roll(field, 1, axis=axis)
        m2 = np.roll(field, 2, axis=axis)
        return (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * spacing)

    def laplacian(self, field: np.ndarray, spacings: Sequence[float]) -> np.ndarray:
        result = np.zeros_like(field)
        for axis, h in enumerate(spacings):
            near = np.roll(field, -1, axis=axis) + np.roll(field, 1, axis=axis)
            far = np.roll(field, -2, axis=axis) + np.roll(field, 2, axis=axis)
            result += (16.0 * near - far - 30.0 * field) / (12.0 * h * h)
        return result
