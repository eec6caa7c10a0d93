import numpy as np
from scipy import integrate, special

def uniform_simpson(values: np.ndarray, spacing: float) -> float:
    return float(integrate.simpson(np.asarray(values, dtype=float), dx=spacing))

def tail_power_integral(power: float, rate: float, start: float) -> float:
    """Closed form of the integral of r^power * exp(-rate*r) over [start, inf)."""
    if rate <= 0.0 or start <= 0.0:
        raise ValueError("tail integral needs positive rate and start radius")

    x = rate * start
    rounded = round(power)
    if rounded == power and rounded <= 0:
        # r^-j e^{-rate r} integrates to start^{1-j} E_j(rate*start)
        order = -int(rounded)
        return float(start ** (power + 1.0) * special.expn(order, x))

    if power > -1.0:
        shape = power + 1.0
        return float(special.gamma(shape) * special.gammaincc(shape, x) / rate ** shape)

    value, _ = integrate.quad(lambda r: r ** power * np.exp(-rate * r), start, np.inf)
    return float(value)
