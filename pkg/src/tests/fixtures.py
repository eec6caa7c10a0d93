""" Shared solitary waves for the test suite

Solving a profile takes a few dozen shots, so each wave is built once per session.
"""
from functools import lru_cache
from helpers.config import Settings
from controllers import PotentialController, RadialSolverController
import numpy as np

OMEGA = 0.8
AMPLITUDE = np.sqrt(0.72)
KAPPA = 0.6
I0, I1, V0, E0 = 1.2, 0.144, 0.912, 1.824

@lru_cache
def settings() -> Settings:
    return Settings(SHOW_PROGRESS=False, SOLITON_THREADS=1)

@lru_cache
def cubic_spec():
    return PotentialController.canonical_cubic()

@lru_cache
def solver() -> RadialSolverController:
    return RadialSolverController(cubic_spec(), settings=settings())

@lru_cache
def ground_state(n: int = 1, omega: float = OMEGA):
    return solver().find_ground_state(omega, n)

@lru_cache
def excited_state(k: int = 1, omega: float = OMEGA):
    return solver().find_excited_state(omega, k)

def sech_profile(r):
    return AMPLITUDE / np.cosh(KAPPA * np.asarray(r, dtype=float))
