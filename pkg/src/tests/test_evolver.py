""" Tests for the leapfrog evolution of psi_tt = Laplacian(psi) + f(psi)

"""
from controllers import BoostController, EvolverController
from helpers.errors import CflViolation, NonFinite, ConfigError
from models.schemes.fields import GridSpec, FieldSample, EvolutionState, DiagnosticRecord
from tests import fixtures
import unittest
import numpy as np
import numpy.testing as nt

def constant_sample(grid: GridSpec, value: complex, velocity: complex = 0.0) -> FieldSample:
    return FieldSample(
        grid=grid,
        time=0.0,
        psi=np.full(grid.shape, value, dtype=np.complex128),
        psi_dot=np.full(grid.shape, velocity, dtype=np.complex128),
    )

def run_steps(evolver: EvolverController, sample: FieldSample, dt: float, steps: int) -> EvolutionState:
    state = EvolutionState(sample=sample)
    for _ in range(steps):
        state = evolver.step(state, dt)
    return state

class StepTest(unittest.TestCase):

    def setUp(self):
        self.evolver = EvolverController(fixtures.cubic_spec(), settings=fixtures.settings())
        self.grid = GridSpec.uniform(1, 5.0, 0.1)

    def test_zero_field_stays_zero(self):
        state = run_steps(self.evolver, constant_sample(self.grid, 0.0), 0.05, 20)
        self.assertTrue(np.all(state.sample.psi == 0.0))
        self.assertTrue(np.all(state.sample.psi_dot == 0.0))
        self.assertEqual(state.steps_taken, 20)
        nt.assert_allclose(state.sample.time, 1.0, rtol=1e-14)

    def test_zero_field_evolves_without_center(self):
        state = self.evolver.evolve(constant_sample(self.grid, 0.0), 1.0, 0.05, diag_stride=5)
        self.assertEqual(len(state.diagnostics), 5)
        for record in state.diagnostics:
            self.assertEqual(record.energy, 0.0)
            self.assertTrue(np.all(np.isnan(record.center)))
        self.assertTrue(np.all(state.sample.psi == 0.0))

    def test_constant_equilibrium(self):
        # f(1) = (-1 + 1) * 1 = 0
        state = run_steps(self.evolver, constant_sample(self.grid, 1.0), 0.05, 20)
        nt.assert_array_equal(state.sample.psi, np.ones(self.grid.shape))
        nt.assert_array_equal(state.sample.psi_dot, np.zeros(self.grid.shape))

    def test_periodic_wrap(self):
        psi = np.zeros(self.grid.shape, dtype=np.complex128)
        psi[0] = 1e-3
        sample = FieldSample(grid=self.grid, time=0.0, psi=psi, psi_dot=np.zeros_like(psi))
        state = self.evolver.step(EvolutionState(sample=sample), 0.05)
        self.assertNotEqual(state.sample.psi[-1], 0.0)
        self.assertEqual(state.sample.psi[-1], state.sample.psi[1])

    def test_cfl_bound(self):
        sample = constant_sample(self.grid, 1.0)
        self.assertAlmostEqual(self.evolver.max_time_step(sample), 0.05, places=14)
        with self.assertRaises(CflViolation) as context:
            self.evolver.step(EvolutionState(sample=sample), 0.06)
        self.assertEqual(context.exception.dt, 0.06)

    def test_three_dimensions_rejected(self):
        grid = GridSpec.uniform(3, 1.0, 0.5)
        with self.assertRaises(ConfigError):
            self.evolver.step(EvolutionState(sample=constant_sample(grid, 0.0)), 0.1)

    def test_non_finite(self):
        with self.assertRaises(NonFinite) as context:
            run_steps(self.evolver, constant_sample(self.grid, 1e100), 0.05, 3)
        self.assertGreater(context.exception.time, 0.0)

    def test_phase_invariance(self):
        x = self.grid.axes()[0]
        psi = 0.5 * np.exp(-x ** 2) * np.exp(1j * x)
        psi_dot = 0.1j * psi
        theta = 1.1
        plain = FieldSample(grid=self.grid, time=0.0, psi=psi, psi_dot=psi_dot)
        rotated = FieldSample(
            grid=self.grid, time=0.0, psi=np.exp(1j * theta) * psi, psi_dot=np.exp(1j * theta) * psi_dot
        )
        first = run_steps(self.evolver, plain, 0.05, 40).sample.psi
        second = run_steps(self.evolver, rotated, 0.05, 40).sample.psi
        nt.assert_allclose(second, np.exp(1j * theta) * first, atol=1e-12)

    def test_time_reversal(self):
        x = self.grid.axes()[0]
        psi = (0.5 * np.exp(-x ** 2)).astype(np.complex128)
        start = FieldSample(grid=self.grid, time=0.0, psi=psi, psi_dot=0.2j * psi)

        forward = run_steps(self.evolver, start, 0.05, 40).sample
        reversed_start = FieldSample(
            grid=self.grid, time=0.0, psi=forward.psi, psi_dot=-forward.psi_dot
        )
        back = run_steps(self.evolver, reversed_start, 0.05, 40).sample
        nt.assert_allclose(back.psi, psi, atol=1e-10)
        nt.assert_allclose(back.psi_dot, -start.psi_dot, atol=1e-10)

class SolitaryWaveEvolutionTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.boost = BoostController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.evolver = EvolverController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.wave = fixtures.ground_state(1)

    def test_wave_at_rest_keeps_its_shape(self):
        grid = self.boost.suggest_grid(self.wave, 0.0, spacing=0.02)
        initial = self.boost.sample_boosted(self.wave, 0.0, grid)
        state = self.evolver.evolve(initial, 2.0, 0.01, diag_stride=20)

        exact = self.boost.sample_boosted(self.wave, 0.0, grid, t=state.sample.time)
        self.assertLess(
            self.evolver.relative_l2_distance(np.abs(state.sample.psi), np.abs(exact.psi)), 1e-3
        )
        self.assertLess(self.evolver.energy_drift(state.diagnostics), 1e-4)
        self.assertEqual(len(state.diagnostics), 11)
        centers = np.array([record.center for record in state.diagnostics])
        self.assertLess(np.max(np.abs(centers)), grid.spacing[0])

    def test_moving_wave_matches_boosted_solution(self):
        grid = self.boost.suggest_grid(self.wave, 0.6, t_max=10.0, spacing=0.02)
        initial = self.boost.sample_boosted(self.wave, 0.6, grid)
        seen = []
        state = self.evolver.evolve(
            initial, 10.0, 0.01, diag_stride=10, on_diagnostic=lambda state, record: seen.append(record.time)
        )

        self.assertEqual(len(seen), len(state.diagnostics))
        nt.assert_allclose(state.sample.time, 10.0, rtol=1e-12)
        nt.assert_allclose(self.evolver.fit_speed(state.diagnostics), [0.6], rtol=1e-2)
        self.assertLess(self.evolver.energy_drift(state.diagnostics), 1e-4)
        nt.assert_allclose(state.diagnostics[-1].momentum, state.diagnostics[0].momentum, rtol=1e-3)

        exact = self.boost.sample_boosted(self.wave, 0.6, grid, t=state.sample.time)
        self.assertLess(self.evolver.relative_l2_distance(state.sample.psi, exact.psi), 1e-2)

    def test_bad_stride(self):
        grid = GridSpec.uniform(1, 5.0, 0.1)
        with self.assertRaises(ConfigError):
            self.evolver.evolve(constant_sample(grid, 0.0), 1.0, 0.05, diag_stride=0)

class DiagnosticHelpersTest(unittest.TestCase):

    def record(self, time, energy, center):
        return DiagnosticRecord(time=time, energy=energy, momentum=np.zeros(1), center=np.array([center]))

    def test_energy_drift(self):
        records = [self.record(0.0, 2.0, 0.0), self.record(1.0, 2.002, 0.0), self.record(2.0, 1.999, 0.0)]
        nt.assert_allclose(EvolverController.energy_drift(records), 1e-3, rtol=1e-9)
        self.assertEqual(EvolverController.energy_drift([]), 0.0)

    def test_fit_speed(self):
        records = [self.record(t, 1.0, 0.25 + 0.4 * t) for t in np.linspace(0.0, 3.0, 7)]
        nt.assert_allclose(EvolverController.fit_speed(records), [0.4], rtol=1e-12)

    def test_relative_l2_distance(self):
        self.assertEqual(EvolverController.relative_l2_distance(np.ones(4), np.ones(4)), 0.0)
        self.assertAlmostEqual(EvolverController.relative_l2_distance(2.0 * np.ones(4), np.ones(4)), 1.0)

if __name__ == "__main__":
    unittest.main()
