""" Tests for boosted sampling and grid measurements

"""
from controllers import BoostController, FunctionalsController
from helpers.errors import GridTooSmall, ZeroField, ConfigError
from models.schemes.fields import GridSpec, FieldSample
from tests import fixtures
import unittest
import numpy as np
import numpy.testing as nt

class GridSpecTest(unittest.TestCase):

    def test_cell_centred_axes(self):
        grid = GridSpec(n=1, extent=[1.0], points=[4])
        nt.assert_allclose(grid.axes()[0], [-0.75, -0.25, 0.25, 0.75])
        self.assertEqual(grid.spacing, [0.5])
        self.assertEqual(grid.cell_volume, 0.5)

    def test_uniform(self):
        grid = GridSpec.uniform(2, 10.0, 0.05)
        self.assertEqual(grid.points, [400, 400])
        nt.assert_allclose(grid.spacing, [0.05, 0.05])

    def test_invalid_grids(self):
        with self.assertRaises(ValueError):
            GridSpec(n=1, extent=[1.0], points=[5])
        with self.assertRaises(ValueError):
            GridSpec(n=2, extent=[1.0], points=[4])
        with self.assertRaises(ValueError):
            GridSpec(n=1, extent=[-1.0], points=[4])

class Boost1DTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.boost = BoostController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.wave = fixtures.ground_state(1)
        cls.grid = cls.boost.suggest_grid(cls.wave, 0.0, spacing=0.02)

    def test_rest_sample(self):
        sample = self.boost.sample_boosted(self.wave, 0.0, self.grid)
        x = self.grid.axes()[0]
        nt.assert_allclose(sample.psi.real, fixtures.sech_profile(x), atol=1e-5)
        nt.assert_allclose(sample.psi.imag, 0.0, atol=1e-15)
        nt.assert_allclose(sample.psi_dot, -1j * fixtures.OMEGA * sample.psi, atol=1e-15)

    def test_center_of_energy_at_rest(self):
        sample = self.boost.sample_boosted(self.wave, 0.0, self.grid)
        nt.assert_allclose(self.boost.center_of_energy(sample), [0.0], atol=1e-10)

    def test_moving_sample_is_a_travelling_wave(self):
        later = self.boost.sample_boosted(self.wave, 0.6, self.grid, t=1.0)
        shifted = self.boost.sample_boosted(self.wave, 0.6, self.grid, t=0.0, origin=[0.6])
        nt.assert_allclose(np.abs(later.psi), np.abs(shifted.psi), atol=1e-12)

    def test_scan_matches_predictions(self):
        speeds = [round(0.1 * i, 1) for i in range(10)]
        rows = self.boost.boost_scan(self.wave, speeds[::-1], self.grid)
        self.assertEqual([row.speed for row in rows], speeds)
        for row in rows:
            with self.subTest(v=row.speed):
                self.assertLess(row.rel_err_e, 1e-3)
                self.assertLess(row.rel_err_p, 1e-3)

        moving = rows[6]
        nt.assert_allclose(moving.e_predicted, 2.28, rtol=1e-6)
        nt.assert_allclose(moving.p_predicted, [1.368], rtol=1e-6)
        nt.assert_allclose(moving.e_measured, 2.28, rtol=1e-3)

        # E(v) sqrt(1 - v^2) = E(0) and P(v) = v E(v)
        rest = rows[0].e_measured
        for row in rows[1:]:
            nt.assert_allclose(row.e_measured * np.sqrt(1.0 - row.speed ** 2), rest, rtol=1e-3)
            nt.assert_allclose(row.p_measured[0], row.speed * row.e_measured, rtol=1e-3)

    def test_rest_energy_converges_at_second_order(self):
        e0 = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings()).compute_functionals(
            self.wave
        ).e0
        errors = []
        for spacing in (0.04, 0.02):
            grid = self.boost.suggest_grid(self.wave, 0.0, spacing=spacing)
            errors.append(abs(self.boost.measure_energy(self.boost.sample_boosted(self.wave, 0.0, grid)) - e0))
        self.assertLess(errors[1], 1e-3 * e0)
        self.assertGreater(errors[0] / errors[1], 3.5)
        self.assertLess(errors[0] / errors[1], 4.5)

    def test_integrals_are_constant_in_time(self):
        grid = self.boost.suggest_grid(self.wave, 0.6, t_max=1.0, spacing=0.02)
        start = self.boost.measure_pair(self.boost.sample_boosted(self.wave, 0.6, grid, t=0.0))
        later = self.boost.measure_pair(self.boost.sample_boosted(self.wave, 0.6, grid, t=1.0))
        nt.assert_allclose(later.energy, start.energy, rtol=1e-6)
        nt.assert_allclose(later.momentum, start.momentum, rtol=1e-6)

    def test_support_check(self):
        small = GridSpec.uniform(1, 5.0, 0.02)
        with self.assertRaises(GridTooSmall) as context:
            self.boost.sample_boosted(self.wave, 0.6, small, t=2.0)
        self.assertEqual(context.exception.velocity, [0.6])
        self.assertEqual(context.exception.time, 2.0)

        with self.assertRaises(GridTooSmall) as context:
            self.boost.boost_scan(self.wave, [0.99], GridSpec.uniform(1, 1.0, 0.02))
        self.assertEqual(context.exception.velocity, [0.99])

    def test_dimension_mismatch(self):
        with self.assertRaises(ConfigError):
            self.boost.sample_boosted(self.wave, 0.0, GridSpec.uniform(2, 5.0, 0.5))

    def test_zero_field(self):
        grid = GridSpec.uniform(1, 5.0, 0.5)
        sample = FieldSample(
            grid=grid, time=0.0, psi=np.zeros(grid.shape, complex), psi_dot=np.zeros(grid.shape, complex)
        )
        self.assertEqual(self.boost.measure_energy(sample), 0.0)
        with self.assertRaises(ZeroField):
            self.boost.center_of_energy(sample)

class Boost2DTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.boost = BoostController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.wave = fixtures.ground_state(2)
        cls.grid = cls.boost.suggest_grid(cls.wave, 0.0, spacing=0.1)
        cls.report = FunctionalsController(
            fixtures.cubic_spec(), settings=fixtures.settings()
        ).compute_functionals(cls.wave)

    def test_oblique_boost(self):
        rows = self.boost.boost_scan(self.wave, [[0.3, 0.4]], self.grid, report=self.report)
        row = rows[0]
        self.assertAlmostEqual(row.speed, 0.5, places=14)
        self.assertLess(row.rel_err_e, 5e-3)
        self.assertLess(row.rel_err_p, 5e-3)
        # momentum points along the boost
        direction = row.p_measured / np.linalg.norm(row.p_measured)
        nt.assert_allclose(direction, [0.6, 0.8], atol=1e-3)

    def test_axis_swap_symmetry(self):
        along_x = self.boost.measure(self.boost.sample_boosted(self.wave, [0.5, 0.0], self.grid))
        along_y = self.boost.measure(self.boost.sample_boosted(self.wave, [0.0, 0.5], self.grid))
        nt.assert_allclose(along_x[0], along_y[0], rtol=1e-10)
        nt.assert_allclose(along_x[1][::-1], along_y[1], rtol=1e-10, atol=1e-12)
        self.assertLess(abs(along_x[1][1]), 1e-6 * self.report.e0)

    def test_rotation(self):
        rotated = self.boost.rotate_velocity([0.5, 0.0], np.pi / 2.0)
        nt.assert_allclose(rotated, [0.0, 0.5], atol=1e-15)
        with self.assertRaises(ConfigError):
            self.boost.rotate_vector([1.0, 0.0, 0.0], 0.1)

    def test_rotated_boost_gives_the_same_row(self):
        angle = np.pi / 6.0
        velocity = [0.5, 0.0]
        along, turned = self.boost.boost_scan(
            self.wave, [velocity, self.boost.rotate_velocity(velocity, angle)], self.grid, report=self.report
        )
        nt.assert_allclose(turned.velocity, self.boost.rotate_velocity(velocity, angle), atol=1e-15)
        nt.assert_allclose(turned.e_measured, along.e_measured, rtol=5e-3)
        nt.assert_allclose(
            self.boost.rotate_vector(turned.p_measured, -angle), along.p_measured,
            atol=5e-3 * np.linalg.norm(along.p_measured),
        )
        nt.assert_allclose(turned.e_predicted, along.e_predicted, rtol=1e-12)

    def test_vortex_sample_winds(self):
        vortex = fixtures.excited_state(1)
        grid = self.boost.suggest_grid(vortex, 0.0, spacing=0.1)
        sample = self.boost.sample_boosted(vortex, 0.0, grid)
        x, y = grid.mesh()
        ring = np.abs(np.hypot(x, y) - 2.0) < 0.05
        phase = np.angle(sample.psi[ring]) - np.arctan2(y[ring], x[ring])
        nt.assert_allclose(np.abs(np.exp(1j * phase) - 1.0), 0.0, atol=1e-10)

class Boost2DFineGridTest(unittest.TestCase):
    """ h = 0.05 scans of the radial wave and the k = 1 vortex """

    @classmethod
    def setUpClass(cls):
        cls.boost = BoostController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())

    def scan(self, wave):
        grid = self.boost.suggest_grid(wave, 0.0, spacing=0.05)
        report = self.functionals.compute_functionals(wave)
        return report, self.boost.boost_scan(wave, [[0.6, 0.0], [0.3, 0.0]], grid, report=report)

    def test_radial_wave(self):
        report, rows = self.scan(fixtures.ground_state(2))
        self.assertEqual([row.speed for row in rows], [0.3, 0.6])
        for row in rows:
            with self.subTest(v=row.speed):
                self.assertLess(row.rel_err_e, 1e-3)
                self.assertLess(row.rel_err_p, 1e-3)
                self.assertLess(abs(row.p_measured[1]), 1e-6 * report.e0)

    def test_vortex(self):
        _, rows = self.scan(fixtures.excited_state(1))
        for row in rows:
            with self.subTest(v=row.speed):
                self.assertLess(row.rel_err_e, 1e-3)
                self.assertLess(row.rel_err_p, 1e-3)

if __name__ == "__main__":
    unittest.main()
