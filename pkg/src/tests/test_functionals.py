""" Tests for the rest-frame functionals and the boosted energy-momentum predictions

"""
from controllers import FunctionalsController, PotentialController
from helpers.errors import SuperluminalVelocity, IdentityCheckFailed
from models.enums.ProvenanceEnum import ProvenanceEnum
from models.schemes.fields import GridSpec
from tests import fixtures
from utils.quadrature import uniform_simpson, tail_power_integral
import unittest
import numpy as np
import numpy.testing as nt
from scipy import integrate

class QuadratureTest(unittest.TestCase):

    def test_simpson_exact_on_cubics(self):
        r = np.linspace(0.0, 2.0, 21)
        self.assertAlmostEqual(uniform_simpson(r ** 3, 0.1), 4.0, places=12)

    def test_tail_integrals(self):
        for power in (-2.0, -1.0, 0.0, 0.5, 1.0, -1.5):
            expected, _ = integrate.quad(lambda r: r ** power * np.exp(-1.2 * r), 3.0, np.inf)
            nt.assert_allclose(tail_power_integral(power, 1.2, 3.0), expected, rtol=1e-7)

    def test_tail_integral_rejects_bad_range(self):
        with self.assertRaises(ValueError):
            tail_power_integral(0.0, 0.0, 1.0)

class GroundState1DFunctionalsTest(unittest.TestCase):
    """ A sech(kappa x): I0 = 1.2, I1 = 0.144, V0 = 0.912, E0 = 1.824 """

    @classmethod
    def setUpClass(cls):
        cls.functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.wave = fixtures.ground_state(1)
        cls.report = cls.functionals.compute_functionals(cls.wave)

    def test_closed_form_values(self):
        nt.assert_allclose(self.report.i0, fixtures.I0, rtol=1e-6)
        nt.assert_allclose(self.report.i_k, [fixtures.I1], rtol=1e-6)
        nt.assert_allclose(self.report.v0, fixtures.V0, rtol=1e-6)
        nt.assert_allclose(self.report.e0, fixtures.E0, rtol=1e-6)

    def test_identities(self):
        self.assertLess(self.report.pokhozhaev_residual, 1e-6)
        self.assertEqual(self.report.isotropy_defect, 0.0)
        self.assertLess(abs(self.functionals.frequency_identity_residual(self.report)), 1e-6)
        self.assertFalse(self.report.negative_mass_regime)

    def test_rest_energy_variants_agree(self):
        variants = self.functionals.rest_energy_variants(self.report)
        nt.assert_allclose(variants["direct"], variants["pokhozhaev_form"], rtol=1e-6)

    def test_boosted_prediction(self):
        prediction = self.functionals.predict_energy_momentum(self.report, 0.6)
        nt.assert_allclose(prediction.energy, 2.28, rtol=1e-6)
        nt.assert_allclose(prediction.momentum, [1.368], rtol=1e-6)
        self.assertEqual(prediction.provenance, ProvenanceEnum.CLOSED_FORM)

        general = self.functionals.predict_energy_momentum(
            self.report, 0.6, ProvenanceEnum.GENERAL_FORMULA
        )
        nt.assert_allclose(general.energy, prediction.energy, rtol=1e-12)
        nt.assert_allclose(general.momentum, prediction.momentum, rtol=1e-6)

    def test_rest_prediction(self):
        prediction = self.functionals.predict_energy_momentum(self.report, 0.0)
        self.assertEqual(prediction.energy, self.report.e0)
        self.assertEqual(prediction.momentum, [0.0])

    def test_superluminal(self):
        with self.assertRaises(SuperluminalVelocity):
            self.functionals.predict_energy_momentum(self.report, 1.0)
        with self.assertRaises(SuperluminalVelocity):
            FunctionalsController.boost_geometry([0.8, 0.8], 2)

    def test_verify_rest_energy(self):
        conditions = PotentialController(fixtures.cubic_spec()).check_conditions(fixtures.OMEGA, 1)
        self.assertTrue(self.functionals.verify_rest_energy(self.report, conditions, self.wave.amplitude))

        negative = self.report.model_copy(update={"e0": -1.0})
        with self.assertRaises(IdentityCheckFailed):
            self.functionals.verify_rest_energy(negative, conditions, self.wave.amplitude)

    def test_grid_functionals(self):
        grid = GridSpec.uniform(1, 40.0, 0.02)
        field = fixtures.sech_profile(grid.axes()[0]).astype(np.complex128)
        report = self.functionals.report_from_grid(field, grid, fixtures.OMEGA)
        nt.assert_allclose(report.i0, fixtures.I0, rtol=1e-8)
        nt.assert_allclose(report.i_k, [fixtures.I1], rtol=1e-3)
        nt.assert_allclose(report.e0, fixtures.E0, rtol=1e-3)

class ZeroFrequencyTest(unittest.TestCase):
    """ omega = 0: sqrt(2) sech(x) carries E0 = 4/3 > 0 """

    def test_rest_energy_reported_as_computed(self):
        functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())
        wave = fixtures.ground_state(1, 0.0)
        report = functionals.compute_functionals(wave)

        self.assertTrue(report.negative_mass_regime)
        nt.assert_allclose(report.e0, 4.0 / 3.0, rtol=1e-6)
        conditions = PotentialController(fixtures.cubic_spec()).check_conditions(0.0, 1)
        self.assertTrue(functionals.verify_rest_energy(report, conditions, wave.amplitude))

class TwoDimensionalFunctionalsTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.solver = fixtures.solver()
        cls.functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())
        cls.wave = fixtures.ground_state(2)
        cls.report = cls.functionals.compute_functionals(cls.wave)

    def test_identities(self):
        self.assertLess(self.report.pokhozhaev_residual, 1e-6)
        self.assertEqual(self.report.isotropy_defect, 0.0)
        self.assertGreater(self.report.e0, 0.0)
        # in two dimensions V0 = omega^2 I0
        nt.assert_allclose(self.report.v0, fixtures.OMEGA ** 2 * self.report.i0, rtol=1e-6)

    def test_quadrature_converges_at_fourth_order(self):
        coarse = self.functionals.compute_functionals(self.solver.refine_wave(self.wave, 0.1))
        medium = self.functionals.compute_functionals(self.solver.refine_wave(self.wave, 0.05))
        fine = self.functionals.compute_functionals(self.solver.refine_wave(self.wave, 0.025))

        first = abs(coarse.i0 - medium.i0)
        second = abs(medium.i0 - fine.i0)
        self.assertGreater(first, 0.0)
        self.assertGreater(first / max(second, 1e-300), 8.0)

    def test_pokhozhaev_residual_drops_under_refinement(self):
        coarse = self.functionals.compute_functionals(self.solver.refine_wave(self.wave, 0.1))
        fine = self.functionals.compute_functionals(self.solver.refine_wave(self.wave, 0.05))
        self.assertGreater(coarse.pokhozhaev_residual, 0.0)
        self.assertGreater(coarse.pokhozhaev_residual / max(fine.pokhozhaev_residual, 1e-300), 8.0)

    def test_stretched_amplitude_breaks_isotropy(self):
        grid = GridSpec.uniform(2, 25.0, 0.1)
        round_report = self.functionals.stretched_report(self.wave, 1.0, grid)
        stretched = self.functionals.stretched_report(self.wave, 1.3, grid)

        self.assertLess(abs(round_report.isotropy_defect), 1e-8 * round_report.e0)
        self.assertGreater(abs(stretched.isotropy_defect), 1e-2 * stretched.e0)

        velocity = [0.5, 0.0]
        closed = self.functionals.predict_energy_momentum(stretched, velocity)
        general = self.functionals.predict_energy_momentum(
            stretched, velocity, ProvenanceEnum.GENERAL_FORMULA
        )
        self.assertNotAlmostEqual(closed.energy, general.energy, places=6)
        gamma = 1.0 / np.sqrt(1.0 - 0.25)
        nt.assert_allclose(
            general.energy - closed.energy, gamma * (2.0 * 0.25 / 2.0) * stretched.isotropy_defect, rtol=1e-8
        )

class ThreeDimensionalFunctionalsTest(unittest.TestCase):

    def test_identities(self):
        functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())
        report = functionals.compute_functionals(fixtures.ground_state(3))
        self.assertLess(report.pokhozhaev_residual, 1e-6)
        self.assertLess(abs(report.isotropy_defect), 1e-12 * report.e0)
        self.assertGreater(report.e0, 0.0)

class ExcitedStateFunctionalsTest(unittest.TestCase):

    def test_vortex_identities(self):
        functionals = FunctionalsController(fixtures.cubic_spec(), settings=fixtures.settings())
        for k in (1, 2):
            with self.subTest(k=k):
                report = functionals.compute_functionals(fixtures.excited_state(k))
                self.assertEqual(report.k, k)
                self.assertLess(report.pokhozhaev_residual, 1e-6)
                self.assertEqual(report.isotropy_defect, 0.0)
                self.assertGreater(report.e0, 0.0)

if __name__ == "__main__":
    unittest.main()
