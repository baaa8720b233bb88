import logging
import unittest

from pydantic import ValidationError

from sbpcpr.config import Config, ExperimentConfig, IntegrationConfig
from sbpcpr.extensions import configure_logging
from sbpcpr.models import (
    BasisKind,
    ConfigurationError,
    CorrectionMode,
    Equation,
    FluxKind,
    GridKind,
    JacobianStrategy,
    Mapping,
)
from sbpcpr.validation import sanitize_output_prefix, validate_degree
from sbpcpr.views.presets import fig1_preset, fig2_preset


def burgers(**overrides):
    fields = {
        "equation": "burgers",
        "basis": "gauss",
        "p": 3,
        "elements": 4,
        "flux": "llf",
        "t_final": 1.0,
        "steps": 10,
    }
    fields.update(overrides)
    return ExperimentConfig(**fields)


def advection(**overrides):
    fields = {
        "equation": "advection",
        "basis": "lobatto",
        "p": 3,
        "elements": 5,
        "flux": "central",
        "t_final": 1.0,
        "steps": 10,
    }
    fields.update(overrides)
    return ExperimentConfig(**fields)


class IntegrationConfigTests(unittest.TestCase):
    def test_time_step(self) -> None:
        config = IntegrationConfig(t_final=3.0, steps=10000)
        self.assertAlmostEqual(config.dt, 3e-4)
        self.assertEqual(config.sample_every, Config.DEFAULT_SAMPLE_EVERY)
        self.assertEqual(config.blowup_threshold, 1e6)

    def test_invalid_values(self) -> None:
        for fields in ({"t_final": 0.0, "steps": 1}, {"t_final": 1.0, "steps": 0}, {"t_final": 1.0, "steps": 1, "sample_every": 0}):
            with self.subTest(fields=fields), self.assertRaises(ValidationError):
                IntegrationConfig(**fields)


class ExperimentConfigTests(unittest.TestCase):
    def test_burgers_defaults(self) -> None:
        config = burgers()
        self.assertIs(config.equation, Equation.BURGERS)
        self.assertIs(config.corrections, CorrectionMode.BOTH)
        self.assertIsNone(config.grid)
        self.assertEqual((config.xmin, config.xmax), (0.0, 2.0))
        self.assertTrue(config.adjoint)

    def test_advection_defaults(self) -> None:
        config = advection()
        self.assertIs(config.grid, GridKind.UNIFORM)
        self.assertIs(config.mapping, Mapping.LINEAR)
        self.assertIs(config.jacobian, JacobianStrategy.NODAL_DIAGONAL)
        self.assertEqual((config.xmin, config.xmax), (-1.0, 1.0))
        self.assertIsNone(config.corrections)

    def test_none_values_fall_back_to_defaults(self) -> None:
        config = burgers(corrections=None, sample_every=None)
        self.assertIs(config.corrections, CorrectionMode.BOTH)
        self.assertEqual(config.sample_every, Config.DEFAULT_SAMPLE_EVERY)

    def test_incompatible_combinations(self) -> None:
        invalid = [
            lambda: burgers(flux="central"),
            lambda: burgers(grid="geometric"),
            lambda: burgers(jacobian="nodal"),
            lambda: advection(flux="llf"),
            lambda: advection(corrections="both"),
            lambda: advection(adjoint=False),
            lambda: advection(basis="modal"),
            lambda: advection(grid="alternating", elements=4),
            lambda: burgers(interp_basis="modal"),
            lambda: burgers(p=0),
            lambda: burgers(p=Config.P_MAX + 1),
            lambda: burgers(elements=0),
            lambda: burgers(xmin=1.0, xmax=1.0),
            lambda: burgers(out="bad name"),
        ]
        for index, build in enumerate(invalid):
            with self.subTest(case=index), self.assertRaises(ValidationError):
                build()

    def test_modal_advection_with_transformed_jacobian(self) -> None:
        config = advection(basis="modal", jacobian="via-gauss", mapping="quadratic", grid="geometric")
        self.assertIs(config.basis, BasisKind.MODAL_LEGENDRE)

    def test_integration_view(self) -> None:
        config = burgers(t_final=2.0, steps=8, sample_every=2)
        self.assertEqual(config.integration, IntegrationConfig(t_final=2.0, steps=8, sample_every=2))

    def test_blowup_threshold_depends_on_the_equation(self) -> None:
        self.assertEqual(burgers().blowup_threshold, Config.BLOWUP_THRESHOLD)
        self.assertEqual(advection().blowup_threshold, Config.ADVECTION_BLOWUP_THRESHOLD)
        self.assertEqual(fig2_preset("c", grid="uniform").integration.blowup_threshold, 1e2)
        self.assertEqual(advection(blowup_threshold=5e3).integration.blowup_threshold, 5e3)
        with self.assertRaises(ValidationError):
            burgers(blowup_threshold=0.0)


class PresetTests(unittest.TestCase):
    def test_burgers_preset(self) -> None:
        config = fig1_preset("cheb2-roots")
        self.assertEqual(
            (config.basis, config.p, config.elements, config.flux, config.steps, config.t_final),
            (BasisKind.CHEBYSHEV2_ROOTS, 7, 20, FluxKind.LOCAL_LAX_FRIEDRICHS, 10000, 3.0),
        )
        self.assertEqual((config.xmin, config.xmax), (0.0, 2.0))
        self.assertIs(fig1_preset("gauss", flux="econ").flux, FluxKind.ECON)

    def test_advection_presets(self) -> None:
        expected = {
            "a": (BasisKind.CHEBYSHEV2_ROOTS, JacobianStrategy.VIA_GAUSS_TRANSFORM),
            "b": (BasisKind.CHEBYSHEV2_ROOTS, JacobianStrategy.NODAL_DIAGONAL),
            "c": (BasisKind.LOBATTO_LEGENDRE, JacobianStrategy.VIA_GAUSS_TRANSFORM),
            "d": (BasisKind.LOBATTO_LEGENDRE, JacobianStrategy.NODAL_DIAGONAL),
            "e": (BasisKind.GAUSS_LEGENDRE, JacobianStrategy.NODAL_DIAGONAL),
        }
        for case, (basis, jacobian) in expected.items():
            config = fig2_preset(case)
            with self.subTest(case=case):
                self.assertEqual((config.basis, config.jacobian), (basis, jacobian))
                self.assertEqual((config.p, config.elements, config.steps, config.t_final), (9, 5, 10000, 4.0))
                self.assertIs(config.flux, FluxKind.CENTRAL)
                self.assertIs(config.mapping, Mapping.QUADRATIC)
        self.assertIs(fig2_preset("a", grid="alternating", mapping="linear").grid, GridKind.ALTERNATING)
        with self.assertRaises(ConfigurationError):
            fig2_preset("z")


class ValidationTests(unittest.TestCase):
    def test_output_prefix(self) -> None:
        self.assertEqual(sanitize_output_prefix("  runs/fig1_gauss \x00"), "runs/fig1_gauss")
        for bad in ("", "   ", "a b", "out/", "x;rm", 42, "a" * 300):
            with self.subTest(value=bad), self.assertRaises(ConfigurationError):
                sanitize_output_prefix(bad)

    def test_degree(self) -> None:
        self.assertEqual(validate_degree(7, p_max=20), 7)
        for bad in (0, 21, True, 2.0, "3"):
            with self.subTest(value=bad), self.assertRaises(ConfigurationError):
                validate_degree(bad, p_max=20)


class LoggingTests(unittest.TestCase):
    def test_configure_logging_installs_one_handler(self) -> None:
        logger = configure_logging("debug")
        configure_logging("INFO")
        self.assertEqual(logger.name, "sbpcpr")
        self.assertEqual(len(logger.handlers), 1)
        self.assertEqual(logger.level, logging.INFO)
        configure_logging()


if __name__ == "__main__":
    unittest.main()
