import unittest

import numpy as np
from numpy.testing import assert_allclose

from sbpcpr.bases.legendre import (
    gauss_quadrature,
    legendre_eval,
    legendre_product_tensor,
    legendre_table,
    lobatto_quadrature,
    modal_derivative,
    modal_restriction,
    vandermonde,
)


class LegendreTests(unittest.TestCase):
    def test_low_degree_values(self) -> None:
        x = np.linspace(-1.0, 1.0, 7)
        assert_allclose(legendre_eval(0, x), np.ones_like(x))
        assert_allclose(legendre_eval(1, x), x)
        assert_allclose(legendre_eval(2, x), 0.5 * (3.0 * x**2 - 1.0), atol=1e-15)
        assert_allclose(legendre_eval(3, x), 0.5 * (5.0 * x**3 - 3.0 * x), atol=1e-15)

    def test_scalar_input_returns_float(self) -> None:
        value = legendre_eval(4, 1.0)
        self.assertIsInstance(value, float)
        self.assertAlmostEqual(value, 1.0, places=14)

    def test_table_matches_numpy(self) -> None:
        x = np.linspace(-1.0, 1.0, 11)
        table = legendre_table(8, x)
        for j in range(9):
            coeffs = np.zeros(j + 1)
            coeffs[j] = 1.0
            assert_allclose(table[:, j], np.polynomial.legendre.legval(x, coeffs), atol=1e-13)

    def test_negative_degree_is_rejected(self) -> None:
        with self.assertRaises(ValueError):
            legendre_eval(-1, 0.0)


class QuadratureTests(unittest.TestCase):
    def test_gauss_matches_numpy_leggauss(self) -> None:
        for n in range(1, 21):
            nodes, weights = gauss_quadrature(n)
            ref_nodes, ref_weights = np.polynomial.legendre.leggauss(n)
            assert_allclose(nodes, ref_nodes, atol=1e-14)
            assert_allclose(weights, ref_weights, atol=1e-14)

    def test_gauss_three_point_rule(self) -> None:
        nodes, weights = gauss_quadrature(3)
        assert_allclose(nodes, [-np.sqrt(0.6), 0.0, np.sqrt(0.6)], atol=1e-15)
        assert_allclose(weights, [5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0], atol=1e-15)

    def test_lobatto_three_point_rule(self) -> None:
        nodes, weights = lobatto_quadrature(2)
        assert_allclose(nodes, [-1.0, 0.0, 1.0], atol=1e-15)
        assert_allclose(weights, [1.0 / 3.0, 4.0 / 3.0, 1.0 / 3.0], atol=1e-15)

    def test_lobatto_exactness_and_symmetry(self) -> None:
        for p in range(1, 16):
            nodes, weights = lobatto_quadrature(p)
            self.assertEqual(nodes[0], -1.0)
            self.assertEqual(nodes[-1], 1.0)
            assert_allclose(nodes, -nodes[::-1], atol=1e-14)
            for degree in range(2 * p):
                exact = 0.0 if degree % 2 else 2.0 / (degree + 1)
                self.assertAlmostEqual(float(weights @ nodes**degree), exact, places=12)

    def test_returned_rules_are_copies(self) -> None:
        nodes, _ = gauss_quadrature(4)
        nodes[0] = 42.0
        self.assertNotEqual(gauss_quadrature(4)[0][0], 42.0)


class ModalMatrixTests(unittest.TestCase):
    def test_derivative_pattern(self) -> None:
        expected = np.array(
            [
                [0, 1, 0, 1],
                [0, 0, 3, 0],
                [0, 0, 0, 5],
                [0, 0, 0, 0],
            ],
            dtype=float,
        )
        assert_allclose(modal_derivative(3), expected)

    def test_restriction_rows(self) -> None:
        assert_allclose(modal_restriction(3), [[1, -1, 1, -1], [1, 1, 1, 1]])

    def test_vandermonde_rows_are_legendre_values(self) -> None:
        nodes = np.array([-0.5, 0.25, 0.75])
        assert_allclose(vandermonde(nodes, 2), legendre_table(2, nodes))
        with self.assertRaises(ValueError):
            vandermonde(nodes, 3)

    def test_product_tensor_projects_products(self) -> None:
        tensor = legendre_product_tensor(4)
        # P1 P1 = x^2 = P0 / 3 + 2 P2 / 3
        assert_allclose(tensor[:, 1, 1], [1.0 / 3.0, 0.0, 2.0 / 3.0, 0.0, 0.0], atol=1e-15)
        # P0 is the identity of the product
        assert_allclose(tensor[:, 0, :], np.eye(5), atol=1e-15)
        assert_allclose(tensor, np.swapaxes(tensor, 1, 2), atol=1e-15)
        self.assertFalse(tensor.flags.writeable)


if __name__ == "__main__":
    unittest.main()
