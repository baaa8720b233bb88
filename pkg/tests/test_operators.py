import io
import unittest
from unittest.mock import patch

import numpy as np
from numpy.testing import assert_allclose
from scipy.linalg import LinAlgError

from sbpcpr.bases import (
    OperatorConstructionError,
    basis_for,
    build_operator_set,
    check_operator_set,
    compute_nodes,
    dump_operator_set,
    sbp_residual,
)
from sbpcpr.config import Config
from sbpcpr.models import BasisKind, ConfigurationError, OperatorSet

S2, S3, S15 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(15.0)

# exact degree-2 operators on [-1, 1]
REFERENCE_P2 = {
    BasisKind.CHEBYSHEV1_ROOTS: {
        "M": [[2 / 5, 4 / 45, -2 / 45], [4 / 45, 14 / 15, 4 / 45], [-2 / 45, 4 / 45, 2 / 5]],
        "R": [[(2 + S3) / 3, -1 / 3, (2 - S3) / 3], [(2 - S3) / 3, -1 / 3, (2 + S3) / 3]],
        "D": [[-S3, 4 * S3 / 3, -S3 / 3], [-S3 / 3, 0, S3 / 3], [S3 / 3, -4 * S3 / 3, S3]],
        "V": [[1, -S3 / 2, 5 / 8], [1, 0, -1 / 2], [1, S3 / 2, 5 / 8]],
    },
    BasisKind.CHEBYSHEV1_EXTREMA: {
        "M": [[4 / 15, 2 / 15, -1 / 15], [2 / 15, 16 / 15, 2 / 15], [-1 / 15, 2 / 15, 4 / 15]],
        "R": [[1, 0, 0], [0, 0, 1]],
        "D": [[-3 / 2, 2, -1 / 2], [-1 / 2, 0, 1 / 2], [1 / 2, -2, 3 / 2]],
        "V": [[1, -1, 1], [1, 0, -1 / 2], [1, 1, 1]],
    },
    BasisKind.CHEBYSHEV2_ROOTS: {
        "M": [[11 / 15, -2 / 15, 1 / 15], [-2 / 15, 14 / 15, -2 / 15], [1 / 15, -2 / 15, 11 / 15]],
        "R": [[(2 + S2) / 2, -1, (2 - S2) / 2], [(2 - S2) / 2, -1, (2 + S2) / 2]],
        "D": [[-3 * S2 / 2, 2 * S2, -S2 / 2], [-S2 / 2, 0, S2 / 2], [S2 / 2, -2 * S2, 3 * S2 / 2]],
        "V": [[1, -S2 / 2, 1 / 4], [1, 0, -1 / 2], [1, S2 / 2, 1 / 4]],
    },
    BasisKind.GAUSS_LEGENDRE: {
        "M": np.diag([5 / 9, 8 / 9, 5 / 9]),
        "R": [[(5 + S15) / 6, -2 / 3, (5 - S15) / 6], [(5 - S15) / 6, -2 / 3, (5 + S15) / 6]],
        "D": [[-S15 / 2, 2 * S15 / 3, -S15 / 6], [-S15 / 6, 0, S15 / 6], [S15 / 6, -2 * S15 / 3, S15 / 2]],
    },
    BasisKind.LOBATTO_LEGENDRE: {
        "M": np.diag([1 / 3, 4 / 3, 1 / 3]),
        "R": [[1, 0, 0], [0, 0, 1]],
        "D": [[-3 / 2, 2, -1 / 2], [-1 / 2, 0, 1 / 2], [1 / 2, -2, 3 / 2]],
    },
}


class ReferenceOperatorTests(unittest.TestCase):
    def test_degree_two_matrices(self) -> None:
        for kind, matrices in REFERENCE_P2.items():
            ops = build_operator_set(kind, 2)
            for name, expected in matrices.items():
                with self.subTest(kind=kind.value, matrix=name):
                    assert_allclose(getattr(ops, name), expected, atol=1e-13)
            self.assertLessEqual(sbp_residual(ops), 1e-14)

    def test_modal_degree_two(self) -> None:
        ops = build_operator_set(BasisKind.MODAL_LEGENDRE, 2)
        assert_allclose(ops.M, np.diag([2.0, 2.0 / 3.0, 2.0 / 5.0]))
        assert_allclose(ops.D, [[0, 1, 0], [0, 0, 3], [0, 0, 0]])
        assert_allclose(ops.R, [[1, -1, 1], [1, 1, 1]])
        assert_allclose(ops.V, np.eye(3))
        self.assertIsNone(ops.nodes)

    def test_gauss_degree_one(self) -> None:
        ops = build_operator_set(BasisKind.GAUSS_LEGENDRE, 1)
        assert_allclose(ops.M, np.eye(2), atol=1e-15)
        # derivative of the linear interpolant of x is 1 at both nodes
        assert_allclose(ops.D @ ops.nodes, [1.0, 1.0], atol=1e-14)
        assert_allclose(ops.D, S3 / 2 * np.array([[-1.0, 1.0], [-1.0, 1.0]]), atol=1e-14)

    def test_chebyshev_node_formulas(self) -> None:
        assert_allclose(compute_nodes(BasisKind.CHEBYSHEV1_ROOTS, 2), [-S3 / 2, 0.0, S3 / 2], atol=1e-15)
        assert_allclose(compute_nodes(BasisKind.CHEBYSHEV1_EXTREMA, 2), [-1.0, 0.0, 1.0], atol=1e-15)
        assert_allclose(compute_nodes(BasisKind.CHEBYSHEV2_ROOTS, 2), [-S2 / 2, 0.0, S2 / 2], atol=1e-15)
        with self.assertRaises(ValueError):
            compute_nodes(BasisKind.MODAL_LEGENDRE, 2)


class OperatorInvariantTests(unittest.TestCase):
    def test_sbp_property_for_all_kinds(self) -> None:
        for kind in BasisKind:
            for p in range(1, 10):
                with self.subTest(kind=kind.value, p=p):
                    ops = build_operator_set(kind, p)
                    self.assertLessEqual(sbp_residual(ops), Config.tol_sbp(p))

    def test_full_invariant_report(self) -> None:
        for kind in BasisKind:
            for p in (1, 2, 5, 9):
                with self.subTest(kind=kind.value, p=p):
                    report = check_operator_set(build_operator_set(kind, p))
                    self.assertTrue(report.ok, [check.name for check in report.failures])
                    self.assertGreater(report.eig_min, 0.0)

    def test_modal_degree_seven_within_tolerance(self) -> None:
        ops = build_operator_set(BasisKind.MODAL_LEGENDRE, 7)
        self.assertLessEqual(sbp_residual(ops), Config.tol_sbp(7))

    def test_lobatto_restriction_is_point_evaluation(self) -> None:
        ops = build_operator_set(BasisKind.LOBATTO_LEGENDRE, 6)
        expected = np.zeros((2, 7))
        expected[0, 0] = expected[1, -1] = 1.0
        assert_allclose(ops.R, expected, atol=1e-14)

    def test_operator_arrays_are_read_only(self) -> None:
        ops = build_operator_set(BasisKind.CHEBYSHEV2_ROOTS, 3)
        with self.assertRaises(ValueError):
            ops.M[0, 0] = 1.0

    def test_degree_out_of_range_is_rejected(self) -> None:
        with self.assertRaises(ConfigurationError):
            basis_for(BasisKind.GAUSS_LEGENDRE, 0)
        with self.assertRaises(ConfigurationError):
            basis_for(BasisKind.GAUSS_LEGENDRE, Config.P_MAX + 1)
        with self.assertRaises(ConfigurationError):
            build_operator_set(BasisKind.LOBATTO_LEGENDRE, 2.5)
        self.assertEqual(basis_for(BasisKind.GAUSS_LEGENDRE, np.int64(3)).p, 3)

    def test_indefinite_norm_has_no_cholesky_factor(self) -> None:
        with self.assertRaises(LinAlgError):
            OperatorSet(
                kind=BasisKind.GAUSS_LEGENDRE,
                p=1,
                nodes=np.array([-0.5, 0.5]),
                M=np.diag([1.0, -1.0]),
                D=np.zeros((2, 2)),
                R=np.zeros((2, 2)),
                V=np.eye(2),
            )

    def test_residual_above_tolerance_is_a_construction_error(self) -> None:
        with patch.object(Config, "SBP_TOL_FACTOR", 0.0):
            with self.assertRaises(OperatorConstructionError) as ctx:
                build_operator_set.__wrapped__(BasisKind.CHEBYSHEV1_ROOTS, 9)
        self.assertGreater(ctx.exception.residual, 0.0)


class DumpTests(unittest.TestCase):
    def test_dump_blocks_and_precision(self) -> None:
        ops = build_operator_set(BasisKind.LOBATTO_LEGENDRE, 2)
        buffer = io.StringIO()
        dump_operator_set(ops, buffer)
        lines = buffer.getvalue().splitlines()
        headers = [line for line in lines if line.startswith("#")]
        self.assertEqual(headers, ["# nodes 1x3", "# V 3x3", "# M 3x3", "# D 3x3", "# R 2x3", "# B 2x2"])
        m_row = lines[lines.index("# M 3x3") + 1].split()
        self.assertEqual(m_row[0], f"{1 / 3:.17g}")
        self.assertEqual(float(m_row[0]), ops.M[0, 0])

    def test_modal_dump_has_no_nodes(self) -> None:
        buffer = io.StringIO()
        dump_operator_set(build_operator_set(BasisKind.MODAL_LEGENDRE, 3), buffer)
        self.assertNotIn("# nodes", buffer.getvalue())


if __name__ == "__main__":
    unittest.main()
