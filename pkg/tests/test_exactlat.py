import unittest

from latcube.exactlat import (
    UnimodularMap,
    det_int,
    integer_kernel_basis,
    kernel_vector,
    lattice_basis_check,
    mat_inverse_int,
    mat_mul,
    primitive,
    primitive_direction,
    random_unimodular,
    rank,
    solve,
    unimodular_with_last_row,
)
from latcube.rng import SplitMix64
from oracles import fraction_det

from fractions import Fraction


class TestPrimitive(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(primitive((2, 4)), (1, 2))
        self.assertEqual(primitive((-3, 6)), (-1, 2))
        self.assertEqual(primitive((5,)), (1,))
        self.assertEqual(primitive((0, -7, 0)), (0, -1, 0))

    def test_zero_vector_errors(self):
        with self.assertRaisesRegex(ValueError, "no primitive direction"):
            primitive((0, 0))

    def test_idempotent(self):
        rng = SplitMix64(1)
        for _ in range(200):
            d = rng.randint(1, 4)
            v = tuple(rng.randint(-9, 9) for _ in range(d))
            if all(c == 0 for c in v):
                continue
            p = primitive(v)
            self.assertEqual(primitive(p), p)

    def test_rational_directions(self):
        self.assertEqual(primitive_direction((Fraction(1, 2), Fraction(3, 2))), (1, 3))
        self.assertEqual(primitive_direction((Fraction(-2, 3), 2)), (-1, 3))


class TestDeterminant(unittest.TestCase):
    def test_matches_fraction_gauss(self):
        rng = SplitMix64(7)
        for _ in range(300):
            n = rng.randint(1, 4)
            rows = [tuple(rng.randint(-6, 6) for _ in range(n)) for _ in range(n)]
            self.assertEqual(det_int(rows), fraction_det(rows))

    def test_shape_errors(self):
        with self.assertRaises(ValueError):
            det_int([(1, 2), (3, 4, 5)])


class TestBasisCheck(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(lattice_basis_check([(1, 0), (0, 1)]))
        self.assertFalse(lattice_basis_check([(1, 1), (0, 2)]))
        self.assertTrue(lattice_basis_check([(-1, 0), (-1, -1)]))

    def test_count_and_dim_errors(self):
        with self.assertRaises(ValueError):
            lattice_basis_check([(1, 0)])
        with self.assertRaises(ValueError):
            lattice_basis_check([(1, 0, 0), (0, 1, 0)])
        with self.assertRaises(ValueError):
            lattice_basis_check([])

    def test_invariance_under_permutation_and_negation(self):
        rng = SplitMix64(21)
        for _ in range(120):
            d = rng.randint(2, 4)
            vs = [tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(d)]
            base = lattice_basis_check(vs)
            i = rng.randint(0, d - 1)
            j = rng.randint(0, d - 1)
            swapped = list(vs)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            self.assertEqual(lattice_basis_check(swapped), base)
            negated = list(vs)
            negated[i] = tuple(-c for c in negated[i])
            self.assertEqual(lattice_basis_check(negated), base)


class TestSolvers(unittest.TestCase):
    def test_solve_roundtrip(self):
        rng = SplitMix64(5)
        solved = 0
        for _ in range(200):
            n = rng.randint(1, 4)
            a = [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(n)]
            x = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n))
            b = tuple(sum(r[i] * x[i] for i in range(n)) for r in a)
            got = solve(a, b)
            if det_int(a) == 0:
                continue
            solved += 1
            self.assertEqual(tuple(Fraction(g) for g in got), x)
        self.assertGreater(solved, 100)

    def test_kernel_vector(self):
        v = kernel_vector([(1, 2, 3)], 3)
        self.assertEqual(sum(a * b for a, b in zip(v, (1, 2, 3))), 0)
        self.assertIsNone(kernel_vector([(1, 0), (0, 1)], 2))

    def test_integer_kernel_basis_spans_kernel_lattice(self):
        rng = SplitMix64(31)
        for _ in range(80):
            d = rng.randint(2, 4)
            m = rng.randint(1, d - 1)
            rows = [tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(m)]
            basis = integer_kernel_basis(rows, d)
            self.assertEqual(len(basis), d - rank(rows))
            for b in basis:
                for r in rows:
                    self.assertEqual(sum(x * y for x, y in zip(b, r)), 0)
            if basis:
                self.assertEqual(rank(basis), len(basis))

    def test_unimodular_with_last_row(self):
        rng = SplitMix64(77)
        for _ in range(100):
            d = rng.randint(2, 4)
            v = tuple(rng.randint(-6, 6) for _ in range(d))
            if all(c == 0 for c in v):
                continue
            n = primitive(v)
            m = unimodular_with_last_row(n)
            self.assertEqual(m[-1], n)
            self.assertIn(det_int(m), (1, -1))


class TestUnimodularMap(unittest.TestCase):
    def test_validation(self):
        with self.assertRaisesRegex(ValueError, "determinant"):
            UnimodularMap(((2, 0), (0, 1)), (0, 0))
        with self.assertRaises(ValueError):
            UnimodularMap(((1, 0), (0, 1)), (0,))
        with self.assertRaises(ValueError):
            UnimodularMap(((1, 0), (0, Fraction(1, 2))), (0, 0))

    def test_inverse_and_compose(self):
        rng = SplitMix64(13)
        for _ in range(60):
            d = rng.randint(1, 4)
            u = random_unimodular(d, rng.next_u64(), 4)
            shifted = UnimodularMap(u.matrix, tuple(rng.randint(-3, 3) for _ in range(d)))
            inv = shifted.inverse()
            both = inv.compose(shifted)
            pt = tuple(rng.randint(-5, 5) for _ in range(d))
            self.assertEqual(both.apply(pt), pt)

    def test_mat_inverse_int(self):
        m = ((1, 2), (0, 1))
        self.assertEqual(mat_mul(m, mat_inverse_int(m)), ((1, 0), (0, 1)))


class TestRandomUnimodular(unittest.TestCase):
    def test_deterministic(self):
        a = random_unimodular(3, 99, 5)
        b = random_unimodular(3, 99, 5)
        self.assertEqual(a, b)
        self.assertNotEqual(a, random_unimodular(3, 100, 5))

    def test_single_round_is_a_shear(self):
        u = random_unimodular(2, 4, 1)
        offdiag = [u.matrix[i][j] for i in range(2) for j in range(2) if i != j]
        self.assertEqual(sum(1 for x in offdiag if x != 0), 1)
        self.assertIn(det_int(u.matrix), (1, -1))

    def test_columns_are_a_lattice_basis(self):
        for seed in range(25):
            for bound in (0, 1, 3, 6):
                u = random_unimodular(3, seed, bound)
                cols = list(zip(*u.matrix))
                self.assertTrue(lattice_basis_check(cols))
                limit = 3 ** bound
                self.assertTrue(all(abs(c) <= limit for row in u.matrix for c in row))


if __name__ == "__main__":
    unittest.main()
