import itertools
import unittest

from latcube.cubeface import recognize_cube
from latcube.gen import GenParams, gen_smooth_cube, reeve_simplex, scramble
from latcube.polytope import Polytope, apply_unimodular, translate
from latcube.exactlat import random_unimodular
from latcube.smooth import (
    base_star_is_standard,
    is_simple,
    is_smooth,
    primary_facet_in_coordinate_plane,
    standard_position,
    vertex_star,
)

SQUARE = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
TRAPEZOID = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (1, 1)])
CUBE3 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=3)))


class TestSimple(unittest.TestCase):
    def test_cube_is_simple(self):
        self.assertTrue(is_simple(CUBE3))

    def test_square_pyramid_is_not(self):
        pyramid = Polytope.from_vertices(
            [(1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1)]
        )
        self.assertFalse(is_simple(pyramid))

    def test_generated_cubes_are_simple(self):
        for seed in range(5):
            poly = gen_smooth_cube(GenParams(3, 5, 1, 8800 + seed)).polytope
            self.assertTrue(is_simple(poly))


class TestVertexStar(unittest.TestCase):
    def test_square_origin(self):
        v = SQUARE.vertices.index((0, 0))
        self.assertEqual(set(vertex_star(SQUARE, v).edge_dirs), {(1, 0), (0, 1)})

    def test_trapezoid_far_corner(self):
        v = TRAPEZOID.vertices.index((2, 0))
        self.assertEqual(set(vertex_star(TRAPEZOID, v).edge_dirs), {(-1, 0), (-1, 1)})

    def test_reeve_apex(self):
        r2 = reeve_simplex(2)
        v = r2.vertices.index((1, 1, 2))
        star = vertex_star(r2, v)
        self.assertEqual(len(star.edge_dirs), 3)
        self.assertEqual(
            set(star.edge_dirs), {(-1, -1, -2), (0, -1, -2), (-1, 0, -2)}
        )


class TestSmooth(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(is_smooth(CUBE3).ok)
        self.assertTrue(is_smooth(TRAPEZOID).ok)
        bad = is_smooth(reeve_simplex(2))
        self.assertFalse(bad.ok)
        self.assertIsNotNone(bad.witness_vertex)

    def test_smooth_implies_simple(self):
        for seed in range(5):
            poly = gen_smooth_cube(GenParams(2, 6, 2, 8900 + seed)).polytope
            self.assertTrue(is_smooth(poly).ok)
            self.assertTrue(is_simple(poly))

    def test_non_lattice_rejected(self):
        from fractions import Fraction

        p = Polytope.from_vertices([(0, 0), (Fraction(3, 2), 0), (0, 1), (1, 1)])
        with self.assertRaisesRegex(ValueError, "not a lattice polytope"):
            is_smooth(p)

    def test_invariant_under_unimodular_and_translation(self):
        cases = [CUBE3, TRAPEZOID, reeve_simplex(1), reeve_simplex(2)]
        for i, p in enumerate(cases):
            before = is_smooth(p).ok
            u = random_unimodular(p.dim, 313 + i, 3)
            moved = translate(apply_unimodular(u, p), tuple(range(1, p.dim + 1)))
            self.assertEqual(is_smooth(moved).ok, before)


class TestStandardPosition(unittest.TestCase):
    def test_unit_cube_fixed(self):
        cube = recognize_cube(CUBE3)
        std, unimap = standard_position(cube)
        self.assertEqual(std.polytope, CUBE3)
        self.assertEqual(unimap.matrix, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        self.assertEqual(unimap.translation, (0, 0, 0))

    def test_trapezoid_identity(self):
        cube = recognize_cube(TRAPEZOID)
        std, unimap = standard_position(cube)
        self.assertEqual(std.polytope, TRAPEZOID)
        self.assertEqual(unimap.matrix, ((1, 0), (0, 1)))
        self.assertEqual(unimap.translation, (0, 0))

    def test_scrambled_cube_recovered(self):
        for seed in range(6):
            mixed = scramble(CUBE3, GenParams(3, 5, 2, 1234 + seed))
            cube = recognize_cube(mixed)
            std, _ = standard_position(cube)
            self.assertEqual(std.polytope, CUBE3)

    def test_standard_invariants_on_generated_corpus(self):
        for dim, seed in ((2, 11), (2, 12), (3, 13), (3, 14), (4, 15)):
            cube = gen_smooth_cube(GenParams(dim, 4, 1, 4000 + seed)).cube
            std, _ = standard_position(cube)
            self.assertTrue(base_star_is_standard(std))
            for axis in std.axis_indices:
                self.assertTrue(primary_facet_in_coordinate_plane(std, axis))

    def test_not_smooth_rejected(self):
        skew = Polytope.from_vertices(
            [(0, 0), (2, 0), (0, 2), (2, 2)]
        )  # 2x2 square is smooth; build a non-smooth cube instead
        quad = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (3, 2)])
        cube = recognize_cube(quad)
        self.assertIsNotNone(cube)
        self.assertFalse(is_smooth(quad).ok)
        with self.assertRaisesRegex(ValueError, "not smooth"):
            standard_position(cube)
        del skew


if __name__ == "__main__":
    unittest.main()
