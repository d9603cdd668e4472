import itertools
import unittest

from fractions import Fraction

from latcube.exactlat import UnimodularMap, random_unimodular
from latcube.hull import convex_hull_facets
from latcube.polytope import (
    LemmaViolation,
    NotDisjointError,
    Polytope,
    apply_unimodular,
    dilate,
    fan_face_bijection,
    lattice_points,
    lin_span,
    minkowski_equivalent,
    negate,
    parallel,
    polytopes_intersect,
    separating_facet_hyperplane,
    translate,
)
from latcube.rng import SplitMix64
from oracles import brute_force_facets, naive_lattice_points

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
TRAPEZOID = [(0, 0), (2, 0), (0, 1), (1, 1)]
CUBE3 = list(itertools.product((0, 1), repeat=3))


def trapezoid():
    return Polytope.from_vertices(TRAPEZOID)


def unit_square():
    return Polytope.from_vertices(SQUARE)


def edge_ids(p, a, b):
    return frozenset({p.vertices.index(a), p.vertices.index(b)})


class TestFromVertices(unittest.TestCase):
    def test_unit_square_facets(self):
        p = unit_square()
        self.assertEqual(set(p.facet_normals), {(1, 0), (-1, 0), (0, 1), (0, -1)})
        self.assertEqual(p.n_vertices, 4)

    def test_trapezoid_facets(self):
        # derived with the subset-enumeration oracle
        p = trapezoid()
        self.assertEqual(set(p.facet_normals), {(0, -1), (-1, 0), (0, 1), (1, 1)})
        want = brute_force_facets(sorted(set(TRAPEZOID)), 2)
        got = [(n, c) for n, c in zip(p.facet_normals, p.facet_offsets)]
        self.assertEqual(sorted(got), [(n, c) for n, c, _ in want])

    def test_redundant_points_dropped(self):
        p = Polytope.from_vertices(SQUARE + [(0, 0), (1, 1)])
        self.assertEqual(p.n_vertices, 4)
        q = Polytope.from_vertices(TRAPEZOID + [(1, 0)])  # boundary non-vertex
        self.assertEqual(q.n_vertices, 4)

    def test_collinear_needs_embed(self):
        with self.assertRaisesRegex(ValueError, "embed"):
            Polytope.from_vertices([(0, 0), (1, 0), (2, 0)])
        seg = Polytope.from_vertices([(0, 0), (1, 0), (2, 0)], embed=True)
        self.assertEqual(seg.dim, 1)
        self.assertEqual(sorted(seg.vertices_ambient()), [(0, 0), (2, 0)])

    def test_empty_input(self):
        with self.assertRaisesRegex(ValueError, "empty"):
            Polytope.from_vertices([])

    def test_hull_matches_oracle_on_random_sets(self):
        rng = SplitMix64(2024)
        done = 0
        for _ in range(40):
            d = rng.randint(2, 4)
            pts = sorted({tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(rng.randint(d + 1, 8))})
            try:
                got = convex_hull_facets(pts, d)
            except ValueError:
                continue  # not full-dimensional
            self.assertEqual(got, brute_force_facets(pts, d))
            done += 1
        self.assertGreater(done, 20)

    def test_incidence_cross_validation(self):
        p = trapezoid()
        for v in range(p.n_vertices):
            self.assertGreaterEqual(len(p.vertex_facets[v]), p.dim)
        matrix = p.incidence_matrix()
        self.assertEqual(len(matrix), p.n_vertices)
        self.assertTrue(all(len(row) == p.n_facets for row in matrix))


class TestLatticePoints(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(len(lattice_points(unit_square())), 4)
        self.assertEqual(len(lattice_points(trapezoid())), 5)
        reeve2 = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
        pts = lattice_points(reeve2)
        self.assertEqual(pts, sorted(reeve2.vertices))

    def test_agrees_with_naive_oracle(self):
        rng = SplitMix64(404)
        checked = 0
        for _ in range(30):
            d = rng.randint(2, 3)
            pts = {tuple(rng.randint(-4, 4) for _ in range(d)) for _ in range(rng.randint(d + 1, 7))}
            try:
                p = Polytope.from_vertices(pts)
            except ValueError:
                continue
            self.assertEqual(lattice_points(p), naive_lattice_points(p))
            checked += 1
        self.assertGreater(checked, 15)

    def test_rational_polytope(self):
        p = Polytope.from_vertices([(Fraction(-1, 2), 0), (Fraction(5, 2), 0), (1, Fraction(3, 2))])
        self.assertEqual(lattice_points(p), naive_lattice_points(p))


class TestFaceLattice(unittest.TestCase):
    def test_square_counts(self):
        fl = unit_square().face_lattice()
        self.assertEqual(len(fl), 10)
        self.assertEqual(fl.f_vector(), (1, 4, 4, 1))

    def test_cube_counts(self):
        fl = Polytope.from_vertices(CUBE3).face_lattice()
        self.assertEqual(len(fl), 28)
        self.assertEqual(fl.f_vector(), (1, 8, 12, 6, 1))

    def test_trapezoid_poset_matches_square(self):
        self.assertEqual(trapezoid().face_lattice().f_vector(), unit_square().face_lattice().f_vector())

    def test_edges(self):
        p = unit_square()
        self.assertEqual(len(p.edges()), 4)
        self.assertEqual(p.vertex_neighbors(0), [1, 2])


class TestSpansAndParallel(unittest.TestCase):
    def test_vertex_face_dim_zero(self):
        p = trapezoid()
        self.assertEqual(lin_span(p, {0}).dim, 0)

    def test_top_edge_span(self):
        p = trapezoid()
        top = edge_ids(p, (0, 1), (1, 1))
        self.assertEqual(lin_span(p, top).basis, ((1, 0),))

    def test_whole_polytope_span(self):
        p = trapezoid()
        self.assertEqual(lin_span(p, set(range(p.n_vertices))).dim, 2)

    def test_parallel_examples(self):
        p = trapezoid()
        bottom = edge_ids(p, (0, 0), (2, 0))
        top = edge_ids(p, (0, 1), (1, 1))
        left = edge_ids(p, (0, 0), (0, 1))
        slant = edge_ids(p, (2, 0), (1, 1))
        self.assertTrue(parallel(p, bottom, p, top))
        self.assertFalse(parallel(p, left, p, slant))
        self.assertTrue(parallel(p, slant, p, slant))
        self.assertFalse(parallel(p, bottom, p, set(range(4))))  # unequal dims


class TestMinkowskiEquivalence(unittest.TestCase):
    def test_dilation_preserves_fan(self):
        p = trapezoid()
        self.assertTrue(minkowski_equivalent(p, dilate(p, 2)))

    def test_trapezoid_vs_square(self):
        self.assertFalse(minkowski_equivalent(trapezoid(), unit_square()))

    def test_shear_changes_fan(self):
        sq = unit_square()
        sheared = apply_unimodular(UnimodularMap(((1, 1), (0, 1)), (0, 0)), sq)
        self.assertFalse(minkowski_equivalent(sq, sheared))

    def test_equivalence_relation_on_corpus(self):
        p = trapezoid()
        family = [p, dilate(p, 2), translate(p, (3, -1)), unit_square(), dilate(unit_square(), 3)]
        for a in family:
            self.assertTrue(minkowski_equivalent(a, a))
            for b in family:
                self.assertEqual(minkowski_equivalent(a, b), minkowski_equivalent(b, a))
                for c in family:
                    if minkowski_equivalent(a, b) and minkowski_equivalent(b, c):
                        self.assertTrue(minkowski_equivalent(a, c))

    def test_face_bijection(self):
        p = trapezoid()
        q = dilate(p, 3)
        bij = fan_face_bijection(p, q)
        self.assertEqual(len(bij), len(p.face_lattice().faces))
        for face, image in bij.items():
            self.assertEqual(len(face), len(image))
        self.assertIsNone(fan_face_bijection(p, unit_square()))


class TestUnimodularImages(unittest.TestCase):
    def test_identity(self):
        p = unit_square()
        self.assertEqual(apply_unimodular(UnimodularMap.identity(2), p), p)

    def test_shear_example(self):
        sheared = apply_unimodular(UnimodularMap(((1, 1), (0, 1)), (0, 0)), unit_square())
        self.assertEqual(sorted(sheared.vertices), [(0, 0), (1, 0), (1, 1), (2, 1)])
        self.assertEqual(len(lattice_points(sheared)), 4)

    def test_dimension_mismatch(self):
        with self.assertRaisesRegex(ValueError, "dimension mismatch"):
            apply_unimodular(UnimodularMap.identity(3), unit_square())

    def test_image_matches_a_fresh_hull(self):
        rng = SplitMix64(88)
        for _ in range(25):
            d = rng.randint(2, 3)
            pts = {tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(d + 2)}
            try:
                p = Polytope.from_vertices(pts)
            except ValueError:
                continue
            u = random_unimodular(d, rng.next_u64(), 3)
            shifted = UnimodularMap(u.matrix, tuple(rng.randint(-4, 4) for _ in range(d)))
            fast = apply_unimodular(shifted, p)
            rebuilt = Polytope.from_vertices([shifted.apply(v) for v in p.vertices])
            self.assertEqual(fast, rebuilt)
            self.assertEqual(fast.facet_normals, rebuilt.facet_normals)
            self.assertEqual(fast.facet_offsets, rebuilt.facet_offsets)
            self.assertEqual(len(lattice_points(fast)), len(lattice_points(p)))
            self.assertEqual(fast.face_lattice().f_vector(), p.face_lattice().f_vector())


class TestSeparation(unittest.TestCase):
    def test_certificate_example(self):
        p = trapezoid()
        q = translate(negate(p), (5, 5))
        cert = separating_facet_hyperplane(p, q)
        self.assertEqual(cert.normal, (1, 1))
        self.assertEqual(cert.max_on_p, 2)
        self.assertEqual(cert.min_on_q, 8)
        self.assertEqual(p.facet_normals[cert.facet_id], cert.normal)

    def test_not_disjoint(self):
        p = trapezoid()
        q = translate(negate(p), (1, 0))
        self.assertTrue(polytopes_intersect(p, q))
        with self.assertRaisesRegex(NotDisjointError, "not disjoint"):
            separating_facet_hyperplane(p, q)

    def test_translated_squares_get_axis_normal(self):
        a = unit_square()
        b = translate(unit_square(), (4, 0))
        cert = separating_facet_hyperplane(a, b)
        self.assertIn(cert.normal, {(1, 0), (0, 1), (-1, 0), (0, -1)})

    def test_touching_polytopes_are_not_disjoint(self):
        a = unit_square()
        b = translate(unit_square(), (1, 1))  # shares the corner (1,1)
        self.assertTrue(polytopes_intersect(a, b))
        with self.assertRaises(NotDisjointError):
            separating_facet_hyperplane(a, b)

    def test_never_violates_on_mirrored_family(self):
        rng = SplitMix64(6060)
        for _ in range(30):
            d = rng.randint(2, 3)
            pts = {tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(d + 2)}
            try:
                p = Polytope.from_vertices(pts)
            except ValueError:
                continue
            shift = tuple(11 for _ in range(d))
            q = translate(negate(p), shift)
            try:
                cert = separating_facet_hyperplane(p, q)
            except LemmaViolation:
                self.fail("facet-parallel separation must exist for mirrored disjoint pairs")
            self.assertLess(cert.max_on_p, cert.min_on_q)


if __name__ == "__main__":
    unittest.main()
