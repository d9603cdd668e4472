import itertools
import unittest

from latcube.cubeface import (
    FaceLabel,
    face_of,
    opposite,
    opposite_parallel_axes,
    parallel_facet_pair,
    recognize_cube,
    verify_parallel_propositions,
)
from latcube.gen import GenParams, gen_smooth_cube
from latcube.polytope import Polytope, lin_span, parallel, spans_equal

SQUARE = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
TRAPEZOID = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (1, 1)])
CUBE3 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=3)))
CUBE4 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=4)))


class TestLabels(unittest.TestCase):
    def test_disjointness_enforced(self):
        with self.assertRaises(ValueError):
            FaceLabel.of([1], [1])

    def test_serialization(self):
        label = FaceLabel.of([1, 3], [2])
        self.assertEqual(str(label), "1 2bar 3")
        self.assertEqual(FaceLabel.parse("1 2bar 3"), label)
        self.assertEqual(FaceLabel.parse(str(FaceLabel.of())), FaceLabel.of())

    def test_face_dim(self):
        self.assertEqual(FaceLabel.of([1], [2]).face_dim(3), 1)
        self.assertEqual(FaceLabel.of().face_dim(3), 3)

    def test_opposite(self):
        self.assertEqual(opposite(FaceLabel.of([1]), 1), FaceLabel.of([], [1]))
        self.assertEqual(opposite(FaceLabel.of([1, 2]), 2), FaceLabel.of([1], [2]))
        with self.assertRaisesRegex(ValueError, "not fixed"):
            opposite(FaceLabel.of(), 1)


class TestRecognition(unittest.TestCase):
    def test_unit_cubes(self):
        for dim, poly in ((2, SQUARE), (3, CUBE3), (4, CUBE4)):
            cube = recognize_cube(poly)
            self.assertIsNotNone(cube)
            self.assertEqual(cube.dim, dim)

    def test_trapezoid_is_a_2cube(self):
        cube = recognize_cube(TRAPEZOID)
        self.assertIsNotNone(cube)
        self.assertEqual(cube.dim, 2)

    def test_simplex_refused(self):
        simplex = Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])
        self.assertIsNone(recognize_cube(simplex))

    def test_pyramid_refused(self):
        pyramid = Polytope.from_vertices([(1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1)])
        self.assertIsNone(recognize_cube(pyramid))

    def test_dimension_cap(self):
        cube5 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=5)))
        self.assertIsNone(recognize_cube(cube5))
        self.assertIsNotNone(recognize_cube(cube5, max_dim=5))

    def test_base_vertex_is_lex_min(self):
        cube = recognize_cube(TRAPEZOID)
        self.assertEqual(cube.polytope.vertices[cube.base_vertex], (0, 0))
        self.assertEqual(cube.vertex_bits[cube.base_vertex], (0, 0))


class TestFaceOperations(unittest.TestCase):
    def test_facet_of_unit_cube(self):
        cube = recognize_cube(CUBE3)
        f1 = face_of(cube, FaceLabel.of([1]))
        self.assertEqual(f1.dim, 2)
        self.assertTrue(all(v[0] == 0 for v in f1.vertices_ambient()))

    def test_edge_of_unit_cube(self):
        cube = recognize_cube(CUBE3)
        edge = face_of(cube, FaceLabel.of([1], [2]))
        self.assertEqual(edge.dim, 1)
        for v in edge.vertices_ambient():
            self.assertEqual((v[0], v[1]), (0, 1))

    def test_trapezoid_top_edge(self):
        cube = recognize_cube(TRAPEZOID)
        top = face_of(cube, FaceLabel.of([], [2]))
        self.assertEqual(sorted(top.vertices_ambient()), [(0, 1), (1, 1)])

    def test_whole_cube_label(self):
        cube = recognize_cube(CUBE3)
        self.assertIs(face_of(cube, FaceLabel.of()), CUBE3)

    def test_label_roundtrip(self):
        cube = recognize_cube(CUBE3)
        for assignment in itertools.product((0, 1, 2), repeat=3):
            lower = [i + 1 for i, a in enumerate(assignment) if a == 0]
            upper = [i + 1 for i, a in enumerate(assignment) if a == 1]
            label = FaceLabel.of(lower, upper)
            verts = cube.face_vertices(label)
            self.assertEqual(cube.label_of_face(verts), label)

    def test_intersection_law(self):
        for poly in (SQUARE, CUBE3, CUBE4):
            cube = recognize_cube(poly)
            labels = list(itertools.product((0, 1, 2), repeat=cube.dim))
            for a in labels:
                for b in labels:
                    merged = []
                    ok = True
                    for x, y in zip(a, b):
                        if {x, y} == {0, 1}:
                            ok = False
                            break
                        merged.append(min(x, y) if 2 in (x, y) else x)
                    la = FaceLabel.of([i + 1 for i, v in enumerate(a) if v == 0], [i + 1 for i, v in enumerate(a) if v == 1])
                    lb = FaceLabel.of([i + 1 for i, v in enumerate(b) if v == 0], [i + 1 for i, v in enumerate(b) if v == 1])
                    meet = cube.face_vertices(la) & cube.face_vertices(lb)
                    if not ok:
                        self.assertEqual(meet, frozenset())
                        continue
                    lm = FaceLabel.of(
                        [i + 1 for i, v in enumerate(merged) if v == 0],
                        [i + 1 for i, v in enumerate(merged) if v == 1],
                    )
                    self.assertEqual(meet, cube.face_vertices(lm))

    def test_containment_law(self):
        cube = recognize_cube(CUBE3)
        labels = [
            FaceLabel.of(
                [i + 1 for i, v in enumerate(a) if v == 0],
                [i + 1 for i, v in enumerate(a) if v == 1],
            )
            for a in itertools.product((0, 1, 2), repeat=3)
        ]
        for la in labels:
            for lb in labels:
                geometric = cube.face_vertices(la) >= cube.face_vertices(lb)
                combinatorial = la.lower <= lb.lower and la.upper <= lb.upper
                self.assertEqual(geometric, combinatorial)


class TestParallelFacets(unittest.TestCase):
    def test_unit_cube_least_axis(self):
        cube = recognize_cube(CUBE3)
        self.assertEqual(parallel_facet_pair(cube), 1)
        self.assertEqual(opposite_parallel_axes(cube), [1, 2, 3])

    def test_trapezoid_horizontal_pair(self):
        cube = recognize_cube(TRAPEZOID)
        axis = parallel_facet_pair(cube)
        self.assertIsNotNone(axis)
        lo = cube.face_vertices(FaceLabel.of([axis], []))
        self.assertEqual(lin_span(cube.polytope, lo).basis, ((1, 0),))

    def test_parallel_facets_are_opposite(self):
        # parallelism between facets only ever holds for opposite pairs
        for seed in range(6):
            cube = gen_smooth_cube(GenParams(3, 5, 1, 9100 + seed)).cube
            poly = cube.polytope
            for f in range(poly.n_facets):
                for g in range(f + 1, poly.n_facets):
                    if parallel(poly, poly.facet_vertices[f], poly, poly.facet_vertices[g]):
                        self.assertEqual(poly.facet_vertices[f] & poly.facet_vertices[g], frozenset())


class TestImplicationLaws(unittest.TestCase):
    def test_unit_cube_all_pass(self):
        reports = verify_parallel_propositions(recognize_cube(CUBE3))
        self.assertTrue(reports["C3.2"].ok)
        self.assertTrue(reports["C3.4"].ok)
        self.assertGreater(reports["C3.4"].instances, 0)

    def test_dimension_guard(self):
        with self.assertRaises(ValueError):
            verify_parallel_propositions(recognize_cube(SQUARE))

    def test_generated_cubes_pass(self):
        for dim, seeds in ((3, range(4)), (4, range(2))):
            for seed in seeds:
                cube = gen_smooth_cube(GenParams(dim, 4, 1, 7500 + seed)).cube
                reports = verify_parallel_propositions(cube)
                self.assertTrue(reports["C3.2"].ok, f"dim={dim} seed={seed}")
                self.assertTrue(reports["C3.4"].ok, f"dim={dim} seed={seed}")


if __name__ == "__main__":
    unittest.main()
