"""Dev scratch: exercise the polytope layer."""
import itertools
import sys

sys.path.insert(0, "src")

from fractions import Fraction
from latcube.polytope import (
    Polytope, lattice_points, lin_span, parallel, minkowski_equivalent,
    fan_face_bijection, apply_unimodular, translate, dilate, negate,
    polytopes_intersect, separating_facet_hyperplane, NotDisjointError,
)
from latcube.exactlat import UnimodularMap

P0 = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (1, 1)])
print("P0:", P0)
print("normals:", P0.facet_normals, "offsets:", P0.facet_offsets)
assert set(P0.facet_normals) == {(0, -1), (-1, 0), (0, 1), (1, 1)}
sq = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
assert set(sq.facet_normals) == {(0, -1), (-1, 0), (0, 1), (1, 0)}

fl = sq.face_lattice()
print("square faces:", len(fl), fl.f_vector())
assert len(fl) == 10 and fl.f_vector() == (1, 4, 4, 1)

cube = Polytope.from_vertices(list(itertools.product((0, 1), repeat=3)))
assert len(cube.face_lattice()) == 28, len(cube.face_lattice())
assert cube.face_lattice().f_vector() == (1, 8, 12, 6, 1)

# lattice points
def naive_points(p):
    box = p.integer_box()
    out = []
    for pt in itertools.product(*[range(lo, hi + 1) for lo, hi in box]):
        if p.contains(pt):
            out.append(pt)
    return out

assert lattice_points(sq) == naive_points(sq) and len(lattice_points(sq)) == 4
assert lattice_points(P0) == naive_points(P0) and len(lattice_points(P0)) == 5
reeve2 = Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
assert lattice_points(reeve2) == naive_points(reeve2)
assert len(lattice_points(reeve2)) == 4, lattice_points(reeve2)

# spans / parallel: trapezoid edges
fl0 = P0.face_lattice()
edges = fl0.faces_of_dim(1)
verts = P0.vertices
print("P0 vertices:", verts)
def edge_with(a, b):
    ia, ib = verts.index(a), verts.index(b)
    for e in edges:
        if e == frozenset({ia, ib}):
            return e
    raise AssertionError("edge not found")
bottom = edge_with((0, 0), (2, 0))
top = edge_with((0, 1), (1, 1))
left = edge_with((0, 0), (0, 1))
slant = edge_with((2, 0), (1, 1))
assert parallel(P0, bottom, P0, top)
assert not parallel(P0, left, P0, slant)
assert parallel(P0, slant, P0, slant)
assert lin_span(P0, top).basis == ((1, 0),)

# minkowski equivalence
assert minkowski_equivalent(P0, dilate(P0, 2))
assert not minkowski_equivalent(P0, sq)
sheared = apply_unimodular(UnimodularMap(((1, 1), (0, 1)), (0, 0)), sq)
assert not minkowski_equivalent(sq, sheared)
assert minkowski_equivalent(sq, translate(sq, (5, -3)))
bij = fan_face_bijection(P0, dilate(P0, 3))
assert bij is not None and len(bij) == len(fl0)

# unimodular image keeps counts
sh_pts = lattice_points(sheared)
assert len(sh_pts) == 4, sh_pts
assert sorted(sheared.vertices) == [(0, 0), (1, 0), (1, 1), (2, 1)]

# intersection + separation
Q = translate(negate(P0), (5, 5))
assert not polytopes_intersect(P0, Q)
cert = separating_facet_hyperplane(P0, Q)
print("certificate:", cert)
assert cert.normal == (1, 1) and cert.max_on_p == 2 and cert.min_on_q == 8
overlap = translate(negate(P0), (1, 0))
assert polytopes_intersect(P0, overlap)
try:
    separating_facet_hyperplane(P0, overlap)
    raise SystemExit("expected NotDisjointError")
except NotDisjointError:
    pass

# embedding of collinear points
seg = Polytope.from_vertices([(0, 0), (1, 0), (2, 0)], embed=True)
assert seg.dim == 1 and seg.n_vertices == 2
assert seg.vertices_ambient() == ((0, 0), (2, 0))
try:
    Polytope.from_vertices([(0, 0), (1, 0), (2, 0)])
    raise SystemExit("expected dimension error")
except ValueError as e:
    print("low-dim error ok:", e)
try:
    Polytope.from_vertices([])
    raise SystemExit("expected empty error")
except ValueError as e:
    print("empty error ok:", e)

# diagonal segment, lattice-preserving chart
diag = Polytope.from_vertices([(0, 0), (2, 2)], embed=True)
assert diag.dim == 1
assert sorted(diag.vertices_ambient()) == [(0, 0), (2, 2)]
locpts = lattice_points(diag)
assert len(locpts) == 3
amb = sorted(diag.embedding.to_ambient(p) for p in locpts)
assert amb == [(0, 0), (1, 1), (2, 2)], amb

print("ALL POLYTOPE CHECKS PASSED")
