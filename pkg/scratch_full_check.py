"""Dev scratch: end-to-end exercise of cube/smooth/idp/prismatoid/gen layers."""
import itertools
import time

import latcube as lc
from latcube import (
    FaceLabel, GenParams, Polytope, detect_prismatoid, dilate, face_of,
    gen_smooth_2cube, gen_smooth_cube, gen_smooth_prism, idp_via_slices,
    is_idp, is_idp_pair_bruteforce, is_idp_pair_regions, is_simple, is_smooth,
    lattice_points, minkowski_equivalent, minkowski_sum, normalize_axis,
    opposite, parallel_facet_pair, recognize_cube, reeve_simplex, scramble,
    skew_prismatoid_control, slices, standard_position, translate,
    verify_parallel_propositions, verify_slice_lemmas,
)

t0 = time.time()

P0 = Polytope.from_vertices([(0, 0), (2, 0), (0, 1), (1, 1)])
sq = Polytope.from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
cube3 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=3)))
cube4 = Polytope.from_vertices(list(itertools.product((0, 1), repeat=4)))

# --- cube recognition + labels
c2 = recognize_cube(P0)
assert c2 is not None and c2.dim == 2
assert recognize_cube(Polytope.from_vertices([(0, 0), (1, 0), (0, 1)])) is None
c3 = recognize_cube(cube3)
c4 = recognize_cube(cube4)
assert c3 and c4

lbl = FaceLabel.of([1], [])
f1 = face_of(c3, lbl)
assert f1.dim == 2 and all(v[0] == 0 for v in f1.vertices_ambient())
edge = face_of(c3, FaceLabel.of([1], [2]))
assert edge.dim == 1
assert all(v[0] == 0 and v[1] == 1 for v in edge.vertices_ambient())
assert str(FaceLabel.of([1, 3], [2])) == "1 2bar 3"
assert FaceLabel.parse("1 2bar 3") == FaceLabel.of([1, 3], [2])
assert opposite(FaceLabel.of([1]), 1) == FaceLabel.of([], [1])
assert opposite(FaceLabel.of([1, 2]), 2) == FaceLabel.of([1], [2])
try:
    opposite(FaceLabel.of(), 1)
    raise SystemExit("expected error")
except ValueError:
    pass

# intersection law on the 3-cube
fa = c3.face_vertices(FaceLabel.of([1], []))
fb = c3.face_vertices(FaceLabel.of([], [2]))
assert fa & fb == c3.face_vertices(FaceLabel.of([1], [2]))

# parallel pair
assert parallel_facet_pair(c3) == 1
assert parallel_facet_pair(c2) is not None
reps = verify_parallel_propositions(c3)
assert reps["C3.2"].ok and reps["C3.4"].ok

# --- smooth
assert is_simple(cube3)
pyramid = Polytope.from_vertices([(1, 1, 0), (1, -1, 0), (-1, 1, 0), (-1, -1, 0), (0, 0, 1)])
assert not is_simple(pyramid)
assert is_smooth(cube3).ok
assert is_smooth(P0).ok
r2 = reeve_simplex(2)
v = is_smooth(r2)
assert not v.ok and v.witness_vertex is not None
print("reeve witness:", v.witness_vertex, v.reason)

std, umap = standard_position(c2)
print("std 2-cube verts:", std.polytope.vertices)
from latcube.smooth import base_star_is_standard, primary_facet_in_coordinate_plane
assert base_star_is_standard(std)
assert all(primary_facet_in_coordinate_plane(std, ax) for ax in std.axis_indices)

# --- idp
s2 = minkowski_sum(P0, P0)
assert sorted(s2.vertices) == [(0, 0), (0, 2), (2, 2), (4, 0)]
assert len(lattice_points(s2)) == 12
rb = is_idp_pair_bruteforce(sq, sq)
rr = is_idp_pair_regions(sq, sq)
assert rb.verdict and rr.verdict
bad_b = is_idp_pair_bruteforce(r2, r2)
bad_r = is_idp_pair_regions(r2, r2)
assert not bad_b.verdict and not bad_r.verdict
assert (1, 1, 1) in bad_b.witnesses and (1, 1, 1) in bad_r.witnesses
assert is_idp(reeve_simplex(1)).verdict
assert not is_idp(r2).verdict
assert is_idp(P0, extra_k=1).verdict

# --- prismatoid
pc3 = detect_prismatoid(cube3)
assert pc3 is not None
assert detect_prismatoid(reeve_simplex(1)) is None
norm, nmap = normalize_axis(cube3)
assert norm == cube3  # already normalized, lex-min at origin
dec = slices(cube3)
assert dec.height == 1 and len(dec.slices) == 2
assert dec.slices[0].vertices == sq.vertices

rep = verify_slice_lemmas(cube3)
assert rep.ok

ctrl = skew_prismatoid_control()
assert detect_prismatoid(ctrl) is not None
assert not is_smooth(ctrl).ok
crep = verify_slice_lemmas(ctrl)
assert not crep.ok
bad_names = [e.name for e in crep.failing()]
print("control failures:", bad_names, [str(e.witness) for e in crep.failing()])
assert any("integral" in n for n in bad_names)

via = idp_via_slices(cube3, cube3)
det = dict(via.details)
assert via.verdict and det["direct_agrees"] and det["slice_pairs"] == 4

# sheared prismatoid: top = P0 + (1,1) at h=1; already axis-aligned, slice directly
sh = Polytope.from_vertices([v + (0,) for v in P0.vertices] + [tuple(a + 1 for a in v) + (1,) for v in P0.vertices])
assert is_smooth(sh).ok
shc = recognize_cube(sh)
assert shc is not None
decsh = slices(sh)
assert decsh.slices[0] == P0, decsh.slices[0].vertices
assert decsh.slices[1] == translate(P0, (1, 1)), decsh.slices[1].vertices
# the repositioned copy also slices cleanly (straightened prism)
decn = slices(normalize_axis(sh)[0])
assert decn.slices[0] == decn.slices[1]

# --- gen
g1 = gen_smooth_2cube(GenParams(2, 6, 2, 42))
g1b = gen_smooth_2cube(GenParams(2, 6, 2, 42))
assert g1.polytope == g1b.polytope
g3 = gen_smooth_cube(GenParams(3, 5, 1, 7))
assert g3.polytope.dim == 3
g4 = gen_smooth_cube(GenParams(4, 4, 1, 11))
assert g4.polytope.dim == 4
pr = gen_smooth_prism(GenParams(3, 4, 1, 5))
nrm_pr, _ = normalize_axis(pr.polytope)
decp = slices(nrm_pr)
print("prism heights:", decp.height, "slices:", len(decp.slices))
assert verify_slice_lemmas(pr.polytope).ok

# scramble invariance spot check
sc = scramble(P0, GenParams(2, 5, 2, 99))
assert is_smooth(sc).ok
assert recognize_cube(sc) is not None
assert is_idp(sc).verdict == is_idp(P0).verdict
assert len(lattice_points(sc)) == len(lattice_points(P0))

# 4-cube propositions + idp
reps4 = verify_parallel_propositions(c4)
assert reps4["C3.2"].ok and reps4["C3.4"].ok
t = time.time()
assert is_idp(cube4, extra_k=0).verdict
print(f"4-cube idp (k=1,2): {time.time()-t:.2f}s")

print(f"ALL FULL CHECKS PASSED in {time.time()-t0:.2f}s")
