"""Dev scratch: cross-check hull against brute-force facet enumeration."""
import itertools
import sys

sys.path.insert(0, "src")

from fractions import Fraction
from latcube.hull import convex_hull_facets, affine_rank
from latcube.exactlat import dot, vec_sub, rank, primitive_direction, kernel_vector
from latcube.rng import SplitMix64


def brute_facets(points, dim):
    """All supporting hyperplanes spanned by dim points with everything on one side."""
    out = {}
    for combo in itertools.combinations(range(len(points)), dim):
        pts = [points[i] for i in combo]
        base = pts[0]
        rows = [vec_sub(p, base) for p in pts[1:]]
        if rank(rows) != dim - 1:
            continue
        nrm = kernel_vector(rows, dim)
        if nrm is None:
            continue
        c = dot(nrm, base)
        vals = [dot(nrm, p) - c for p in points]
        if all(v <= 0 for v in vals):
            nrm2, c2 = nrm, c
        elif all(v >= 0 for v in vals):
            nrm2, c2 = tuple(-x for x in nrm), -c
        else:
            continue
        sup = tuple(i for i, p in enumerate(points) if dot(nrm2, p) == c2)
        out[(nrm2, c2)] = sup
    return sorted((n, c, s) for (n, c), s in out.items())


def check(points, dim, label):
    got = convex_hull_facets(points, dim)
    want = brute_facets(points, dim)
    assert got == want, f"{label}:\n got {got}\nwant {want}"
    print(f"ok {label}: {len(got)} facets")


check([(0, 0), (1, 0), (0, 1), (1, 1)], 2, "unit square")
check([(0, 0), (2, 0), (0, 1), (1, 1)], 2, "trapezoid")
check([(0, 0), (2, 0), (0, 1), (1, 1), (1, 0)], 2, "trapezoid + edge point")
cube3 = list(itertools.product((0, 1), repeat=3))
check(cube3, 3, "3-cube")
cube4 = list(itertools.product((0, 1), repeat=4))
check(cube4, 4, "4-cube")
check(cube3 + [(1, 1, 1)._class_() if False else (0, 0, 0)], 3, "3-cube dup-ish") if False else None
# Minkowski-sum style degenerate set: all pairwise sums of cube3 with itself
sums = sorted(set(tuple(a + b for a, b in zip(p, q)) for p in cube3 for q in cube3))
check(sums, 3, "cube3 + cube3 sums")
# simplex
check([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)], 3, "reeve q=2")
# rational points
check([(Fraction(1, 2), 0), (0, Fraction(3, 2)), (1, 1), (0, 0)], 2, "rational quad")

rng = SplitMix64(12345)
for trial in range(60):
    d = 2 + trial % 3
    npts = rng.randint(d + 1, 9)
    pts = set()
    while len(pts) < npts:
        pts.add(tuple(rng.randint(-4, 4) for _ in range(d)))
    pts = sorted(pts)
    if affine_rank(pts) != d:
        continue
    check(pts, d, f"random trial {trial} d={d} n={npts}")
print("ALL HULL CHECKS PASSED")
