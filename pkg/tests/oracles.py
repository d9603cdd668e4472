"""Independently coded oracles the library is tested against.

Deliberately naive: whole-box membership scans and subset-enumeration facet
fitting.  Keep these dumb — their value is that they share no code path with
the implementations they check.
"""

import itertools
import math

from latcube.exactlat import dot, kernel_vector, rank, vec_sub


def naive_lattice_points(polytope):
    """Full integer-box scan with an all-inequalities membership test."""
    box = polytope.integer_box()
    out = []
    for pt in itertools.product(*[range(lo, hi + 1) for lo, hi in box]):
        if all(
            dot(nrm, pt) <= off
            for nrm, off in zip(polytope.facet_normals, polytope.facet_offsets)
        ):
            out.append(pt)
    return out


def brute_force_facets(points, dim):
    """Supporting hyperplanes through dim points with all points on one side."""
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
            oriented, off = nrm, c
        elif all(v >= 0 for v in vals):
            oriented, off = tuple(-x for x in nrm), -c
        else:
            continue
        support = tuple(i for i, p in enumerate(points) if dot(oriented, p) == off)
        out[(oriented, off)] = support
    return sorted((n, c, s) for (n, c), s in out.items())


def naive_decomposes(p, q, x):
    """Search an explicit lattice split of x across P and Q by box scans."""
    from latcube.polytope import lattice_points

    qs = set(lattice_points(q))
    return any(
        tuple(a - b for a, b in zip(x, lp)) in qs for lp in lattice_points(p)
    )


def fraction_det(rows):
    """Gaussian-elimination determinant over Fractions (checks Bareiss)."""
    from fractions import Fraction

    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            f = a[i][col] / a[col][col]
            for j in range(col, n):
                a[i][j] -= f * a[col][j]
    assert det.denominator == 1
    return int(det)
