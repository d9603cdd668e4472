"""Exact convex hull facet enumeration for full-dimensional point sets.

Gift wrapping over the facet/ridge graph, with every predicate decided by
exact integer/rational sign tests.  Output-sensitive, which suits the inputs
here: Minkowski sums of cubes have few facets but many coplanar candidate
points, exactly the degenerate regime where incremental float hulls break.
Intended scale is d <= 4 and up to a few hundred points.

A facet is reported as (normal, offset, support): primitive integer outward
normal, exact offset, and the sorted ids of *all* input points lying on the
facet hyperplane (vertex extraction happens downstream).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactlat import (
    dot,
    kernel_vector,
    norm_num,
    primitive_direction,
    rank,
    solve_in_span,
    vec_sub,
)


def affine_rank(points) -> int:
    """Dimension of the affine hull of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([vec_sub(p, base) for p in points[1:]])


def affine_basis(points):
    """(base point, rows spanning the affine hull directions)."""
    base = points[0]
    basis = []
    for p in points[1:]:
        v = vec_sub(p, base)
        if rank(basis + [v]) > len(basis):
            basis.append(v)
    return base, basis


def convex_hull_facets(points, dim):
    """All facets of conv(points), assumed full-dimensional in R^dim.

    points: sequence of distinct coordinate tuples (int/Fraction entries).
    Returns a list of (normal, offset, support) triples, sorted by
    (normal, offset); support indexes into `points`.
    """
    n = len(points)
    if dim < 1:
        raise ValueError("hull needs dimension >= 1")
    if affine_rank(points) != dim:
        raise ValueError("point set is not full-dimensional")

    if dim == 1:
        top = max(range(n), key=lambda i: points[i][0])
        bot = min(range(n), key=lambda i: points[i][0])
        hi, lo = points[top][0], points[bot][0]
        return sorted(
            [
                ((-1,), norm_num(-lo), tuple(i for i in range(n) if points[i][0] == lo)),
                ((1,), norm_num(hi), tuple(i for i in range(n) if points[i][0] == hi)),
            ]
        )

    first = _initial_facet(points, dim)
    facets = {}  # (normal, offset) -> support tuple
    ridges_done = set()
    stack = [first]
    while stack:
        normal, offset, support = stack.pop()
        key = (normal, offset)
        if key in facets:
            continue
        facets[key] = support
        for ridge in _ridges_of_facet(points, support, dim):
            rkey = frozenset(ridge)
            if rkey in ridges_done:
                continue
            ridges_done.add(rkey)
            stack.append(_pivot_over_ridge(points, normal, support, ridge))
    return sorted((nrm, off, sup) for (nrm, off), sup in facets.items())


def _on_plane(points, normal, base_idx):
    c = dot(normal, points[base_idx])
    return tuple(i for i, p in enumerate(points) if dot(normal, p) == c)


def _initial_facet(points, dim):
    """One supporting hyperplane containing a (dim-1)-dimensional point set.

    Starts from the maximal-last-coordinate hyperplane and repeatedly rotates
    it (exactly, by minimal angle) around the affine hull of its current
    support until that hull has dimension dim-1.
    """
    normal = (0,) * (dim - 1) + (1,)
    top = max(dot(normal, p) for p in points)
    support = [i for i, p in enumerate(points) if dot(normal, p) == top]
    while True:
        sup_pts = [points[i] for i in support]
        base, basis = affine_basis(sup_pts)
        if len(basis) == dim - 1:
            break
        u = kernel_vector(basis + [normal], dim)
        assert u is not None  # basis + normal spans < dim
        best = None
        for q in points:
            w = vec_sub(q, base)
            a = dot(normal, w)
            if a == 0:
                continue
            assert a < 0  # supporting plane, nothing above
            cand = (dot(u, w), -a)
            if best is None or cand[0] * best[1] - cand[1] * best[0] > 0:
                best = cand
        assert best is not None  # otherwise the input was flat
        raw = tuple(best[0] * nc + best[1] * uc for nc, uc in zip(normal, u))
        normal = primitive_direction(raw)
        support = _on_plane(points, normal, support[0])
    offset = norm_num(Fraction(dot(normal, points[support[0]])))
    return normal, offset, tuple(sorted(support))


def _ridges_of_facet(points, support, dim):
    """Ridge supports of a facet: the facets of the facet, via recursion.

    The support points are re-expressed in exact local coordinates of the
    facet's hyperplane; each sub-facet of that (dim-1)-hull is a ridge, and
    its support is exactly the set of hull points on the ridge's affine hull.
    """
    sup_pts = [points[i] for i in support]
    base, basis = affine_basis(sup_pts)
    assert len(basis) == dim - 1
    local = []
    for p in sup_pts:
        lam = solve_in_span(basis, vec_sub(p, base))
        assert lam is not None
        local.append(lam)
    sub = convex_hull_facets(local, dim - 1)
    return [tuple(sorted(support[j] for j in sub_support)) for _, _, sub_support in sub]


def _pivot_over_ridge(points, normal, support, ridge):
    """The other facet through a ridge, by exact minimal-angle rotation.

    Rotating the facet hyperplane around the ridge's affine hull away from
    the facet, the first point hit (least rotation angle, compared by exact
    cross products) spans the adjacent facet with the ridge.
    """
    r0 = points[ridge[0]]
    ridge_pts = [points[i] for i in ridge]
    _, ridge_basis = affine_basis(ridge_pts)
    u = kernel_vector(ridge_basis + [normal], len(normal))
    assert u is not None
    # Orient u into the facet: positive on facet points off the ridge.
    ridge_set = set(ridge)
    for i in support:
        if i in ridge_set:
            continue
        s = dot(u, vec_sub(points[i], r0))
        if s != 0:
            if s < 0:
                u = tuple(-c for c in u)
            break
    best = None
    for q in points:
        w = vec_sub(q, r0)
        a = dot(normal, w)
        if a == 0:
            continue
        assert a < 0
        cand = (-dot(u, w), -a)
        if best is None or cand[0] * best[1] - cand[1] * best[0] > 0:
            best = cand
    assert best is not None
    raw = tuple(best[0] * nc - best[1] * uc for nc, uc in zip(normal, u))
    new_normal = primitive_direction(raw)
    new_support = _on_plane(points, new_normal, ridge[0])
    offset = norm_num(Fraction(dot(new_normal, points[ridge[0]])))
    return new_normal, offset, tuple(sorted(new_support))
