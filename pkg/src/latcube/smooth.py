"""Simplicity and smoothness of lattice polytopes, and standard position.

A d-polytope is simple when every vertex lies on exactly d edges; it is
smooth when, additionally, the primitive directions of the edges at each
vertex form a basis of Z^d (their determinant is ±1).  Smooth combinatorial
cubes can be moved by a lattice automorphism into standard position: base
vertex at the origin, base edge directions along the coordinate axes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubeface import CubeStructure, FaceLabel, recognize_cube
from .exactlat import UnimodularMap, lattice_basis_check, mat_inverse_int, mat_vec, primitive_direction, vec_neg, vec_sub
from .polytope import Polytope, apply_unimodular


@dataclass(frozen=True)
class VertexStar:
    """Primitive edge directions at one vertex."""

    vertex: tuple
    edge_dirs: tuple


@dataclass(frozen=True)
class SmoothnessResult:
    """Verdict with the vertex that broke simplicity/unimodularity, if any."""

    ok: bool
    witness_vertex: tuple = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_simple(p: Polytope) -> bool:
    """True iff every vertex has exactly dim incident edges."""
    if p.embedding is not None:
        raise ValueError("simplicity is checked on full-dimensional polytopes")
    counts = [0] * p.n_vertices
    for a, b in p.edges():
        counts[a] += 1
        counts[b] += 1
    return all(c == p.dim for c in counts)


def vertex_star(p: Polytope, v: int) -> VertexStar:
    """Primitive directions from vertex v toward each edge-neighbor."""
    here = p.vertices[v]
    dirs = tuple(
        primitive_direction(vec_sub(p.vertices[w], here)) for w in p.vertex_neighbors(v)
    )
    return VertexStar(here, dirs)


def is_smooth(p: Polytope) -> SmoothnessResult:
    """Smoothness check with a failing-vertex witness.

    Requires a full-dimensional lattice polytope; simplicity plus a
    unimodular vertex star everywhere.
    """
    if p.embedding is not None:
        raise ValueError("smoothness is checked on full-dimensional polytopes")
    if not p.is_lattice:
        raise ValueError("not a lattice polytope: smoothness needs integral vertices")
    d = p.dim
    for v in range(p.n_vertices):
        star = vertex_star(p, v)
        if len(star.edge_dirs) != d:
            return SmoothnessResult(False, star.vertex, "vertex is not simple")
        if not lattice_basis_check(star.edge_dirs):
            return SmoothnessResult(False, star.vertex, "edge directions do not span the lattice")
    return SmoothnessResult(True)


def standard_position(cube: CubeStructure):
    """Move a smooth cube so its base corner sits at the origin with axis edges.

    Returns (repositioned CubeStructure, the UnimodularMap that was applied).
    The map sends the base vertex to 0 and its edge direction along cube axis
    i to e_i, so every lower facet of axis i lands in the hyperplane x_i = 0.
    """
    p = cube.polytope
    verdict = is_smooth(p)
    if not verdict:
        raise ValueError(f"not smooth at vertex {verdict.witness_vertex}: {verdict.reason}")
    base = cube.base_vertex
    here = p.vertices[base]
    columns = []
    for axis in cube.axis_indices:
        nb = cube.axis_neighbor_of_base(axis)
        columns.append(primitive_direction(vec_sub(p.vertices[nb], here)))
    matrix = tuple(zip(*columns))  # columns -> rows
    inv = mat_inverse_int(matrix)
    unimap = UnimodularMap(inv, vec_neg(mat_vec(inv, here)))
    moved = apply_unimodular(unimap, p)
    recognized = recognize_cube(moved, max_dim=max(4, moved.dim))
    assert recognized is not None, "standard position must preserve the cube structure"
    # The origin is lex-min, so it is again the base vertex, and its star is e_1..e_d.
    assert recognized.polytope.vertices[recognized.base_vertex] == (0,) * p.dim
    return recognized, unimap


def base_star_is_standard(cube: CubeStructure) -> bool:
    """True iff the base vertex sits at 0 with edge directions e_1..e_d."""
    p = cube.polytope
    if p.vertices[cube.base_vertex] != (0,) * p.dim:
        return False
    star = vertex_star(p, cube.base_vertex)
    expected = {tuple(1 if i == j else 0 for j in range(p.dim)) for i in range(p.dim)}
    return set(star.edge_dirs) == expected


def primary_facet_in_coordinate_plane(cube: CubeStructure, axis: int) -> bool:
    """After standard position: lower facet of `axis` lies in {x_axis = 0}."""
    verts = cube.face_vertices(FaceLabel.of([axis], []))
    return all(cube.polytope.vertices[v][axis - 1] == 0 for v in verts)
