"""Exact polytope representation and queries.

A Polytope carries both representations: exact vertices and facet
inequalities <normal, x> <= offset with primitive integer outward normals,
plus the vertex-facet incidence.  The two representations are cross-validated
on construction.  Lower-dimensional inputs (faces, segments) can be embedded:
they are stored full-dimensionally in exact local coordinates of their affine
hull together with the affine map back to ambient space, chosen
lattice-preserving whenever the affine hull's lattice allows it.

Vertices and facets are kept in sorted order so that equal polytopes have
identical layouts and every downstream report is deterministic.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import exactlat
from .exactlat import (
    UnimodularMap,
    dot,
    integer_kernel_basis,
    kernel_vector,
    norm_num,
    primitive_direction,
    rank,
    solve,
    solve_in_span,
    vec_add,
    vec_neg,
    vec_sub,
)
from .hull import affine_basis, affine_rank, convex_hull_facets


class NotDisjointError(ValueError):
    """Raised when a separation is requested for intersecting polytopes."""


class LemmaViolation(RuntimeError):
    """A guaranteed-by-theory branch failed; always a bug or a false claim."""


@dataclass(frozen=True)
class AffineEmbedding:
    """Affine map local -> ambient: x maps to origin + sum x_i * basis_i."""

    origin: tuple
    basis: tuple  # tuple of ambient direction vectors

    @property
    def ambient_dim(self) -> int:
        return len(self.origin)

    def to_ambient(self, local_point):
        p = self.origin
        for coord, direction in zip(local_point, self.basis):
            p = vec_add(p, tuple(norm_num(coord * c) for c in direction))
        return tuple(norm_num(c) for c in p)


def _canon_point(p):
    return tuple(norm_num(Fraction(c) if not isinstance(c, (int, Fraction)) else c) for c in p)


class Polytope:
    """Bounded convex polytope with exact dual representation.

    Not mutated after construction; all queries are pure.
    """

    def __init__(self, dim, vertices, facet_normals, facet_offsets, facet_vertices, embedding=None):
        self.dim = dim
        self.vertices = vertices
        self.facet_normals = facet_normals
        self.facet_offsets = facet_offsets
        self.facet_vertices = facet_vertices
        self.embedding = embedding
        self.vertex_facets = tuple(
            frozenset(f for f, vs in enumerate(facet_vertices) if v in vs)
            for v in range(len(vertices))
        )
        self._face_lattice = None
        self._validate()

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_vertices(points, embed=False):
        """Polytope from a point set (exact hull + facet enumeration).

        Input points may be redundant; int or Fraction coordinates.  If the
        points are not full-dimensional, `embed=True` re-expresses them in
        exact local coordinates of their affine hull (a lattice-preserving
        chart when an integral base point exists) and records the embedding;
        otherwise a ValueError is raised.
        """
        pts = sorted(set(_canon_point(p) for p in points))
        if not pts:
            raise ValueError("empty input: a polytope needs at least one point")
        ambient = len(pts[0])
        if any(len(p) != ambient for p in pts):
            raise ValueError("points have mixed dimensions")
        k = affine_rank(pts)
        if k == ambient:
            return Polytope._from_full_dimensional(pts, ambient)
        if not embed:
            raise ValueError(
                f"points span only dimension {k} of {ambient}; pass embed=True to build "
                "the polytope in its affine hull"
            )
        origin = next((p for p in pts if all(isinstance(c, int) for c in p)), pts[0])
        if k == 0:
            poly = Polytope(0, ((),), (), (), (), embedding=AffineEmbedding(origin, ()))
            return poly
        diffs = [vec_sub(p, origin) for p in pts if p != origin]
        normals = integer_kernel_basis(diffs, ambient)
        lattice_basis = integer_kernel_basis(normals, ambient)
        assert len(lattice_basis) == k
        local = []
        for p in pts:
            lam = solve_in_span(lattice_basis, vec_sub(p, origin))
            assert lam is not None
            local.append(tuple(norm_num(x) for x in lam))
        inner = Polytope._from_full_dimensional(sorted(local), k)
        return Polytope(
            inner.dim,
            inner.vertices,
            inner.facet_normals,
            inner.facet_offsets,
            inner.facet_vertices,
            embedding=AffineEmbedding(origin, tuple(lattice_basis)),
        )

    @staticmethod
    def _from_full_dimensional(pts, dim):
        if dim == 0:
            return Polytope(0, ((),), (), (), ())
        raw_facets = convex_hull_facets(pts, dim)
        vertex_ids = []
        for i, p in enumerate(pts):
            tight = [nrm for nrm, off, sup in raw_facets if i in sup]
            if len(tight) >= dim and rank(tight) == dim:
                vertex_ids.append(i)
        vertices = tuple(pts[i] for i in vertex_ids)  # pts sorted, so vertices sorted
        reindex = {old: new for new, old in enumerate(vertex_ids)}
        facet_vertices = tuple(
            frozenset(reindex[i] for i in sup if i in reindex) for _, _, sup in raw_facets
        )
        normals = tuple(nrm for nrm, _, _ in raw_facets)
        offsets = tuple(off for _, off, _ in raw_facets)
        return Polytope(dim, vertices, normals, offsets, facet_vertices)

    @staticmethod
    def _from_trusted(dim, vertices, facets, embedding=None):
        """Rebuild from transformed data: sorts canonically, then re-validates.

        facets: list of (normal, offset, vertex_id_frozenset) in the *given*
        vertex order; vertices may be unsorted.
        """
        order = sorted(range(len(vertices)), key=lambda i: vertices[i])
        remap = {old: new for new, old in enumerate(order)}
        new_vertices = tuple(vertices[i] for i in order)
        new_facets = sorted(
            (tuple(nrm), norm_num(off), frozenset(remap[i] for i in vs)) for nrm, off, vs in facets
        )
        return Polytope(
            dim,
            new_vertices,
            tuple(f[0] for f in new_facets),
            tuple(f[1] for f in new_facets),
            tuple(f[2] for f in new_facets),
            embedding=embedding,
        )

    def _validate(self):
        d = self.dim
        if d == 0:
            assert self.vertices == ((),)
            return
        assert len(self.vertices) >= d + 1
        assert len(set(self.facet_normals)) == len(self.facet_normals), "duplicate facet normals"
        for v, p in enumerate(self.vertices):
            tight = []
            for f, (nrm, off) in enumerate(zip(self.facet_normals, self.facet_offsets)):
                val = dot(nrm, p)
                assert val <= off, "vertex violates a facet inequality"
                assert (val == off) == (v in self.facet_vertices[f]), "incidence mismatch"
                if val == off:
                    tight.append(nrm)
            assert rank(tight) == d, "vertex not tight on d independent facets"
        for vs in self.facet_vertices:
            assert affine_rank([self.vertices[i] for i in sorted(vs)]) == d - 1, (
                "facet support does not span a (d-1)-face"
            )

    # -- basic queries ----------------------------------------------------

    @property
    def ambient_dim(self) -> int:
        return self.embedding.ambient_dim if self.embedding else self.dim

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_facets(self) -> int:
        return len(self.facet_normals)

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(c, int) for p in self.vertices for c in p)

    def vertices_ambient(self):
        if self.embedding is None:
            return self.vertices
        return tuple(self.embedding.to_ambient(p) for p in self.vertices)

    def incidence_matrix(self):
        """Vertex x facet boolean incidence."""
        return tuple(
            tuple(v in self.facet_vertices[f] for f in range(self.n_facets))
            for v in range(self.n_vertices)
        )

    def contains(self, point) -> bool:
        """Membership in the polytope's own coordinate frame."""
        p = _canon_point(point)
        return all(dot(nrm, p) <= off for nrm, off in zip(self.facet_normals, self.facet_offsets))

    def bounding_box(self):
        """Exact per-coordinate (min, max) over the vertices."""
        return tuple(
            (min(p[i] for p in self.vertices), max(p[i] for p in self.vertices))
            for i in range(self.dim)
        )

    def integer_box(self):
        return tuple((math.ceil(lo), math.floor(hi)) for lo, hi in self.bounding_box())

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.dim == other.dim
            and self.vertices == other.vertices
            and self.embedding == other.embedding
        )

    def __hash__(self):
        return hash((self.dim, self.vertices, self.embedding))

    def __repr__(self):
        kind = "lattice " if self.is_lattice else ""
        emb = f" embedded in R^{self.ambient_dim}" if self.embedding else ""
        return (
            f"<{kind}polytope dim={self.dim}{emb} "
            f"vertices={self.n_vertices} facets={self.n_facets}>"
        )

    # -- faces ------------------------------------------------------------

    def face_lattice(self) -> "FaceLattice":
        if self._face_lattice is None:
            self._face_lattice = FaceLattice(self)
        return self._face_lattice

    def edges(self):
        """Pairs of adjacent vertex ids (1-faces)."""
        out = []
        for face in self.face_lattice().faces_of_dim(1):
            a, b = sorted(face)
            out.append((a, b))
        return sorted(out)

    def vertex_neighbors(self, v):
        return sorted(
            (b if a == v else a) for a, b in self.edges() if v in (a, b)
        )

    def face_as_polytope(self, face) -> "Polytope":
        """A face (vertex-id set) as an embedded polytope in ambient space."""
        pts = [self.vertices_ambient()[i] for i in sorted(face)]
        return Polytope.from_vertices(pts, embed=True)


class FaceLattice:
    """All faces of a polytope as vertex-id sets, ordered by inclusion.

    Faces are the intersection closure of the facet vertex sets, together
    with the polytope itself and the empty face.
    """

    def __init__(self, polytope: Polytope):
        self.polytope = polytope
        full = frozenset(range(polytope.n_vertices))
        seen = {full, frozenset()}
        seen.update(polytope.facet_vertices)
        frontier = list(polytope.facet_vertices)
        while frontier:
            nxt = []
            for face in frontier:
                for facet in polytope.facet_vertices:
                    cut = face & facet
                    if cut not in seen:
                        seen.add(cut)
                        nxt.append(cut)
            frontier = nxt
        self._dims = {}
        for face in seen:
            if not face:
                self._dims[face] = -1
            else:
                self._dims[face] = affine_rank([polytope.vertices[i] for i in sorted(face)])
        self._dims[full] = polytope.dim
        self.faces = tuple(sorted(seen, key=lambda f: (self._dims[f], sorted(f))))

    def __len__(self):
        return len(self.faces)

    def __contains__(self, face):
        return frozenset(face) in self._dims

    def dim_of(self, face) -> int:
        return self._dims[frozenset(face)]

    def faces_of_dim(self, k):
        return [f for f in self.faces if self._dims[f] == k]

    def f_vector(self):
        """Counts of faces by dimension -1 .. dim."""
        counts = {}
        for f in self.faces:
            counts[self._dims[f]] = counts.get(self._dims[f], 0) + 1
        return tuple(counts.get(k, 0) for k in range(-1, self.polytope.dim + 1))


# -- linear spans and parallelism ------------------------------------------


@dataclass(frozen=True)
class LinearSpan:
    """Basis of the unique linear subspace a face is parallel to."""

    basis: tuple  # tuple of integer direction vectors
    dim: int

    def __post_init__(self):
        assert rank(self.basis) == self.dim == len(self.basis)


def lin_span(polytope: Polytope, face) -> LinearSpan:
    """lin(F) for a face given as a vertex-id set, in ambient coordinates."""
    ids = sorted(face)
    if not ids:
        raise ValueError("the empty face has no span")
    pts = [polytope.vertices_ambient()[i] for i in ids]
    base, basis = affine_basis(pts)
    basis = [primitive_direction(b) for b in basis]
    return LinearSpan(tuple(basis), len(basis))


def spans_equal(a: LinearSpan, b: LinearSpan) -> bool:
    if a.dim != b.dim:
        return False
    return rank(list(a.basis) + list(b.basis)) == a.dim


def parallel(p: Polytope, face_p, q: Polytope, face_q) -> bool:
    """True iff two faces are parallel to the same linear subspace."""
    sa = lin_span(p, face_p)
    sb = lin_span(q, face_q)
    return spans_equal(sa, sb)


# -- normal fans and Minkowski equivalence ----------------------------------


@dataclass(frozen=True)
class VertexCone:
    """Normal cone of a vertex: generated by its incident facet normals."""

    apex: int
    generators: frozenset

    def __post_init__(self):
        assert len(self.generators) >= 1


def vertex_cones(p: Polytope):
    return tuple(
        VertexCone(v, frozenset(p.facet_normals[f] for f in sorted(p.vertex_facets[v])))
        for v in range(p.n_vertices)
    )


def minkowski_equivalent(p: Polytope, q: Polytope) -> bool:
    """True iff the normal fans of p and q agree.

    The maximal cones of the normal fan are the vertex cones, and the extreme
    rays of a vertex cone are exactly the primitive outward normals of the
    facets through that vertex, so fan equality reduces to equality of the
    sets of vertex generator-sets.  (That reasoning needs no simplicity
    assumption, but the paper-relevant use is the simple case.)
    """
    if p.embedding is not None or q.embedding is not None:
        raise ValueError("Minkowski equivalence is compared between full-dimensional polytopes")
    if p.dim != q.dim:
        return False
    if set(p.facet_normals) != set(q.facet_normals):
        return False
    cones_p = {c.generators for c in vertex_cones(p)}
    cones_q = {c.generators for c in vertex_cones(q)}
    return cones_p == cones_q


def fan_face_bijection(p: Polytope, q: Polytope):
    """Face-poset bijection induced by fan equality, or None.

    Faces correspond iff they are tight on facets with the same primitive
    normal sets; corresponding facets share their normal.  Returns a dict
    mapping faces of p (vertex-id frozensets) to faces of q.
    """
    if not minkowski_equivalent(p, q):
        return None

    def tight_key(poly, face):
        common = None
        for v in face:
            fs = poly.vertex_facets[v]
            common = fs if common is None else (common & fs)
        return frozenset(poly.facet_normals[f] for f in common)

    by_key = {}
    for face in q.face_lattice().faces:
        if face:
            by_key[tight_key(q, face)] = face
    mapping = {}
    for face in p.face_lattice().faces:
        if not face:
            mapping[face] = frozenset()
            continue
        key = tight_key(p, face)
        if key not in by_key:
            return None
        mapping[face] = by_key[key]
    if len(set(mapping.values())) != len(mapping):
        return None
    return mapping


# -- affine images -----------------------------------------------------------


def apply_unimodular(u: UnimodularMap, p: Polytope) -> Polytope:
    """Image of a polytope under a lattice automorphism x -> Mx + t.

    Vertices map directly and normals by the inverse matrix (combinatorics
    is unchanged); the constructor re-validates the result.
    """
    if p.embedding is not None:
        raise ValueError("apply_unimodular expects a full-dimensional polytope")
    if u.dim != p.dim:
        raise ValueError(f"dimension mismatch: map is {u.dim}-dimensional, polytope {p.dim}")
    minv = exactlat.mat_inverse_int(u.matrix)
    new_vertices = [u.apply(v) for v in p.vertices]
    new_facets = []
    for nrm, off, vs in zip(p.facet_normals, p.facet_offsets, p.facet_vertices):
        n2 = tuple(dot(nrm, col) for col in zip(*minv))  # row vector times M^-1
        c2 = norm_num(off + dot(n2, u.translation))
        new_facets.append((n2, c2, vs))
    return Polytope._from_trusted(p.dim, new_vertices, new_facets)


def translate(p: Polytope, t) -> Polytope:
    return apply_unimodular(UnimodularMap.translation_by(tuple(t)), p)


def dilate(p: Polytope, k: int) -> Polytope:
    """k-fold dilation kP (k >= 1); same normal fan, offsets scale."""
    if k < 1:
        raise ValueError("dilation factor must be a positive integer")
    if p.embedding is not None:
        raise ValueError("dilate expects a full-dimensional polytope")
    new_vertices = [tuple(norm_num(k * c) for c in v) for v in p.vertices]
    new_facets = [
        (nrm, norm_num(k * off), vs)
        for nrm, off, vs in zip(p.facet_normals, p.facet_offsets, p.facet_vertices)
    ]
    return Polytope._from_trusted(p.dim, new_vertices, new_facets)


def negate(p: Polytope) -> Polytope:
    new_vertices = [vec_neg(v) for v in p.vertices]
    new_facets = [
        (vec_neg(nrm), off, vs)
        for nrm, off, vs in zip(p.facet_normals, p.facet_offsets, p.facet_vertices)
    ]
    return Polytope._from_trusted(p.dim, new_vertices, new_facets)


# -- lattice point enumeration ----------------------------------------------


def _feasible_range(rows, offs, box, level, partial, minrem):
    lo, hi = box[level]
    for f in range(len(rows)):
        c = rows[f][level]
        slack = offs[f] - partial[f] - minrem[level][f]
        if c > 0:
            hi = min(hi, slack // c)
        elif c < 0:
            lo = max(lo, -((-slack) // c))  # ceil(slack / c)
        elif slack < 0:
            return 1, 0
    return lo, hi


def _minrem_table(rows, box):
    d = len(box)
    table = [[0] * len(rows) for _ in range(d)]
    for f, row in enumerate(rows):
        acc = 0
        for k in range(d - 1, -1, -1):
            table[k][f] = acc
            lo, hi = box[k]
            acc += min(row[k] * lo, row[k] * hi)
    return table


def enumerate_lattice_points(rows, offs, box):
    """Integer points satisfying rows[f] . x <= offs[f] inside the box.

    rows/offs must be integral; box is a list of inclusive (lo, hi) integer
    bounds.  The scan fixes coordinates left to right, narrowing each
    coordinate's interval with exact interval arithmetic over the remaining
    box, so empty slabs are never entered.  Output is in ascending
    lexicographic order.
    """
    d = len(box)
    if any(lo > hi for lo, hi in box):
        return
    minrem = _minrem_table(rows, box)
    x = [0] * d

    def walk(level, partial):
        lo, hi = _feasible_range(rows, offs, box, level, partial, minrem)
        if lo > hi:
            return
        if level == d - 1:
            for v in range(lo, hi + 1):
                x[level] = v
                yield tuple(x)
            return
        for v in range(lo, hi + 1):
            x[level] = v
            nxt = [partial[f] + rows[f][level] * v for f in range(len(rows))]
            yield from walk(level + 1, nxt)

    yield from walk(0, [0] * len(rows))


def _integral_inequalities(p: Polytope):
    """Facet inequalities with integer offsets, valid for integer points."""
    rows = list(p.facet_normals)
    offs = [math.floor(off) for off in p.facet_offsets]
    return rows, offs


def lattice_points(p: Polytope):
    """All integer points of the polytope, sorted lexicographically.

    Enumeration is an integer bounding-box scan against the facet
    inequalities (with per-coordinate exact narrowing); for an embedded
    polytope the points are in its local-chart lattice.
    """
    if p.dim == 0:
        v = p.vertices[0]
        return [v] if all(isinstance(c, int) for c in v) else []
    rows, offs = _integral_inequalities(p)
    return list(enumerate_lattice_points(rows, offs, p.integer_box()))


def has_lattice_point(rows, offs, box):
    """First integer point of an H-described region, or None."""
    for pt in enumerate_lattice_points(rows, offs, box):
        return pt
    return None


# -- intersection and separation ---------------------------------------------


def _h_rep(p: Polytope):
    return list(zip(p.facet_normals, p.facet_offsets))


def polytopes_intersect(p: Polytope, q: Polytope) -> bool:
    """Exact test whether two polytopes share a (possibly rational) point.

    A nonempty bounded intersection has a vertex, and every vertex is the
    unique solution of dim tight inequalities, so scanning all basic
    solutions of the combined system is a complete test.
    """
    if p.dim != q.dim or p.embedding is not None or q.embedding is not None:
        raise ValueError("intersection test needs full-dimensional polytopes of equal dimension")
    d = p.dim
    for i in range(d):
        plo, phi = p.bounding_box()[i]
        qlo, qhi = q.bounding_box()[i]
        if phi < qlo or qhi < plo:
            return False
    system = _h_rep(p) + _h_rep(q)
    for combo in itertools.combinations(range(len(system)), d):
        a = [system[i][0] for i in combo]
        b = [system[i][1] for i in combo]
        x = solve(a, b)
        if x is None:
            continue
        if all(dot(nrm, x) <= off for nrm, off in system):
            return True
    return False


@dataclass(frozen=True)
class SeparationCertificate:
    """A facet normal of P strictly separating P from Q."""

    normal: tuple
    max_on_p: object
    min_on_q: object
    facet_id: int

    def __post_init__(self):
        assert self.max_on_p < self.min_on_q


def separating_facet_hyperplane(p: Polytope, q: Polytope) -> SeparationCertificate:
    """Certificate that some facet direction of P separates P from Q.

    Precondition (caller's responsibility): P Minkowski equivalent to -Q,
    which guarantees a facet-parallel separator exists whenever P and Q are
    disjoint.  All facet normals are scanned and the widest-gap certificate
    is returned.  Intersecting inputs raise NotDisjointError; if no facet
    normal separates even though the polytopes are disjoint, the separation
    guarantee itself is violated and LemmaViolation is raised (this branch
    must never fire under the precondition).
    """
    if polytopes_intersect(p, q):
        raise NotDisjointError("not disjoint: the polytopes share a point")
    best = None
    for f, nrm in enumerate(p.facet_normals):
        max_p = max(dot(nrm, v) for v in p.vertices)
        min_q = min(dot(nrm, v) for v in q.vertices)
        if max_p < min_q and (best is None or min_q - max_p > best[0]):
            best = (min_q - max_p, SeparationCertificate(nrm, norm_num(max_p), norm_num(min_q), f))
    if best is not None:
        return best[1]
    raise LemmaViolation(
        "lemma violation: disjoint Minkowski-mirrored polytopes admit no facet-parallel "
        "separating hyperplane"
    )


# -- identity ----------------------------------------------------------------


def polytope_id(p: Polytope) -> str:
    """Short deterministic content digest used to identify instances in reports."""
    payload = json.dumps(
        [p.dim, [[str(c) for c in v] for v in p.vertices]], separators=(",", ":")
    )
    return hashlib.blake2b(payload.encode(), digest_size=6).hexdigest()
