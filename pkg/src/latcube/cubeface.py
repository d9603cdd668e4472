"""Combinatorial cubes: recognition, face labeling, opposite faces.

A d-dimensional combinatorial cube has faces indexed by disjoint pairs
(lower, upper) of axis subsets: the face consists of the vertices sitting on
the lower-side facet for every axis in `lower` and on the upper-side facet
for every axis in `upper`.  Labels print as e.g. "1 2bar 3": bare numbers are
lower-side axes, 'bar' marks upper-side ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .polytope import Polytope, lin_span, parallel, spans_equal
from .reports import CheckEntry, TheoremReport

MAX_CUBE_DIM_DEFAULT = 4  # recognition above this is refused unless raised by the caller


@dataclass(frozen=True)
class FaceLabel:
    """A cube face name: disjoint sets of 1-based axis indices."""

    lower: frozenset
    upper: frozenset

    def __post_init__(self):
        if self.lower & self.upper:
            raise ValueError("face label has overlapping lower/upper axis sets")

    @staticmethod
    def of(lower=(), upper=()) -> "FaceLabel":
        return FaceLabel(frozenset(lower), frozenset(upper))

    def face_dim(self, cube_dim: int) -> int:
        return cube_dim - len(self.lower) - len(self.upper)

    def __str__(self):
        parts = [(axis, "") for axis in self.lower] + [(axis, "bar") for axis in self.upper]
        return " ".join(f"{axis}{tag}" for axis, tag in sorted(parts)) or "(whole cube)"

    @staticmethod
    def parse(text: str) -> "FaceLabel":
        lower, upper = set(), set()
        text = text.strip()
        if text in ("", "(whole cube)"):
            return FaceLabel.of()
        for token in text.split():
            if token.endswith("bar"):
                upper.add(int(token[:-3]))
            else:
                lower.add(int(token))
        return FaceLabel.of(lower, upper)


def opposite(label: FaceLabel, axis: int) -> FaceLabel:
    """Move one axis of the label to the other side (the opposite face)."""
    if axis in label.lower:
        return FaceLabel(label.lower - {axis}, label.upper | {axis})
    if axis in label.upper:
        return FaceLabel(label.lower | {axis}, label.upper - {axis})
    raise ValueError(f"axis {axis} is not fixed by the label {label}")


class CubeStructure:
    """A polytope recognized as a combinatorial cube, with its face labeling.

    axes[i] is the (lower facet id, upper facet id) pair of axis i+1; the
    lower facets all contain the base vertex (the lexicographically smallest
    one).  vertex_bits maps vertex id to its 0/1 axis tuple.
    """

    def __init__(self, polytope: Polytope, axes, vertex_bits, label_faces):
        self.polytope = polytope
        self.dim = polytope.dim
        self.axes = axes
        self.vertex_bits = vertex_bits
        self._label_faces = label_faces
        self.base_vertex = 0  # vertices are sorted, lex-min has id 0

    @property
    def axis_indices(self):
        return range(1, self.dim + 1)

    def face_vertices(self, label: FaceLabel):
        key = (frozenset(label.lower), frozenset(label.upper))
        if key not in self._label_faces:
            raise ValueError(f"label {label} names no face of this {self.dim}-cube")
        return self._label_faces[key]

    def label_of_face(self, face) -> FaceLabel:
        face = frozenset(face)
        for (lo, up), verts in self._label_faces.items():
            if verts == face:
                return FaceLabel(lo, up)
        raise ValueError("vertex set is not a face of this cube")

    def facet_id(self, label: FaceLabel) -> int:
        """Polytope facet id of a facet label (one fixed axis)."""
        (axis,) = tuple(label.lower | label.upper)
        lower_f, upper_f = self.axes[axis - 1]
        return lower_f if axis in label.lower else upper_f

    def axis_neighbor_of_base(self, axis: int) -> int:
        """Vertex adjacent to the base vertex along the given axis."""
        want = tuple(1 if a == axis else 0 for a in self.axis_indices)
        for v, bits in self.vertex_bits.items():
            if bits == want:
                return v
        raise AssertionError("cube labeling lost an axis neighbor")

    def __repr__(self):
        return f"<combinatorial {self.dim}-cube on {self.polytope!r}>"


def recognize_cube(p: Polytope, max_dim: int = MAX_CUBE_DIM_DEFAULT):
    """CubeStructure if the face poset is a cube's, else None.

    The labeling is grown from the lexicographically smallest vertex: its d
    incident facets become the lower side of axes 1..d in facet order, each
    axis's upper side is the unique facet disjoint from the lower one, and
    the resulting vertex bit-vectors are then verified to reproduce the whole
    face lattice (so a non-None result is a checked isomorphism, never a
    heuristic).
    """
    if p.embedding is not None:
        raise ValueError("cube recognition expects a full-dimensional polytope")
    d = p.dim
    if d < 1 or d > max_dim:
        return None
    if p.n_vertices != 2 ** d or p.n_facets != 2 * d:
        return None
    if any(len(vf) != d for vf in p.vertex_facets):
        return None

    # Pair opposite facets by disjointness; each facet needs exactly one partner.
    partner = {}
    for f, vs in enumerate(p.facet_vertices):
        mates = [g for g, ws in enumerate(p.facet_vertices) if g != f and not (vs & ws)]
        if len(mates) != 1:
            return None
        partner[f] = mates[0]
    if any(partner[partner[f]] != f for f in partner):
        return None

    base = 0  # vertices sorted lexicographically
    lower_facets = sorted(p.vertex_facets[base])
    if len(lower_facets) != d:
        return None
    used = set(lower_facets) | {partner[f] for f in lower_facets}
    if len(used) != 2 * d:
        return None
    axes = tuple((f, partner[f]) for f in lower_facets)

    vertex_bits = {}
    for v in range(p.n_vertices):
        bits = []
        for lower_f, upper_f in axes:
            on_lower = v in p.facet_vertices[lower_f]
            on_upper = v in p.facet_vertices[upper_f]
            if on_lower == on_upper:
                return None
            bits.append(0 if on_lower else 1)
        vertex_bits[v] = tuple(bits)
    if len(set(vertex_bits.values())) != 2 ** d:
        return None

    # Every disjoint label must name a face with the matching vertex pattern,
    # and those must exhaust the face lattice.
    lattice = p.face_lattice()
    faces = {f for f in lattice.faces if f}
    label_faces = {}
    for lower, upper in _disjoint_axis_pairs(d):
        verts = frozenset(
            v
            for v, bits in vertex_bits.items()
            if all(bits[a - 1] == 0 for a in lower) and all(bits[a - 1] == 1 for a in upper)
        )
        if verts not in faces:
            return None
        if lattice.dim_of(verts) != d - len(lower) - len(upper):
            return None
        label_faces[(lower, upper)] = verts
    if len(set(label_faces.values())) != 3 ** d or len(faces) != 3 ** d:
        return None
    return CubeStructure(p, axes, vertex_bits, label_faces)


def _disjoint_axis_pairs(d):
    for assignment in itertools.product((0, 1, 2), repeat=d):
        lower = frozenset(i + 1 for i, a in enumerate(assignment) if a == 0)
        upper = frozenset(i + 1 for i, a in enumerate(assignment) if a == 1)
        yield lower, upper


def face_of(cube: CubeStructure, label: FaceLabel) -> Polytope:
    """The labeled face as a geometric polytope in the ambient space."""
    verts = cube.face_vertices(label)
    if frozenset(label.lower | label.upper) == frozenset():
        return cube.polytope
    return cube.polytope.face_as_polytope(verts)


def parallel_facet_pair(cube: CubeStructure):
    """Least axis whose opposite facets are parallel, or None.

    For smooth cubes a pair always exists; None is a meaningful answer only
    for non-smooth inputs.
    """
    for axis in cube.axis_indices:
        lo = cube.face_vertices(FaceLabel.of([axis], []))
        up = cube.face_vertices(FaceLabel.of([], [axis]))
        if parallel(cube.polytope, lo, cube.polytope, up):
            return axis
    return None


def opposite_parallel_axes(cube: CubeStructure):
    """All axes whose opposite facet pair is parallel."""
    out = []
    for axis in cube.axis_indices:
        lo = cube.face_vertices(FaceLabel.of([axis], []))
        up = cube.face_vertices(FaceLabel.of([], [axis]))
        if parallel(cube.polytope, lo, cube.polytope, up):
            out.append(axis)
    return out


def verify_parallel_propositions(cube: CubeStructure):
    """Runtime check of the two parallel-face implication laws (d >= 3).

    For every unordered axis pair {x, y}, the four codimension-2 faces fixing
    x and y are examined: if three of them are mutually parallel, all four
    must be ("C3.4").  For every ordered triple (x, y, z): if the opposite
    pairs inside F_x and F_y obtained by flipping z are each parallel, the
    facets fixing z must be parallel ("C3.2").  Returns {claim id:
    TheoremReport}; every implication instance is one report entry.
    """
    d = cube.dim
    if d < 3:
        raise ValueError("parallel-face implication laws need dimension >= 3")
    poly = cube.polytope
    spans = {}

    def span_of(lower, upper):
        key = (frozenset(lower), frozenset(upper))
        if key not in spans:
            spans[key] = lin_span(poly, cube.face_vertices(FaceLabel.of(lower, upper)))
        return spans[key]

    def sided(axis, side):
        return ([axis], []) if side == 0 else ([], [axis])

    three_checks = []
    for x, y in itertools.combinations(cube.axis_indices, 2):
        quad = [
            span_of([x, y], []),
            span_of([x], [y]),
            span_of([y], [x]),
            span_of([], [x, y]),
        ]
        for skip in range(4):
            trio = [quad[i] for i in range(4) if i != skip]
            if spans_equal(trio[0], trio[1]) and spans_equal(trio[0], trio[2]):
                ok = spans_equal(trio[0], quad[skip])
                three_checks.append(CheckEntry(f"three-of-four x={x} y={y} skip={skip}", ok))

    pair_checks = []
    for z in cube.axis_indices:
        others = [a for a in cube.axis_indices if a != z]
        for x, y in itertools.combinations(others, 2):
            for sx in (0, 1):
                for sy in (0, 1):
                    xl, xu = sided(x, sx)
                    yl, yu = sided(y, sy)
                    xz_par = spans_equal(span_of(xl + [z], xu), span_of(xl, xu + [z]))
                    yz_par = spans_equal(span_of(yl + [z], yu), span_of(yl, yu + [z]))
                    if xz_par and yz_par:
                        ok = spans_equal(span_of([z], []), span_of([], [z]))
                        pair_checks.append(
                            CheckEntry(f"two-pairs x={x}s{sx} y={y}s{sy} imply z={z}", ok)
                        )

    def to_report(claim, checks):
        failures = tuple((c.name, None) for c in checks if not c.ok)
        return TheoremReport(claim, len(checks), len(checks) - len(failures), failures)

    return {"C3.2": to_report("C3.2", pair_checks), "C3.4": to_report("C3.4", three_checks)}
