"""Prismatoids: detection, axis normalization, integral slices.

A prismatoid here is a polytope whose face lattice is a prism's — two
distinguished parallel facets (bottom and top) with a vertex-for-vertex
combinatorial isomorphism along "vertical" edges — following the restricted
definition this toolkit targets.  After a lattice automorphism puts bottom
and top into hyperplanes x_d = const, the slices at integer heights are
(d-1)-polytopes obtained by dropping the last coordinate, which is a
lattice-preserving chart of those hyperplanes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactlat import (
    UnimodularMap,
    mat_inverse_int,
    mat_vec,
    norm_num,
    primitive_direction,
    unimodular_with_last_row,
    vec_neg,
    vec_sub,
)
from .idp import IdpReport, is_idp_pair_regions
from .polytope import Polytope, apply_unimodular, minkowski_equivalent, polytope_id
from .reports import CheckEntry
from .smooth import is_smooth


@dataclass(frozen=True)
class PrismStructure:
    """Bottom/top facet ids plus the vertical vertex matching bottom -> top."""

    bottom_facet: int
    top_facet: int
    matching: tuple  # sorted (bottom vertex id, top vertex id) pairs

    def bottom_vertices(self):
        return frozenset(b for b, _ in self.matching)

    def top_vertices(self):
        return frozenset(t for _, t in self.matching)


@dataclass(frozen=True)
class SliceDecomposition:
    """Axis-aligned slices of a normalized prismatoid.

    slices[l] is the (d-1)-polytope at height bottom_height + l, in the
    drop-last-coordinate chart; l runs 0 .. height, so the first slice is the
    bottom facet and the last is the top facet.
    """

    axis_normal: tuple
    bottom_height: int
    height: int
    slices: tuple

    def __post_init__(self):
        assert self.height >= 1
        assert len(self.slices) == self.height + 1


def detect_prismatoid(p: Polytope):
    """PrismStructure if the polytope is a prismatoid, else None.

    Every parallel facet pair is tried as (bottom, top); the pair must cover
    all vertices, admit a perfect matching along edges, and the matching must
    extend to a verified isomorphism between the polytope's face lattice and
    the prism over the bottom facet.  Candidate pairs are ordered so that the
    pair whose common normal direction is heaviest in the last coordinates
    wins (the unit cube yields bottom z=0, top z=1), deterministically.
    """
    if p.embedding is not None:
        raise ValueError("prismatoid detection expects a full-dimensional polytope")
    if p.dim < 2:
        return None
    up = (0,) * (p.dim - 1) + (1,)
    candidates = []
    for i in range(p.n_facets):
        for j in range(p.n_facets):
            if i == j:
                continue
            if p.facet_normals[i] != tuple(-c for c in p.facet_normals[j]):
                continue
            # i is the bottom (outward normal opposite the top's).  An exact
            # +-e_d pair always wins (normalized inputs slice along it);
            # otherwise order by descending reversed |normal| so directions
            # heavy in the last coordinates beat +-e_1.
            key = tuple(reversed([abs(c) for c in p.facet_normals[j]]))
            exact = 0 if p.facet_normals[j] == up else 1
            candidates.append((exact, key, i, j))
    candidates.sort(key=lambda t: (t[0], [-c for c in t[1]], t[2], t[3]))
    for _, _, bottom, top in candidates:
        structure = _validate_prism(p, bottom, top)
        if structure is not None:
            return structure
    return None


def _validate_prism(p: Polytope, bottom: int, top: int):
    bset = p.facet_vertices[bottom]
    tset = p.facet_vertices[top]
    if bset & tset or (bset | tset) != frozenset(range(p.n_vertices)):
        return None
    if len(bset) != len(tset):
        return None
    edges = p.edges()
    neighbors = {v: set() for v in range(p.n_vertices)}
    for a, b in edges:
        neighbors[a].add(b)
        neighbors[b].add(a)
    matching = {}
    for b in sorted(bset):
        ups = sorted(neighbors[b] & tset)
        if len(ups) != 1:
            return None
        matching[b] = ups[0]
    if len(set(matching.values())) != len(tset):
        return None

    # The prism over the bottom facet must reproduce the whole face lattice:
    # bottom faces map identically, top faces through the matching, vertical
    # faces to the union; the images must exhaust the nonempty faces and the
    # map must respect inclusion both ways.
    lattice = p.face_lattice()
    faces = set(f for f in lattice.faces if f)
    bottom_faces = sorted((f for f in faces if f <= bset), key=sorted)
    lift = {b: t for b, t in matching.items()}
    prism_faces = {}
    for f in bottom_faces:
        top_f = frozenset(lift[v] for v in f)
        vert_f = f | top_f
        if top_f not in faces or vert_f not in faces:
            return None
        prism_faces[(f, "bottom")] = f
        prism_faces[(f, "top")] = top_f
        prism_faces[(f, "vertical")] = vert_f
    images = list(prism_faces.values())
    if len(set(images)) != len(images) or set(images) != faces:
        return None
    keys = list(prism_faces)
    for ka in keys:
        fa, tag_a = ka
        for kb in keys:
            fb, tag_b = kb
            included = fa <= fb and _tag_le(tag_a, tag_b)
            if included != (prism_faces[ka] <= prism_faces[kb]):
                return None
    return PrismStructure(bottom, top, tuple(sorted(matching.items())))


def _tag_le(a, b):
    return a == b or b == "vertical"


def normalize_axis(p: Polytope):
    """Lattice automorphism making bottom/top horizontal: returns (image, map).

    For smooth prismatoids the map also puts the bottom's lex-min vertex at
    the origin with its edge directions mapped to e_1 .. e_d (vertical edge
    last); otherwise the top's outward normal is completed to a unimodular
    matrix, which exists exactly because that normal is primitive.
    """
    structure = detect_prismatoid(p)
    if structure is None:
        raise ValueError("not a prismatoid")
    d = p.dim
    if is_smooth(p):
        base = min(structure.bottom_vertices())  # vertices sorted, min id = lex-min
        here = p.vertices[base]
        bset = structure.bottom_vertices()
        in_bottom = []
        vertical = None
        for w in p.vertex_neighbors(base):
            direction = primitive_direction(vec_sub(p.vertices[w], here))
            if w in bset:
                in_bottom.append(direction)
            else:
                vertical = direction
        assert vertical is not None and len(in_bottom) == d - 1
        columns = sorted(in_bottom) + [vertical]
        matrix = mat_inverse_int(tuple(zip(*columns)))
        unimap = UnimodularMap(matrix, vec_neg(mat_vec(matrix, here)))
    else:
        n_top = p.facet_normals[structure.top_facet]
        matrix = unimodular_with_last_row(n_top)
        shift = min(p.facet_vertices[structure.bottom_facet])
        here = p.vertices[shift]
        unimap = UnimodularMap(matrix, vec_neg(mat_vec(matrix, here)))
    image = apply_unimodular(unimap, p)
    check = detect_prismatoid(image)
    assert check is not None
    assert image.facet_normals[check.top_facet] == (0,) * (d - 1) + (1,)
    return image, unimap


def _is_normalized(p: Polytope, structure: PrismStructure) -> bool:
    d = p.dim
    up = (0,) * (d - 1) + (1,)
    return p.facet_normals[structure.top_facet] == up


def slices(p: Polytope) -> SliceDecomposition:
    """Integer-height slices of a normalized prismatoid.

    The polytope's bottom/top must lie in integer hyperplanes x_d = b and
    x_d = b + h (else ValueError).  Each slice is the exact cross-section:
    vertices at that height plus the crossing points of the vertical-ish
    edges, re-expressed without the last coordinate.
    """
    structure = detect_prismatoid(p)
    if structure is None:
        raise ValueError("not a prismatoid")
    if not _is_normalized(p, structure):
        raise ValueError("prismatoid is not axis-normalized; call normalize_axis first")
    d = p.dim
    top_off = p.facet_offsets[structure.top_facet]
    bot_off = p.facet_offsets[structure.bottom_facet]
    if not (isinstance(top_off, int) and isinstance(bot_off, int)):
        raise ValueError("non-integer top/bottom heights")
    b = -bot_off
    h = top_off - b
    assert h >= 1
    level_polys = []
    edges = p.edges()
    for l in range(h + 1):
        height = b + l
        pts = [v[:-1] for v in p.vertices if v[-1] == height]
        for a, bb in edges:
            u, w = p.vertices[a], p.vertices[bb]
            if u[-1] > w[-1]:
                u, w = w, u
            if u[-1] < height < w[-1]:
                t = Fraction(height - u[-1], w[-1] - u[-1])
                cross = tuple(norm_num(x + t * (y - x)) for x, y in zip(u, w))
                pts.append(cross[:-1])
        poly = Polytope.from_vertices(pts)
        assert poly.dim == d - 1
        level_polys.append(poly)
    return SliceDecomposition((0,) * (d - 1) + (1,), b, h, tuple(level_polys))


@dataclass(frozen=True)
class SliceLemmaReport:
    """Per-slice verification outcomes for one prismatoid."""

    instance: str
    entries: tuple  # CheckEntry items

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failing(self):
        return [e for e in self.entries if not e.ok]


def verify_slice_lemmas(p: Polytope) -> SliceLemmaReport:
    """Check slice integrality, dimension, and fan equality with the bottom.

    Runs on any prismatoid with integer top/bottom heights; for smooth ones
    every entry must pass, and the deliberately non-smooth control shows a
    failing integrality entry (the smoothness hypothesis is necessary).
    Includes the top/bottom fan-equality check as its own entry.
    """
    normalized, _ = normalize_axis(p)
    decomposition = slices(normalized)
    entries = []
    bottom = decomposition.slices[0]
    top = decomposition.slices[-1]
    entries.append(
        CheckEntry("top-and-bottom-minkowski-equivalent", minkowski_equivalent(bottom, top))
    )
    for l, s in enumerate(decomposition.slices):
        prefix = f"slice-{l}"
        integral = s.is_lattice
        witness = None
        if not integral:
            witness = next(v for v in s.vertices if not all(isinstance(c, int) for c in v))
        entries.append(CheckEntry(f"{prefix}-integral", integral, witness))
        entries.append(CheckEntry(f"{prefix}-dimension", s.dim == p.dim - 1))
        entries.append(
            CheckEntry(f"{prefix}-minkowski-equivalent-to-bottom", minkowski_equivalent(s, bottom))
        )
    return SliceLemmaReport(polytope_id(p), tuple(entries))


def idp_via_slices(p: Polytope, p2: Polytope) -> IdpReport:
    """Slice-wise decomposition check for Minkowski-equivalent smooth prismatoids.

    Both polytopes are moved by the *same* normalizing automorphism (fan
    equality keeps the second one axis-aligned), every slice pair across the
    two is checked in dimension d-1, and the slice verdicts' conjunction is
    cross-validated against the direct region checker on the full pair; a
    disagreement would falsify the slice-to-pair implication and is surfaced
    in the report details.
    """
    if not (is_smooth(p) and is_smooth(p2)):
        raise ValueError("slice-based check needs smooth prismatoids")
    if not minkowski_equivalent(p, p2):
        raise ValueError("slice-based check needs Minkowski-equivalent prismatoids")
    if detect_prismatoid(p) is None or detect_prismatoid(p2) is None:
        raise ValueError("not a prismatoid")
    normalized, unimap = normalize_axis(p)
    moved2 = apply_unimodular(unimap, p2)
    dec1 = slices(normalized)
    dec2 = slices(moved2)
    slice_pairs = 0
    all_idp = True
    failures = []
    checked = 0
    for l, s1 in enumerate(dec1.slices):
        for m, s2 in enumerate(dec2.slices):
            sub = is_idp_pair_regions(s1, s2)
            slice_pairs += 1
            checked += sub.regions_checked
            if not sub.verdict:
                all_idp = False
                failures.append(((l, m), sub.witnesses[:2]))
    direct = is_idp_pair_regions(normalized, moved2)
    if all_idp:
        verdict = True  # slice conjunction implies the pair decomposes
    else:
        verdict = direct.verdict
    agrees = verdict == direct.verdict
    return IdpReport(
        pair=(polytope_id(p), polytope_id(p2)),
        verdict=verdict,
        witnesses=tuple(failures) if failures and not verdict else direct.witnesses,
        regions_checked=checked + direct.regions_checked,
        method="via-slices",
        details=(
            ("direct_agrees", agrees),
            ("direct_verdict", direct.verdict),
            ("slice_pairs", slice_pairs),
            ("slices_all_idp", all_idp),
        ),
    )
