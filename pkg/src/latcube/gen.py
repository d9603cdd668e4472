"""Deterministic generators for smooth combinatorial cubes and prismatoids.

Nothing emitted here is trusted: every generated instance is re-verified
(cube recognition and smoothness) before it is returned, so a generator bug
cannot silently weaken downstream theorem corpora.

Construction notes.  In dimension 2 the smooth-cube family is built directly:
trapezoids conv{(0,0), (w0,0), (0,h), (w1,h)} with h dividing w1 - w0 are
smooth, and every smooth 2-cube is one of these up to a lattice automorphism
(the vertex-star determinant forces the two horizontal edges to be parallel).
Higher dimensions have no such closed-form classification, so 3- and 4-cubes
are generated by lifting a smooth base cube one dimension up — top copy
deformed within its normal fan and/or sheared — and rejecting candidates that
fail re-verification; a pure sheared prism always succeeds and is the
fallback, and the rejection count is kept on the result.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubeface import CubeStructure, recognize_cube
from .exactlat import UnimodularMap, random_unimodular, solve, vec_add
from .polytope import Polytope, apply_unimodular, minkowski_equivalent, translate
from .rng import SplitMix64
from .smooth import is_smooth


@dataclass(frozen=True)
class GenParams:
    """Generator inputs; identical params give identical outputs.

    Output coordinates are bounded by 3**scramble_rounds * (edge sizes, at
    most coord_bound small multiples) plus a translation of at most
    coord_bound, per the shear-entry bound in random_unimodular.
    """

    dim: int
    coord_bound: int
    scramble_rounds: int
    seed: int

    def __post_init__(self):
        if not 2 <= self.dim <= 4:
            raise ValueError("generator supports dimensions 2..4")
        if self.coord_bound < 1:
            raise ValueError("coord_bound must be positive")


@dataclass(frozen=True)
class GeneratedCube:
    """A verified smooth cube plus generation diagnostics."""

    cube: CubeStructure
    params: GenParams
    rejections: int = 0

    @property
    def polytope(self) -> Polytope:
        return self.cube.polytope


def scramble(p: Polytope, params: GenParams) -> Polytope:
    """Random lattice automorphism plus integer translation (seeded)."""
    rng = SplitMix64(params.seed).spawn(0x5C12)
    unimap = random_unimodular(p.dim, rng.next_u64(), params.scramble_rounds)
    shift = tuple(rng.randint(-params.coord_bound, params.coord_bound) for _ in range(p.dim))
    return translate(apply_unimodular(unimap, p), shift)


def _checked_cube(p: Polytope) -> CubeStructure:
    cube = recognize_cube(p)
    assert cube is not None, "generated polytope failed cube recognition"
    verdict = is_smooth(p)
    assert verdict, f"generated polytope is not smooth at {verdict.witness_vertex}"
    return cube


def gen_smooth_2cube(params: GenParams) -> GeneratedCube:
    """Random smooth 2-cube: trapezoid with h | (w1 - w0), then scrambled."""
    if params.dim != 2:
        raise ValueError("gen_smooth_2cube needs dim=2 params")
    rng = SplitMix64(params.seed)
    bound = params.coord_bound
    h = rng.randint(1, max(1, bound // 2))
    w0 = rng.randint(1, bound)
    w1 = 0
    while w1 < 1:
        w1 = w0 + h * rng.randint(-2, 2)
    w1 = min(w1, bound)
    if (w1 - w0) % h:  # clamping may break divisibility; fall back to a prism
        w1 = w0
    trapezoid = Polytope.from_vertices([(0, 0), (w0, 0), (0, h), (w1, h)])
    scrambled = scramble(trapezoid, params)
    return GeneratedCube(_checked_cube(scrambled), params)


def fan_preserving_variant(p: Polytope, seed: int, max_delta: int = 2) -> Polytope:
    """A lattice polytope with the same normal fan but perturbed facet offsets.

    Each vertex is re-solved from its own facets with offsets pushed outward
    by random small integers; for smooth polytopes the vertex systems are
    unimodular so the solutions stay integral.  Candidates whose hull changes
    fan are rejected; after a few failures the 2-fold dilation (always
    fan-equal) is returned.
    """
    rng = SplitMix64(seed)
    if not is_smooth(p):
        raise ValueError("offset perturbation needs a smooth polytope")
    from .polytope import dilate

    for _ in range(12):
        deltas = [rng.randint(0, max_delta) for _ in range(p.n_facets)]
        if all(d == 0 for d in deltas):
            continue
        new_vertices = []
        degenerate = False
        for v in range(p.n_vertices):
            facets = sorted(p.vertex_facets[v])
            a = [p.facet_normals[f] for f in facets]
            b = [p.facet_offsets[f] + deltas[f] for f in facets]
            x = solve(a, b)
            if x is None or not all(isinstance(c, int) for c in x):
                degenerate = True
                break
            new_vertices.append(x)
        if degenerate:
            continue
        candidate = Polytope.from_vertices(new_vertices)
        if (
            candidate.n_vertices == p.n_vertices
            and minkowski_equivalent(candidate, p)
            and is_smooth(candidate)
        ):
            return candidate
    return dilate(p, 2)


def gen_smooth_cube_lift(base: CubeStructure, params: GenParams) -> GeneratedCube:
    """Lift a smooth (d-1)-cube to a smooth d-cube (generate-and-test).

    The bottom is the base at height 0; the top is a fan-preserving variant
    of the base (or the base itself), shifted by a random shear and placed at
    height h (h > 1 only for pure shears, so the connecting edges keep a
    primitive direction with last coordinate 1).  Candidates failing cube
    recognition or smoothness are resampled; the sheared-prism fallback
    always verifies.
    """
    rng = SplitMix64(params.seed).spawn(0x11F7)
    base_poly = base.polytope
    if not is_smooth(base_poly):
        raise ValueError("lift needs a smooth base cube")
    d = base_poly.dim + 1
    rejections = 0
    for attempt in range(24):
        deform = rng.randint(0, 1) == 1
        if deform:
            h = 1
            top = fan_preserving_variant(base_poly, rng.next_u64())
        else:
            h = rng.randint(1, 3)
            top = base_poly
        shear = tuple(rng.randint(-2, 2) for _ in range(d - 1))
        top = translate(top, tuple(h * s for s in shear))
        pts = [v + (0,) for v in base_poly.vertices]
        pts += [v + (h,) for v in top.vertices]
        candidate = Polytope.from_vertices(pts)
        if candidate.n_vertices != 2 ** d:
            rejections += 1
            continue
        cube = recognize_cube(candidate)
        if cube is None or not is_smooth(candidate):
            rejections += 1
            continue
        return GeneratedCube(cube, params, rejections)
    prism = Polytope.from_vertices(
        [v + (0,) for v in base_poly.vertices] + [v + (1,) for v in base_poly.vertices]
    )
    return GeneratedCube(_checked_cube(prism), params, rejections)


def gen_smooth_cube(params: GenParams) -> GeneratedCube:
    """Random smooth combinatorial cube of the requested dimension.

    Dimension 2 uses the direct trapezoid family; 3 and 4 lift a generated
    lower-dimensional cube (unscrambled base, so coordinates stay small) and
    scramble the result.
    """
    if params.dim == 2:
        return gen_smooth_2cube(params)
    rng = SplitMix64(params.seed).spawn(params.dim)
    base_params = GenParams(params.dim - 1, params.coord_bound, 0, rng.next_u64())
    base = gen_smooth_cube(base_params)
    lifted = gen_smooth_cube_lift(base.cube, GenParams(params.dim, params.coord_bound, 0, rng.next_u64()))
    scrambled = scramble(lifted.polytope, params)
    return GeneratedCube(_checked_cube(scrambled), params, lifted.rejections)


def gen_smooth_prism(params: GenParams, height: int = 2) -> GeneratedCube:
    """Sheared prism of the given height over a smooth (d-1)-cube.

    Heights above 1 produce interior slices, which is what the slice checks
    want to exercise; the connecting edges have primitive direction
    (shear, 1) so the result is again smooth.
    """
    rng = SplitMix64(params.seed).spawn(0x9817)
    base_params = GenParams(params.dim - 1, params.coord_bound, 0, rng.next_u64())
    base = gen_smooth_cube(base_params).polytope
    shear = tuple(rng.randint(-2, 2) for _ in range(params.dim - 1))
    pts = [v + (0,) for v in base.vertices]
    pts += [vec_add(v, tuple(height * s for s in shear)) + (height,) for v in base.vertices]
    prism = Polytope.from_vertices(pts)
    scrambled = scramble(prism, params)
    return GeneratedCube(_checked_cube(scrambled), params)


def reeve_simplex(q: int) -> Polytope:
    """conv{0, e1, e2, (1,1,q)}: the standard non-decomposing control for q >= 2."""
    if q < 1:
        raise ValueError("reeve_simplex needs q >= 1")
    return Polytope.from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, q)])


def skew_prismatoid_control() -> Polytope:
    """Non-smooth prismatoid whose connecting edges have direction (1, 0, 2).

    The trapezoid bottom sits at height 0 and a shifted copy at height 2, so
    the height-1 slice has non-integral vertices: the control showing that
    slice integrality genuinely needs smoothness.
    """
    bottom = [(0, 0), (2, 0), (0, 1), (1, 1)]
    top = [(x + 1, y) for x, y in bottom]
    return Polytope.from_vertices([v + (0,) for v in bottom] + [v + (2,) for v in top])
