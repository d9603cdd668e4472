"""Minkowski sums and the integer-decomposition checks.

A pair (P, Q) of lattice polytopes decomposes integrally when every lattice
point of P + Q splits as a lattice point of P plus one of Q.  Two
independent checkers are kept deliberately:

* brute force — enumerate the lattice points of P, Q and P + Q and search
  for an explicit split of every sum point;
* regions — for each lattice point a of P + Q, the overlap region
  P ∩ (a + (-Q)) is nonempty by construction, and the pair decomposes at a
  iff that region holds a lattice point, tested by exact H-intersection
  enumeration (short-circuiting on the first point found).

The two must agree everywhere; the test suite and the acceptance gate cross
check them on every instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cubeface import CubeStructure
from .polytope import (
    Polytope,
    dilate,
    enumerate_lattice_points,
    has_lattice_point,
    lattice_points,
    minkowski_equivalent,
    polytope_id,
)
from .reports import jsonable

WITNESS_CAP = 10  # counterexamples kept per report
SPOT_CHECK_CAP = 5  # sample decompositions kept for positive verdicts


@dataclass(frozen=True)
class IdpReport:
    """Certificate of one integer-decomposition check.

    For a False verdict, witnesses holds up to WITNESS_CAP sum points whose
    overlap region contains no lattice point (counterexamples); for True it
    holds a few sample decompositions (x, p, q) with x = p + q.
    regions_checked counts the examined lattice points of the sum.
    """

    pair: tuple
    verdict: bool
    witnesses: tuple
    regions_checked: int
    method: str
    details: tuple = field(default_factory=tuple)  # sorted (key, value) pairs

    def __post_init__(self):
        if not self.verdict:
            assert len(self.witnesses) >= 1, "a False verdict needs a counterexample witness"

    def to_json_dict(self):
        return {
            "pair": list(self.pair),
            "verdict": self.verdict,
            "witnesses": jsonable(list(self.witnesses)),
            "regions_checked": self.regions_checked,
            "method": self.method,
            "details": jsonable(dict(self.details)),
        }


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    """P + Q as the hull of all pairwise vertex sums."""
    if p.embedding is not None or q.embedding is not None:
        raise ValueError("Minkowski sum expects full-dimensional polytopes")
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    sums = {tuple(a + b for a, b in zip(u, v)) for u in p.vertices for v in q.vertices}
    return Polytope.from_vertices(sums)


def _require_lattice_pair(p, q):
    if not (p.is_lattice and q.is_lattice):
        raise ValueError("integer-decomposition checks need lattice polytopes")
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")


def is_idp_pair_bruteforce(p: Polytope, q: Polytope) -> IdpReport:
    """Definitional check: explicitly split every lattice point of P + Q."""
    _require_lattice_pair(p, q)
    pts_p = lattice_points(p)
    set_q = set(lattice_points(q))
    total = minkowski_sum(p, q)
    counterexamples = []
    spot_checks = []
    checked = 0
    for x in lattice_points(total):
        checked += 1
        found = None
        for lp in pts_p:
            diff = tuple(a - b for a, b in zip(x, lp))
            if diff in set_q:
                found = (x, lp, diff)
                break
        if found is None:
            if len(counterexamples) < WITNESS_CAP:
                counterexamples.append(x)
        elif len(spot_checks) < SPOT_CHECK_CAP:
            spot_checks.append(found)
    verdict = not counterexamples
    return IdpReport(
        pair=(polytope_id(p), polytope_id(q)),
        verdict=verdict,
        witnesses=tuple(counterexamples) if not verdict else tuple(spot_checks),
        regions_checked=checked,
        method="bruteforce",
    )


def _region_system(p: Polytope, q: Polytope, a):
    """H-description and integer box of P ∩ (a + (-Q))."""
    rows = list(p.facet_normals)
    offs = [math.floor(off) for off in p.facet_offsets]
    for nrm, off in zip(q.facet_normals, q.facet_offsets):
        rows.append(tuple(-c for c in nrm))
        offs.append(math.floor(off - sum(n * ai for n, ai in zip(nrm, a))))
    box = []
    for i, ((plo, phi), (qlo, qhi)) in enumerate(zip(p.bounding_box(), q.bounding_box())):
        lo = max(plo, a[i] - qhi)
        hi = min(phi, a[i] - qlo)
        box.append((math.ceil(lo), math.floor(hi)))
    return rows, offs, box


def is_idp_pair_regions(p: Polytope, q: Polytope) -> IdpReport:
    """Overlap-region check: every region P ∩ (a + (-Q)) holds a lattice point.

    Only lattice points a of P + Q are scanned, and for exactly those the
    region is nonempty (a = p' + q' with p' in P, q' in Q puts p' inside it),
    so a region without lattice points is a genuine counterexample.
    """
    _require_lattice_pair(p, q)
    total = minkowski_sum(p, q)
    counterexamples = []
    spot_checks = []
    checked = 0
    for a in lattice_points(total):
        checked += 1
        rows, offs, box = _region_system(p, q, a)
        hit = has_lattice_point(rows, offs, box)
        if hit is None:
            if len(counterexamples) < WITNESS_CAP:
                counterexamples.append(a)
        elif len(spot_checks) < SPOT_CHECK_CAP:
            spot_checks.append((a, hit, tuple(x - y for x, y in zip(a, hit))))
    verdict = not counterexamples
    return IdpReport(
        pair=(polytope_id(p), polytope_id(q)),
        verdict=verdict,
        witnesses=tuple(counterexamples) if not verdict else tuple(spot_checks),
        regions_checked=checked,
        method="regions",
    )


def region_lattice_point(p: Polytope, q: Polytope, a):
    """First lattice point of P ∩ (a + (-Q)), or None (a need not be in P+Q)."""
    rows, offs, box = _region_system(p, q, tuple(a))
    return has_lattice_point(rows, offs, box)


def is_idp(p: Polytope, extra_k: int = 0) -> IdpReport:
    """Check (P, kP) for k = 1 .. max(1, d-2) + extra_k.

    Pairs with k >= d-1 decompose for dimensional reasons and are skipped by
    default; extra_k extends the range past the cutoff as a sanity margin.
    """
    if not p.is_lattice:
        raise ValueError("integer-decomposition checks need lattice polytopes")
    d = p.dim
    k_max = max(1, d - 2) + max(0, extra_k)
    failures = []
    spot = []
    checked = 0
    ks = list(range(1, k_max + 1))
    for k in ks:
        sub = is_idp_pair_regions(p, dilate(p, k))
        checked += sub.regions_checked
        if not sub.verdict:
            failures.extend((k, w) for w in sub.witnesses[:WITNESS_CAP])
        elif len(spot) < SPOT_CHECK_CAP:
            spot.extend((k, w) for w in sub.witnesses[: SPOT_CHECK_CAP - len(spot)])
    verdict = not failures
    return IdpReport(
        pair=(polytope_id(p), polytope_id(p)),
        verdict=verdict,
        witnesses=tuple(failures[:WITNESS_CAP]) if not verdict else tuple(spot),
        regions_checked=checked,
        method="k-range",
        details=(("k_auto_from", d - 1), ("k_checked", tuple(ks))),
    )


def idp_cube_pair(c: CubeStructure, c2: CubeStructure) -> IdpReport:
    """Decomposition check for two Minkowski-equivalent smooth cubes.

    The preconditions are enforced: both inputs must be recognized cubes of
    equal dimension with equal normal fans.  (Smoothness is the caller's
    concern; the acceptance suite runs this on smooth corpora where the
    verdict is asserted True.)
    """
    from .smooth import is_smooth

    p, q = c.polytope, c2.polytope
    if not (is_smooth(p) and is_smooth(q)) or not minkowski_equivalent(p, q):
        raise ValueError("not Minkowski-equivalent smooth cubes")
    return is_idp_pair_regions(p, q)
