"""The catalog of verifiable claims and their corpus runners.

Each claim id names one checkable statement about smooth cubes/prismatoids
(parallel facet pairs, slice integrality, decomposition properties, checker
agreement, facet-parallel separation).  Running a claim builds a
deterministic list of work units from the corpus — one per applicable
instance, or one per constructed pair — and checks them, yielding a
TheoremReport whose failures list is empty exactly when the claim held
everywhere it applied.

Pair-based claims derive their pairs from the corpus: self-pairs for every
instance, plus dilates, translates and fan-preserving offset variants on a
fixed subsample (seeded by instance position), plus the non-decomposing
simplex controls for 3-dimensional corpora of the checker-agreement claim.
Units are built once up front, so `jobs > 1` only distributes the checking
and the merged report is byte-identical to a sequential run.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from .cubeface import parallel_facet_pair, recognize_cube, verify_parallel_propositions
from .gen import fan_preserving_variant, reeve_simplex
from .idp import is_idp, is_idp_pair_bruteforce, is_idp_pair_regions
from .polytope import (
    Polytope,
    dilate,
    negate,
    separating_facet_hyperplane,
    translate,
)
from .prismatoid import detect_prismatoid, idp_via_slices, verify_slice_lemmas
from .reports import TheoremReport
from .smooth import is_smooth

THEOREM_IDS = (
    "T3.5",
    "T3.8",
    "C3.2",
    "C3.4",
    "L4.2",
    "L4.3",
    "T4.4",
    "L4.5",
    "T4.6",
    "T4.7",
    "C4.8",
    "P2.2-equiv",
    "L2.4",
)

CLAIM_TEXT = {
    "T3.5": "every smooth 2-dimensional combinatorial cube has two parallel facets",
    "T3.8": "every smooth combinatorial cube (d >= 2) has two parallel facets",
    "C3.2": "two flipped parallel pairs inside two facets force the remaining opposite pair parallel",
    "C3.4": "if three of the four faces fixing two axes are parallel, so is the fourth",
    "L4.2": "top and bottom of a prismatoid have equal normal fans",
    "L4.3": "slices of a smooth prismatoid are integral, full-rank, and fan-equal to the bottom",
    "T4.4": "fan-equal lattice polygons decompose integrally as a pair",
    "L4.5": "slice-wise decomposition agrees with the direct pair check",
    "T4.6": "fan-equal smooth 3-dimensional prismatoids decompose integrally as a pair",
    "T4.7": "fan-equal smooth cubes decompose integrally as a pair",
    "C4.8": "smooth combinatorial cubes decompose integrally (all dilation pairs)",
    "P2.2-equiv": "region checker and brute-force checker agree on every pair",
    "L2.4": "disjoint fan-mirrored polytopes admit a facet-parallel separating hyperplane",
}


def _smooth_cube(p: Polytope):
    cube = recognize_cube(p)
    if cube is None or not is_smooth(p):
        return None
    return cube


# -- pair suites ---------------------------------------------------------------


def standard_pairs(corpus, with_controls=True):
    """Deterministic pair suite: self, dilate, translate, fan variants, controls."""
    pairs = []
    for idx, (name, p) in enumerate(corpus):
        pairs.append((f"{name}|self", p, p))
        if idx % 3 == 0:
            pairs.append((f"{name}|dilate2", p, dilate(p, 2)))
        if idx % 3 == 1:
            pairs.append((f"{name}|translate", p, translate(p, tuple(1 + i for i in range(p.dim)))))
        if idx % 6 == 2 and is_smooth(p):
            pairs.append((f"{name}|variant", p, fan_preserving_variant(p, seed=idx * 7919)))
    if with_controls and any(p.dim == 3 for _, p in corpus):
        for q in (1, 2, 3):
            r = reeve_simplex(q)
            pairs.append((f"reeve-q{q}|self", r, r))
    return pairs


def equivalent_pairs(corpus):
    """Fan-equal smooth pairs: (P, 2P) always, variant/translate alternating."""
    pairs = []
    for idx, (name, p) in enumerate(corpus):
        if not is_smooth(p):
            continue
        pairs.append((f"{name}|dilate2", p, dilate(p, 2)))
        if idx % 2 == 0:
            pairs.append((f"{name}|variant", p, fan_preserving_variant(p, seed=idx * 104729)))
        else:
            pairs.append(
                (f"{name}|translate", p, translate(p, tuple((-1) ** i for i in range(p.dim))))
            )
    return pairs


# -- work units ----------------------------------------------------------------


def build_units(theorem_id: str, corpus, extra_k: int = 0):
    """(unit name, payload) list for one claim over a corpus; deterministic."""
    units = []
    if theorem_id in ("T3.5", "T3.8"):
        want_dim = 2 if theorem_id == "T3.5" else None
        for name, p in corpus:
            if want_dim is not None and p.dim != want_dim:
                continue
            if _smooth_cube(p) is not None:
                units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id in ("C3.2", "C3.4"):
        for name, p in corpus:
            if p.dim >= 3 and _smooth_cube(p) is not None:
                units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id == "L4.2":
        for name, p in corpus:
            if detect_prismatoid(p) is not None:
                units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id == "L4.3":
        for name, p in corpus:
            if is_smooth(p) and detect_prismatoid(p) is not None:
                units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id == "C4.8":
        for name, p in corpus:
            if _smooth_cube(p) is not None:
                units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id == "L2.4":
        for name, p in corpus:
            units.append((name, (theorem_id, p, extra_k)))
    elif theorem_id == "P2.2-equiv":
        for pair_name, p, q in standard_pairs(corpus):
            units.append((pair_name, (theorem_id, (p, q), extra_k)))
    elif theorem_id == "T4.4":
        polygons = [(n, p) for n, p in corpus if p.dim == 2]
        for pair_name, p, q in equivalent_pairs(polygons):
            units.append((pair_name, (theorem_id, (p, q), extra_k)))
    elif theorem_id in ("L4.5", "T4.6"):
        applicable = [
            (n, p)
            for n, p in corpus
            if p.dim == 3 and is_smooth(p) and detect_prismatoid(p) is not None
        ]
        for pair_name, p, q in equivalent_pairs(applicable):
            units.append((pair_name, (theorem_id, (p, q), extra_k)))
    elif theorem_id == "T4.7":
        cubes = [(n, p) for n, p in corpus if _smooth_cube(p) is not None]
        for pair_name, p, q in equivalent_pairs(cubes):
            units.append((pair_name, (theorem_id, (p, q), extra_k)))
    else:
        raise KeyError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    return units


def check_unit(payload):
    """(ok, witness) for one work unit; top-level so process pools can run it."""
    theorem_id, subject, extra_k = payload
    if theorem_id in ("T3.5", "T3.8"):
        cube = _smooth_cube(subject)
        axis = parallel_facet_pair(cube)
        return axis is not None, None if axis is not None else "no parallel facet pair"
    if theorem_id in ("C3.2", "C3.4"):
        cube = _smooth_cube(subject)
        rep = verify_parallel_propositions(cube)[theorem_id]
        return rep.ok, [inst for inst, _ in rep.failures] or None
    if theorem_id == "L4.2":
        report = verify_slice_lemmas(subject)
        entry = next(e for e in report.entries if e.name == "top-and-bottom-minkowski-equivalent")
        return entry.ok, entry.witness
    if theorem_id == "L4.3":
        report = verify_slice_lemmas(subject)
        bad = report.failing()
        return not bad, [e.name for e in bad] or None
    if theorem_id == "C4.8":
        report = is_idp(subject, extra_k=extra_k)
        return report.verdict, None if report.verdict else list(report.witnesses)
    if theorem_id == "L2.4":
        box = subject.bounding_box()
        extent = max(abs(v) for lo, hi in box for v in (lo, hi))
        shift = tuple(2 * extent + 3 for _ in range(subject.dim))
        mirrored = translate(negate(subject), shift)
        cert = separating_facet_hyperplane(subject, mirrored)  # raises on violation
        return cert.max_on_p < cert.min_on_q, None
    if theorem_id == "P2.2-equiv":
        p, q = subject
        a = is_idp_pair_regions(p, q)
        b = is_idp_pair_bruteforce(p, q)
        ok = a.verdict == b.verdict
        return ok, None if ok else {"regions": a.verdict, "bruteforce": b.verdict}
    if theorem_id in ("T4.4", "T4.7"):
        p, q = subject
        report = is_idp_pair_regions(p, q)
        return report.verdict, None if report.verdict else list(report.witnesses)
    if theorem_id in ("L4.5", "T4.6"):
        p, q = subject
        report = idp_via_slices(p, q)
        agrees = dict(report.details)["direct_agrees"]
        if theorem_id == "L4.5":
            return agrees, None if agrees else dict(report.details)
        ok = report.verdict and agrees
        return ok, None if ok else list(report.witnesses)
    raise KeyError(f"unknown theorem id {theorem_id!r}")


def verify_theorem(theorem_id: str, corpus, extra_k: int = 0, jobs: int = 1) -> TheoremReport:
    """Run one claim on a named corpus (list of (name, Polytope) pairs).

    jobs > 1 distributes units over processes; units are built up front and
    results merged in unit order, so the report matches a sequential run.
    """
    units = build_units(theorem_id, corpus, extra_k=extra_k)
    if jobs <= 1 or len(units) < 2:
        results = [check_unit(payload) for _, payload in units]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_unit, [payload for _, payload in units]))
    failures = tuple(
        (name, witness) for (name, _), (ok, witness) in zip(units, results) if not ok
    )
    return TheoremReport(theorem_id, len(units), len(units) - len(failures), failures)
