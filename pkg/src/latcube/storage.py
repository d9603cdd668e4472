"""Polytope and corpus-manifest files.

A polytope file is a JSON object {"dim": d, "vertices": [[...], ...]} with
integer entries, or "p/q" strings for rational coordinates.  A corpus
manifest lists relative file names plus the generator parameters of each
instance, so reports stay byte-identical wherever the corpus directory
lives.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .gen import GenParams
from .polytope import Polytope
from .reports import jsonable

MANIFEST_NAME = "manifest.json"


def _coord_to_json(c):
    if isinstance(c, int):
        return c
    return f"{c.numerator}/{c.denominator}"


def _coord_from_json(c):
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        num, _, den = c.partition("/")
        return Fraction(int(num), int(den or "1"))
    raise ValueError(f"bad coordinate {c!r}: expected int or 'p/q' string")


def polytope_to_json_dict(p: Polytope) -> dict:
    if p.embedding is not None:
        raise ValueError("only full-dimensional polytopes are written to files")
    return {
        "dim": p.dim,
        "vertices": [[_coord_to_json(c) for c in v] for v in p.vertices],
    }


def polytope_from_json_dict(data) -> Polytope:
    if not isinstance(data, dict) or "dim" not in data or "vertices" not in data:
        raise ValueError("polytope file needs 'dim' and 'vertices' fields")
    dim = data["dim"]
    vertices = [tuple(_coord_from_json(c) for c in v) for v in data["vertices"]]
    if not isinstance(dim, int) or any(len(v) != dim for v in vertices):
        raise ValueError(f"vertices do not match dim={dim}")
    return Polytope.from_vertices(vertices)


def save_polytope(p: Polytope, path) -> None:
    Path(path).write_text(json.dumps(polytope_to_json_dict(p), sort_keys=True) + "\n")


def load_polytope(path) -> Polytope:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {path}: {exc}") from exc
    return polytope_from_json_dict(data)


def save_manifest(out_dir, params: GenParams, entries) -> Path:
    """entries: list of {"file": relative name, "seed": int, ...} dicts."""
    manifest = {
        "schema": "latcube-corpus-v1",
        "params": {
            "dim": params.dim,
            "coord_bound": params.coord_bound,
            "scramble_rounds": params.scramble_rounds,
            "seed": params.seed,
        },
        "instances": entries,
    }
    path = Path(out_dir) / MANIFEST_NAME
    path.write_text(json.dumps(jsonable(manifest), sort_keys=True, indent=1) + "\n")
    return path


def load_manifest(path):
    """Returns (manifest dict, list of (name, Polytope)) sorted by file name."""
    path = Path(path)
    if path.is_dir():
        path = path / MANIFEST_NAME
    try:
        manifest = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {path}: {exc}") from exc
    if manifest.get("schema") != "latcube-corpus-v1":
        raise ValueError(f"unrecognized corpus schema in {path}")
    base = path.parent
    instances = []
    for entry in sorted(manifest.get("instances", []), key=lambda e: e["file"]):
        instances.append((entry["file"], load_polytope(base / entry["file"])))
    return manifest, instances
