"""Command-line surface: generate corpora, check properties, verify claims.

Exit codes are the machine contract: 0 = pass, 1 = property/claim failure,
2 = usage or parse error.  Reports are emitted as one JSON document (or a
text rendering with --format text) and are byte-identical across runs for
identical inputs; LATCUBE_SEED overrides the default seed when --seed is
not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .cubeface import recognize_cube
from .gen import GenParams, gen_smooth_cube, gen_smooth_prism
from .idp import is_idp, is_idp_pair_regions
from .polytope import polytope_id
from .prismatoid import detect_prismatoid
from .reports import jsonable
from .smooth import is_smooth
from .storage import load_manifest, load_polytope, save_manifest, save_polytope
from .verify import CLAIM_TEXT, THEOREM_IDS, verify_theorem

DEFAULT_SEED = 20240801


def _default_seed():
    env = os.environ.get("LATCUBE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise SystemExit(f"error: LATCUBE_SEED must be an integer, got {env!r}") from exc
    return DEFAULT_SEED


def _emit(document: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(jsonable(document), sort_keys=True, indent=1))
    else:
        for line in _text_lines(document):
            print(line)


def _text_lines(document, indent=0):
    pad = "  " * indent
    if isinstance(document, dict):
        for key in sorted(document):
            value = document[key]
            if isinstance(value, (dict, list)):
                yield f"{pad}{key}:"
                yield from _text_lines(value, indent + 1)
            else:
                yield f"{pad}{key}: {jsonable(value)}"
    elif isinstance(document, list):
        for value in document:
            if isinstance(value, (dict, list)):
                yield from _text_lines(value, indent + 1)
            else:
                yield f"{pad}- {jsonable(value)}"


def cmd_generate(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    for i in range(args.count):
        params = GenParams(args.dim, args.coord_bound, args.scramble_rounds, args.seed + i)
        if args.kind == "cube":
            generated = gen_smooth_cube(params)
        else:
            generated = gen_smooth_prism(params, height=2 + i % 2)
        name = f"{args.kind}-d{args.dim}-{i:03d}.json"
        save_polytope(generated.polytope, out / name)
        entries.append(
            {
                "file": name,
                "seed": params.seed,
                "dim": args.dim,
                "kind": args.kind,
                "id": polytope_id(generated.polytope),
                "rejections": generated.rejections,
            }
        )
    manifest_params = GenParams(args.dim, args.coord_bound, args.scramble_rounds, args.seed)
    path = save_manifest(out, manifest_params, entries)
    _emit(
        {
            "command": "generate",
            "count": args.count,
            "manifest": path.name,
            "out": str(out),
            "version": __version__,
        },
        args.format,
    )
    return 0


CHECKS = ("smooth", "cube", "prismatoid", "idp", "idp-pair")


def cmd_check(args) -> int:
    try:
        first = load_polytope(args.files[0])
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    document = {
        "command": "check",
        "property": args.property,
        "file": args.files[0],
        "id": polytope_id(first),
        "version": __version__,
    }
    if args.property == "idp-pair":
        if len(args.files) != 2:
            print("error: idp-pair needs exactly two polytope files", file=sys.stderr)
            return 2
        try:
            second = load_polytope(args.files[1])
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        report = is_idp_pair_regions(first, second)
        document["file2"] = args.files[1]
        document["report"] = report.to_json_dict()
        ok = report.verdict
    elif args.property == "idp":
        report = is_idp(first, extra_k=args.extra_k)
        document["report"] = report.to_json_dict()
        ok = report.verdict
    elif args.property == "smooth":
        verdict = is_smooth(first)
        document["report"] = {
            "smooth": verdict.ok,
            "witness": jsonable(verdict.witness_vertex),
            "reason": verdict.reason,
        }
        ok = verdict.ok
    elif args.property == "cube":
        cube = recognize_cube(first)
        document["report"] = {"cube": cube is not None, "dim": first.dim}
        ok = cube is not None
    else:  # prismatoid
        structure = detect_prismatoid(first)
        document["report"] = {"prismatoid": structure is not None}
        if structure is not None:
            document["report"]["bottom_facet"] = structure.bottom_facet
            document["report"]["top_facet"] = structure.top_facet
        ok = structure is not None
    document["pass"] = ok
    _emit(document, args.format)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    try:
        manifest, corpus = load_manifest(args.corpus)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.theorem not in THEOREM_IDS:
        print(
            f"error: unknown theorem id {args.theorem!r}; known: {', '.join(THEOREM_IDS)}",
            file=sys.stderr,
        )
        return 2
    report = verify_theorem(args.theorem, corpus, extra_k=args.extra_k, jobs=args.jobs)
    document = {
        "command": "verify",
        "claim": CLAIM_TEXT[args.theorem],
        "corpus": {"instances": len(corpus), "params": manifest.get("params", {})},
        "report": report.to_json_dict(),
        "version": __version__,
    }
    _emit(document, args.format)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latcube",
        description="Exact lattice-polytope toolkit: smooth cubes, prismatoid slices, "
        "integer decomposition checks.",
    )
    parser.add_argument("--version", action="version", version=f"latcube {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a corpus of generated instances + manifest")
    g.add_argument("--dim", type=int, default=2, choices=(2, 3, 4))
    g.add_argument("--count", type=int, default=10)
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--coord-bound", type=int, default=6)
    g.add_argument("--scramble-rounds", type=int, default=1)
    g.add_argument("--kind", choices=("cube", "prismatoid"), default="cube")
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=("json", "text"), default="json")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("check", help="check one property of a polytope file")
    c.add_argument("--property", required=True, choices=CHECKS)
    c.add_argument("--extra-k", type=int, default=0)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("files", nargs="+")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="verify a claim over a corpus manifest")
    v.add_argument("theorem", metavar="THEOREM_ID")
    v.add_argument("--corpus", required=True)
    v.add_argument("--extra-k", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return 2 if exc.code not in (0,) else 0
    if getattr(args, "seed", None) is None and args.command == "generate":
        args.seed = _default_seed()
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
