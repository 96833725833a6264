"""Command line front end: generate, verify, batch, lemma, draw.

Exit codes follow the certificate logic: 0 for a verified positive outcome,
2 for an outcome that demands attention (unresolved search, falsified
lemma, refused drawing), 1 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .convex import (FullPattern, NotSeparable, merge_bodies,
                     separate_bodies, separation_pattern)
from .lemma import (ConeDisjoint, PencilInstance, verify_basic_lemma,
                    verify_pencil_lemma)
from .pipeline import (GenSpec, GenerationExhausted, Unresolved,
                       diagnostic_chain, random_config, verify_theorem)
from .render import sphere_svg
from .serialize import (config_from_json, config_to_json, dumps,
                        lemma_instance_from_json, lemma_verdict_to_json,
                        theorem_cert_to_json, trace_to_json,
                        unresolved_to_json)
from .sphere import (CrossingWitness, DegenerateDrawing, build_drawing,
                     find_crossing)


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _cmd_gen(args) -> int:
    policy = "keep-flagged" if args.keep_degenerate else "reject"
    try:
        cfg = random_config(GenSpec(args.seed, args.bound, policy))
    except (GenerationExhausted, ValueError) as exc:
        print(f"gen: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(dumps(config_to_json(cfg)))
    return 0


def _cmd_verify(args) -> int:
    cfg = config_from_json(_load_json(args.config))
    res = verify_theorem(cfg)
    if isinstance(res, Unresolved):
        sys.stdout.write(dumps(unresolved_to_json(res)))
        return 2
    payload = theorem_cert_to_json(res)
    if args.trace:
        payload["trace"] = trace_to_json(diagnostic_chain(cfg))
    sys.stdout.write(dumps(payload))
    return 0


def _cmd_batch(args) -> int:
    out_dir = Path(args.out) if args.out else None
    if out_dir is not None:
        out_dir.mkdir(parents=True, exist_ok=True)
    tally = {"red": 0, "blue": 0, "both": 0, "unresolved": 0}
    for k in range(args.n):
        seed = args.seed + k
        try:
            cfg = random_config(GenSpec(seed, args.bound))
        except GenerationExhausted as exc:
            print(f"batch: seed {seed}: {exc}", file=sys.stderr)
            return 1
        res = verify_theorem(cfg)
        if isinstance(res, Unresolved):
            tally["unresolved"] += 1
            payload = unresolved_to_json(res)
        else:
            kind = {"Both": "both", "RedTransversal": "red",
                    "BlueTransversal": "blue"}[type(res.verdict).__name__]
            tally[kind] += 1
            payload = theorem_cert_to_json(res)
        if out_dir is not None:
            (out_dir / f"cert-{seed}.json").write_text(dumps(payload))
    sys.stdout.write(dumps(tally))
    return 0 if tally["unresolved"] == 0 else 2


def _cmd_lemma(args) -> int:
    try:
        inst = lemma_instance_from_json(_load_json(args.instance))
    except (ValueError, KeyError, TypeError) as exc:
        print(f"lemma: unusable instance: {exc}", file=sys.stderr)
        return 1
    if isinstance(inst, PencilInstance):
        res = verify_pencil_lemma(inst)
    else:
        res = verify_basic_lemma(inst)
    sys.stdout.write(dumps(lemma_verdict_to_json(res)))
    return 0 if isinstance(res, ConeDisjoint) else 2


def _available_normals(bodies, pattern):
    """Per-body separation normals, as many as individually exist."""
    if isinstance(pattern, FullPattern):
        return [c.half.normal for c in pattern.certs]
    rays = []
    for i, body in enumerate(bodies):
        rest = [b for j, b in enumerate(bodies) if j != i]
        res = separate_bodies(body, merge_bodies(*rest))
        if not isinstance(res, NotSeparable):
            rays.append(res.half.normal)
    return rays


def _cmd_draw(args) -> int:
    cfg = config_from_json(_load_json(args.config))
    red_pattern = separation_pattern(cfg.reds())
    blue_pattern = separation_pattern(cfg.blues())
    full = isinstance(red_pattern, FullPattern) \
        and isinstance(blue_pattern, FullPattern)
    if full:
        try:
            drawing = build_drawing(blue_pattern.certs, red_pattern.certs)
            crossing = find_crossing(drawing)
            highlight = crossing if isinstance(crossing, CrossingWitness) \
                else None
            svg = sphere_svg(drawing.blue, drawing.red, highlight)
        except DegenerateDrawing:
            svg = sphere_svg([c.half.normal for c in blue_pattern.certs],
                             [c.half.normal for c in red_pattern.certs])
    elif not args.force:
        print("draw: separation patterns do not both hold (a transversal "
              "exists); pass --force for a best-effort render",
              file=sys.stderr)
        return 2
    else:
        svg = sphere_svg(_available_normals(cfg.blues(), blue_pattern),
                         _available_normals(cfg.reds(), red_pattern))
    Path(args.svg).write_text(svg)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="tristab",
        description="Exact certificates for line transversals to 3+3 "
                    "colored triangles.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a seeded random configuration")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--bound", type=int, required=True,
                     help="coordinates are uniform integers in [-M, M]")
    gen.add_argument("--keep-degenerate", action="store_true",
                     help="return the first draw even if flagged")

    ver = sub.add_parser("verify", help="certify a transversal for a "
                                        "configuration file")
    ver.add_argument("config")
    ver.add_argument("--trace", action="store_true",
                     help="attach the diagnostic chain to the output")

    bat = sub.add_parser("batch", help="generate and verify many seeds")
    bat.add_argument("--n", type=int, required=True)
    bat.add_argument("--seed", type=int, required=True,
                     help="first seed; configs use seed, seed+1, ...")
    bat.add_argument("--bound", type=int, required=True)
    bat.add_argument("--out", help="directory for per-config certificates")

    lem = sub.add_parser("lemma", help="verify a membership instance file "
                                       "(basic or pencil, by shape)")
    lem.add_argument("instance")

    drw = sub.add_parser("draw", help="render the separation-normal "
                                      "drawing as SVG")
    drw.add_argument("config")
    drw.add_argument("--svg", required=True)
    drw.add_argument("--force", action="store_true",
                     help="render whatever normals exist even when the "
                          "patterns do not both hold")

    args = parser.parse_args(argv)
    return {"gen": _cmd_gen, "verify": _cmd_verify, "batch": _cmd_batch,
            "lemma": _cmd_lemma, "draw": _cmd_draw}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
