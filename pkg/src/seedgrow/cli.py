"""Command line: ``seedgrow {segment,oracle,check,diff,invariance}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .formats import (
    CODE_BOUNDARY,
    FormatError,
    TraceRecorder,
    encode_labels,
    read_labels,
    read_mask_2d,
    read_mask_3d,
    read_seeds,
    write_labels,
    write_trace_frames,
)
from .grid import standard_neighborhood, reachable
from .growers import MODES, run_with_order
from .oracle import canonical_relabel, influence_zones, ambiguous_set, is_simple_partition, is_v_boundary_partition
from .rng import XorShift64Star


def load_image(path: str):
    """PGM for 2D; a JSON header (``.json``) with a raw body for 3D.

    The 3D body is the header's ``"body"`` entry, resolved next to the header,
    or the header path with suffix ``.raw``.
    """
    p = Path(path)
    if p.suffix.lower() == ".json":
        header = p.read_bytes()
        try:
            body_name = json.loads(header).get("body")
        except (ValueError, AttributeError):
            body_name = None
        body = p.with_name(body_name) if body_name else p.with_suffix(".raw")
        return read_mask_3d(header, body.read_bytes())
    return read_mask_2d(p.read_bytes())


def _neighborhood(domain, kind: int):
    return standard_neighborhood(domain.ndim, kind)


def _parse_order(text: str, n: int) -> list:
    try:
        order = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise FormatError(f"--order expects comma-separated integers, got {text!r}") from None
    if sorted(order) != list(range(n)):
        raise FormatError(f"--order {text!r} is not a permutation of 0..{n - 1}")
    return order


def _report_for(result, domain, V, partition: str):
    seeds_pts = [p for label in result.seed_ids for p in result.labelmap.points(label)]
    universe = reachable(domain, seeds_pts, V)
    blocks = [result.labelmap.points(label) for label in sorted(result.seed_ids)]
    boundary = result.boundary()
    if partition == "vboundary":
        return is_v_boundary_partition(blocks, boundary, V, universe)
    return is_simple_partition(blocks + ([boundary] if result.boundary_label is not None else []), universe)


def cmd_segment(args) -> int:
    domain = load_image(args.image)
    seeds = read_seeds(Path(args.seeds).read_bytes(), domain)
    V = _neighborhood(domain, args.neighborhood)
    if args.order is not None:
        order = _parse_order(args.order, len(seeds))
    elif args.shuffle is not None:
        order = XorShift64Star(args.shuffle).permutation(len(seeds))
    else:
        order = list(range(len(seeds)))
    trace = TraceRecorder() if args.trace else None
    result = run_with_order(args.mode, domain, seeds, V, order, trace=trace)
    Path(args.output).write_bytes(write_labels(result))
    if trace is not None:
        out = Path(args.trace)
        out.mkdir(parents=True, exist_ok=True)
        ext = ".pgm" if domain.ndim == 2 else ".lbl"
        for n, frame in enumerate(write_trace_frames(trace, result, args.trace_every), 1):
            (out / f"frame_{n:05d}{ext}").write_bytes(frame)
    s = result.stats
    print(f"{args.mode}: {s.growths} growths, {s.pops} pops, {s.skips} stale, {s.boundary_growths} boundary")
    if args.check:
        report = _report_for(result, domain, V, "vboundary" if args.mode == "vboundary" else "simple")
        print(report)
        return 0 if report.verdict else 1
    return 0


def cmd_oracle(args) -> int:
    domain = load_image(args.image)
    seeds = read_seeds(Path(args.seeds).read_bytes(), domain)
    V = _neighborhood(domain, args.neighborhood)
    codes = np.zeros(domain.dims, dtype=np.int64)
    legend = {0: "UNLABELED", CODE_BOUNDARY: "BOUNDARY"}
    for n, ((sid, _), zone) in enumerate(zip(seeds, influence_zones(domain, seeds, V))):
        legend[n + 2] = sid
        for p in zone:
            codes[p] = n + 2
    for p in ambiguous_set(domain, seeds, V):
        codes[p] = CODE_BOUNDARY
    Path(args.output).write_bytes(encode_labels(codes, legend))
    return 0


def cmd_check(args) -> int:
    labels = read_labels(Path(args.labels).read_bytes())
    domain = load_image(args.image)
    if labels.dims != domain.dims:
        raise FormatError(f"label dims {labels.dims} differ from image dims {domain.dims}")
    V = _neighborhood(domain, args.neighborhood)
    labeled = np.argwhere(labels.codes != 0)
    outside = [tuple(p) for p in labeled.tolist() if not domain.mask[tuple(p)]]
    if outside:
        raise FormatError(f"{len(outside)} labeled point(s) lie outside the image domain, e.g. {outside[0]}")
    universe = reachable(domain, map(tuple, labeled.tolist()), V)
    blocks = [labels.points(c) for c in labels.seed_codes()]
    boundary = labels.points(CODE_BOUNDARY)
    if args.partition == "vboundary":
        report = is_v_boundary_partition(blocks, boundary, V, universe)
    else:
        report = is_simple_partition(blocks + ([boundary] if boundary else []), universe)
    print(report)
    return 0 if report.verdict else 1


def cmd_diff(args) -> int:
    a = read_labels(Path(args.a).read_bytes())
    b = read_labels(Path(args.b).read_bytes())
    if a.dims != b.dims:
        raise FormatError(f"label maps have different dims {a.dims} vs {b.dims}")
    differ = np.argwhere(a.names() != b.names())
    print(f"{len(differ)} differing points")
    for p in differ.tolist():
        print(" ".join(map(str, p)))
    return 0 if len(differ) == 0 else 1


def cmd_invariance(args) -> int:
    domain = load_image(args.image)
    seeds = read_seeds(Path(args.seeds).read_bytes(), domain)
    V = _neighborhood(domain, args.neighborhood)
    rng = XorShift64Star(args.rng_seed)
    ref = canonical_relabel(run_with_order("ambiguous", domain, seeds, V, range(len(seeds))))
    failures = 0
    for n in range(args.orders):
        order = rng.permutation(len(seeds))
        got = canonical_relabel(run_with_order("ambiguous", domain, seeds, V, order))
        d = ref.diff(got)
        status = "identical" if not d else f"{len(d)} differing points"
        print(f"order {','.join(map(str, order))}: {status}")
        failures += bool(d)
    print(f"{args.orders - failures}/{args.orders} orders identical to the identity order")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="seedgrow", description="Seeded region growing on binary masks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, seeds=True):
        p.add_argument("--image", required=True, help="PGM (2D) or JSON header (3D)")
        if seeds:
            p.add_argument("--seeds", required=True, help="seed list (JSON)")
        p.add_argument("--neighborhood", type=int, required=True, choices=(4, 8, 6, 26))

    p = sub.add_parser("segment", help="grow regions from seeds")
    p.add_argument("--mode", required=True, choices=MODES)
    common(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--order", help="seed initialisation order, e.g. 2,0,1")
    g.add_argument("--shuffle", type=int, metavar="SEED", help="random order from an xorshift64* seed")
    p.add_argument("--trace", metavar="DIR", help="write label frames during growth")
    p.add_argument("--trace-every", type=int, default=1, metavar="N")
    p.add_argument("--check", action="store_true", help="validate the partition axioms")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("oracle", help="influence zones and ambiguous points by BFS")
    common(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="validate a label file")
    p.add_argument("--labels", required=True)
    common(p, seeds=False)
    p.add_argument("--partition", required=True, choices=("simple", "vboundary"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("diff", help="compare two label files by seed identity")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("invariance", help="run the ambiguous grower under random seed orders")
    common(p)
    p.add_argument("--orders", type=int, default=10)
    p.add_argument("--rng-seed", type=int, default=0)
    p.set_defaults(func=cmd_invariance)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "trace_every", 1) < 1:
        parser.print_usage(sys.stderr)
        print("seedgrow: error: --trace-every must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"seedgrow: error: {exc}", file=sys.stderr)
        return 2


cli_run = main

if __name__ == "__main__":
    sys.exit(main())
