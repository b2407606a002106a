"""Command-line interface.

Subcommands::

    dinterp fixture  --kind fig1 --output DIR
    dinterp interp1d --samples S.csv --domain D1.csv D2.csv --domain-res 100
    dinterp interp2d --samples S.txt --domain GM.txt WM.txt CSF.txt --domain-res 3
    dinterp kernels  --fixture-dir DIR
    dinterp verify   --fixture fig1

Exit status is 0 on success, 1 when a verification check fails and 2 on
malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import fixtures, io
from .core import interpolate, kernel_trace, refined_positions
from .errors import DomainInterpError, MalformedInput
from .interp2d import dibli
from .similarity import KernelConfig, discriminant_at, flat_zero_at, pair_at, xi_at
from .verify import run_all

METHOD_1D = {"standard": "sli", "domain-informed": "dili"}
METHOD_2D = {"standard": "sbli", "domain-informed": "dibli"}
PASS_ORDER = {"xy": "x_then_y", "yx": "y_then_x"}


def _config(args) -> KernelConfig:
    return KernelConfig(gamma=args.gamma, weight_mode=args.weight, zero_tol=args.tol_zero,
                        flat_radius=args.flat_radius)


def _kernel_flags(p):
    p.add_argument("--gamma", type=float, default=20.0, help="logistic steepness")
    p.add_argument("--weight", choices=("adaptive", "uniform"), default="adaptive")
    p.add_argument("--method", choices=tuple(METHOD_1D), default="domain-informed")
    p.add_argument("--tol-zero", type=float, default=1e-9,
                   help="threshold below which the discriminant counts as zero")
    p.add_argument("--flat-radius", type=float, default=0.25)
    p.add_argument("--output", "-o", default=None, help="output path (default: stdout)")


def _input_flags(p, fixture_dir=True):
    p.add_argument("--samples", help="sample file")
    p.add_argument("--domain", nargs="+", help="one map file per subdomain")
    p.add_argument("--domain-res", type=int, help="domain grid nodes per sample spacing (R)")
    if fixture_dir:
        p.add_argument("--fixture-dir", help="directory written by the fixture subcommand")


def _resolve_inputs(args):
    """(samples path, domain paths, R) from explicit flags or a fixture manifest."""
    if getattr(args, "fixture_dir", None):
        d = Path(args.fixture_dir)
        m = io.read_manifest(d / "manifest.txt")
        try:
            samples = d / m["samples"]
            domains = [d / name for name in m["domains"].split(",")]
            res = int(m["refinement"])
        except (KeyError, ValueError) as exc:
            raise MalformedInput(f"{d / 'manifest.txt'}: missing or bad entry {exc}") from None
        return samples, domains, args.domain_res or res
    if not (args.samples and args.domain and args.domain_res):
        raise MalformedInput("need --samples, --domain and --domain-res (or --fixture-dir)")
    return Path(args.samples), [Path(p) for p in args.domain], args.domain_res


def _load_1d(args):
    s_path, d_paths, res = _resolve_inputs(args)
    samples = io.read_samples_csv(s_path)
    field = io.load_domain_1d(d_paths, res, num_samples=samples.size)
    return samples, field


def cmd_fixture(args):
    path = fixtures.generate_fixture(args.kind, args.seed, args.output or ".")
    print(path)
    return 0


def cmd_interp1d(args):
    samples, field = _load_1d(args)
    cfg = _config(args)
    pos = refined_positions(samples.size, args.factor)
    res = interpolate(samples, field, pos, cfg, METHOD_1D[args.method])
    header, cols = ["x", "value"], [res.positions, res.values]
    if args.emit_diagnostics:
        _, rl, rr, _ = pair_at(field, pos, cfg)
        header += ["rho_left", "rho_right", "discriminant", "flat_zero"]
        cols += [rl, rr, discriminant_at(field, pos, cfg), flat_zero_at(field, pos, cfg)]
    io.write_csv(args.output, header, cols)
    return 0


def cmd_kernels(args):
    samples, field = _load_1d(args)
    cfg = _config(args)
    n = samples.size
    pos = refined_positions(n, args.factor)
    method = METHOD_1D[args.method]
    header, cols = ["x"], [pos]
    for k in range(n):
        header.append(f"phi_{k}")
        cols.append(kernel_trace(field, k, pos, cfg, method))
    for k in range(n):
        header.append(f"xi_{k}")
        cols.append(xi_at(field, np.full(pos.shape, k), pos, cfg))
    _, rl, rr, _ = pair_at(field, pos, cfg)
    integer = pos == np.floor(pos)
    header += ["rho_left", "rho_right", "discriminant", "flat_zero"]
    cols += [np.where(integer, np.nan, rl), np.where(integer, np.nan, rr),
             discriminant_at(field, pos, cfg), flat_zero_at(field, pos, cfg)]
    io.write_csv(args.output, header, cols)
    return 0


def cmd_interp2d(args):
    s_path, d_paths, res = _resolve_inputs(args)
    samples = io.read_image(s_path)
    field2d = io.load_domain_2d(d_paths, res, shape=samples.shape)
    factor = args.factor or res
    out = dibli(samples, field2d, factor, _config(args), METHOD_2D[args.method],
                PASS_ORDER[args.pass_order])
    io.write_matrix(args.output, out)
    if args.display:
        io.write_pgm(args.display, out, maxval=255)
    return 0


def cmd_verify(args):
    if args.fixture:
        fx = fixtures.make_fixture(args.fixture, args.seed)
        samples, field = fx.samples, fx.field
    else:
        samples, field = _load_1d(args)
    report = run_all(samples, field, _config(args), args.probes, args.dicp_probes,
                     METHOD_1D[args.method])
    io._write_text(args.output, io.format_report(report))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dinterp",
                                     description="Domain-informed linear and bilinear interpolation.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixture", help="write a synthetic scene")
    p.add_argument("--kind", choices=fixtures.KINDS, default="fig1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None, help="output directory")
    p.set_defaults(func=cmd_fixture)

    p = sub.add_parser("interp1d", help="interpolate a 1D sample sequence")
    _input_flags(p)
    _kernel_flags(p)
    p.add_argument("--factor", type=int, default=10, help="output positions per sample spacing")
    p.add_argument("--emit-diagnostics", action="store_true")
    p.set_defaults(func=cmd_interp1d)

    p = sub.add_parser("kernels", help="per-sample kernel traces and similarity diagnostics")
    _input_flags(p)
    _kernel_flags(p)
    p.add_argument("--factor", type=int, default=20)
    p.add_argument("--emit-diagnostics", action="store_true", help="accepted for symmetry")
    p.set_defaults(func=cmd_kernels)

    p = sub.add_parser("interp2d", help="upsample an image")
    _input_flags(p)
    _kernel_flags(p)
    p.add_argument("--factor", type=int, default=None, help="output refinement (default: R)")
    p.add_argument("--pass-order", choices=tuple(PASS_ORDER), default="xy")
    p.add_argument("--display", help="also write an 8-bit PGM preview here")
    p.add_argument("--emit-diagnostics", action="store_true", help="accepted for symmetry")
    p.set_defaults(func=cmd_interp2d)

    p = sub.add_parser("verify", help="run the property checks")
    _input_flags(p)
    _kernel_flags(p)
    p.add_argument("--fixture", choices=("fig1", "homogeneous"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--probes", type=int, default=10_000)
    p.add_argument("--dicp-probes", type=int, default=1_000)
    p.add_argument("--emit-diagnostics", action="store_true", help="accepted for symmetry")
    p.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainInterpError, ValueError) as exc:
        print(f"dinterp {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())
