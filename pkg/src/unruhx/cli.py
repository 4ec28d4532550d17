"""Command-line surface: evolve, sweep, boundary, verify.

Settings come from flags, optionally layered over a flat JSON config file
(flags override the file).  Exit codes: 0 success, 2 validation failure,
3 I/O failure.  Identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .analytic import audit
from .entanglement import concurrence, concurrence_x, is_x_type, ppt_test
from .model import (
    ChannelSpec,
    XParams,
    apply_unruh,
    evolve_total,
    r_from_acceleration,
    reduce,
    x_state,
)
from .sweep import (
    CSV_NAMES,
    PARTITION_LABELS,
    BoundaryQuery,
    GridSpec,
    SweepConfig,
    find_boundary,
    normalize_partition,
    preset_params,
    run_sweep,
    write_csv,
)

__all__ = ["main", "entry"]

CONFIG_KEYS = {
    "c",
    "channel",
    "p",
    "p_a",
    "p_r",
    "r",
    "omega",
    "a",
    "c_light",
    "r_grid",
    "p_grid",
    "partitions",
    "allow_nonphysical",
    "out",
}


class CliError(ValueError):
    pass


def _parse_angle(text) -> float:
    if isinstance(text, (int, float)):
        return float(text)
    s = str(text).strip()
    if s == "pi/4":
        return math.pi / 4
    try:
        return float(s)
    except ValueError:
        raise CliError(f"cannot parse angle {text!r} (radians or 'pi/4')") from None


def _load_config(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            cfg = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CliError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise CliError(f"config file {path} must hold a JSON object")
    unknown = sorted(set(cfg) - CONFIG_KEYS)
    if unknown:
        raise CliError(f"unknown config keys: {', '.join(unknown)}")
    return cfg


def _resolve_params(cfg: dict, args) -> XParams:
    flags = [args.c1, args.c2, args.c3]
    have_flags = any(v is not None for v in flags)
    if args.preset is not None:
        if have_flags:
            raise CliError("--preset conflicts with explicit --c1/--c2/--c3")
        return preset_params(args.preset)
    if have_flags:
        if not all(v is not None for v in flags):
            raise CliError("all of --c1, --c2, --c3 are required together")
        return XParams(*[float(v) for v in flags])
    if "c" in cfg:
        c = cfg["c"]
        if not (isinstance(c, list) and len(c) == 3):
            raise CliError("config key 'c' must be an array of 3 numbers")
        return XParams(*[float(v) for v in c])
    raise CliError("no initial state given (--preset, --c1/--c2/--c3, or config 'c')")


def _resolve_r(cfg: dict, args) -> float:
    if args.r is not None:
        return _parse_angle(args.r)
    accel = (args.omega, args.a, args.c_light)
    if any(v is not None for v in accel):
        omega = args.omega if args.omega is not None else cfg.get("omega")
        a = args.a if args.a is not None else cfg.get("a")
        c_light = args.c_light if args.c_light is not None else cfg.get("c_light", 1.0)
        if omega is None or a is None:
            raise CliError("--omega and --a are required together")
        return r_from_acceleration(float(omega), float(a), float(c_light)).r
    if "r" in cfg:
        return _parse_angle(cfg["r"])
    if "omega" in cfg and "a" in cfg:
        return r_from_acceleration(
            float(cfg["omega"]), float(cfg["a"]), float(cfg.get("c_light", 1.0))
        ).r
    raise CliError("no acceleration given (--r, --omega/--a, or config 'r')")


def _resolve_probs(cfg: dict, args) -> tuple:
    p_a = args.p_a if args.p_a is not None else cfg.get("p_a")
    p_r = args.p_r if args.p_r is not None else cfg.get("p_r")
    p = args.p if args.p is not None else cfg.get("p")
    if p is not None and (p_a is not None or p_r is not None):
        raise CliError("give either p or the pair p_a/p_r, not both")
    if p is not None:
        return float(p), float(p)
    if p_a is not None or p_r is not None:
        if p_a is None or p_r is None:
            raise CliError("p_a and p_r are required together")
        return float(p_a), float(p_r)
    raise CliError("no decay probability given (--p, --p-a/--p-r, or config 'p')")


def _resolve_channel(cfg: dict, args) -> str:
    kind = args.channel if args.channel is not None else cfg.get("channel")
    if kind is None:
        raise CliError("no channel given (--channel or config 'channel')")
    if kind not in ("amplitude", "phase"):
        raise CliError(f"unknown channel {kind!r} (amplitude or phase)")
    return kind


def _resolve_grid(cfg: dict, flag_value, key: str, default: GridSpec) -> GridSpec:
    if flag_value is not None:
        parts = str(flag_value).split(",")
        if len(parts) != 3:
            raise CliError(f"--{key.replace('_', '-')} expects MIN,MAX,STEPS")
        return GridSpec(_parse_angle(parts[0]), _parse_angle(parts[1]), int(parts[2]))
    if key in cfg:
        g = cfg[key]
        try:
            return GridSpec(
                _parse_angle(g["min"]), _parse_angle(g["max"]), int(g["steps"])
            )
        except (KeyError, TypeError):
            raise CliError(f"config key {key!r} must be {{min, max, steps}}") from None
    return default


def _resolve_partitions(cfg: dict, args) -> tuple:
    raw = getattr(args, "partitions", None)
    if raw is None:
        raw = cfg.get("partitions")
    if raw is None:
        return tuple(PARTITION_LABELS)
    if isinstance(raw, str):
        raw = [s for s in raw.split(",") if s]
    return tuple(normalize_partition(s) for s in raw)


def _allow_nonphysical(cfg: dict, args) -> bool:
    return bool(args.allow_nonphysical or cfg.get("allow_nonphysical", False))


def _out_path(cfg: dict, args):
    return args.out if args.out is not None else cfg.get("out")


def _emit(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _matrix_lines(mat) -> list:
    lines = []
    for row in mat:
        cells = [f"{z.real:+.9f}{z.imag:+.9f}j" for z in row]
        lines.append("  " + "  ".join(cells))
    return lines


def _cmd_evolve(cfg: dict, args) -> int:
    params = _resolve_params(cfg, args)
    r = _resolve_r(cfg, args)
    p_a, p_r = _resolve_probs(cfg, args)
    kind = _resolve_channel(cfg, args)
    partition = normalize_partition(args.partition or "AR")
    allow = _allow_nonphysical(cfg, args)
    spec = ChannelSpec(kind, p_a, p_r)
    rho0 = x_state(params, allow_nonphysical=allow)
    total = evolve_total(apply_unruh(rho0, r), spec)
    red = reduce(total, PARTITION_LABELS[partition])
    conc = concurrence_x(red) if is_x_type(red, 1e-10) else concurrence(red)
    ppt = ppt_test(red)
    if args.json:
        obj = {
            "command": "evolve",
            "channel": kind,
            "partition": CSV_NAMES[partition],
            "c": [params.c1, params.c2, params.c3],
            "r": r,
            "p_a": p_a,
            "p_r": p_r,
            "nonphysical": red.nonphysical,
            "matrix": [[[z.real, z.imag] for z in row] for row in red.mat],
            "concurrence": conc.value,
            "concurrence_method": conc.method,
            "negativity": ppt.negativity,
            "min_pt_eigenvalue": ppt.min_eigenvalue,
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [
            f"partition {CSV_NAMES[partition]}  channel {kind}  "
            f"r {_fmt(r)}  p_a {_fmt(p_a)}  p_r {_fmt(p_r)}"
        ]
        if red.nonphysical:
            lines.append("nonphysical: true")
        lines.append("reduced density matrix (first label = leading qubit):")
        lines += _matrix_lines(red.mat)
        lines.append(f"concurrence  {_fmt(conc.value)}  [{conc.method}]")
        lines.append(f"negativity   {_fmt(ppt.negativity)}")
        lines.append(f"min PT eigenvalue  {_fmt(ppt.min_eigenvalue)}")
        text = "\n".join(lines) + "\n"
    _emit(text, _out_path(cfg, args))
    return 0


def _sweep_config(cfg: dict, args) -> SweepConfig:
    params = _resolve_params(cfg, args)
    kind = _resolve_channel(cfg, args)
    r_grid = _resolve_grid(cfg, args.r_grid, "r_grid", GridSpec(0.0, math.pi / 4, 65))
    p_grid = _resolve_grid(cfg, args.p_grid, "p_grid", GridSpec(0.0, 1.0, 65))
    return SweepConfig(
        params=params,
        channel_kind=kind,
        r_grid=r_grid,
        p_grid=p_grid,
        partitions=_resolve_partitions(cfg, args),
        allow_nonphysical=_allow_nonphysical(cfg, args),
    )


def _cmd_sweep(cfg: dict, args) -> int:
    sweep_cfg = _sweep_config(cfg, args)
    table = run_sweep(sweep_cfg)
    out = _out_path(cfg, args)
    if args.json:
        cols = [pid for pid in PARTITION_LABELS if pid in table.partitions]
        obj = {
            "command": "sweep",
            "nonphysical": table.nonphysical,
            "columns": ["r", "p"]
            + [f"C_{CSV_NAMES[p]}" for p in cols]
            + [f"N_{CSV_NAMES[p]}" for p in cols],
            "rows": [
                [row.r, row.p]
                + [row.concurrence[p] for p in cols]
                + [row.negativity[p] for p in cols]
                for row in table.rows
            ],
        }
        _emit(json.dumps(obj, indent=2) + "\n", out)
    elif out is None:
        import io

        buf = io.BytesIO()
        write_csv(table, buf)
        sys.stdout.write(buf.getvalue().decode("utf-8"))
    else:
        write_csv(table, out)
    return 0


def _cmd_boundary(cfg: dict, args) -> int:
    sweep_cfg = _sweep_config(cfg, args)
    if args.fix is None or "=" not in args.fix:
        raise CliError("--fix expects AXIS=VALUE, e.g. --fix r=0.5")
    axis, _, raw = args.fix.partition("=")
    axis = axis.strip()
    if axis not in ("r", "p"):
        raise CliError(f"--fix axis must be r or p, got {axis!r}")
    fixed_value = _parse_angle(raw)
    scan_axis = "p" if axis == "r" else "r"
    query = BoundaryQuery(
        kind=args.kind,
        partition=args.partition or "AR",
        scan_axis=scan_axis,
        fixed_value=fixed_value,
    )
    result = find_boundary(sweep_cfg, query)
    value = "none" if result.value is None else _fmt(result.value)
    if args.json:
        obj = {
            "command": "boundary",
            "kind": result.kind,
            "partition": CSV_NAMES[result.partition],
            "fixed_axis": result.fixed_axis,
            "fixed_value": result.fixed_value,
            "scan_axis": result.scan_axis,
            "value": result.value,
            "multiplicity": result.multiplicity,
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        text = (
            "fixed_axis,value,boundary_axis,value,kind,partition,multiplicity\n"
            f"{result.fixed_axis},{_fmt(result.fixed_value)},{result.scan_axis},"
            f"{value},{result.kind},{CSV_NAMES[result.partition]},{result.multiplicity}\n"
        )
    _emit(text, _out_path(cfg, args))
    return 0


def _cmd_verify(cfg: dict, args) -> int:
    params = _resolve_params(cfg, args)
    r = _resolve_r(cfg, args)
    p_a, p_r = _resolve_probs(cfg, args)
    if p_a != p_r:
        raise CliError("verify audits the equal-probability forms; give a single --p")
    kind = args.channel if args.channel is not None else cfg.get("channel")
    report = audit(
        params,
        r,
        p_a,
        channel_kind=kind,
        include_eq8=args.include_eq8,
        allow_nonphysical=_allow_nonphysical(cfg, args),
    )
    out = _out_path(cfg, args)
    if out is not None:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(report.to_json() + "\n")
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
        return 0
    entries = report.entry_records()
    mismatches = report.entry_mismatches()
    lines = [
        f"audit of quoted closed forms at c=({params.c1:g},{params.c2:g},{params.c3:g})"
        f" r={_fmt(r)} p={_fmt(p_a)} channels={'+'.join(report.channels)}",
        f"entries compared: {len(entries)}   match: {len(entries) - len(mismatches)}"
        f"   mismatch: {len(mismatches)}",
    ]
    for rec in mismatches:
        lines.append(
            f"  MISMATCH {rec.equation_id} entry {rec.entry}: quoted "
            f"{_fmt(rec.paper_value)} vs numeric {_fmt(rec.numeric_value)} "
            f"(residual {rec.residual:.6g})"
        )
    for rec in report.claims():
        if rec.note.startswith("trace"):
            if rec.status == "mismatch":
                lines.append(
                    f"  trace deficit in {rec.equation_id}: {1 - rec.paper_value:+.6g}"
                )
        elif rec.note.startswith("minimum eigenvalue"):
            continue
        else:
            tag = "inconsistent" if rec.status == "mismatch" else "consistent"
            lines.append(
                f"  claim [{rec.equation_id}]: quoted {_fmt(rec.paper_value)}, "
                f"computed {_fmt(rec.numeric_value)} ({tag}; {rec.note})"
            )
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _add_common(sub: argparse.ArgumentParser):
    sub.add_argument("--config", help="flat JSON config file; flags override it")
    sub.add_argument("--out", help="write the result to this path")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub.add_argument("--allow-nonphysical", action="store_true")
    sub.add_argument("--preset", help="bell or werner:<c>")
    sub.add_argument("--c1", type=float)
    sub.add_argument("--c2", type=float)
    sub.add_argument("--c3", type=float)
    sub.add_argument("--channel", choices=("amplitude", "phase"))


def _add_point_args(sub: argparse.ArgumentParser):
    sub.add_argument("--r", help="acceleration parameter in radians, or 'pi/4'")
    sub.add_argument("--omega", type=float, help="mode frequency (with --a)")
    sub.add_argument("--a", type=float, help="proper acceleration (with --omega)")
    sub.add_argument("--c-light", dest="c_light", type=float)
    sub.add_argument("--p", type=float, help="decay probability for both qubits")
    sub.add_argument("--p-a", dest="p_a", type=float)
    sub.add_argument("--p-r", dest="p_r", type=float)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruhx",
        description="Entanglement dynamics of accelerated two-qubit X states "
        "under amplitude/phase damping.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    ev = subs.add_parser("evolve", help="one reduced state plus its measures")
    _add_common(ev)
    _add_point_args(ev)
    ev.add_argument("--partition", help="AR, AEa, AEr, REr, REa or EaEr")

    sw = subs.add_parser("sweep", help="grid sweep over (r, p), CSV output")
    _add_common(sw)
    sw.add_argument("--r-grid", dest="r_grid", help="MIN,MAX,STEPS (MAX may be pi/4)")
    sw.add_argument("--p-grid", dest="p_grid", help="MIN,MAX,STEPS")
    sw.add_argument("--partitions", help="comma-separated partition list")

    bd = subs.add_parser("boundary", help="locate a sudden-death/birth point")
    _add_common(bd)
    bd.add_argument("--r-grid", dest="r_grid", help="MIN,MAX,STEPS")
    bd.add_argument("--p-grid", dest="p_grid", help="MIN,MAX,STEPS")
    bd.add_argument("--kind", choices=("SD", "SB"), required=True)
    bd.add_argument("--partition", help="partition to track")
    bd.add_argument("--fix", help="AXIS=VALUE for the non-scanned axis")

    vf = subs.add_parser("verify", help="audit the quoted closed forms")
    _add_common(vf)
    _add_point_args(vf)
    vf.add_argument(
        "--include-eq8",
        dest="include_eq8",
        action="store_true",
        help="also audit the pre-damping quoted form",
    )
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config) if args.config else {}
        if args.command == "evolve":
            return _cmd_evolve(cfg, args)
        if args.command == "sweep":
            return _cmd_sweep(cfg, args)
        if args.command == "boundary":
            return _cmd_boundary(cfg, args)
        if args.command == "verify":
            return _cmd_verify(cfg, args)
        raise CliError(f"unknown command {args.command!r}")
    except OSError as exc:
        sys.stderr.write(f"unruhx: I/O error: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"unruhx: {exc}\n")
        return 2


def entry():  # console-script hook
    raise SystemExit(main())
