"""Command-line surface: quantifier sweeps, single-point reports, measured-data
ingestion, and the verification suite.

Exit codes: 0 success, 1 validation failure, 2 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import verify
from .quantifiers import (
    QUANTIFIER_FUNCTIONS,
    entanglement_of_formation,
    susceptibility,
    witness_from_susceptibility,
    TSIRELSON_BOUND,
)
from .scattering import ScatteringInput
from .spin_core import DimerModel, thermal_state
from .oracle import correlation_oracle

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

QUANTIFIER_NAMES = tuple(QUANTIFIER_FUNCTIONS)

SCALAR_HEADER = ["x_rad", "S"]
VECTOR_HEADER = ["qx", "qy", "qz", "r1x", "r1y", "r1z", "r2x", "r2y", "r2z", "S"]
OUTPUT_COLUMNS = ["ReC", "witness", "concurrence", "eof", "bell", "discord_verbatim", "discord_figure"]


@dataclass(frozen=True)
class SweepConfig:
    x_from: float
    x_to: float
    samples: int
    quantifiers: tuple[str, ...]
    out: Path
    fmt: str

    def __post_init__(self):
        if not self.x_from < self.x_to:
            raise ValueError("--from must be strictly less than --to")
        if self.samples < 2:
            raise ValueError("--samples must be at least 2")
        if not self.quantifiers:
            raise ValueError("at least one quantifier must be requested")
        unknown = [q for q in self.quantifiers if q not in QUANTIFIER_NAMES]
        if unknown:
            raise ValueError(f"unknown quantifiers {unknown}; choose from {', '.join(QUANTIFIER_NAMES)}")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def run_sweep(config: SweepConfig) -> None:
    xs = np.linspace(config.x_from, config.x_to, config.samples)
    columns = {
        name: np.asarray(QUANTIFIER_FUNCTIONS[name](xs), dtype=float)
        for name in config.quantifiers
    }
    if config.fmt == "csv":
        lines = [",".join(["x", *config.quantifiers])]
        for k, x in enumerate(xs):
            lines.append(",".join([_fmt(float(x))] + [_fmt(float(columns[n][k])) for n in config.quantifiers]))
        config.out.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    else:
        rows = [
            {"x": float(x), **{n: float(columns[n][k]) for n in config.quantifiers}}
            for k, x in enumerate(xs)
        ]
        config.out.write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8", newline="\n")


def _cmd_sweep(args) -> int:
    scale = np.pi / 180.0 if args.degrees else 1.0
    config = SweepConfig(
        x_from=args.x_from * scale,
        x_to=args.x_to * scale,
        samples=args.samples,
        quantifiers=tuple(q.strip() for q in args.quantifiers.split(",") if q.strip()),
        out=Path(args.out),
        fmt=args.format,
    )
    run_sweep(config)
    return EXIT_OK


def build_point_report(x: float, coupling: float, g: float, temperature: float | None) -> dict:
    comparison = verify.closed_form_vs_oracle(x)
    report = dict(comparison["closed_form"])
    report["oracle"] = comparison["oracle"]
    report["delta"] = comparison["delta"]
    report["discord_ratio"] = comparison["discord_ratio"]
    if temperature is not None:
        if temperature <= 0.0:
            raise ValueError("--temperature must be positive for thermal quantities")
        model = DimerModel(coupling=coupling, g=g)
        chi = susceptibility(temperature, report["ReC"], model)
        thermal_correlation = correlation_oracle(thermal_state(model, temperature))
        report["thermal"] = {
            "coupling": coupling,
            "temperature": temperature,
            "g": g,
            "susceptibility": chi,
            "witness_from_susceptibility": witness_from_susceptibility(chi, temperature, model),
            "thermal_state_correlation": float(thermal_correlation[2]),
        }
    return report


def _format_report_text(report: dict) -> str:
    lines = [f"{'x':<17}= {_fmt(report['x'])}", f"{'x mod 2pi':<17}= {_fmt(report['x'] % (2.0 * np.pi))}"]
    for key in ("S", "ReC", "witness", "concurrence", "eof", "bell", "discord_verbatim", "discord_figure"):
        lines.append(f"{key:<17}= {_fmt(report[key])}")
    lines.append("oracle (implied-state brute force):")
    for key, value in report["oracle"].items():
        lines.append(f"  {key:<22}= {_fmt(value)}")
    lines.append("closed form minus oracle:")
    for key, value in report["delta"].items():
        lines.append(f"  {key:<22}= {_fmt(value)}")
    lines.append("discord ratio (oracle / closed form):")
    for key, value in report["discord_ratio"].items():
        lines.append(f"  {key:<22}= {'n/a' if value is None else _fmt(value)}")
    if "thermal" in report:
        lines.append("thermal quantities:")
        for key, value in report["thermal"].items():
            lines.append(f"  {key:<26}= {_fmt(value)}")
    return "\n".join(lines)


def _parse_triple(text: str, name: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"{name} must be three comma-separated numbers")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as exc:
        raise ValueError(f"{name} must be numeric: {exc}") from None


def _cmd_report(args) -> int:
    if args.x is not None and args.q is not None:
        raise ValueError("give either --x or --q/--r1/--r2, not both")
    if args.x is not None:
        x = args.x * (np.pi / 180.0 if args.degrees else 1.0)
        point = ScatteringInput(x=x)
    elif args.q is not None:
        if args.r1 is None or args.r2 is None:
            raise ValueError("--q requires --r1 and --r2")
        point = ScatteringInput(
            q=_parse_triple(args.q, "--q"),
            r1=_parse_triple(args.r1, "--r1"),
            r2=_parse_triple(args.r2, "--r2"),
        )
    else:
        raise ValueError("one of --x or --q/--r1/--r2 is required")

    report = build_point_report(point.phase, args.coupling, args.g, args.temperature)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_format_report_text(report))
    return EXIT_OK


def _ingest_row(mode: str, values: list[float]) -> dict:
    if mode == "scalar":
        x, s_measured = values
    else:
        q, r1, r2 = np.array(values[0:3]), np.array(values[3:6]), np.array(values[6:9])
        x = float(np.dot(q, r1 - r2))
        s_measured = values[9]
    if not np.isfinite(x):
        raise ValueError("phase is not finite")
    if not 0.0 <= s_measured <= 1.0:
        raise ValueError(f"S = {s_measured:g} out of range [0, 1]")
    re_c = float(np.cos(x)) * s_measured
    conc = max(0.0, -0.5 * (1.0 + 3.0 * re_c))
    return {
        "x_rad": x,
        "ReC": re_c,
        "witness": 2.0 + 3.0 * re_c,
        "concurrence": conc,
        "eof": float(entanglement_of_formation(conc)),
        "bell": TSIRELSON_BOUND * s_measured,
        "discord_verbatim": 0.5 * s_measured,
        "discord_figure": 0.5 * abs(re_c),
    }


def run_ingest(input_path: Path, mode: str, out_path: Path) -> tuple[int, int]:
    """Process a measured-data file; returns (accepted, rejected) counts.

    Accepted rows are echoed with the derived quantifiers appended; rejected
    rows go to `<out>.rejects.csv` with their input line number and reason.
    """
    header = SCALAR_HEADER if mode == "scalar" else VECTOR_HEADER
    with input_path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or [c.strip() for c in rows[0]] != header:
        raise ValueError(f"expected header {','.join(header)!r} in {mode} mode")

    accepted: list[list[str]] = []
    rejected: list[tuple[int, str, str]] = []
    for index, row in enumerate(rows[1:], start=2):  # file line numbers; header is line 1
        raw = ",".join(row)
        if len(row) != len(header):
            rejected.append((index, f"expected {len(header)} fields, got {len(row)}", raw))
            continue
        try:
            values = [float(cell) for cell in row]
        except ValueError:
            rejected.append((index, "non-numeric field", raw))
            continue
        try:
            derived = _ingest_row(mode, values)
        except ValueError as exc:
            rejected.append((index, str(exc), raw))
            continue
        out_row = [_fmt(v) for v in values]
        if mode == "vector":
            out_row.append(_fmt(derived["x_rad"]))
        out_row += [_fmt(derived[c]) for c in OUTPUT_COLUMNS]
        accepted.append(out_row)

    out_header = list(header) + (["x_rad"] if mode == "vector" else []) + OUTPUT_COLUMNS
    lines = [",".join(out_header)] + [",".join(r) for r in accepted]
    out_path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")

    rejects_path = out_path.with_name(out_path.name + ".rejects.csv")
    if rejected:
        reject_lines = ["line,reason,row"]
        for line_no, reason, raw in rejected:
            reject_lines.append(f'{line_no},"{reason}","{raw}"')
        rejects_path.write_text("\n".join(reject_lines) + "\n", encoding="utf-8", newline="\n")
    return len(accepted), len(rejected)


def _cmd_ingest(args) -> int:
    accepted, rejected = run_ingest(Path(args.input), args.mode, Path(args.out))
    print(f"accepted {accepted} rows, rejected {rejected} rows")
    if rejected:
        print(f"rejects written to {args.out}.rejects.csv")
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify.run_all_checks()
    print(report.format_text())
    if args.json is not None:
        Path(args.json).write_text(
            json.dumps(report.as_dict(), indent=2) + "\n", encoding="utf-8", newline="\n"
        )
    return EXIT_OK if report.all_pass else EXIT_VALIDATION


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the validation exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_VALIDATION)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spindimer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="tabulate quantifiers over a phase range")
    sweep.add_argument("--from", dest="x_from", type=float, default=0.0)
    sweep.add_argument("--to", dest="x_to", type=float, default=2.0 * np.pi)
    sweep.add_argument("--samples", type=int, default=1001)
    sweep.add_argument("--quantifiers", default=",".join(QUANTIFIER_NAMES), help="comma-separated subset of: " + ", ".join(QUANTIFIER_NAMES))
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--degrees", action="store_true", help="interpret --from/--to in degrees")
    sweep.set_defaults(func=_cmd_sweep)

    report = sub.add_parser("report", help="full quantifier/oracle report at one point")
    report.add_argument("--x", type=float, default=None, help="scattering phase in radians")
    report.add_argument("--q", default=None, help="scattering vector, e.g. 1.0,0.0,0.0")
    report.add_argument("--r1", default=None, help="first site position")
    report.add_argument("--r2", default=None, help="second site position")
    report.add_argument("--coupling", type=float, default=1.0)
    report.add_argument("--temperature", type=float, default=None)
    report.add_argument("--g", type=float, default=2.0)
    report.add_argument("--format", choices=("text", "json"), default="text")
    report.add_argument("--degrees", action="store_true", help="interpret --x in degrees")
    report.set_defaults(func=_cmd_report)

    ingest = sub.add_parser("ingest", help="derive quantifiers from measured structure factors")
    ingest.add_argument("--input", required=True)
    ingest.add_argument("--mode", choices=("scalar", "vector"), required=True)
    ingest.add_argument("--out", required=True)
    ingest.set_defaults(func=_cmd_ingest)

    verify_cmd = sub.add_parser("verify", help="run the oracle cross-validation suite")
    verify_cmd.add_argument("--json", default=None, help="also write a machine-readable summary here")
    verify_cmd.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
