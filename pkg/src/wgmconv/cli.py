"""Command-line entry point.

Exit codes: 0 success, 1 config/validation error, 2 physics domain error,
3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from wgmconv.errors import ArgumentError, ConfigError, DomainError, NumericError
from wgmconv.scenario.config import load_scenario
from wgmconv.scenario.report import run_report
from wgmconv.scenario.spectrum import emit_spectrum, write_trace_csv
from wgmconv.scenario.sweep import parse_vary, run_sweep, write_sweep_csv

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN, EXIT_NUMERIC = 0, 1, 2, 3

FEASIBILITY_KEYS = (
    "nep_measured_w_per_hz",
    "nep_stated_w_per_hz",
    "nep_theory_w_per_hz",
    "gap_factor_stated",
    "effective_temperature_k",
    "counting_linewidth_hz",
    "min_countable_frequency_hz",
    "min_countable_frequency_decoupled_hz",
    "counting_feasible_at_signal",
    "counting_feasible_measured",
    "max_bandwidth_measured_hz",
    "max_bandwidth_stated_hz",
    "max_bandwidth_unity_hz",
)


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_report(args) -> None:
    report = run_report(load_scenario(args.config))
    _write(report.render(), args.out)


def cmd_spectrum(args) -> None:
    scenario = load_scenario(args.config)
    trace = emit_spectrum(scenario, args.kind, args.span_hz, args.points)
    write_trace_csv(trace, args.out)
    for w in trace.metadata.get("warnings", []):
        print(f"warning: {w}", file=sys.stderr)


def cmd_sweep(args) -> None:
    scenario = load_scenario(args.config)
    header, rows = run_sweep(scenario, parse_vary(args.vary), workers=args.workers)
    write_sweep_csv(header, rows, args.out)


def cmd_feasibility(args) -> None:
    report = run_report(load_scenario(args.config))
    lines = ["counting criterion: S * bandwidth * tau < h * nu (bandwidth in Hz)"]
    for key in FEASIBILITY_KEYS:
        if key not in report:
            continue
        q = report.quantities[key]
        value = q.value if isinstance(q.value, bool) else f"{q.value:.6e}"
        line = f"{key} = {value} {q.unit}".rstrip() + f"  [{q.flag}]"
        if q.note:
            line += f"  ({q.note})"
        lines.append(line)
    _write("\n".join(lines) + "\n", args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wgmconv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="derive every quantity of a scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("spectrum", help="write a synthetic transmission or sideband trace")
    p.add_argument("--config", required=True)
    p.add_argument("--kind", required=True, choices=("transmission", "sidebands"))
    p.add_argument("--span-hz", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("sweep", help="tabulate the report over one scenario key")
    p.add_argument("--config", required=True)
    p.add_argument("--vary", required=True, metavar="KEY=LO:HI:lin|log:N")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("feasibility", help="photon-counting verdicts for a scenario")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_feasibility)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            args.func(args)
    except (ConfigError, ArgumentError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as err:
        print(f"domain error: {err}", file=sys.stderr)
        return EXIT_DOMAIN
    except NumericError as err:
        print(f"numeric error: {err}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
