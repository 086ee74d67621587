"""Command-line front end.

Modes: curve (default) writes a CSV negativity trajectory, esd-time
prints the death time, selfcheck runs the numeric cross-checks,
dump-state writes the evolved state in the plain-text matrix format.
Exit codes: 0 success, 1 usage error, 2 selfcheck failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from . import selfcheck
from .esd import EsdOutcome, Scenario, ScenarioKind, analytic_esd_time, evolve, numeric_esd_time, sweep
from .states import ANSATZ_X_MAX, format_state

MODES = ("curve", "esd-time", "selfcheck", "dump-state")

CSV_HEADER = "t,gamma_a,gamma_b,corner,negativity_numeric,negativity_analytic,min_pt_eigenvalue"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: str
    scenario: ScenarioKind
    x: float
    rate_a: float
    rate_b: float
    t_max: float
    steps: int
    out: str | None


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route everything
    # through UsageError so main() can exit 1 instead.
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="esd",
        description="Negativity trajectories of a qubit-qutrit state under local dephasing.",
    )
    parser.add_argument("mode", nargs="?", choices=MODES, default="curve",
                        help="what to run (default: curve)")
    parser.add_argument("--scenario", choices=[k.value for k in ScenarioKind],
                        default=ScenarioKind.MULTI_LOCAL.value,
                        help="which subsystems see noise (default: multilocal)")
    parser.add_argument("--x", type=float, default=0.25,
                        help="initial corner coherence in [0, 0.25] (default: 0.25)")
    parser.add_argument("--rate-a", type=float, default=1.0, help="qubit dephasing rate (default: 1)")
    parser.add_argument("--rate-b", type=float, default=1.0, help="qutrit dephasing rate (default: 1)")
    parser.add_argument("--t-max", type=float, default=4.0, help="end of the time grid (default: 4)")
    parser.add_argument("--steps", type=int, default=101, help="grid points incl. endpoints (default: 101)")
    parser.add_argument("--out", default=None, help="output file (default: stdout)")
    return parser


def parse_args(argv) -> RunConfig:
    """Parse and range-check arguments; raises UsageError on any problem."""
    ns = _build_parser().parse_args(list(argv))
    if not 0.0 <= ns.x <= ANSATZ_X_MAX:
        raise UsageError(f"--x must lie in the positivity range [0, {ANSATZ_X_MAX}], got {ns.x}")
    if ns.rate_a < 0.0:
        raise UsageError(f"--rate-a must be >= 0, got {ns.rate_a}")
    if ns.rate_b < 0.0:
        raise UsageError(f"--rate-b must be >= 0, got {ns.rate_b}")
    if ns.t_max <= 0.0:
        raise UsageError(f"--t-max must be positive, got {ns.t_max}")
    if ns.steps < 2:
        raise UsageError(f"--steps must be at least 2, got {ns.steps}")
    return RunConfig(
        mode=ns.mode,
        scenario=ScenarioKind(ns.scenario),
        x=ns.x,
        rate_a=ns.rate_a,
        rate_b=ns.rate_b,
        t_max=ns.t_max,
        steps=ns.steps,
        out=ns.out,
    )


def _format_value(v: float) -> str:
    return format(float(v), ".17g")


def render_csv(report) -> str:
    lines = [CSV_HEADER]
    for pt in report.curve:
        lines.append(",".join(_format_value(v) for v in (
            pt.t, pt.gamma_a, pt.gamma_b, pt.corner,
            pt.negativity_numeric, pt.negativity_analytic, pt.min_pt_eigenvalue,
        )))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"esd: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    return 0


def run(config: RunConfig) -> int:
    scenario = Scenario(kind=config.scenario, x=config.x, rate_a=config.rate_a, rate_b=config.rate_b)
    if config.mode == "curve":
        grid = np.linspace(0.0, config.t_max, config.steps)
        return _emit(render_csv(sweep(scenario, grid)), config.out)
    if config.mode == "esd-time":
        analytic = analytic_esd_time(scenario)
        if isinstance(analytic, EsdOutcome):
            print(analytic.value)
            return 0
        numeric = numeric_esd_time(scenario)
        print(f"analytic_esd_time {_format_value(analytic)}")
        print(f"numeric_esd_time {_format_value(numeric)}")
        print(f"difference {_format_value(abs(numeric - analytic))}")
        return 0
    if config.mode == "selfcheck":
        return 0 if selfcheck.run() else 2
    # dump-state
    return _emit(format_state(evolve(scenario, config.t_max)), config.out)


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        print(f"esd: {exc}", file=sys.stderr)
        print("usage: esd [curve|esd-time|selfcheck|dump-state] [--scenario S] [--x F] "
              "[--rate-a F] [--rate-b F] [--t-max F] [--steps N] [--out PATH]", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
