"""Batch runner for the verification suites.

Configures rank, deformation parameters, suites, and check windows, then
emits a machine-readable JSON report.  Exit codes: 0 all requested suites
passed, 1 at least one relation failed, 2 invalid configuration, 3
internal error (partial report still written when a report path is set).

The default report is deterministic (byte-identical across reruns with
the same configuration); wall-clock timings are added only under
``--timings``.  All numbers are rendered exactly (rationals or Laurent
monomial strings), never as floats.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import SuiteRunner
from .scalars import Monomial, NumericField, SymbolicField

SCHEMA = "qvertex-report/1"


@dataclass
class RunConfig:
    """Validated run parameters, echoed verbatim into the report."""

    rank: int
    symbolic: bool = True
    p0: Fraction | None = None
    q0: Fraction | None = None
    suites: tuple = ()
    max_degree: Fraction = Fraction(1)
    mode_window: tuple = (-1, 1)
    max_shifts: int = 1
    seed: int = 0
    series_order: int = 16
    max_states: int | None = None
    report_path: str | None = None
    timings: bool = False

    def validate(self):
        if self.rank < 2:
            raise ValueError("rank must be >= 2")
        if not self.symbolic:
            if self.p0 is None or self.q0 is None:
                raise ValueError("numeric mode needs both p0 and q0")
            if self.p0 == 0 or self.q0 == 0:
                raise ValueError("p0 and q0 must be nonzero")
            if self.p0 ** 8 == self.q0 ** 8 or self.p0 ** 8 == -self.q0 ** 8:
                raise ValueError("p0^8 == +-q0^8 violates the standing "
                                 "nondegeneracy assumption r != +-s")
        bad = [s for s in self.suites if s not in SuiteRunner.SUITES]
        if bad:
            raise ValueError("unknown suite(s): %s (known: %s)"
                             % (", ".join(bad), ", ".join(SuiteRunner.SUITES)))
        if self.mode_window[0] > self.mode_window[1]:
            raise ValueError("empty mode window")
        if self.max_degree < 0 or self.max_shifts < 0:
            raise ValueError("max-degree and max-shifts must be >= 0")

    def as_dict(self):
        return {
            "rank": self.rank,
            "scalar_mode": "symbolic" if self.symbolic else "numeric",
            "p0": _render(self.p0),
            "q0": _render(self.q0),
            "suites": list(self.suites or SuiteRunner.SUITES),
            "max_degree": _render(self.max_degree),
            "mode_window": list(self.mode_window),
            "max_shifts": self.max_shifts,
            "seed": self.seed,
            "series_order": self.series_order,
            "max_states": self.max_states,
        }


def _render(x):
    """Exact JSON-safe rendering: rationals as 'num/den' strings, scalar
    monomials via repr; containers element-wise."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Monomial):
        return repr(x)
    if isinstance(x, dict):
        return {str(k): _render(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_render(v) for v in x]
    return repr(x)


def parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError("not a rational: %r (%s)"
                                         % (text, exc))


def parse_window(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError("window must look like lo..hi")
    try:
        return (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError("window bounds must be integers")


def build_parser():
    p = argparse.ArgumentParser(
        prog="qvertex",
        description="Verify the defining relations of the level-one "
        "free-field module over exact scalars.")
    p.add_argument("--rank", type=int, default=2, help="finite rank n >= 2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true", default=True,
                      help="symbolic scalar backend (default)")
    mode.add_argument("--numeric", nargs=2, metavar=("P0", "Q0"),
                      type=parse_rational,
                      help="numeric-rational backend at the point (p0, q0); "
                      "rationals as num/den")
    p.add_argument("--suite", action="append", default=None,
                   metavar="NAME", help="suite to run (repeatable; default "
                   "all): %s" % ", ".join(SuiteRunner.SUITES))
    p.add_argument("--max-degree", type=parse_rational, default=Fraction(1),
                   help="max weighted oscillator degree of test states")
    p.add_argument("--mode-window", type=parse_window, default=(-1, 1),
                   metavar="LO..HI", help="current-mode window")
    p.add_argument("--max-shifts", type=int, default=1,
                   help="max lattice translation steps for test states")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for randomized checks and state subsampling")
    p.add_argument("--series-order", type=int, default=16,
                   help="truncation order for the series suite")
    p.add_argument("--max-states", type=int, default=None,
                   help="deterministically subsample the state pool")
    p.add_argument("--report", default=None, metavar="OUT.JSON",
                   help="write the JSON report document here")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings (breaks byte-identical "
                   "determinism of the report)")
    return p


def config_from_args(argv):
    args = build_parser().parse_args(argv)
    return RunConfig(
        rank=args.rank,
        symbolic=args.numeric is None,
        p0=args.numeric[0] if args.numeric else None,
        q0=args.numeric[1] if args.numeric else None,
        suites=tuple(args.suite) if args.suite else (),
        max_degree=args.max_degree,
        mode_window=args.mode_window,
        max_shifts=args.max_shifts,
        seed=args.seed,
        series_order=args.series_order,
        max_states=args.max_states,
        report_path=args.report,
        timings=args.timings,
    )


def degeneration_block(field, runner):
    """When rs = 1 the diagonal cocycle values must collapse to -1; note
    this in the report for degeneration runs."""
    if field.symbolic:
        return None
    rs = field.rs_pow(1, 1)
    if rs != 1:
        return None
    vals = [field.monomial(runner.space.cocycle.base(i, i))
            for i in range(1, runner.n + 1)]
    return {
        "rs_equals_one": True,
        "diagonal_cocycle_values": [_render(v) for v in vals],
        "diagonal_cocycle_is_minus_one": all(v == -1 for v in vals),
    }


def run(cfg: RunConfig):
    """Execute the configured suites; returns (document, exit_code)."""
    doc = {"schema": SCHEMA, "config": cfg.as_dict()}
    try:
        cfg.validate()
        field_ = (SymbolicField() if cfg.symbolic
                  else NumericField(cfg.p0, cfg.q0))
    except ValueError as exc:
        doc["error"] = str(exc)
        return doc, 2

    runner = SuiteRunner(
        cfg.rank, field_, max_degree=cfg.max_degree,
        max_shifts=cfg.max_shifts, mode_window=cfg.mode_window,
        seed=cfg.seed, series_order=cfg.series_order,
        max_states=cfg.max_states)
    names = cfg.suites or SuiteRunner.SUITES

    suites, timings = [], {}
    code = 0
    for name in names:
        t0 = time.perf_counter()
        try:
            rep = runner.check_suite(name)
        except Exception as exc:  # partial report + distinct exit code
            doc["error"] = "suite %r crashed: %s: %s" % (
                name, type(exc).__name__, exc)
            code = 3
            break
        timings[name] = round(time.perf_counter() - t0, 3)
        entry = _render(rep.as_dict())
        entry["suite"] = name
        suites.append(entry)
        if not rep.passed and code == 0:
            code = 1

    doc["suites"] = suites
    doc["conventions"] = _render(runner.conventions())
    deg = degeneration_block(field_, runner)
    if deg is not None:
        doc["degeneration"] = deg
    doc["passed"] = code == 0 and bool(suites)
    if cfg.timings:
        doc["timings"] = timings
    return doc, code


def main(argv=None):
    try:
        cfg = config_from_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        # argparse reports usage errors with code 2 already
        return int(exc.code or 0)
    try:
        doc, code = run(cfg)
    except Exception as exc:
        doc, code = {"schema": SCHEMA, "error": "%s: %s"
                     % (type(exc).__name__, exc)}, 3
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if cfg.report_path:
        with open(cfg.report_path, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
