"""Command-line runner for the verification suites.

``hall-verify verify [shuffle|formal|schemes|all]`` runs the selected
suites and emits a text or JSON report.  Exit code 0 means every check
passed, 1 means at least one check failed, 2 means the invocation or an
internal step was invalid (bad flags, unwritable output path, broken
fixture data).
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import schemes as scheme_catalog
from .formal import E3, serre_reduce
from .report import CheckResult, Report
from .shuffle import ShuffleEngine

SUITE_CHOICES = ("shuffle", "formal", "schemes", "all")
DEFAULT_K_MIN = -2
DEFAULT_K_MAX = 3
DEFAULT_GRID = 2
MAX_GRID = 4
DEFAULT_SEED = 42


@dataclass
class RunConfig:
    suites: tuple[str, ...]
    k_min: int = DEFAULT_K_MIN
    k_max: int = DEFAULT_K_MAX
    grid: int = DEFAULT_GRID
    only: Optional[tuple[str, ...]] = None
    seed: int = DEFAULT_SEED
    output_format: str = "text"
    output_path: Optional[str] = None
    fixtures_dir: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "k_min": self.k_min,
            "k_max": self.k_max,
            "grid": self.grid,
            "only": list(self.only) if self.only is not None else None,
            "fixtures_dir": self.fixtures_dir,
            "output_format": self.output_format,
        }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hall-verify",
        description="Exact verification suites: shuffle-product identities, "
                    "the commutator rewrite reduction, and the ideal catalog.")
    parser.add_argument("command", choices=("verify",),
                        help="the only supported command")
    parser.add_argument("suite", nargs="?", choices=SUITE_CHOICES, default="all",
                        help="which suite to run (default: all)")
    parser.add_argument("--k-min", type=int, default=DEFAULT_K_MIN,
                        help=f"lowest degree index for the cubic-identity sweep "
                             f"(default {DEFAULT_K_MIN})")
    parser.add_argument("--k-max", type=int, default=DEFAULT_K_MAX,
                        help=f"highest degree index for the cubic-identity sweep "
                             f"(default {DEFAULT_K_MAX})")
    parser.add_argument("--grid", type=int, default=DEFAULT_GRID,
                        help=f"radius of the exchange-identity grid, at most "
                             f"{MAX_GRID} (default {DEFAULT_GRID})")
    parser.add_argument("--only", type=str, default=None, metavar="NAME,...",
                        help="comma-separated catalog entries for the schemes "
                             "suite (empty string selects nothing)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for randomized certificates "
                             f"(default {DEFAULT_SEED})")
    parser.add_argument("--format", dest="output_format", default="text",
                        choices=("text", "json"), help="report format")
    parser.add_argument("--out", dest="output_path", default=None, metavar="PATH",
                        help="write the report to PATH instead of stdout")
    parser.add_argument("--fixtures", dest="fixtures_dir", default=None,
                        metavar="PATH",
                        help="fixture directory (default: ./fixtures when "
                             "present, else the packaged fixtures)")
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse and validate; invalid input raises SystemExit with code 2."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.k_min > ns.k_max:
        parser.error(f"--k-min ({ns.k_min}) must not exceed --k-max ({ns.k_max})")
    if not 0 <= ns.grid <= MAX_GRID:
        parser.error(f"--grid must be between 0 and {MAX_GRID}, got {ns.grid}")
    only: Optional[tuple[str, ...]] = None
    if ns.only is not None:
        names = tuple(n for n in (s.strip() for s in ns.only.split(",")) if n)
        for n in names:
            if n not in scheme_catalog.CATALOG_NAMES:
                parser.error(
                    f"unknown catalog entry {n!r}; known: "
                    f"{', '.join(scheme_catalog.CATALOG_NAMES)}")
        only = names
    suites: tuple[str, ...]
    if ns.suite == "all":
        suites = ("shuffle", "formal", "schemes")
    else:
        suites = (ns.suite,)
    return RunConfig(
        suites=suites,
        k_min=ns.k_min,
        k_max=ns.k_max,
        grid=ns.grid,
        only=only,
        seed=ns.seed,
        output_format=ns.output_format,
        output_path=ns.output_path,
        fixtures_dir=ns.fixtures_dir,
    )


def _resolve_fixtures(config: RunConfig) -> Optional[Path]:
    """Explicit flag wins; else a local ./fixtures directory; else the
    packaged fixtures (signalled by None)."""
    if config.fixtures_dir is not None:
        return Path(config.fixtures_dir)
    local = Path("fixtures")
    if local.is_dir():
        return local
    return None


def _zero_check(suite: str, name: str, value, seconds: float) -> CheckResult:
    is_zero = value.value.num.is_zero
    return CheckResult(suite=suite, name=name, passed=is_zero,
                       expected="0", computed="0" if is_zero else "nonzero",
                       seconds=seconds)


def run_suite(config: RunConfig) -> Report:
    """Run the selected suites and collect every result into a report."""
    t_start = time.perf_counter()
    engine = ShuffleEngine()
    report = Report(
        kernel_convention=engine.orientation.name.lower(),
        seed=config.seed,
        suites=config.suites,
        config=config.to_dict(),
    )

    if "shuffle" in config.suites:
        t0 = time.perf_counter()
        ok = engine.kernel_reflection_check(engine.orientation)
        report.reflection_check = CheckResult(
            suite="shuffle", name="kernel_reflection_check", passed=ok,
            expected="True", computed=str(ok),
            seconds=time.perf_counter() - t0)
        for k in range(config.k_min, config.k_max + 1):
            t0 = time.perf_counter()
            d = engine.serre_defect(k)
            report.serre_results.append(
                _zero_check("shuffle", f"serre_defect[k={k}]", d,
                            time.perf_counter() - t0))
        r = config.grid
        for k in range(-r, r + 1):
            for l in range(-r, r + 1):
                t0 = time.perf_counter()
                d = engine.relation21_defect(k, l)
                report.exchange_results.append(
                    _zero_check("shuffle", f"relation21_defect[k={k},l={l}]", d,
                                time.perf_counter() - t0))

    if "formal" in config.suites:
        t0 = time.perf_counter()
        result, trace = serre_reduce()
        dt = time.perf_counter() - t0
        report.formal_results.append(CheckResult(
            suite="formal", name="serre_reduce", passed=result.is_zero,
            expected="0", computed=result.render(), seconds=dt))
        replay_ok = trace.replay()
        report.formal_results.append(CheckResult(
            suite="formal", name="trace_replay", passed=replay_ok,
            expected="True", computed=str(replay_ok), seconds=0.0))
        pair_ok = any(s == E3(-1, 0, 1) for s, _ in trace.cancellation_pairs())
        report.formal_results.append(CheckResult(
            suite="formal", name="cancellation_pair", passed=pair_ok,
            expected="True", computed=str(pair_ok), seconds=0.0,
            note="opposite-sign rank-3 pair visible before merging"))
        report.formal_trace = trace.to_dict()

    if "schemes" in config.suites:
        fixtures = _resolve_fixtures(config)
        report.scheme_results = scheme_catalog.run_all(
            names=config.only, fixtures_dir=fixtures, seed=config.seed)

    report.total_seconds = time.perf_counter() - t_start
    return report


def emit_report(report: Report, config: RunConfig) -> int:
    """Write the report; exit code 0 on aggregate pass, 1 otherwise, 2 on
    an unwritable output path."""
    rendered = (report.to_json() if config.output_format == "json"
                else report.render_text())
    if config.output_path is not None:
        try:
            Path(config.output_path).write_text(rendered, encoding="utf-8")
        except OSError as exc:
            print(f"hall-verify: cannot write report: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(rendered)
    return 0 if report.aggregate_pass else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = parse_args(argv)
    try:
        report = run_suite(config)
    except Exception as exc:  # internal error, not a check failure
        print(f"hall-verify: internal error: {exc}", file=sys.stderr)
        return 2
    return emit_report(report, config)


if __name__ == "__main__":
    sys.exit(main())
