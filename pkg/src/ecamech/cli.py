"""Command-line interface: run experiments, list the canonical rules.

Exit codes: 0 success, 1 usage error, 2 runtime or numerical error.
"""

from __future__ import annotations

import argparse
import sys

from .classical import ConvergenceError
from .experiment import ExperimentConfig, rank_spectrum, run_experiment
from .outputs import emit_outputs
from .quantum import SpectrumError
from .rules import canonical_rules, rule_symmetries

__all__ = ["main", "build_parser", "parse_config_file"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit code 1
        raise UsageError(message)


_CONFIG_KEYS = (
    "rules",
    "width",
    "tmax",
    "window-l",
    "seeds",
    "chi2-alpha",
    "out",
    "format",
    "classical",
    "kink-filter",
    "pbm",
    "futures",
    "workers",
)

_DEFAULTS = {
    "rules": "all-canonical",
    "width": 64_000,
    "tmax": 1_000,
    "window_l": 6,
    "seeds": "1,2,3,4,5",
    "chi2_alpha": 0.05,
    "out": "out",
    "format": "csv,json,svg",
    "classical": True,
    "kink_filter": False,
    "pbm": False,
    "futures": "chained",
    "workers": 1,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="ecamech", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evolve rules and trace their memory costs")
    run.add_argument("--config", metavar="FILE", help="flat key-value config file; flags override it")
    run.add_argument("--rules", help="comma-separated rule numbers, or 'all-canonical'")
    run.add_argument("--width", type=int, help="row width W")
    run.add_argument("--tmax", type=int, help="number of timesteps")
    run.add_argument("--window-l", type=int, dest="window_l", help="window half-length L")
    run.add_argument("--seeds", help="comma-separated seeds")
    run.add_argument("--chi2-alpha", type=float, dest="chi2_alpha", help="merge-test significance")
    run.add_argument("--out", help="output directory")
    run.add_argument("--format", help="comma-separated subset of csv,json,svg")
    run.add_argument(
        "--classical",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="also infer the classical statistical complexity",
    )
    run.add_argument(
        "--kink-filter",
        action=argparse.BooleanOptionalAction,
        default=None,
        dest="kink_filter",
        help="apply the adjacent-pair filter to each row before inference",
    )
    run.add_argument(
        "--pbm",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="dump each trajectory as a PBM image",
    )
    run.add_argument("--futures", choices=("chained", "direct"), help="conditional-future estimator")
    run.add_argument("--workers", type=int, help="parallel (rule, seed) workers")

    sub.add_parser("rules", help="print the 88 canonical rules and their orbits")
    return parser


def parse_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` lines mirroring the run flags; '#' starts a comment."""
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
                key, value = (part.strip() for part in line.split("=", 1))
                if key not in _CONFIG_KEYS:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = value
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from exc
    return values


def _parse_bool(text: str, key: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"{key} must be a boolean, got {text!r}")


def _parse_int_list(text: str, key: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise UsageError(f"{key} must be a comma-separated list of integers, got {text!r}") from exc


def _merge_settings(args: argparse.Namespace) -> dict:
    """Built-in defaults, overridden by the config file, overridden by flags."""
    settings = dict(_DEFAULTS)
    if args.config:
        file_values = parse_config_file(args.config)
        for key, text in file_values.items():
            attr = key.replace("-", "_")
            if attr in ("width", "tmax", "window_l", "workers"):
                try:
                    settings[attr] = int(text)
                except ValueError as exc:
                    raise UsageError(f"{key} must be an integer, got {text!r}") from exc
            elif attr == "chi2_alpha":
                try:
                    settings[attr] = float(text)
                except ValueError as exc:
                    raise UsageError(f"{key} must be a number, got {text!r}") from exc
            elif attr in ("classical", "kink_filter", "pbm"):
                settings[attr] = _parse_bool(text, key)
            else:
                settings[attr] = text
    for attr in (
        "rules",
        "width",
        "tmax",
        "window_l",
        "seeds",
        "chi2_alpha",
        "out",
        "format",
        "classical",
        "kink_filter",
        "pbm",
        "futures",
        "workers",
    ):
        value = getattr(args, attr)
        if value is not None:
            settings[attr] = value
    return settings


def _config_from_settings(settings: dict) -> ExperimentConfig:
    rules_text = settings["rules"]
    if isinstance(rules_text, str) and rules_text.strip() == "all-canonical":
        rules = tuple(canonical_rules())
    elif isinstance(rules_text, str):
        rules = _parse_int_list(rules_text, "rules")
    else:
        rules = tuple(rules_text)
    seeds = settings["seeds"]
    if isinstance(seeds, str):
        seeds = _parse_int_list(seeds, "seeds")
    formats = settings["format"]
    if isinstance(formats, str):
        formats = tuple(part.strip() for part in formats.split(",") if part.strip())
    try:
        return ExperimentConfig(
            rules=rules,
            width=settings["width"],
            window_l=settings["window_l"],
            t_max=settings["tmax"],
            seeds=seeds,
            chi2_alpha=settings["chi2_alpha"],
            classical=settings["classical"],
            apply_kink_filter=settings["kink_filter"],
            futures_estimator=settings["futures"],
            out_dir=settings["out"],
            formats=formats,
            write_pbm=settings["pbm"],
            workers=settings["workers"],
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_run(args: argparse.Namespace) -> int:
    config = _config_from_settings(_merge_settings(args))
    result = run_experiment(config)
    if not result.traces:
        first = result.failures[0]
        print(
            f"all units failed; first failure: rule {first.rule} seed {first.seed}: {first.error}",
            file=sys.stderr,
        )
        return 2
    report = rank_spectrum(result.traces)
    written = emit_outputs(result, report)
    for failure in result.failures:
        print(f"FAILED rule {failure.rule} seed {failure.seed}: {failure.error}", file=sys.stderr)
    print("rules ranked by C_q growth (bits per doubling of t):")
    for rule in report.ranking:
        print(f"  rule {rule:3d}: {report.per_rule[rule].growth_rate:+.4f}")
    for path in written:
        print(f"wrote {path}")
    return 0 if not result.failures else 2


def _cmd_rules() -> int:
    for rule in canonical_rules():
        orbit = " ".join(str(r) for r in sorted(rule_symmetries(rule)))
        print(f"{rule:3d}: orbit {{{orbit}}}")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "rules":
            return _cmd_rules()
        return _cmd_run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, ConvergenceError, SpectrumError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
