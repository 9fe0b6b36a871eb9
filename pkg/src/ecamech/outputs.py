"""Experiment artifact emission: CSV traces, JSON report, per-rule SVG figures.

All writers are deterministic: identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .experiment import ExperimentResult, RuleStatistics, SpectrumReport, rank_spectrum

__all__ = [
    "CSV_HEADER",
    "write_traces_csv",
    "write_report_json",
    "rule_svg",
    "emit_outputs",
]

CSV_HEADER = "rule,seed,t,c_q,c_mu,n_states,gram_dim"


def write_traces_csv(result: ExperimentResult, path: str | os.PathLike) -> None:
    """One line per sampled point, UTF-8 with LF endings."""
    lines = [CSV_HEADER]
    for trace in sorted(result.traces, key=lambda tr: (tr.rule, tr.seed)):
        for p in trace.points:
            c_mu = repr(p.c_mu) if p.c_mu is not None else ""
            n_states = str(p.n_states) if p.n_states is not None else ""
            lines.append(
                f"{trace.rule},{trace.seed},{p.t},{p.c_q!r},{c_mu},{n_states},{p.gram_dim}"
            )
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def write_report_json(
    result: ExperimentResult, report: SpectrumReport, path: str | os.PathLike
) -> None:
    """Config echo, per-rule statistics, growth-rate ranking, failures."""
    payload = {
        "config": asdict(result.config),
        "ranking": list(report.ranking),
        "growth_rates": {str(rule): rate for rule, rate in report.rates().items()},
        "rules": {
            str(rule): {
                "t": list(stats.ts),
                "c_q_mean": list(stats.c_q_mean),
                "c_q_std": list(stats.c_q_std),
                "c_mu_mean": list(stats.c_mu_mean) if stats.c_mu_mean is not None else None,
                "c_mu_std": list(stats.c_mu_std) if stats.c_mu_std is not None else None,
                "n_seeds": stats.n_seeds,
                "growth_rate": stats.growth_rate,
            }
            for rule, stats in report.per_rule.items()
        },
        "failures": [asdict(f) for f in result.failures],
    }
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- SVG ---------------------------------------------------------------------

_SVG_W, _SVG_H = 720, 480
_ML, _MR, _MT, _MB = 64, 16, 36, 48
_QUANTUM_COLOR = "#27567f"
_CLASSICAL_COLOR = "#b03a2e"


def _fmt(x: float) -> str:
    return format(x, ".2f")


class _Axes:
    def __init__(self, ts, y_max):
        self.x0, self.x1 = float(np.log2(ts[0])), float(np.log2(ts[-1]))
        if self.x1 == self.x0:
            self.x1 = self.x0 + 1.0
        self.y_max = y_max if y_max > 0 else 1.0

    def x(self, t: float) -> float:
        frac = (np.log2(t) - self.x0) / (self.x1 - self.x0)
        return _ML + frac * (_SVG_W - _ML - _MR)

    def y(self, v: float) -> float:
        frac = min(max(v / self.y_max, 0.0), 1.0)
        return _SVG_H - _MB - frac * (_SVG_H - _MT - _MB)


def _polyline(axes, ts, values, color) -> str:
    pts = " ".join(f"{_fmt(axes.x(t))},{_fmt(axes.y(v))}" for t, v in zip(ts, values))
    return f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'


def _band(axes, ts, mean, std, color) -> str:
    upper = [(t, m + s) for t, m, s in zip(ts, mean, std)]
    lower = [(t, max(m - s, 0.0)) for t, m, s in zip(ts, mean, std)]
    pts = upper + lower[::-1]
    text = " ".join(f"{_fmt(axes.x(t))},{_fmt(axes.y(v))}" for t, v in pts)
    return f'<polygon points="{text}" fill="{color}" fill-opacity="0.22" stroke="none"/>'


def rule_svg(stats: RuleStatistics) -> str:
    """Standalone SVG of mean memory costs vs t (log axis) with std bands."""
    ts = stats.ts
    peaks = [m + s for m, s in zip(stats.c_q_mean, stats.c_q_std)]
    if stats.c_mu_mean is not None:
        peaks += [m + s for m, s in zip(stats.c_mu_mean, stats.c_mu_std)]
    axes = _Axes(ts, max(peaks) * 1.05)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" height="{_SVG_H}" '
        f'viewBox="0 0 {_SVG_W} {_SVG_H}">',
        f'<rect width="{_SVG_W}" height="{_SVG_H}" fill="white"/>',
        f'<text x="{_ML}" y="22" font-family="sans-serif" font-size="15">'
        f"Rule {stats.rule} &#8212; memory cost vs t ({stats.n_seeds} seeds, "
        f"growth {stats.growth_rate:.3f} bits/doubling)</text>",
    ]

    # axes frame
    x_left, y_bottom, y_top = _ML, _SVG_H - _MB, _MT
    x_right = _SVG_W - _MR
    parts.append(
        f'<path d="M {x_left} {y_top} L {x_left} {y_bottom} L {x_right} {y_bottom}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    # decade ticks on the log-t axis
    decade = 1
    while decade <= ts[-1]:
        if decade >= ts[0]:
            x = axes.x(decade)
            parts.append(
                f'<line x1="{_fmt(x)}" y1="{y_bottom}" x2="{_fmt(x)}" y2="{y_bottom + 5}" '
                'stroke="black" stroke-width="1"/>'
            )
            parts.append(
                f'<text x="{_fmt(x)}" y="{y_bottom + 20}" font-family="sans-serif" '
                f'font-size="12" text-anchor="middle">{decade}</text>'
            )
        decade *= 10
    parts.append(
        f'<text x="{(x_left + x_right) // 2}" y="{_SVG_H - 10}" font-family="sans-serif" '
        'font-size="13" text-anchor="middle">t</text>'
    )
    # y ticks
    for i in range(5):
        v = axes.y_max * i / 4
        y = axes.y(v)
        parts.append(
            f'<line x1="{x_left - 5}" y1="{_fmt(y)}" x2="{x_left}" y2="{_fmt(y)}" '
            'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x_left - 9}" y="{_fmt(y + 4)}" font-family="sans-serif" '
            f'font-size="12" text-anchor="end">{v:.3g}</text>'
        )
    parts.append(
        f'<text x="16" y="{(y_top + y_bottom) // 2}" font-family="sans-serif" font-size="13" '
        f'text-anchor="middle" transform="rotate(-90 16 {(y_top + y_bottom) // 2})">bits</text>'
    )

    parts.append(_band(axes, ts, stats.c_q_mean, stats.c_q_std, _QUANTUM_COLOR))
    parts.append(_polyline(axes, ts, stats.c_q_mean, _QUANTUM_COLOR))
    legend_y = y_top + 14
    parts.append(
        f'<text x="{x_right - 160}" y="{legend_y}" font-family="sans-serif" font-size="12" '
        f'fill="{_QUANTUM_COLOR}">quantum memory C_q</text>'
    )
    if stats.c_mu_mean is not None:
        parts.append(_band(axes, ts, stats.c_mu_mean, stats.c_mu_std, _CLASSICAL_COLOR))
        parts.append(_polyline(axes, ts, stats.c_mu_mean, _CLASSICAL_COLOR))
        parts.append(
            f'<text x="{x_right - 160}" y="{legend_y + 16}" font-family="sans-serif" '
            f'font-size="12" fill="{_CLASSICAL_COLOR}">classical complexity C_&#956;</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_outputs(
    result: ExperimentResult,
    report: SpectrumReport | None = None,
    out_dir: str | os.PathLike | None = None,
) -> list[Path]:
    """Write the configured formats into the output directory; return the paths."""
    if not result.traces:
        raise ValueError("no traces to emit")
    if report is None:
        report = rank_spectrum(result.traces)
    out = Path(out_dir if out_dir is not None else result.config.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    written = []
    if "csv" in result.config.formats:
        path = out / "traces.csv"
        write_traces_csv(result, path)
        written.append(path)
    if "json" in result.config.formats:
        path = out / "report.json"
        write_report_json(result, report, path)
        written.append(path)
    if "svg" in result.config.formats:
        for rule in sorted(report.per_rule):
            path = out / f"rule{rule:03d}.svg"
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(rule_svg(report.per_rule[rule]))
            written.append(path)
    return written
