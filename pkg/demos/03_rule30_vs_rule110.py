#!/usr/bin/env python3
"""The two extremes: rule 30 (chaotic) against rule 110 (computation-capable).

Both start from the same kind of structureless random row. Rule 30 keeps its
rows statistically featureless, so the quantum memory cost stays pinned near
zero. Rule 110 builds correlations between ever more distant cells, and its
memory cost climbs steadily with time.
"""

from pathlib import Path

from ecamech import ExperimentConfig, emit_outputs, rank_spectrum, run_experiment

OUT = Path(__file__).parent / "out" / "extremes"

config = ExperimentConfig(
    rules=(30, 110),
    width=8_000,
    t_max=500,
    seeds=(1, 2, 3),
    classical=False,  # the quantum path alone tells this story
    out_dir=str(OUT),
)

print(f"Evolving rules {config.rules} at width {config.width} for {config.t_max} steps, "
      f"{len(config.seeds)} seeds...")
result = run_experiment(config)
report = rank_spectrum(result.traces)

print(f"\n{'t':>5}  {'rule 30 C_q':>12}  {'rule 110 C_q':>12}")
r30, r110 = report.per_rule[30], report.per_rule[110]
for i, t in enumerate(r30.ts):
    if t in (1, 3, 10, 30, 100, 300, 500):
        print(f"{t:>5}  {r30.c_q_mean[i]:>12.4f}  {r110.c_q_mean[i]:>12.4f}")

print(f"\ngrowth rates (bits per doubling of t):")
print(f"  rule  30: {r30.growth_rate:+.4f}   (pseudo-random, nothing to remember)")
print(f"  rule 110: {r110.growth_rate:+.4f}   (keeps generating structure)")

paths = emit_outputs(result, report)
print("\nwrote:")
for path in paths:
    print(f"  {path}")
