#!/usr/bin/env python3
"""Rule encoding, symmetry orbits, and open-boundary evolution.

Walks through the building blocks: how a rule number expands into its local
update table, which rules are equivalent under mirror/complement symmetry,
and how a finite row is evolved without boundary artifacts. Writes a PBM
space-time diagram per showcased rule into demos/out/.
"""

from pathlib import Path

import numpy as np

from ecamech import (
    Tape,
    canonical_rules,
    parse_rule,
    rule_symmetries,
    run_open_boundary,
    step_periodic,
    write_pbm,
)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# -- rule numbers are 8-bit truth tables --------------------------------------

rule = parse_rule(26)
print("Rule 26 update table (neighborhood -> next state):")
for neighborhood, output in sorted(rule.table.items(), reverse=True):
    print(f"  {''.join(map(str, neighborhood))} -> {output}")

# -- mirror and 0/1-relabeling symmetry fold 256 rules down to 88 -------------

print("\nSymmetry orbits of some familiar rules:")
for n in (0, 30, 90, 110, 204):
    print(f"  rule {n:3d}: {sorted(rule_symmetries(n))}")
print(f"Canonical representatives: {len(canonical_rules())} rules")

# -- one synchronous update ----------------------------------------------------

tape = Tape.from_string("00000000010000000000")
print("\nRule 110 acting on a single seeded cell:")
for _ in range(6):
    print(" ", tape.to_string().replace("0", ".").replace("1", "#"))
    tape = step_periodic(tape, parse_rule(110))

# -- open-boundary evolution from a random row ---------------------------------

print("\nEvolving width-400 random rows for 200 steps (open boundaries):")
for n in (30, 110, 184):
    rng = np.random.default_rng(1)
    initial = Tape.random(400, rng)
    trajectory = run_open_boundary(initial, parse_rule(n), 200, rng, seed=1)
    path = OUT / f"evolution_rule{n:03d}.pbm"
    write_pbm(trajectory, path)
    density = trajectory.row(200).popcount() / 400
    print(f"  rule {n:3d}: final density {density:.2f}, wrote {path}")
