"""Synchronous rule application and open-boundary trajectory generation."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .rules import RuleTable
from .tape import Tape, _tail_mask

__all__ = [
    "Trajectory",
    "step_periodic",
    "step_periodic_reference",
    "run_open_boundary",
    "write_pbm",
]

# Extended widths beyond this would need > 32 GiB per trajectory; refuse early.
_MAX_EXTENDED_WIDTH = 1 << 38


def step_periodic(tape: Tape, rule: RuleTable) -> Tape:
    """One synchronous update with periodic boundaries, 64 cells per word.

    Each set output bit of the rule contributes one AND-minterm over the
    (left, center, right) neighbor words.
    """
    left, center, right = tape.neighbors()
    out = np.zeros_like(center)
    for k in range(8):
        if not rule.outputs[k]:
            continue
        term = left if k & 4 else ~left
        term = term & (center if k & 2 else ~center)
        term = term & (right if k & 1 else ~right)
        out |= term
    out[-1] &= _tail_mask(tape.width)
    return Tape(out, tape.width)


def step_periodic_reference(bits: np.ndarray, rule: RuleTable) -> np.ndarray:
    """Per-cell update on an unpacked row; oracle for the word-parallel step."""
    out = np.empty_like(bits)
    w = bits.size
    for i in range(w):
        out[i] = rule(int(bits[(i - 1) % w]), int(bits[i]), int(bits[(i + 1) % w]))
    return out


@dataclass(frozen=True)
class Trajectory:
    """Centre-width rows of an evolved tape, indexed by timestep 1..t_max."""

    rule_number: int
    width: int
    seed: int | None
    rows: tuple[Tape, ...] = field(repr=False)

    @property
    def t_max(self) -> int:
        return len(self.rows)

    def row(self, t: int) -> Tape:
        if not 1 <= t <= len(self.rows):
            raise ValueError(f"timestep must be in [1, {len(self.rows)}], got {t}")
        return self.rows[t - 1]


def run_open_boundary(
    initial: Tape,
    rule: RuleTable,
    t_max: int,
    rng: np.random.Generator,
    pad: int | None = None,
    seed: int | None = None,
) -> Trajectory:
    """Evolve the centre cells of a randomly padded periodic tape.

    The caller supplies only the centre cells; ``pad`` random cells (default
    ``t_max``) are appended on each side from ``rng`` and the widened tape is
    run with periodic boundaries. By the light-cone argument the returned
    centre rows are bit-identical to open-boundary (infinite-tape) evolution
    for every t <= pad.

    Pad cells are drawn ring by ring (left then right at each distance), so
    runs that differ only in ``pad`` share the inner padding and produce
    identical centre rows.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    if pad is None:
        pad = t_max
    if pad < t_max:
        raise ValueError(f"pad must cover the light cone: pad={pad} < t_max={t_max}")
    width = initial.width
    if width + 2 * pad > _MAX_EXTENDED_WIDTH:
        raise MemoryError(
            f"extended width {width + 2 * pad} exceeds supported size {_MAX_EXTENDED_WIDTH}"
        )

    draws = rng.integers(0, 2, size=2 * pad, dtype=np.uint8)
    left = draws[0::2][::-1]  # distance pad..1 from the centre
    right = draws[1::2]  # distance 1..pad
    extended = Tape.from_bits(np.concatenate([left, initial.to_bits(), right]))

    rows = []
    for _ in range(t_max):
        extended = step_periodic(extended, rule)
        rows.append(extended.slice(pad, width))
    return Trajectory(rule_number=rule.rule_number, width=width, seed=seed, rows=tuple(rows))


def write_pbm(trajectory: Trajectory, path: str | os.PathLike, fmt: str = "P4") -> None:
    """Dump a trajectory as a portable bitmap, one row per timestep, black = 1."""
    if fmt not in ("P1", "P4"):
        raise ValueError(f"PBM format must be 'P1' or 'P4', got {fmt!r}")
    width, height = trajectory.width, trajectory.t_max
    if fmt == "P1":
        body = "\n".join(" ".join(map(str, row.to_bits())) for row in trajectory.rows)
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(f"P1\n{width} {height}\n{body}\n")
        return
    with open(path, "wb") as handle:
        handle.write(f"P4\n{width} {height}\n".encode("ascii"))
        for row in trajectory.rows:
            handle.write(np.packbits(row.to_bits()).tobytes())
