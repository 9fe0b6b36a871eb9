"""Exact reference processes: constant, periodic, and no-consecutive-ones rows.

These provide analytic ground truth for the inference pipeline. The
no-consecutive-ones ("golden mean") process is given as exact window counts
over a common denominator, so the usual counting types carry its exact
distribution with no sampling.
"""

from __future__ import annotations

import numpy as np

from .classical import CausalPartition, EpsilonMachine
from .tape import Tape
from .windows import EmpiricalDistribution

__all__ = [
    "constant_row",
    "alternating_row",
    "periodic_row",
    "golden_mean_distribution",
    "golden_mean_machine",
]


def constant_row(width: int, bit: int = 0) -> Tape:
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    return Tape.ones(width) if bit else Tape.zeros(width)


def alternating_row(width: int, first: int = 0) -> Tape:
    return periodic_row(width, "01" if first == 0 else "10")


def periodic_row(width: int, pattern: str) -> Tape:
    """Row obtained by tiling a binary pattern and truncating to width."""
    if not pattern or any(ch not in "01" for ch in pattern):
        raise ValueError(f"not a binary pattern: {pattern!r}")
    unit = np.array([int(ch) for ch in pattern], dtype=np.uint8)
    reps = -(-width // unit.size)
    return Tape.from_bits(np.tile(unit, reps)[:width])


def golden_mean_distribution(window_length: int) -> EmpiricalDistribution:
    """Exact window counts for the stationary no-consecutive-ones process.

    The process emits 1 after a 0 with probability 1/2 and never emits two
    consecutive 1s. Every length-k window probability is an integer multiple
    of 1 / (3 * 2**(k-1)), so integer counts over that denominator are exact.
    """
    k = window_length
    if k < 1:
        raise ValueError(f"window length must be >= 1, got {k}")
    total = 3 * (1 << (k - 1))
    counts = np.zeros(1 << k, dtype=np.int64)
    # numerator(first symbol) out of 3; halvings for each step from a 0
    for code in range(1 << k):
        bits = [(code >> (k - 1 - j)) & 1 for j in range(k)]
        if any(a == 1 and b == 1 for a, b in zip(bits, bits[1:])):
            continue
        numerator = 2 if bits[0] == 0 else 1
        halvings = sum(1 for a in bits[:-1] if a == 0)
        counts[code] = numerator * (1 << (k - 1 - halvings))
    return EmpiricalDistribution(k, counts, total)


def golden_mean_machine() -> EpsilonMachine:
    """The exact two-state model: state 0 after a 0, state 1 after a 1."""
    transitions = np.zeros((2, 2, 2))
    transitions[0, 0, 0] = 0.5  # from 0: emit 0, stay
    transitions[1, 1, 0] = 0.5  # from 0: emit 1, move
    transitions[0, 0, 1] = 1.0  # from 1: emit 0 surely
    return EpsilonMachine(
        past_length=1,
        transitions=transitions,
        stationary=np.array([2.0 / 3.0, 1.0 / 3.0]),
        partition=CausalPartition(1, np.array([0, 1]), np.array([0, 1])),
        residual=0.0,
        dropped_mass=0.0,
    )
