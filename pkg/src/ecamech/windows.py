"""Window statistics over binary rows: empirical distributions, conditionals, entropy.

Length-k windows are indexed by their integer code with the first symbol as
the most significant bit, so code ``0b011`` reads as the string ``"011"``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .tape import Tape

__all__ = [
    "EmpiricalDistribution",
    "ConditionalFutures",
    "window_code",
    "window_string",
    "count_windows",
    "conditional_futures",
    "chained_futures",
    "shannon_entropy",
]

_LN2 = np.log(2.0)

# Dense count tables above this window length would exceed memory.
_MAX_WINDOW = 26


def window_code(text: str) -> int:
    """Integer code of a binary string, first symbol most significant."""
    if not text or any(ch not in "01" for ch in text):
        raise ValueError(f"not a binary string: {text!r}")
    return int(text, 2)


def window_string(code: int, k: int) -> str:
    """Binary string of length k for an integer window code."""
    if not 0 <= code < (1 << k):
        raise ValueError(f"code {code} out of range for k={k}")
    return format(code, f"0{k}b")


@dataclass(frozen=True)
class EmpiricalDistribution:
    """Dense window counts over all length-k binary strings.

    ``counts[c]`` is the number of windows whose code is ``c``; ``total`` is
    the number of windows counted.
    """

    window_length: int
    counts: np.ndarray
    total: int

    def __post_init__(self):
        k = self.window_length
        if k < 1:
            raise ValueError(f"window length must be >= 1, got {k}")
        if self.counts.shape != (1 << k,):
            raise ValueError(f"counts must have 2**{k} entries")
        if self.counts.min(initial=0) < 0:
            raise ValueError("counts must be non-negative")
        if int(self.counts.sum()) != self.total or self.total <= 0:
            raise ValueError("total must equal the (positive) sum of counts")

    @property
    def probabilities(self) -> np.ndarray:
        return self.counts / self.total

    def probability(self, window: int | str) -> float:
        code = window_code(window) if isinstance(window, str) else int(window)
        return float(self.counts[code]) / self.total

    def as_dict(self) -> dict[str, int]:
        """Nonzero counts keyed by window string."""
        k = self.window_length
        return {
            window_string(c, k): int(n) for c, n in enumerate(self.counts) if n > 0
        }

    def prefix_marginal(self, m: int) -> "EmpiricalDistribution":
        """Distribution of the first m symbols of each counted window."""
        if not 1 <= m <= self.window_length:
            raise ValueError(f"prefix length must be in [1, {self.window_length}]")
        marg = self.counts.reshape(1 << m, -1).sum(axis=1)
        return EmpiricalDistribution(m, marg, self.total)


def count_windows(row: Tape | np.ndarray, k: int) -> EmpiricalDistribution:
    """Count the non-wrapping length-k windows of a row."""
    bits = row.to_bits() if isinstance(row, Tape) else np.asarray(row, dtype=np.uint8)
    width = bits.size
    if k < 1 or k > width:
        raise ValueError(f"window length must be in [1, {width}], got {k}")
    if k > _MAX_WINDOW:
        raise ValueError(f"window length {k} exceeds dense-table limit {_MAX_WINDOW}")
    powers = (1 << np.arange(k - 1, -1, -1)).astype(np.int64)
    codes = sliding_window_view(bits, k) @ powers
    counts = np.bincount(codes, minlength=1 << k)
    return EmpiricalDistribution(k, counts, width - k + 1)


@dataclass(frozen=True)
class ConditionalFutures:
    """Conditional distributions of length-``future_length`` futures per past.

    Only pasts observed in the data appear; ``matrix[i]`` is the probability
    vector over future codes given past ``pasts[i]`` and ``past_counts[i]``
    is that past's marginal count.
    """

    past_length: int
    future_length: int
    pasts: np.ndarray
    matrix: np.ndarray
    past_counts: np.ndarray

    def __post_init__(self):
        if self.matrix.shape != (self.pasts.size, 1 << self.future_length):
            raise ValueError("matrix shape does not match pasts and future length")
        sums = self.matrix.sum(axis=1)
        if self.pasts.size and np.abs(sums - 1.0).max() > 1e-12:
            raise ValueError("conditional rows must sum to 1 within 1e-12")

    @property
    def past_probabilities(self) -> np.ndarray:
        return self.past_counts / self.past_counts.sum()

    def row(self, past: int | str) -> np.ndarray:
        code = window_code(past) if isinstance(past, str) else int(past)
        idx = np.searchsorted(self.pasts, code)
        if idx >= self.pasts.size or self.pasts[idx] != code:
            raise KeyError(f"past {code} was not observed")
        return self.matrix[idx]


def conditional_futures(dist2l: EmpiricalDistribution) -> ConditionalFutures:
    """Futures conditioned on pasts by direct length-2L window counting."""
    if dist2l.window_length % 2 != 0:
        raise ValueError("direct conditioning needs an even window length")
    half = dist2l.window_length // 2
    table = dist2l.counts.reshape(1 << half, 1 << half)
    marginal = table.sum(axis=1)
    pasts = np.nonzero(marginal > 0)[0]
    matrix = table[pasts] / marginal[pasts, None]
    return ConditionalFutures(half, half, pasts, matrix, marginal[pasts])


def chained_futures(dist_next: EmpiricalDistribution) -> ConditionalFutures:
    """Futures conditioned on pasts by chaining next-symbol conditionals.

    ``dist_next`` holds length-(L+1) window counts; the length-L context is
    used as a proxy for the Markov order and length-L future probabilities
    are products of the estimated one-step conditionals.
    """
    if dist_next.window_length < 2:
        raise ValueError("chaining needs windows of length >= 2")
    depth = dist_next.window_length - 1
    table = dist_next.counts.reshape(1 << depth, 2)
    marginal = table.sum(axis=1)
    seen = marginal > 0
    step = np.zeros((1 << depth, 2))
    step[seen] = table[seen] / marginal[seen, None]

    pasts = np.nonzero(seen)[0]
    mask = (1 << depth) - 1
    matrix = np.empty((pasts.size, 1 << depth))
    for i, past in enumerate(pasts):
        probs = np.ones(1)
        for j in range(depth):
            context = ((past << j) | np.arange(probs.size)) & mask
            grown = np.empty(2 * probs.size)
            grown[0::2] = probs * step[context, 0]
            grown[1::2] = probs * step[context, 1]
            probs = grown
        mass = probs.sum()
        if mass <= 0.0:
            raise ValueError(f"no continuation mass for past {past}")
        # Mass < 1 only when a chained context fell off the row tail.
        matrix[i] = probs / mass
    return ConditionalFutures(depth, depth, pasts, matrix, marginal[pasts])


def shannon_entropy(p) -> float:
    """Entropy in bits of a probability vector, with 0 log 0 = 0."""
    p = np.asarray(p, dtype=np.float64)
    if p.size == 0:
        raise ValueError("empty probability vector")
    if p.min() < 0.0:
        raise ValueError(f"negative probability {p.min()}")
    if abs(p.sum() - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {p.sum()!r}, not 1")
    nz = p[p > 0.0]
    h = float(-(nz * np.log(nz)).sum() / _LN2)
    return h if h > 0.0 else 0.0
