"""Gram-matrix route to the quantum memory cost of a stationary binary process.

The spectrum of the quantum model's steady state equals that of the Gram
matrix of its inferred memory states, so the memory cost is computed from
counted distributions alone, with no explicit quantum model.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .windows import ConditionalFutures, EmpiricalDistribution, window_string

__all__ = [
    "SpectrumError",
    "GramMatrix",
    "Spectrum",
    "gram_matrix",
    "symmetric_spectrum",
    "quantum_statistical_memory",
    "format_gram",
]

_LN2 = np.log(2.0)
_EIG_FLOOR = -1e-9
_TRACE_TOL = 1e-6


class SpectrumError(RuntimeError):
    """Eigenvalue computation failed or produced out-of-range values."""


@dataclass(frozen=True)
class GramMatrix:
    """Pairwise overlaps of inferred memory states, weighted by past probability.

    Entry (a, b) is sqrt(P(a) P(b)) times the Bhattacharyya overlap of the
    conditional future distributions of pasts a and b; the trace is 1 and the
    spectrum matches the quantum model's steady state.
    """

    past_length: int
    pasts: np.ndarray
    matrix: np.ndarray

    def __post_init__(self):
        d = self.pasts.size
        if self.matrix.shape != (d, d):
            raise ValueError("matrix must be square over the observed pasts")
        if d and np.abs(self.matrix - self.matrix.T).max() != 0.0:
            raise ValueError("matrix must be exactly symmetric")

    @property
    def dimension(self) -> int:
        return self.pasts.size

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix))


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in descending order."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        ev = self.eigenvalues
        if ev.size == 0:
            raise ValueError("empty spectrum")
        if np.any(np.diff(ev) > 0):
            raise ValueError("eigenvalues must be descending")


def gram_matrix(past_dist: EmpiricalDistribution, futures: ConditionalFutures) -> GramMatrix:
    """Overlap matrix of the inferred memory states over observed pasts."""
    if past_dist.window_length != futures.past_length:
        raise ValueError(
            f"past distribution length {past_dist.window_length} does not match "
            f"conditional past length {futures.past_length}"
        )
    observed = np.nonzero(past_dist.counts > 0)[0]
    missing = np.setdiff1d(observed, futures.pasts)
    if missing.size:
        raise ValueError(
            f"no conditional row for observed past(s) "
            f"{[window_string(int(c), past_dist.window_length) for c in missing[:4]]}"
        )
    probs = past_dist.counts[observed] / past_dist.total
    rows = np.searchsorted(futures.pasts, observed)
    amplitudes = np.sqrt(futures.matrix[rows])
    overlap = amplitudes @ amplitudes.T
    overlap = 0.5 * (overlap + overlap.T)
    weight = np.sqrt(probs)
    # np.outer and the elementwise product are both exactly symmetric
    return GramMatrix(
        past_length=past_dist.window_length,
        pasts=observed,
        matrix=np.outer(weight, weight) * overlap,
    )


def symmetric_spectrum(gram: GramMatrix) -> Spectrum:
    """All eigenvalues of the Gram matrix, descending."""
    try:
        eigenvalues = np.linalg.eigvalsh(gram.matrix)
    except np.linalg.LinAlgError as exc:
        scale = float(np.abs(gram.matrix).max())
        raise SpectrumError(
            f"eigendecomposition failed for dimension {gram.dimension}, "
            f"max |entry| {scale:.3e}"
        ) from exc
    return Spectrum(eigenvalues[::-1])


def _entropy_bits(eigenvalues: np.ndarray) -> float:
    low = float(eigenvalues.min())
    if low < _EIG_FLOOR:
        raise SpectrumError(
            f"eigenvalue {low} below the PSD floor {_EIG_FLOOR}; "
            "the Gram matrix is not a valid state"
        )
    clipped = np.clip(eigenvalues, 0.0, 1.0)
    nz = clipped[clipped > 0.0]
    h = float(-(nz * np.log(nz)).sum() / _LN2)
    return h if h > 0.0 else 0.0


def quantum_statistical_memory(gram: GramMatrix) -> float:
    """Von Neumann entropy in bits of the Gram spectrum."""
    if abs(gram.trace - 1.0) > _TRACE_TOL:
        raise ValueError(f"Gram trace {gram.trace!r} deviates from 1 beyond {_TRACE_TOL}")
    return _entropy_bits(symmetric_spectrum(gram).eigenvalues)


def format_gram(gram: GramMatrix) -> str:
    """Plain-text dump of the matrix and its spectrum, 12 significant digits."""
    lines = [
        "pasts: "
        + " ".join(window_string(int(c), gram.past_length) for c in gram.pasts)
    ]
    for row in gram.matrix:
        lines.append(" ".join(format(x, ".12g") for x in row))
    spectrum = symmetric_spectrum(gram)
    lines.append("spectrum: " + " ".join(format(x, ".12g") for x in spectrum.eigenvalues))
    return "\n".join(lines) + "\n"
