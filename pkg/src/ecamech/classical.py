"""Sub-tree reconstruction of causal states and the classical memory cost.

A row is parsed in length-2L windows into a prefix-count tree. Depth-L nodes
whose depth-L future histograms are statistically indistinguishable are merged
into causal states; the merged states define an edge-emitting hidden Markov
model whose stationary entropy is the statistical complexity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats

from .tape import Tape
from .windows import EmpiricalDistribution, count_windows, shannon_entropy, window_string

__all__ = [
    "ConvergenceError",
    "SubTree",
    "CausalPartition",
    "EpsilonMachine",
    "build_subtree",
    "chi2_homogeneity",
    "chi2_same",
    "merge_states",
    "build_machine",
    "infer_machine",
    "statistical_complexity",
    "format_machine",
]

_STATIONARY_TOL = 1e-12
_STATIONARY_MAX_ITER = 100_000


class ConvergenceError(RuntimeError):
    """A fixed-point iteration failed to reach tolerance."""


@dataclass(frozen=True)
class SubTree:
    """Prefix-count tree of the length-2L windows of a row.

    The dense window histogram determines every node count: the count of a
    depth-m node is the number of windows whose first m symbols spell its
    path, so each node's count equals the sum of its children's.
    """

    half_depth: int
    dist: EmpiricalDistribution

    def __post_init__(self):
        if self.dist.window_length != 2 * self.half_depth:
            raise ValueError("window length must equal twice the half depth")

    @property
    def depth(self) -> int:
        return 2 * self.half_depth

    def level_counts(self, depth: int) -> np.ndarray:
        """Counts of all 2**depth nodes at one level."""
        if not 1 <= depth <= self.depth:
            raise ValueError(f"depth must be in [1, {self.depth}]")
        return self.dist.counts.reshape(1 << depth, -1).sum(axis=1)

    def node_count(self, code: int, depth: int) -> int:
        return int(self.level_counts(depth)[code])

    def future_histograms(self) -> np.ndarray:
        """Per depth-L node, the histogram of the depth-L futures below it."""
        half = self.half_depth
        return self.dist.counts.reshape(1 << half, 1 << half)


def build_subtree(row: Tape | np.ndarray, half_depth: int) -> SubTree:
    """Parse a row in moving windows of size 2L into a prefix-count tree."""
    width = row.width if isinstance(row, Tape) else np.asarray(row).size
    if width < 2 * half_depth:
        raise ValueError(f"row width {width} is shorter than 2L = {2 * half_depth}")
    return SubTree(half_depth, count_windows(row, 2 * half_depth))


def chi2_homogeneity(counts_a, counts_b) -> tuple[float, int, float]:
    """Two-sample chi-squared test that two histograms share one distribution.

    Cells with zero combined count are dropped; degrees of freedom are the
    number of occupied cells minus one. Returns (statistic, dof, p-value).
    """
    a = np.asarray(counts_a, dtype=np.float64)
    b = np.asarray(counts_b, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError("histograms must share one future alphabet")
    total_a, total_b = a.sum(), b.sum()
    if total_a < 1 or total_b < 1:
        raise ValueError("both histograms need at least one observation")
    combined = a + b
    occupied = combined > 0
    dof = int(occupied.sum()) - 1
    if dof < 1:
        return 0.0, 0, 1.0
    pooled = combined[occupied] / (total_a + total_b)
    expected_a = total_a * pooled
    expected_b = total_b * pooled
    stat = float(
        ((a[occupied] - expected_a) ** 2 / expected_a).sum()
        + ((b[occupied] - expected_b) ** 2 / expected_b).sum()
    )
    return stat, dof, float(stats.chi2.sf(stat, dof))


def chi2_same(counts_a, counts_b, alpha: float = 0.05) -> bool:
    """True when the homogeneity test does not separate the histograms."""
    _, _, pvalue = chi2_homogeneity(counts_a, counts_b)
    return pvalue >= alpha


@dataclass(frozen=True)
class CausalPartition:
    """Assignment of observed length-L pasts to causal-state labels."""

    past_length: int
    pasts: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        if self.pasts.shape != self.labels.shape:
            raise ValueError("pasts and labels must align")

    @property
    def n_states(self) -> int:
        return int(self.labels.max()) + 1 if self.labels.size else 0

    def label_of(self, past: int) -> int:
        idx = np.searchsorted(self.pasts, past)
        if idx >= self.pasts.size or self.pasts[idx] != past:
            raise KeyError(f"past {past} was not observed")
        return int(self.labels[idx])

    def members(self, label: int) -> list[int]:
        return [int(p) for p in self.pasts[self.labels == label]]


def merge_states(tree: SubTree, alpha: float = 0.05) -> CausalPartition:
    """Label depth-L nodes, merging those with indistinguishable futures.

    Nodes are visited in descending count order and joined to the first
    existing class whose pooled future histogram passes the chi-squared
    test; otherwise they found a new class.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    histograms = tree.future_histograms()
    marginal = histograms.sum(axis=1)
    observed = np.nonzero(marginal > 0)[0]
    order = observed[np.lexsort((observed, -marginal[observed]))]

    pooled: list[np.ndarray] = []
    label_map: dict[int, int] = {}
    for past in order:
        hist = histograms[past]
        for j, rep in enumerate(pooled):
            if chi2_same(hist, rep, alpha):
                pooled[j] = rep + hist
                label_map[int(past)] = j
                break
        else:
            label_map[int(past)] = len(pooled)
            pooled.append(hist.astype(np.float64))

    labels = np.array([label_map[int(p)] for p in observed], dtype=np.int64)
    return CausalPartition(tree.half_depth, observed, labels)


@dataclass(frozen=True)
class EpsilonMachine:
    """Edge-emitting hidden Markov model over inferred causal states.

    ``transitions[y, k, j]`` is the probability of emitting ``y`` and moving
    to state ``k`` given state ``j``; columns are jointly stochastic. The
    stationary vector satisfies ``(T0 + T1) pi = pi``.
    """

    past_length: int
    transitions: np.ndarray
    stationary: np.ndarray
    partition: CausalPartition
    residual: float
    dropped_mass: float

    @property
    def n_states(self) -> int:
        return self.stationary.size


def _stationary_distribution(matrix: np.ndarray, start: np.ndarray) -> tuple[np.ndarray, float]:
    """Fixed point of a column-stochastic matrix by damped power iteration.

    Iterating (I + M)/2 converges for periodic and reducible chains alike;
    from the empirical start vector the limit weights recurrent classes by
    their empirical mass.
    """
    pi = start / start.sum()
    for _ in range(_STATIONARY_MAX_ITER):
        step = matrix @ pi
        residual = float(np.abs(step - pi).max())
        if residual <= _STATIONARY_TOL:
            pi = np.maximum(pi, 0.0)
            return pi / pi.sum(), residual
        pi = 0.5 * (pi + step)
    raise ConvergenceError(
        f"stationary iteration did not reach {_STATIONARY_TOL} within "
        f"{_STATIONARY_MAX_ITER} iterations (n={pi.size}, residual={residual:.3e})"
    )


def build_machine(tree: SubTree, partition: CausalPartition) -> EpsilonMachine:
    """Aggregate labeled pasts into labeled transition matrices and solve pi.

    Each past contributes its empirical weight times its next-symbol
    conditionals; the landing state is the class of the shifted past.
    """
    half = tree.half_depth
    if partition.past_length != half:
        raise ValueError("partition depth does not match the tree")
    n = partition.n_states
    level_l = tree.level_counts(half)
    level_next = tree.level_counts(half + 1)
    label_map = {int(p): int(l) for p, l in zip(partition.pasts, partition.labels)}
    mask = (1 << half) - 1

    transitions = np.zeros((2, n, n))
    weights = np.zeros(n)
    dropped = 0.0
    for past, label in label_map.items():
        w = float(level_l[past])
        weights[label] += w
        for y in (0, 1):
            count = float(level_next[(past << 1) | y])
            if count == 0.0:
                continue
            shifted = ((past << 1) | y) & mask
            target = label_map.get(shifted)
            if target is None:
                # Shifted past fell off the row tail; drop and renormalize.
                dropped += count
                continue
            transitions[y, target, label] += w * count / level_l[past]
    transitions /= weights[None, None, :]
    column_mass = transitions.sum(axis=(0, 1))
    starved = np.nonzero(column_mass == 0.0)[0]
    if starved.size:
        raise ValueError(
            f"row too short to estimate any transition out of state {int(starved[0])}"
        )
    transitions /= column_mass[None, None, :]

    merged = transitions.sum(axis=0)
    pi, residual = _stationary_distribution(merged, weights)
    return EpsilonMachine(
        past_length=half,
        transitions=transitions,
        stationary=pi,
        partition=partition,
        residual=residual,
        dropped_mass=dropped / tree.dist.total,
    )


def infer_machine(row: Tape | np.ndarray, half_depth: int, alpha: float = 0.05) -> EpsilonMachine:
    """Full pipeline: window tree, chi-squared merging, machine construction."""
    tree = build_subtree(row, half_depth)
    return build_machine(tree, merge_states(tree, alpha))


def statistical_complexity(machine: EpsilonMachine) -> float:
    """Shannon entropy in bits of the stationary state distribution."""
    return shannon_entropy(machine.stationary)


def format_machine(machine: EpsilonMachine) -> str:
    """Plain-text edge list ``state_from, symbol, prob, state_to`` plus pi."""
    lines = []
    for j in range(machine.n_states):
        for y in (0, 1):
            for k in range(machine.n_states):
                prob = float(machine.transitions[y, k, j])
                if prob > 0.0:
                    lines.append(f"{j}, {y}, {prob!r}, {k}")
    lines.append("pi: " + " ".join(repr(float(x)) for x in machine.stationary))
    lines.append(
        "states: "
        + "; ".join(
            f"{j}=" + ",".join(window_string(p, machine.past_length) for p in machine.partition.members(j))
            for j in range(machine.n_states)
        )
    )
    return "\n".join(lines) + "\n"
