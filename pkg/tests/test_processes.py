import numpy as np
import pytest

from ecamech import (
    alternating_row,
    constant_row,
    golden_mean_distribution,
    golden_mean_machine,
    periodic_row,
    statistical_complexity,
    window_string,
)


def test_constant_rows():
    assert constant_row(10, 0).to_string() == "0" * 10
    assert constant_row(10, 1).to_string() == "1" * 10
    with pytest.raises(ValueError):
        constant_row(10, 2)


def test_alternating_row():
    assert alternating_row(5).to_string() == "01010"
    assert alternating_row(5, first=1).to_string() == "10101"


def test_periodic_row_truncates():
    assert periodic_row(8, "001").to_string() == "00100100"
    with pytest.raises(ValueError):
        periodic_row(8, "")


def test_golden_mean_counts_are_exact():
    k = 6
    dist = golden_mean_distribution(k)
    assert dist.total == 3 * 2 ** (k - 1)
    for code, count in enumerate(dist.counts):
        if "11" in window_string(code, k):
            assert count == 0
    # number of allowed strings of length 6 is the Fibonacci number F(8) = 21
    assert (dist.counts > 0).sum() == 21


def test_golden_mean_marginals_are_consistent():
    longer = golden_mean_distribution(7)
    shorter = golden_mean_distribution(6)
    assert np.allclose(longer.prefix_marginal(6).probabilities, shorter.probabilities)


def test_golden_mean_is_stationary():
    # prefix and suffix marginals of the window distribution coincide
    k = 6
    dist = golden_mean_distribution(k)
    prefix = dist.prefix_marginal(k - 1).probabilities
    suffix = dist.counts.reshape(2, 1 << (k - 1)).sum(axis=0) / dist.total
    assert np.allclose(prefix, suffix)


def test_golden_mean_symbol_frequencies():
    dist = golden_mean_distribution(1)
    assert dist.probabilities.tolist() == [2 / 3, 1 / 3]


def test_golden_mean_machine_is_stationary_fixed_point():
    machine = golden_mean_machine()
    merged = machine.transitions.sum(axis=0)
    assert np.allclose(merged @ machine.stationary, machine.stationary)
    assert machine.transitions.sum(axis=(0, 1)).tolist() == [1.0, 1.0]


def test_golden_mean_classical_complexity():
    c_mu = statistical_complexity(golden_mean_machine())
    assert c_mu == pytest.approx(np.log2(3) - 2 / 3, abs=1e-12)
