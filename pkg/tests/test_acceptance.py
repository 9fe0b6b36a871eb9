"""Acceptance suite: every criterion pins its tolerance and prints a pass
line. Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import numpy as np
import pytest

from ecamech import (
    ExperimentConfig,
    Tape,
    alternating_row,
    conditional_futures,
    constant_row,
    golden_mean_distribution,
    golden_mean_machine,
    gram_matrix,
    parse_rule,
    periodic_row,
    quantum_statistical_memory,
    rank_spectrum,
    row_complexities,
    run_experiment,
    run_open_boundary,
    shannon_entropy,
    statistical_complexity,
    write_traces_csv,
)

CLASS_I_RULES = (0, 8, 32, 40, 128, 136, 160, 168)
SPECTRUM_RULES = (30, 22, 18, 122, 54, 110)


@pytest.fixture(scope="module")
def class1_result():
    config = ExperimentConfig(
        rules=CLASS_I_RULES, width=8_000, t_max=200, seeds=(1, 2, 3, 4, 5), out_dir="unused"
    )
    return run_experiment(config)


@pytest.fixture(scope="module")
def rule30_result():
    config = ExperimentConfig(
        rules=(30,), width=64_000, t_max=1_000, window_l=6, seeds=(1, 2, 3, 4, 5), out_dir="unused"
    )
    return run_experiment(config)


@pytest.fixture(scope="module")
def spectrum_config():
    return ExperimentConfig(
        rules=SPECTRUM_RULES, width=16_000, t_max=1_000, seeds=(1, 2, 3), out_dir="unused"
    )


@pytest.fixture(scope="module")
def spectrum_result(spectrum_config):
    return run_experiment(spectrum_config)


def test_criterion_1_exact_oracles():
    cases = [
        ("all-zeros", constant_row(64_000, 0), 1, 0.0, 0.0),
        ("all-ones", constant_row(64_000, 1), 1, 0.0, 0.0),
        ("alternating", alternating_row(64_000), 2, 1.0, 1.0),
        ("period-3", periodic_row(64_000, "001"), 3, np.log2(3), np.log2(3)),
    ]
    for name, row, want_states, want_c_mu, want_c_q in cases:
        point = row_complexities(row, t=1, window_l=6)
        assert point.n_states == want_states, name
        assert abs(point.c_mu - want_c_mu) <= 1e-9, (name, point.c_mu)
        assert abs(point.c_q - want_c_q) <= 1e-9, (name, point.c_q)
    print("ACCEPTANCE 1 [exact oracles at W=64,000]: PASS")


def test_criterion_2_class_one_rules_lose_all_memory(class1_result):
    assert not class1_result.failures
    worst = 0.0
    for trace in class1_result.traces:
        late = [p.c_q for p in trace.points if p.t >= 50]
        assert late, (trace.rule, trace.seed)
        worst = max(worst, max(late))
        assert max(late) <= 1e-6, (trace.rule, trace.seed, max(late))
    print(
        f"ACCEPTANCE 2 [C_q -> 0 for Class I rules {CLASS_I_RULES} at W=8,000]: "
        f"PASS (max late C_q = {worst:.2e})"
    )


def test_criterion_3_rule_30_stays_negligible(rule30_result):
    assert not rule30_result.failures
    assert len(rule30_result.traces) == 5
    worst = 0.0
    for trace in rule30_result.traces:
        peak = max(p.c_q for p in trace.points)
        worst = max(worst, peak)
        assert peak <= 0.05, (trace.seed, peak)
    print(
        "ACCEPTANCE 3 [rule 30 C_q <= 0.05 at W=64,000, t_max=1000, 5 seeds]: "
        f"PASS (max C_q = {worst:.4f})"
    )


def test_criterion_4_spectrum_ordering(spectrum_result):
    assert not spectrum_result.failures
    report = rank_spectrum(spectrum_result.traces)
    rates = report.rates()
    assert rates[110] > rates[54], rates
    for slow_grower in (54, 122, 18):
        assert rates[slow_grower] > rates[22], (slow_grower, rates)
        assert rates[slow_grower] > rates[30], (slow_grower, rates)
    stats110 = report.per_rule[110]
    by_t = dict(zip(stats110.ts, stats110.c_q_mean))
    growth = by_t[1000] - by_t[10]
    assert growth >= 0.5, growth
    ordered = " > ".join(str(r) for r in report.ranking)
    print(
        f"ACCEPTANCE 4 [spectrum ordering at W=16,000]: PASS "
        f"(ranking {ordered}; rule 110 grew {growth:.2f} bits)"
    )


def test_rule30_growth_rate_is_flat(rule30_result):
    # supporting check: the pseudo-random rule has no memory-cost growth
    rate = rank_spectrum(rule30_result.traces).per_rule[30].growth_rate
    assert abs(rate) <= 0.01, rate
    print(f"  [rule 30 growth rate at full scale: {rate:+.5f} bits/doubling]")


def test_ordering_is_stable_per_seed(spectrum_result):
    # supporting check: the criterion-4 inequalities hold on every single seed
    for seed in {trace.seed for trace in spectrum_result.traces}:
        rates = rank_spectrum(
            [trace for trace in spectrum_result.traces if trace.seed == seed]
        ).rates()
        assert rates[110] > rates[54], seed
        for slow_grower in (54, 122, 18):
            assert rates[slow_grower] > max(rates[22], rates[30]), (seed, slow_grower)
    print("  [per-seed ordering stable]")


def test_criterion_5_quantum_advantage(class1_result, rule30_result, spectrum_result):
    dist = golden_mean_distribution(12)
    gram = gram_matrix(dist.prefix_marginal(6), conditional_futures(dist))
    c_q = quantum_statistical_memory(gram)
    c_mu = statistical_complexity(golden_mean_machine())
    assert c_q < c_mu, (c_q, c_mu)

    checked = 0
    for result in (class1_result, rule30_result, spectrum_result):
        for trace in result.traces:
            for point in trace.points:
                assert point.c_q <= point.past_entropy + 1e-9, (trace.rule, point.t)
                checked += 1
    print(
        f"ACCEPTANCE 5 [quantum advantage]: PASS "
        f"(golden mean C_q = {c_q:.4f} < C_mu = {c_mu:.4f}; "
        f"C_q <= H[pasts] on {checked} empirical rows)"
    )


def test_criterion_6_light_cone_boundary():
    rng_pairs = np.random.default_rng(2024)
    for _ in range(100):
        rule = parse_rule(int(rng_pairs.integers(0, 256)))
        seed = int(rng_pairs.integers(0, 1_000_000))
        width = int(rng_pairs.integers(1, 65))
        t_max = int(rng_pairs.integers(1, 17))
        rng = np.random.default_rng(seed)
        narrow = run_open_boundary(Tape.random(width, rng), rule, t_max, rng)
        rng = np.random.default_rng(seed)
        wide = run_open_boundary(Tape.random(width, rng), rule, t_max, rng, pad=2 * t_max)
        assert narrow.rows == wide.rows, (rule.rule_number, seed, width, t_max)
    print("ACCEPTANCE 6 [light-cone property over 100 random (rule, seed) pairs]: PASS")


def test_criterion_7_numerical_hygiene(rule30_result, spectrum_result):
    worst_trace, worst_eig, worst_resid = 0.0, 0.0, 0.0
    for result in (rule30_result, spectrum_result):
        for trace in result.traces:
            for point in trace.points:
                assert point.gram_trace_error <= 1e-9, (trace.rule, point.t)
                assert point.gram_min_eigenvalue >= -1e-9, (trace.rule, point.t)
                assert point.machine_residual <= 1e-10, (trace.rule, point.t)
                worst_trace = max(worst_trace, point.gram_trace_error)
                worst_eig = min(worst_eig, point.gram_min_eigenvalue)
                worst_resid = max(worst_resid, point.machine_residual)
    print(
        "ACCEPTANCE 7 [numerical hygiene]: PASS "
        f"(trace err <= {worst_trace:.1e}, min eig >= {worst_eig:.1e}, "
        f"residual <= {worst_resid:.1e})"
    )


def test_criterion_8_reproducibility(spectrum_config, spectrum_result, tmp_path):
    repeat = run_experiment(spectrum_config)
    first, second = tmp_path / "first.csv", tmp_path / "second.csv"
    write_traces_csv(spectrum_result, first)
    write_traces_csv(repeat, second)
    assert first.read_bytes() == second.read_bytes()
    print("ACCEPTANCE 8 [byte-identical CSV on repeated run]: PASS")
