
import pytest

from flipwait import _simpy
from flipwait.exact import expected_wait_markov
from flipwait.pattern import enumerate_patterns, parse
from flipwait.simulate import FLIP_CAP, SimReport, kernel_name, simulate_wait

KERNELS = ["python"] + (["compiled"] if kernel_name() == "compiled" else [])


def test_determinism_same_seed_same_report():
    p = parse("HTH")
    a = simulate_wait(p, 20000, 12345)
    b = simulate_wait(p, 20000, 12345)
    assert a == b


def test_different_seeds_differ():
    p = parse("HTH")
    assert simulate_wait(p, 20000, 1) != simulate_wait(p, 20000, 2)


@pytest.mark.skipif(len(KERNELS) < 2, reason="compiled kernel not built")
def test_kernels_bit_identical():
    for text, trials, seed in (("HH", 50000, 42), ("HTHT", 30000, 7), ("0,1", 20000, 99)):
        alphabet = 2 if "," not in text else 3
        p = parse(text, alphabet)
        assert simulate_wait(p, trials, seed, kernel="python") == simulate_wait(
            p, trials, seed, kernel="compiled"
        )


def test_batch_split_does_not_change_totals():
    # per-trial substreams: one big batch equals the sum of small batches
    p = parse("HH")
    from flipwait.automaton import build

    a = build(p)
    flat = [t for row in a.transitions for t in row]
    whole = _simpy.run_batch(flat, 2, 2, 1000, 42, 0, FLIP_CAP)
    first = _simpy.run_batch(flat, 2, 2, 400, 42, 0, FLIP_CAP)
    second = _simpy.run_batch(flat, 2, 2, 600, 42, 400, FLIP_CAP)
    assert whole[0] == first[0] + second[0]
    assert whole[1] == first[1] + second[1]
    assert whole[2] == min(first[2], second[2])
    assert whole[3] == max(first[3], second[3])


def test_report_fields():
    rep = simulate_wait(parse("H"), 10000, 3)
    assert isinstance(rep, SimReport)
    assert rep.min_flips == 1
    assert rep.max_flips >= rep.min_flips
    assert rep.trials == 10000
    assert rep.mean == rep.total_flips / rep.trials
    assert rep.std_error > 0
    assert simulate_wait(parse("H"), 1, 3).std_error == 0.0


def test_mean_close_to_exact_headline():
    rep = simulate_wait(parse("HH"), 10**5, 42)
    assert abs(rep.mean - 6) < 0.1
    rep = simulate_wait(parse("HT"), 10**5, 42)
    assert abs(rep.mean - 4) < 0.1
    rep = simulate_wait(parse("H"), 10**5, 42)
    assert abs(rep.mean - 2) < 0.05 and rep.min_flips == 1


def test_trials_validation():
    with pytest.raises(ValueError):
        simulate_wait(parse("HH"), 0, 1)


def test_min_flips_at_least_pattern_length():
    for text in ("HH", "HTHT"):
        rep = simulate_wait(parse(text), 5000, 9)
        assert rep.min_flips >= len(text)
        assert rep.mean >= len(text)


@pytest.mark.parametrize("kernel", KERNELS)
def test_flip_cap_raises(kernel):
    from flipwait.automaton import build
    from flipwait.simulate import _kernel

    impl = _kernel(kernel)
    p = parse("H" * 12)
    a = build(p)
    flat = [t for row in a.transitions for t in row]
    with pytest.raises(ValueError, match="flip cap"):
        impl.run_batch(flat, a.accept_state, 2, 100, 42, 0, 5)


def test_coverage_of_exact_value_across_seeds():
    # 4 standard-error interval around the simulated mean should cover the
    # exact expectation for nearly every (pattern, seed) pair
    trials = 4000
    patterns = [p for s in range(1, 4) for p in enumerate_patterns(s, 2)]
    # lengths 4 and 5 sampled to keep the pure-Python fallback viable
    for s in (4, 5):
        patterns.extend(list(enumerate_patterns(s, 2))[:: max(1, 2**s // 6)])
    hits = 0
    total = 0
    for p in patterns:
        exact = float(expected_wait_markov(p))
        for seed in range(20):
            rep = simulate_wait(p, trials, seed)
            total += 1
            if abs(rep.mean - exact) <= 4 * rep.std_error:
                hits += 1
    assert hits / total >= 0.95


def test_die_simulation():
    rep = simulate_wait(parse("0", 6), 10**5, 11)
    assert abs(rep.mean - 6) < 0.15
    assert rep.min_flips == 1
