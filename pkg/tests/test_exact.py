import random
from fractions import Fraction

import pytest

from flipwait.exact import (
    absorption_times,
    conditional_wait,
    correlation_set,
    expected_wait_conway,
    expected_wait_markov,
)
from flipwait.pattern import Pattern, complement, enumerate_patterns, parse, runs

H, T = 0, 1


@pytest.mark.parametrize(
    "text,expected",
    [("HH", 6), ("HT", 4), ("H", 2), ("HTH", 10), ("THT", 10), ("HHTHT", 32), ("HHTHH", 38)],
)
def test_markov_values(text, expected):
    assert expected_wait_markov(parse(text)) == expected


@pytest.mark.parametrize(
    "text,overlaps",
    [("HH", {1, 2}), ("HT", {2}), ("HTHT", {2, 4}), ("HTH", {1, 3}), ("HHTT", {4})],
)
def test_correlation_set(text, overlaps):
    assert correlation_set(parse(text)) == overlaps


def test_correlation_set_always_contains_full_length():
    for s in range(1, 9):
        for p in enumerate_patterns(s, 2):
            cs = correlation_set(p)
            assert s in cs
            assert all(1 <= k <= s for k in cs)


def test_conway_values():
    assert expected_wait_conway(parse("HH")) == 6
    assert expected_wait_conway(parse("HTHT")) == 20
    assert expected_wait_conway(parse("0", 6)) == 6


def test_methods_agree_exhaustively_coin():
    for s in range(1, 11):
        for p in enumerate_patterns(s, 2):
            assert expected_wait_markov(p) == expected_wait_conway(p)


@pytest.mark.parametrize("alphabet", [3, 4, 5, 6])
def test_methods_agree_sampled_die(alphabet):
    rng = random.Random(alphabet)
    for s in range(1, 7):
        for _ in range(25):
            p = Pattern(tuple(rng.randrange(alphabet) for _ in range(s)), alphabet)
            assert expected_wait_markov(p) == expected_wait_conway(p)


def test_methods_and_dispatch_sampled_long_patterns():
    from flipwait.closed_form import dispatch

    rng = random.Random(14)
    for s in (13, 14):
        for _ in range(100):
            p = Pattern(tuple(rng.randrange(2) for _ in range(s)), 2)
            markov = expected_wait_markov(p)
            assert markov == expected_wait_conway(p)
            closed = dispatch(p)
            if closed is not None:
                assert closed == markov


def test_complement_symmetry():
    for s in range(1, 11):
        for p in enumerate_patterns(s, 2):
            assert expected_wait_conway(p) == expected_wait_conway(complement(p))


def test_absorption_times_shape():
    times = absorption_times(parse("HTH"))
    assert times[-1] == 0
    assert times[0] == 10
    assert all(t >= 0 for t in times)


def test_conditional_wait_base_cases():
    hh = parse("HH")
    assert conditional_wait(hh, ()) == expected_wait_markov(hh)
    assert conditional_wait(hh, hh) == 2
    assert conditional_wait(parse("HHH"), parse("H")) == 13


def test_conditional_wait_rejects_alphabet_mismatch():
    with pytest.raises(Exception):
        conditional_wait(parse("HH"), parse("0,1", 3))


def test_prefix_decomposition_identity():
    # E(S) = E(R) + E(S|R) - r for every proper prefix R, all S up to length 8
    for s in range(2, 9):
        for p in enumerate_patterns(s, 2):
            e = expected_wait_markov(p)
            for r in range(1, s):
                prefix = Pattern(p.symbols[:r], 2)
                assert e == expected_wait_markov(prefix) + conditional_wait(p, prefix) - r


def test_prefix_decomposition_identity_sampled_lengths_9_10():
    rng = random.Random(910)
    for s in (9, 10):
        for _ in range(50):
            p = Pattern(tuple(rng.randrange(2) for _ in range(s)), 2)
            e = expected_wait_markov(p)
            for r in range(1, s):
                prefix = Pattern(p.symbols[:r], 2)
                assert e == expected_wait_markov(prefix) + conditional_wait(p, prefix) - r


def test_head_run_conditioning_identities():
    # for S starting with a maximal run of k heads and E = E(S):
    #   i <  k: E(S|H^i T) = E+i+1        and E(S|H^i) = E+i+2-2^(i+1)
    #   i >= k: E(S|H^i T) = E+i+1-2^(k+1) and E(S|H^i) = E+i+2-2^(k+1)
    # the first i >= k form needs the game still open after H^i T, so it
    # only applies when S has at least two runs
    for s in range(1, 9):
        for p in enumerate_patterns(s, 2):
            if p.symbols[0] != H:
                continue
            k = runs(p).runs[0][1]
            e = expected_wait_markov(p)
            nruns = len(runs(p))
            for i in range(0, k + 3):
                given_heads = (H,) * i
                assert conditional_wait(p, given_heads) == (
                    e + i + 2 - 2 ** (i + 1) if i < k else e + i + 2 - 2 ** (k + 1)
                )
                given_tail = (H,) * i + (T,)
                if i < k:
                    assert conditional_wait(p, given_tail) == e + i + 1
                elif nruns >= 2:
                    assert conditional_wait(p, given_tail) == e + i + 1 - 2 ** (k + 1)


def test_results_are_exact_rationals():
    val = expected_wait_markov(parse("HTH"))
    assert isinstance(val, Fraction)
    assert val.denominator == 1
