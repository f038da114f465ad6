"""Seeded Monte Carlo estimation of the expected waiting time.

A sanity check that shares nothing with the exact machinery beyond the
automaton table.  The generator is SplitMix64 with one substream per trial
(see flipwait._simpy for the exact scheme), so reports are bit-identical
for a given (pattern, trials, seed) on every platform, kernel, batch split,
or thread count.  Trials accumulate into exact integer sums and only the
final mean and standard error are floats.

The compiled kernel is preferred at import; the pure-Python fallback is
semantically identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from flipwait import _simpy
from flipwait.automaton import build
from flipwait.pattern import Pattern

try:
    from flipwait import _simcore

    _DEFAULT_KERNEL = "compiled"
except ImportError:
    _simcore = None
    _DEFAULT_KERNEL = "python"

MASK64 = (1 << 64) - 1
FLIP_CAP = 10**7
BATCH_SIZE = 1 << 16


def kernel_name() -> str:
    """Which kernel simulate_wait uses by default: 'compiled' or 'python'."""
    return _DEFAULT_KERNEL


def _kernel(name: str | None):
    if name is None:
        name = _DEFAULT_KERNEL
    if name == "python":
        return _simpy
    if name == "compiled":
        if _simcore is None:
            raise RuntimeError("compiled kernel is not available in this build")
        return _simcore
    raise ValueError(f"unknown kernel {name!r} (expected 'compiled' or 'python')")


@dataclass(frozen=True)
class SimReport:
    pattern: str
    trials: int
    seed: int
    mean: float
    std_error: float
    min_flips: int
    max_flips: int
    total_flips: int


def simulate_wait(p: Pattern, trials: int, seed: int, kernel: str | None = None) -> SimReport:
    """Run independent games until first occurrence and aggregate their lengths.

    Raises ValueError for trials < 1 or when a single game exceeds FLIP_CAP
    draws.  The kernel argument exists for benchmarking; both kernels return
    identical reports.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    impl = _kernel(kernel)
    a = build(p)
    flat = [t for row in a.transitions for t in row]
    accept = a.accept_state
    nsym = p.alphabet_size
    seed &= MASK64

    total = 0
    total_sq = 0
    mn = FLIP_CAP + 1
    mx = 0
    done = 0
    while done < trials:
        batch = min(BATCH_SIZE, trials - done)
        b_total, b_sq, b_mn, b_mx = impl.run_batch(flat, accept, nsym, batch, seed, done, FLIP_CAP)
        total += b_total
        total_sq += b_sq
        mn = min(mn, b_mn)
        mx = max(mx, b_mx)
        done += batch

    mean = total / trials
    if trials > 1:
        # keep the variance numerator exact; the single int/int division is
        # correctly rounded, so reports match bit for bit everywhere
        var_numerator = trials * total_sq - total * total
        std_error = math.sqrt(var_numerator / (trials * trials * (trials - 1)))
    else:
        std_error = 0.0
    return SimReport(
        pattern=p.text(),
        trials=trials,
        seed=seed,
        mean=mean,
        std_error=std_error,
        min_flips=mn,
        max_flips=mx,
        total_flips=total,
    )
