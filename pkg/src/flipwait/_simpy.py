"""Pure-Python Monte Carlo kernel; bit-identical to the compiled one.

Every trial gets its own generator stream: trial t starts a SplitMix64
sequence from the internal state mix(seed + (t+1) * GAMMA), advanced by
GAMMA per draw with the standard 64-bit finalizer.  Mixing the start is the
usual split step; without it consecutive trials would replay shifted views
of one global sequence and be heavily correlated.  Symbols are the output
modulo the alphabet size.  Per-trial streams make the result independent of
trial scheduling, so any batching or threading produces the same totals.
"""

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def run_batch(flat, accept, nsym, trials, seed, first_trial, flip_cap):
    """Play `trials` games; returns (total_flips, total_sq, min_flips, max_flips).

    flat is the row-major automaton table (state * nsym + symbol).  Raises
    ValueError if any single game exceeds flip_cap draws.
    """
    total = 0
    total_sq = 0
    mn = flip_cap + 1
    mx = 0
    for t in range(trials):
        z = _mix((seed + (first_trial + t + 1) * GAMMA) & MASK64)
        state = 0
        flips = 0
        while state != accept:
            if flips >= flip_cap:
                raise ValueError(f"flip cap {flip_cap} exceeded in trial {first_trial + t}")
            z = (z + GAMMA) & MASK64
            state = flat[state * nsym + _mix(z) % nsym]
            flips += 1
        total += flips
        total_sq += flips * flips
        if flips < mn:
            mn = flips
        if flips > mx:
            mx = flips
    return total, total_sq, mn, mx
