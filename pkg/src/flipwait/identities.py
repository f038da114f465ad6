"""Summation identities: exact partial sums of sum(n * E_n / c**n) with tail control.

The waiting-time expectation equals the series sum(n * E_n / c**n).  This
module evaluates exact rational partial sums of that series, either from a
pattern's counting DP or from a sequence family, and pairs each with a
certified bound on the neglected tail.

Tail bound: from any transient automaton state the next s draws finish the
game with probability at least c**-s, so the survival mass rho_n shrinks by
the factor (1 - c**-s) at least every s steps.  Writing the tail as
(N+1)*rho_N + sum(rho_n, n > N) and bounding the sum geometrically gives
tail <= rho_N * (N + s * c**s).  For a single face (s=1, c=2) this is
exactly (N+2)/2**N, the true tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice

from flipwait.closed_form import wait_alternating
from flipwait.counting import count_first_occurrence
from flipwait.pattern import Pattern
from flipwait.sequences import (
    SeqFamily,
    alt_g,
    base_index,
    fib_bar,
    fib_order,
    fib_tilde,
    fib_two_param,
    iter_values,
    series_shift,
)

CorollaryParams = tuple[int, ...]


def partial_expectation(p: Pattern, N: int) -> Fraction:
    """sum(n * counts[n] / c**n) for n = 0..N as an exact rational."""
    c = p.alphabet_size
    counts = count_first_occurrence(p, N)
    total = 0
    for n in range(N + 1):
        total += n * counts[n] * c ** (N - n)
    return Fraction(total, c**N)


def _survival_numerator(masses: list[int], N: int, c: int) -> int:
    """c**N * rho_N where rho_N = 1 - sum(masses[n] / c**n)."""
    total = 0
    for n, m in enumerate(masses):
        total += m * c ** (N - n)
    return c**N - total


def tail_bound(subject: "Pattern | SeqFamily", N: int) -> Fraction:
    """Certified upper bound on the series tail beyond N.

    For a Pattern the mass sequence comes from the counting DP.  For a
    SeqFamily it is the aligned coefficient sequence; the geometric-decay
    constant uses the generating function's numerator degree as the pattern
    length, which is the length of the underlying pattern whenever the
    family counts first occurrences.
    """
    if isinstance(subject, Pattern):
        c = subject.alphabet_size
        s = len(subject)
        masses = list(count_first_occurrence(subject, N).counts)
    else:
        c = 2
        s = base_index(subject) + series_shift(subject)
        masses = _aligned_coefficients(subject, N)
    rho_num = _survival_numerator(masses, N, c)
    return Fraction(rho_num, c**N) * (N + s * c**s)


def _aligned_coefficients(f: SeqFamily, N: int) -> list[int]:
    """Series coefficients a_0..a_N with a_n = family value at n - shift."""
    start = base_index(f) + series_shift(f)
    out = [0] * min(start, N + 1)
    if start > N:
        return out
    for _, v in islice(iter_values(f), N - start + 1):
        out.append(v)
    return out


@dataclass(frozen=True)
class CorollaryCheck:
    """One verified summation identity at truncation N."""

    which: str
    params: CorollaryParams
    N: int
    partial: Fraction
    target: Fraction
    gap: Fraction
    bound: Fraction

    @property
    def certified(self) -> bool:
        # the bound is achieved exactly for the single-face family, so <=
        return self.gap <= self.bound


_COROLLARIES = ("id1", "id1bar", "id2", "id3", "alt")


def corollary_family(which: str, params: CorollaryParams) -> tuple[SeqFamily, Fraction]:
    """Sequence family and closed-form series target for a corollary id.

    id1(k):    sum n*fib:k(n-1)/2**n        = 2**(k+1) - 2
    id1bar(k): sum n*fib-bar:k(n-2)/2**n    = 2**(k+1)
    id2(k,m):  sum n*fib2:k,m(n-2)/2**n     = 2**(k+m+1) + 2**(m+1) - 2
    id3(k,m):  sum n*fib-tilde:k,m(n-3)/2**n = 2**(k+m+2) + 2**(m+1)
    alt(s):    sum n*alt:s(n)/2**n          = the alternating closed form
    """
    if which == "id1":
        (k,) = params
        return fib_order(k), Fraction(2 ** (k + 1) - 2)
    if which == "id1bar":
        (k,) = params
        return fib_bar(k), Fraction(2 ** (k + 1))
    if which == "id2":
        k, m = params
        if k < 1 or m < 1:
            raise ValueError(f"id2 needs k, m >= 1, got {params}")
        return fib_two_param(k, m), Fraction(2 ** (k + m + 1) + 2 ** (m + 1) - 2)
    if which == "id3":
        k, m = params
        if k < 1 or m < 1:
            raise ValueError(f"id3 needs k, m >= 1, got {params}")
        return fib_tilde(k, m), Fraction(2 ** (k + m + 2) + 2 ** (m + 1))
    if which == "alt":
        (s,) = params
        return alt_g(s), Fraction(wait_alternating(s))
    raise ValueError(f"unknown corollary {which!r} (expected one of {', '.join(_COROLLARIES)})")


def default_truncation(which: str, params: CorollaryParams) -> int:
    family, _ = corollary_family(which, params)
    s = base_index(family) + series_shift(family)
    return max(200, 50 * s)


def verify_corollary(which: str, params: CorollaryParams, N: int) -> CorollaryCheck:
    """Exact partial sum of the identity's series, its target, gap, and tail bound."""
    family, target = corollary_family(which, params)
    coeffs = _aligned_coefficients(family, N)
    total = 0
    for n, a in enumerate(coeffs):
        total += n * a << (N - n)
    partial = Fraction(total, 1 << N)
    rho_num = _survival_numerator(coeffs, N, 2)
    s = base_index(family) + series_shift(family)
    bound = Fraction(rho_num, 1 << N) * (N + s * (1 << s))
    return CorollaryCheck(which, tuple(params), N, partial, target, abs(target - partial), bound)
