"""Exact expected waiting times by two independent routes.

The absorbing-chain route sets up E_q = 1 + (1/c) * sum_a E_{delta(q,a)}
with E_s = 0 and solves it by Gaussian elimination over exact rationals.
The autocorrelation route sums c**k over the overlaps of the pattern with
itself; it always yields an integer and serves as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction

from flipwait.automaton import build, feed
from flipwait.pattern import Pattern, as_symbols


def solve_exact(matrix: list[list[Fraction]]) -> list[Fraction]:
    """Solve a square augmented system [A | b] by Gaussian elimination.

    Arithmetic is exact, so pivoting only needs a nonzero entry; rows keep
    their state-index order apart from the swaps that guarantees.
    """
    n = len(matrix)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if matrix[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise ArithmeticError("singular system")
        if pivot_row != col:
            matrix[col], matrix[pivot_row] = matrix[pivot_row], matrix[col]
        pivot = matrix[col][col]
        for r in range(col + 1, n):
            factor = matrix[r][col]
            if factor == 0:
                continue
            scale = factor / pivot
            row = matrix[r]
            lead = matrix[col]
            for j in range(col, n + 1):
                row[j] -= scale * lead[j]
    solution = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        acc = matrix[r][n]
        for j in range(r + 1, n):
            acc -= matrix[r][j] * solution[j]
        solution[r] = acc / matrix[r][r]
    return solution


def absorption_times(p: Pattern) -> list[Fraction]:
    """Expected steps to reach the accept state from each automaton state.

    Index q holds the expectation starting from state q; the accept entry
    is zero.  The system is scaled by c so the input matrix is integral.
    """
    a = build(p)
    s = len(p)
    c = p.alphabet_size
    matrix = [[Fraction(0)] * (s + 1) for _ in range(s)]
    for q in range(s):
        matrix[q][q] += c
        for sym in range(c):
            nxt = a.transitions[q][sym]
            if nxt < s:
                matrix[q][nxt] -= 1
        matrix[q][s] = Fraction(c)
    times = solve_exact(matrix)
    times.append(Fraction(0))
    return times


def expected_wait_markov(p: Pattern) -> Fraction:
    """Expected number of draws until the pattern first occurs (chain solve)."""
    return absorption_times(p)[0]


def correlation_set(p: Pattern) -> set[int]:
    """All k in [1, s] where the length-k prefix equals the length-k suffix."""
    s = len(p)
    sym = p.symbols
    return {k for k in range(1, s + 1) if sym[:k] == sym[s - k:]}


def expected_wait_conway(p: Pattern) -> int:
    """Expected waiting time as the autocorrelation sum of c**k over overlaps."""
    c = p.alphabet_size
    return sum(c**k for k in correlation_set(p))


def conditional_wait(p: Pattern, given) -> Fraction:
    """Expected total draws until the pattern occurs, given the stream starts with `given`.

    The count includes the given draws: the automaton consumes them and the
    chain finishes from the state reached, so the result is len(given) plus
    the absorption time from that state.  The given stream may be any symbol
    sequence, not only a prefix of the pattern; if it already contains the
    pattern the game is over and the result is just len(given).
    """
    symbols = as_symbols(given, p.alphabet_size)
    a = build(p)
    state = feed(a, symbols)
    return len(symbols) + absorption_times(p)[state]
