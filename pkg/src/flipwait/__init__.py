"""Exact waiting times for patterns in fair coin flips and die rolls.

The library computes the expected number of i.i.d. uniform draws until a
given pattern first occurs, by several independent routes (absorbing-chain
solve, autocorrelation sum, closed forms, series summation, simulation),
counts the strings in which the pattern occurs only at the end, evaluates
the generalized Fibonacci families those counts form, and scans all coin
patterns up to a length bound for two structural properties of the waiting
time.
"""

from flipwait.pattern import Pattern, PatternError, parse

__all__ = ["Pattern", "PatternError", "parse"]

__version__ = "0.1.0"
