"""Shared oracles for the test suite.

The streaming distribution here deliberately goes element by element through
the public iterators and statistic functions; it is the independent route
checked against the aggregated polynomial builders.
"""
from __future__ import annotations

from wreath_eulerian import (
    colored_descent_count,
    flag_descent,
    iterate_fixed_last_color,
    iterate_full_group,
)


def stream_distribution(alpha: int, n: int, statistic: str,
                        domain: str, beta: int = 0) -> tuple[int, ...]:
    """Coefficient vector computed one element at a time."""
    if domain == "full":
        elements = iterate_full_group(alpha, n)
    elif domain == "quotient":
        elements = iterate_fixed_last_color(alpha, n, 0)
    else:
        elements = iterate_fixed_last_color(alpha, n, beta)
    stat = flag_descent if statistic == "flag" else colored_descent_count
    counts: dict[int, int] = {}
    for w in elements:
        k = stat(w)
        counts[k] = counts.get(k, 0) + 1
    degree = max(counts)
    return tuple(counts.get(k, 0) for k in range(degree + 1))
