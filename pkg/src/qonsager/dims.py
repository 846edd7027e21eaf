"""Graded-dimension accounting.

Counts irreducible words by degree and matches them against the product
formula expansions; all coefficients are exact integers.
"""

from __future__ import annotations

from typing import List

from .series import Report
from .words import Generator, Word, g_, gt_, wm, wp

IntSeries = List[int]


def _divide_by_one_minus_power(coeffs: IntSeries, k: int) -> IntSeries:
    # multiply by 1/(1 - x^k) in place via the prefix recurrence
    out = list(coeffs)
    for i in range(k, len(out)):
        out[i] += out[i - k]
    return out


def partition_series(order: int) -> IntSeries:
    """Coefficients of the partition generating function up to x^order."""
    out = [1] + [0] * order
    for k in range(1, order + 1):
        out = _divide_by_one_minus_power(out, k)
    return out


def partitions_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return partition_series(n)[n]


def hilbert_Aq(order: int) -> IntSeries:
    """Dimension series of the degree filtration layers: prod 1/(1-x^n)^2."""
    out = [1] + [0] * order
    for k in range(1, order + 1):
        out = _divide_by_one_minus_power(out, k)
        out = _divide_by_one_minus_power(out, k)
    return out


def hilbert_Oq(order: int) -> IntSeries:
    """The reference series prod 1/(1-x^(2i-1))^2 * 1/(1-x^(2i))."""
    out = [1] + [0] * order
    for k in range(1, order + 1):
        if k % 2:
            out = _divide_by_one_minus_power(out, k)
            out = _divide_by_one_minus_power(out, k)
        else:
            out = _divide_by_one_minus_power(out, k)
    return out


def letters_up_to_degree(d: int) -> List[Generator]:
    """All letters of degree <= d, in the canonical order."""
    out: List[Generator] = []
    k = 0
    while 2 * k + 2 <= d:
        out.append(g_(k + 1))
        k += 1
    k = 0
    while 2 * k + 1 <= d:
        out.append(wm(k))
        k += 1
    k = 0
    while 2 * k + 1 <= d:
        out.append(wp(k + 1))
        k += 1
    k = 0
    while 2 * k + 2 <= d:
        out.append(gt_(k + 1))
        k += 1
    return out


def enumerate_irreducible(d: int) -> List[Word]:
    """All irreducible words of degree exactly d (letters non-decreasing)."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    letters = letters_up_to_degree(d)
    out: List[Word] = []
    word: List[Generator] = []

    def rec(start: int, remaining: int):
        if remaining == 0:
            out.append(tuple(word))
            return
        for i in range(start, len(letters)):
            deg = letters[i].degree()
            if deg > remaining:
                continue
            word.append(letters[i])
            rec(i, remaining - deg)
            word.pop()

    rec(0, d)
    return out


def check_dim_identity(order: int) -> Report:
    """Positionwise identity between the two product formulas."""
    report = Report("dim-identity")
    lhs = hilbert_Aq(order)
    h = hilbert_Oq(order)
    p = partition_series(order)
    for d in range(order + 1):
        rhs = sum(h[d - 2 * l] * p[l] for l in range(d // 2 + 1))
        report.add(f"x^{d}", lhs[d] == rhs,
                   "" if lhs[d] == rhs else f"{lhs[d]} != {rhs}")
    return report


def check_word_counts(max_degree: int) -> Report:
    report = Report("word-counts")
    series = hilbert_Aq(max_degree)
    for d in range(max_degree + 1):
        n = len(enumerate_irreducible(d))
        report.add(f"degree {d}", n == series[d],
                   "" if n == series[d] else f"counted {n}, series {series[d]}")
    return report
