"""Three independent routes to the same coefficient sequence, cross-checked.

Route A (product):  expand prod((1 - u^j)^(-sigma(j)) for j >= 1).
Route B (classes):  coefficient n = sum over cycle types of n of the product
                    of wreath class counts, one factor per cycle length.
Route C (brute):    count pairwise-commuting ordered triples in S_n directly
                    and divide by n! (division must be exact).

A disagreement is a reported outcome, never an exception: the verifier's
job is to report, including on deliberately corrupted inputs.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import numtheory, series
from .partitions import enumerate_partitions
from .permgroup import DEFAULT_CENT_CAP, triples_centralizer
from .wreath import k_wreath, k_wreath_series


def coeffs_product(order: int, *, sigma_fn: Callable[[int], int] = numtheory.sigma) -> series.IntSeries:
    """Route A: the sigma Euler product, truncated at `order`.

    Factors with j > order are 1 modulo u^(order+1), so the product over
    j = 1..order is already exact.  `sigma_fn` is injectable so a corrupted
    table can drive negative-control tests.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    result = series.one(order)
    for j in range(1, order + 1):
        factor = series.neg_binomial_factor(j, sigma_fn(j), order)
        result = series.mul(result, factor, order)
    return result


def coeffs_classes(order: int) -> series.IntSeries:
    """Route B (canonical form): per-coefficient sum over cycle types.

    Coefficient n is sum over partitions of n of prod(k_wreath(t, m_t)).
    The sum is evaluated by recursion on the largest allowed part with
    memoization; `class_count_by_types` is the same sum with every
    partition spelled out, kept as a slow cross-check.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    rows = {t: k_wreath_series(t, order // t) for t in range(1, order + 1)}
    memo: dict[tuple[int, int], int] = {}

    def weight(n: int, max_part: int) -> int:
        # sum over partitions of n with parts <= max_part of the product of
        # per-part class counts
        if n == 0:
            return 1
        if max_part == 0:
            return 0
        key = (n, max_part)
        cached = memo.get(key)
        if cached is not None:
            return cached
        row = rows[max_part]
        total = 0
        for m in range(n // max_part + 1):
            total += row[m] * weight(n - m * max_part, max_part - 1)
        memo[key] = total
        return total

    return series.IntSeries(tuple(weight(n, n) for n in range(order + 1)))


def class_count_by_types(n: int) -> int:
    """Route B, literal form: walk every partition of n explicitly."""
    total = 0
    for ct in enumerate_partitions(n):
        w = 1
        for t, m in ct.multiplicities().items():
            w *= k_wreath(t, m)
        total += w
    return total


def coeffs_classes_series(order: int) -> series.IntSeries:
    """Route B, series form: the truncated product of P(u^t)^t over t.

    Factors with t > order are 1 modulo u^(order+1).  Shares only k_wreath's
    ingredients (partition series, powering) with the canonical form; the
    combination of factors goes through the series engine instead of a
    per-coefficient sum.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    p = series.partition_series(order)
    result = series.one(order)
    for t in range(1, order + 1):
        p_t = series.power(p.truncate(order // t), t, order // t)
        factor = series.substitute_power(p_t, t, order)
        result = series.mul(result, factor, order)
    return result


def coeffs_brute(n_max: int, *, cap: int = DEFAULT_CENT_CAP) -> list[int]:
    """Route C: triple counts divided (exactly) by n!, for n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    out = []
    for n in range(n_max + 1):
        triples = triples_centralizer(n, cap=cap)
        quotient, remainder = divmod(triples, math.factorial(n))
        if remainder:
            raise ArithmeticError(
                f"triple count {triples} for degree {n} is not divisible by {n}! "
                "-- internal inconsistency"
            )
        out.append(quotient)
    return out


@dataclass(frozen=True)
class CoefficientReport:
    """Coefficientwise comparison of the three routes."""

    order: int
    brute_max: int
    product: tuple[int, ...]
    classes: tuple[int, ...]
    brute: tuple[int, ...]
    agreements: tuple[bool, ...]

    @property
    def overall(self) -> bool:
        return all(self.agreements)

    @property
    def first_disagreement(self) -> int | None:
        for i, okay in enumerate(self.agreements):
            if not okay:
                return i
        return None


def verify_identity(
    order: int,
    brute_max: int,
    *,
    sigma_fn: Callable[[int], int] = numtheory.sigma,
    cap: int = DEFAULT_CENT_CAP,
) -> CoefficientReport:
    """Run all three routes and compare them index by index.

    Route C is only consulted up to `brute_max`; routes A and B must agree
    on the whole range 0..order.
    """
    if not order >= brute_max >= 0:
        raise ValueError(
            f"need order >= brute_max >= 0, got order={order}, brute_max={brute_max}"
        )
    a = coeffs_product(order, sigma_fn=sigma_fn)
    b = coeffs_classes(order)
    c = coeffs_brute(brute_max, cap=cap)
    agreements = tuple(
        a[i] == b[i] and (i > brute_max or a[i] == c[i]) for i in range(order + 1)
    )
    return CoefficientReport(
        order=order,
        brute_max=brute_max,
        product=a.coeffs,
        classes=b.coeffs,
        brute=tuple(c),
        agreements=agreements,
    )


@dataclass(frozen=True)
class LogReport:
    order: int
    ok: bool
    first_mismatch: int | None


def verify_log(
    order: int, *, sigma_fn: Callable[[int], int] = numtheory.sigma
) -> LogReport:
    """Compare the formal log of route A against the divisor formula.

    The u^d coefficient of log(route A) must equal
    sum(a*sigma(a) for a | d) / d, as an exact rational, for d = 1..order.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    logged = series.log(coeffs_product(order, sigma_fn=sigma_fn), order)
    for d in range(1, order + 1):
        if logged[d] != Fraction(sum(a * sigma_fn(a) for a in numtheory.divisors(d)), d):
            return LogReport(order=order, ok=False, first_mismatch=d)
    return LogReport(order=order, ok=True, first_mismatch=None)


@dataclass(frozen=True)
class GrowthPoint:
    n: int
    coefficient: int
    root: float  # coefficient ** (1/n), presentation only


def growth_report(order: int) -> list[GrowthPoint]:
    """n-th roots of the route-A coefficients, for eyeballing the growth
    trend.  No pass/fail semantics and no exactness contract on `root`."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    coeffs = coeffs_product(order)
    return [
        GrowthPoint(n, coeffs[n], math.exp(math.log(coeffs[n]) / n))
        for n in range(1, order + 1)
    ]
