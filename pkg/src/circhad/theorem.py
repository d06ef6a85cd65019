"""Quantities from the half-decomposition argument for circulant Hadamard rows.

For an even-length row h1..hn the odd half (h1, h3, ...) generates H1 with
rows R_j, the even half (h2, h4, ...) generates H2 with rows S_j, and the
full row generates H with rows T_j. Everything here is exact integer
arithmetic; nothing is asserted, only computed.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import isqrt

from circhad.sequences import (
    RowError,
    SignRow,
    circulant_row,
    dot,
    ones_eigenvalue,
    split_halves,
)


@dataclass(frozen=True)
class RegularityStats:
    n: int
    h: int | None
    row_sum: int
    pos_count: int
    neg_count: int
    admissible: bool

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class OrderVerdict:
    """Outcome of the order pre-filter. ``reason`` is one of
    ``"ok"``, ``"below-range"``, ``"not-4-square"``, ``"h-even"``."""

    n: int
    admissible: bool
    h: int | None
    reason: str

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lambda1: int
    lambda2: int
    a: int
    b: int
    t: int
    res_eq2: int
    res_eq3: int
    res_eq5: int
    row_sum: int
    eq6_holds: bool
    product_lambda: int
    condition1_holds: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _square_root_h(n: int) -> int | None:
    """h with n == 4*h*h, or None."""
    if n % 4:
        return None
    h = isqrt(n // 4)
    return h if h > 0 and 4 * h * h == n else None


def order_filter(n: int) -> OrderVerdict:
    """Necessary order condition for a circulant Hadamard matrix of order n >= 4.

    Orders below 4 are outside the lemma's hypotheses and are never excluded.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n < 4:
        return OrderVerdict(n, True, None, "below-range")
    h = _square_root_h(n)
    if h is None:
        return OrderVerdict(n, False, None, "not-4-square")
    if n > 4 and h % 2 == 0:
        return OrderVerdict(n, False, h, "h-even")
    return OrderVerdict(n, True, h, "ok")


def allowed_positive_counts(h: int) -> tuple[int, int]:
    return (2 * h * h - h, 2 * h * h + h)


def regularity_stats(row: SignRow) -> RegularityStats:
    n = len(row)
    pos = sum(1 for x in row if x == 1)
    neg = n - pos
    row_sum = pos - neg
    h = _square_root_h(n)
    admissible = (
        h is not None
        and abs(row_sum) == 2 * h
        and pos in allowed_positive_counts(h)
        and (n <= 4 or h % 2 == 1)
    )
    return RegularityStats(n, h, row_sum, pos, neg, admissible)


def _require_even(row: SignRow) -> None:
    if len(row) % 2:
        raise RowError(f"row length {len(row)} is odd; the half split needs even n")


def _self_correlation_sum(row: SignRow) -> int:
    """sum_{j=2..m} <X_1, X_j> over the rows X_j of circ(row)."""
    return sum(dot(row, circulant_row(row, j)) for j in range(2, len(row) + 1))


def condition_sums(row: SignRow) -> tuple[int, int, int]:
    """(a, b, t): off-diagonal first-row correlation sums of H1, H2 and H."""
    _require_even(row)
    halves = split_halves(row)
    a = _self_correlation_sum(halves.odd_row)
    b = _self_correlation_sum(halves.even_row)
    t = _self_correlation_sum(row)
    return a, b, t


def half_eigenvalues(row: SignRow) -> tuple[int, int]:
    _require_even(row)
    halves = split_halves(row)
    return ones_eigenvalue(halves.odd_row), ones_eigenvalue(halves.even_row)


def identity_report(row: SignRow) -> IdentityReport:
    n = len(row)
    a, b, t = condition_sums(row)
    lam1, lam2 = half_eigenvalues(row)
    row_sum = ones_eigenvalue(row)
    return IdentityReport(
        n=n,
        lambda1=lam1,
        lambda2=lam2,
        a=a,
        b=b,
        t=t,
        res_eq2=a + n // 2 - lam1 * lam1,
        res_eq3=b + n // 2 - lam2 * lam2,
        res_eq5=lam1 * lam1 + lam2 * lam2 - n,
        row_sum=row_sum,
        eq6_holds=row_sum * row_sum == n,
        product_lambda=lam1 * lam2,
        condition1_holds=(a + b == 0 and t == 0),
    )


def remark2_residual(row: SignRow, j: int) -> int:
    """<R_1,R_j> + <S_1,S_j> - <T_1,T_(2j-1)>; zero for every +/-1 row."""
    _require_even(row)
    m = len(row) // 2
    if not 2 <= j <= m:
        raise RowError(f"index j={j} outside 2..{m}")
    halves = split_halves(row)
    r = dot(halves.odd_row, circulant_row(halves.odd_row, j))
    s = dot(halves.even_row, circulant_row(halves.even_row, j))
    return r + s - dot(row, circulant_row(row, 2 * j - 1))


def remark2_residuals(row: SignRow) -> dict[int, int]:
    return {j: remark2_residual(row, j) for j in range(2, len(row) // 2 + 1)}
