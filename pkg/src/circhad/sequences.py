"""Exact integer algebra on +/-1 rows and the circulant matrices they generate.

Rows are 1-based at the API boundary (``circulant_row(r, 1)`` is the first
row) and 0-based internally. ``rotate(r, 1)`` moves the last entry to the
front, so the second row of ``circ(a1, ..., an)`` is ``[an, a1, ..., a(n-1)]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class RowError(ValueError):
    """Raised for malformed rows, mismatched lengths or bad indices."""


@dataclass(frozen=True)
class SignRow:
    """Immutable length-n sequence of +1/-1 entries."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        if not entries:
            raise RowError("a row needs at least one entry")
        for x in entries:
            # bool is an int subclass; True would otherwise pass as +1
            if isinstance(x, bool) or x not in (1, -1):
                raise RowError(f"entry {x!r} is not +1 or -1")
        object.__setattr__(self, "entries", tuple(int(x) for x in entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __neg__(self) -> SignRow:
        return SignRow(tuple(-x for x in self.entries))

    def __str__(self) -> str:
        return format_row(self)

    @property
    def n(self) -> int:
        return len(self.entries)

    def sort_key(self) -> tuple[int, ...]:
        """Lexicographic key with +1 ordered before -1."""
        return tuple(0 if x == 1 else 1 for x in self.entries)

    def to_bits(self) -> int:
        """Pack into an integer: bit i is set iff entry i is -1."""
        bits = 0
        for i, x in enumerate(self.entries):
            if x == -1:
                bits |= 1 << i
        return bits

    @classmethod
    def from_bits(cls, bits: int, n: int) -> SignRow:
        return cls(tuple(-1 if (bits >> i) & 1 else 1 for i in range(n)))


@dataclass(frozen=True)
class HalfSplit:
    """Odd-position and even-position halves (1-based) of an even-length row."""

    odd_row: SignRow
    even_row: SignRow

    def __post_init__(self) -> None:
        if len(self.odd_row) != len(self.even_row):
            raise RowError(
                f"halves differ in length: {len(self.odd_row)} vs {len(self.even_row)}"
            )


def make_row(signs: Iterable[int]) -> SignRow:
    return SignRow(tuple(signs))


_SIGN_CHARS = {"+": 1, "-": -1}


def parse_row(text: str) -> SignRow:
    """Parse ``"+---"`` or ``"1,-1,-1,-1"`` (also ``+1,-1``) into a row."""
    s = "".join(text.split())
    if not s:
        raise RowError("empty row literal")
    if "," not in s and set(s) <= set(_SIGN_CHARS):
        return SignRow(tuple(_SIGN_CHARS[c] for c in s))
    out = []
    for tok in s.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            raise RowError(f"cannot parse {tok!r} as a sign") from None
    return SignRow(tuple(out))


def format_row(row: SignRow) -> str:
    return "".join("+" if x == 1 else "-" for x in row.entries)


def rotate(row: SignRow, k: int) -> SignRow:
    n = len(row)
    k %= n
    if k == 0:
        return row
    e = row.entries
    return SignRow(e[n - k:] + e[:n - k])


def circulant_row(first_row: SignRow, j: int) -> SignRow:
    """Return the j-th (1-based) row of circ(first_row)."""
    n = len(first_row)
    if not 1 <= j <= n:
        raise RowError(f"row index {j} outside 1..{n}")
    return rotate(first_row, j - 1)


def dot(u: SignRow | Sequence[int], v: SignRow | Sequence[int]) -> int:
    if len(u) != len(v):
        raise RowError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(x * y for x, y in zip(u, v))


def split_halves(row: SignRow) -> HalfSplit:
    if len(row) % 2:
        raise RowError(f"cannot split a row of odd length {len(row)}")
    e = row.entries
    return HalfSplit(SignRow(e[0::2]), SignRow(e[1::2]))


def interleave(halves: HalfSplit) -> SignRow:
    out: list[int] = []
    for x, y in zip(halves.odd_row, halves.even_row):
        out += (x, y)
    return SignRow(tuple(out))


def ones_eigenvalue(first_row: SignRow | Sequence[int]) -> int:
    """Eigenvalue of circ(first_row) on the all-ones vector (the row sum)."""
    return sum(first_row)
