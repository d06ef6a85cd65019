"""Periodic autocorrelation, the exact circulant Hadamard test, and the
spectrum of the representer polynomial R(x) = h1 + h2 x + ... + hn x^(n-1).

The integer PAF test is authoritative. Floating-point spectra are only
cross-checks and every tolerance is relative to n.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from circhad.sequences import SignRow, circulant_row, dot, rotate

DEFAULT_TOL = 1e-9
# direct O(n^2) evaluation below this order, FFT at and above
FFT_THRESHOLD = 64


@dataclass(frozen=True)
class PafSpectrum:
    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def sidelobes(self) -> tuple[int, ...]:
        return self.values[1:]


@dataclass(frozen=True)
class ComplexSpectrum:
    """Values R(w^k) for k = 0..n-1 with w = exp(2*pi*i/n)."""

    values: tuple[complex, ...]

    def power(self) -> np.ndarray:
        v = np.asarray(self.values)
        return (v * v.conj()).real


def paf(row: SignRow, s: int) -> int:
    """sum_k h_k h_(k+s mod n)."""
    return dot(row, rotate(row, s))


def paf_spectrum(row: SignRow) -> PafSpectrum:
    return PafSpectrum(tuple(paf(row, s) for s in range(len(row))))


def is_circulant_hadamard(row: SignRow) -> bool:
    n = len(row)
    # paf(s) == paf(n - s), so half the shifts suffice
    return all(paf(row, s) == 0 for s in range(1, n // 2 + 1))


def gram_orthogonality_oracle(row: SignRow) -> bool:
    """Independent O(n^3) check: build every row of circ(row) and test the Gram matrix."""
    n = len(row)
    rows = [circulant_row(row, j) for j in range(1, n + 1)]
    if any(dot(r, r) != n for r in rows):
        return False
    return all(dot(u, v) == 0 for u, v in combinations(rows, 2))


def _root_powers(n: int) -> np.ndarray:
    k = np.arange(n)
    # reduce jk mod n before scaling to keep the phase argument small
    return np.exp(2j * np.pi * (np.outer(k, k) % n) / n)


def representer_spectrum(row: SignRow) -> ComplexSpectrum:
    h = np.asarray(row.entries, dtype=float)
    n = h.size
    if n < FFT_THRESHOLD:
        vals = _root_powers(n) @ h
    else:
        # numpy's ifft uses exp(+2 pi i jk/n) and divides by n
        vals = np.fft.ifft(h) * n
    return ComplexSpectrum(tuple(complex(v) for v in vals))


def spectrum_modulus_check(row: SignRow, tol: float = DEFAULT_TOL) -> bool:
    """True iff every |R(w^k)|^2 is within tol*n of n."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = len(row)
    power = representer_spectrum(row).power()
    return float(np.max(np.abs(power - n))) <= tol * n


def wiener_khinchin_residual(row: SignRow) -> float:
    """max_k of | |R(w^k)|^2 - sum_s paf(s) w^(ks) |."""
    n = len(row)
    power = representer_spectrum(row).power()
    acf = np.asarray(paf_spectrum(row).values, dtype=float)
    transformed = _root_powers(n) @ acf
    return float(np.max(np.abs(power - transformed)))
