"""The ten known circulant Hadamard matrices, by first row."""
from __future__ import annotations

from dataclasses import dataclass

from circhad.sequences import SignRow


@dataclass(frozen=True)
class KnownMatrixRecord:
    name: str
    first_row: SignRow

    @property
    def order(self) -> int:
        return len(self.first_row)


def _pairs() -> list[KnownMatrixRecord]:
    bases = [
        (1,),
        (1, -1, -1, -1),
        (-1, 1, -1, -1),
        (-1, -1, 1, -1),
        (-1, -1, -1, 1),
    ]
    out = []
    for i, entries in enumerate(bases):
        row = SignRow(entries)
        out.append(KnownMatrixRecord(f"H{2 * i + 1}", row))
        out.append(KnownMatrixRecord(f"H{2 * i + 2}", -row))
    return out


KNOWN_MATRICES: tuple[KnownMatrixRecord, ...] = tuple(_pairs())


def known_by_name(name: str) -> KnownMatrixRecord:
    for rec in KNOWN_MATRICES:
        if rec.name == name:
            return rec
    raise KeyError(name)
