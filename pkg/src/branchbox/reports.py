"""Report records shared by the formula side and the brute-force side."""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import IrrepLabel, Signature, grevlex_key


@dataclass(frozen=True)
class MultiplicityEntry:
    labels: tuple[IrrepLabel, ...]
    mult: int
    stable: bool


def _label_key(label: IrrepLabel) -> tuple:
    w = label.weight
    if isinstance(w, Signature):
        return (1, grevlex_key(w.plus), grevlex_key(w.minus))
    return (0, grevlex_key(w))


def labels_sort_key(labels: tuple[IrrepLabel, ...]) -> tuple:
    return tuple(_label_key(lab) for lab in labels)


def entry_sort_key(entry: MultiplicityEntry) -> tuple:
    return labels_sort_key(entry.labels)


def sorted_entries(entries) -> list[MultiplicityEntry]:
    return sorted(entries, key=entry_sort_key)
