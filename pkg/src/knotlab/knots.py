"""Knot records and the built-in knot table.

The table ships the unknot (as a one-crossing kink so every diagram code
path is exercised), the right-handed trefoil, and the figure-eight knot.
The figure-eight entry carries its A-polynomial and hyperbolic volume;
the printed source for that A-polynomial repeats the m^4*l^2 term, so the
trailing term is corrected to m^4 here.  Two mandatory tests pin the
correction down: the parabolic double root l = -1 at m = -1, and the
derivative identity relating the flat-connection action to the tracked
longitude eigenvalue.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from .bivar import BivarPoly
from .diagrams import PlanarDiagram
from .errors import MalformedDiagram, UnknownKnot

__all__ = ["KnotRecord", "KnotTable", "standard_table", "figure_eight_a_polynomial"]


def figure_eight_a_polynomial() -> BivarPoly:
    """(l - 1) * (m^4 l^2 - (1 - m^2 - 2 m^4 - m^6 + m^8) l + m^4)."""
    abelian = BivarPoly([(1, 1, 0), (-1, 0, 0)])
    geometric = BivarPoly([
        (1, 2, 4),
        (-1, 1, 0), (1, 1, 2), (2, 1, 4), (1, 1, 6), (-1, 1, 8),
        (1, 0, 4),
    ])
    return abelian * geometric


def figure_eight_geometric_factor() -> BivarPoly:
    """The non-abelian factor of the figure-eight A-polynomial."""
    return BivarPoly([
        (1, 2, 4),
        (-1, 1, 0), (1, 1, 2), (2, 1, 4), (1, 1, 6), (-1, 1, 8),
        (1, 0, 4),
    ])


@dataclass(frozen=True)
class KnotRecord:
    name: str
    diagram: PlanarDiagram
    a_polynomial: Optional[BivarPoly] = None
    known_volume: Optional[str] = None       # decimal string, exact as written
    has_closed_form: bool = False


class KnotTable:
    """Named knot records with unique names."""

    def __init__(self, records: list[KnotRecord]):
        self._by_name: dict[str, KnotRecord] = {}
        for rec in records:
            if rec.name in self._by_name:
                raise ValueError(f"duplicate knot name {rec.name!r}")
            self._by_name[rec.name] = rec

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> KnotRecord:
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownKnot(f"knot {name!r} not in table "
                              f"(have: {', '.join(sorted(self._by_name))})") from None

    def names(self) -> list[str]:
        return sorted(self._by_name)

    @staticmethod
    def from_json(text: str) -> "KnotTable":
        data = json.loads(text)
        if not isinstance(data, list):
            raise MalformedDiagram("knot table must be a JSON array of records")
        records = []
        for entry in data:
            name = entry["name"]
            pd = entry["pd"]
            circles = int(entry.get("circles", 0))
            diagram = PlanarDiagram([tuple(c) for c in pd], circles=circles)
            apoly = None
            if entry.get("a_poly") is not None:
                apoly = BivarPoly([(int(c), int(i), int(j))
                                   for c, i, j in entry["a_poly"]])
            records.append(KnotRecord(
                name=name,
                diagram=diagram,
                a_polynomial=apoly,
                known_volume=entry.get("vol"),
                has_closed_form=bool(entry.get("closed_form", False)),
            ))
        return KnotTable(records)

    @staticmethod
    def from_file(path: str | Path) -> "KnotTable":
        return KnotTable.from_json(Path(path).read_text(encoding="utf-8"))


def standard_table() -> KnotTable:
    """The packaged table (unknot, 3_1, 4_1)."""
    text = resources.files("knotlab").joinpath("data/knots.json").read_text("utf-8")
    return KnotTable.from_json(text)
