"""Color values and vertex colorings.

Constructions use structured colors: ``0`` for branch vertices, tuple colors
``TupleColor(a, i)`` (written ``a_i``), and the extra colors below. Exact
search produces plain integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, NamedTuple

from .fracpow import vertex_from_json

HEART = "heart"
DIAMOND1 = "diamond1"
DIAMOND2 = "diamond2"
NEW = "new"

SPECIALS = (HEART, DIAMOND1, DIAMOND2, NEW)


class TupleColor(NamedTuple):
    base: int
    slot: int

    def __str__(self):
        return f"{self.base}_{self.slot}"


def tuple_of(a: int, length: int) -> tuple:
    """The color-tuple a = (a_1, ..., a_length)."""
    return tuple(TupleColor(a, i) for i in range(1, length + 1))


def color_to_json(c):
    if isinstance(c, TupleColor):
        return str(c)
    if isinstance(c, (int, str)):
        return c
    raise TypeError(f"cannot serialise color {c!r}")


def color_from_json(c):
    if isinstance(c, str) and c not in SPECIALS and "_" in c:
        a, i = c.split("_", 1)
        return TupleColor(int(a), int(i))
    return c


@dataclass
class VertexColoring:
    """A total map from vertices of a fractional power to colors."""

    assignment: dict
    info: dict = field(default_factory=dict)

    def __getitem__(self, x):
        return self.assignment[x]

    def __contains__(self, x):
        return x in self.assignment

    def __len__(self):
        return len(self.assignment)

    def items(self):
        return self.assignment.items()

    @property
    def palette(self) -> frozenset:
        return frozenset(self.assignment.values())

    @property
    def num_colors(self) -> int:
        return len(self.palette)

    def to_json(self, order=None) -> list:
        keys = order if order is not None else list(self.assignment)
        return [[x.to_json(), color_to_json(self.assignment[x])] for x in keys]

    @classmethod
    def from_json(cls, data) -> "VertexColoring":
        return cls({vertex_from_json(x): color_from_json(c) for x, c in data})

    def restricted(self, vertices) -> "VertexColoring":
        return VertexColoring({x: self.assignment[x] for x in vertices}, dict(self.info))


Color = Hashable
