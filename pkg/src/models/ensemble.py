"""Lattice-path ensemble of a column strict filling."""
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any

TileKey = tuple[int, int]  # (grid column label, row label)


class TileType(Enum):
    """How a strand passes through a tile."""
    I = "I"        # vertical pass-through
    II = "II"      # enters from the right, turns down
    III = "III"    # enters from the top, exits left


@dataclass(frozen=True)
class Occupancy:
    """One strand visiting one tile."""
    column: int    # grid column label, 1 is rightmost
    row: int
    tile_type: TileType

    @property
    def tile(self) -> TileKey:
        return (self.column, self.row)


@dataclass(frozen=True)
class Strand:
    """The path drawn for one filling column (i_1 < ... < i_k)."""
    filling_column: int
    entries: tuple[int, ...]
    occupancies: tuple[Occupancy, ...]


@dataclass(frozen=True)
class TileProfile:
    """Filling-column indices of the strands of each type in one tile, ascending."""
    type_i: tuple[int, ...] = ()
    type_ii: tuple[int, ...] = ()
    type_iii: tuple[int, ...] = ()


@dataclass(frozen=True)
class CircleMarking:
    """(type-I column x, type-II column z) pairs of each tile: solid when x < z, open when x > z."""
    solid: dict[TileKey, frozenset[tuple[int, int]]] = field(default_factory=dict)
    open: dict[TileKey, frozenset[tuple[int, int]]] = field(default_factory=dict)

    @property
    def solid_total(self) -> int:
        return sum(len(s) for s in self.solid.values())

    @property
    def open_total(self) -> int:
        return sum(len(s) for s in self.open.values())


@dataclass(frozen=True)
class LatticeEnsemble:
    n: int
    strands: tuple[Strand, ...] = ()
    decluttered: bool = False

    @property
    def num_strands(self) -> int:
        return len(self.strands)

    def tile_profile(self) -> dict[TileKey, TileProfile]:
        buckets: dict[TileKey, dict[TileType, list[int]]] = {}
        for strand in self.strands:
            for occ in strand.occupancies:
                per_type = buckets.setdefault(occ.tile, {t: [] for t in TileType})
                per_type[occ.tile_type].append(strand.filling_column)
        return {
            key: TileProfile(
                tuple(sorted(types[TileType.I])),
                tuple(sorted(types[TileType.II])),
                tuple(sorted(types[TileType.III])),
            )
            for key, types in sorted(buckets.items())
        }

    def with_strands(self, strands: tuple[Strand, ...], decluttered: bool) -> "LatticeEnsemble":
        return replace(self, strands=strands, decluttered=decluttered)

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "decluttered": self.decluttered,
            "strands": [
                {
                    "column": s.filling_column,
                    "entries": list(s.entries),
                    "tiles": [[o.column, o.row, o.tile_type.value] for o in s.occupancies],
                }
                for s in self.strands
            ],
        }
