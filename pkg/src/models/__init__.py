"""Data models for the q-Whittaker toolkit."""

from src.models.shapes import Cell, ColumnComposition, Partition
from src.models.filling import Filling
from src.models.patterns import GTPattern, POP
from src.models.clword import CLAtom, CLWord
from src.models.ensemble import CircleMarking, LatticeEnsemble, Occupancy, Strand, TileProfile, TileType
from src.models.verification import Bounds, Case, CheckResult, Counterexample, SuiteReport

__all__ = [
    "Cell",
    "ColumnComposition",
    "Partition",
    "Filling",
    "GTPattern",
    "POP",
    "CLAtom",
    "CLWord",
    "CircleMarking",
    "LatticeEnsemble",
    "Occupancy",
    "Strand",
    "TileProfile",
    "TileType",
    "Bounds",
    "Case",
    "CheckResult",
    "Counterexample",
    "SuiteReport",
]
