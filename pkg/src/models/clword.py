"""Chari-Loktev monomials as formal words in the atoms E_{p,q} ⊗ t^k."""
from dataclasses import dataclass
from itertools import groupby
from typing import Any, Iterable

from src.core.errors import InputFormatError, ShapeError


@dataclass(frozen=True, order=True)
class CLAtom:
    """E_{p,q} ⊗ t^{t_exp} with p > q >= 1."""
    p: int
    q: int
    t_exp: int

    def __post_init__(self) -> None:
        if not self.p > self.q >= 1 or self.t_exp < 0:
            raise ShapeError(f"Invalid atom E_{{{self.p},{self.q}}} ⊗ t^{self.t_exp}")

    def sort_key(self) -> tuple[int, int, int]:
        # block p-1 first; inside a block by column, larger t first
        return (self.p - 1, self.q, -self.t_exp)

    def format_text(self) -> str:
        if self.t_exp == 0:
            tail = "1"
        elif self.t_exp == 1:
            tail = "t"
        else:
            tail = f"t^{self.t_exp}"
        return f"E_{{{self.p},{self.q}}} ⊗ {tail}"

    def to_json(self) -> list[int]:
        return [self.p, self.q, self.t_exp]


@dataclass(frozen=True)
class CLWord:
    """An ordered product of atoms, kept in canonical order so equality is structural."""
    atoms: tuple[CLAtom, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(sorted(self.atoms, key=CLAtom.sort_key)))

    @classmethod
    def of(cls, atoms: Iterable[CLAtom]) -> "CLWord":
        return cls(tuple(atoms))

    @property
    def t_degree(self) -> int:
        return sum(a.t_exp for a in self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def without_trivial_atoms(self) -> "CLWord":
        """Drop the E ⊗ t^0 factors, as printed words usually do."""
        return CLWord(tuple(a for a in self.atoms if a.t_exp))

    def format_text(self) -> str:
        if not self.atoms:
            return "1"
        parts = []
        for atom, run in groupby(self.atoms):
            count = len(list(run))
            parts.append(f"({atom.format_text()})" + (f"^{count}" if count > 1 else ""))
        return "".join(parts)

    def __str__(self) -> str:
        return self.format_text()

    def to_json(self) -> list[list[int]]:
        return [a.to_json() for a in self.atoms]

    @classmethod
    def from_json(cls, raw: Any) -> "CLWord":
        try:
            return cls(tuple(CLAtom(int(p), int(q), int(t)) for p, q, t in raw))
        except (TypeError, ValueError) as e:
            raise InputFormatError(f"Malformed CL word JSON: {e}") from e
