"""Gelfand-Tsetlin patterns and partition overlaid patterns."""
from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping

from src.core.errors import IndexRangeError, InputFormatError, OverlayError, PatternError, QWhittakerError
from src.models.shapes import Partition

OverlayKey = tuple[int, int]


def overlay_keys(n: int) -> Iterator[OverlayKey]:
    """The pairs (i, j) with 1 <= i <= j < n, ordered by j then i."""
    for j in range(1, n):
        for i in range(1, j + 1):
            yield (i, j)


@dataclass(frozen=True)
class GTPattern:
    """Triangular array T^j_i (1 <= i <= j <= n); rows[j-1] is row T^j."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for j, row in enumerate(rows, start=1):
            if len(row) != j:
                raise PatternError(f"Row {j} of a GT pattern must have {j} entries, got {row}")
            if any(not isinstance(v, int) or v < 0 for v in row):
                raise PatternError(f"GT pattern entries must be non-negative integers, got {row}")
        for j in range(1, len(rows)):
            upper, lower = rows[j], rows[j - 1]
            for i in range(j):
                if not upper[i + 1] <= lower[i] <= upper[i]:
                    raise PatternError(
                        f"Row {j} = {lower} does not interlace row {j + 1} = {upper}"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(self.rows[-1]) if self.rows else Partition(())

    def value(self, i: int, j: int) -> int:
        """T^j_i, reading 0 for i > j (including the convention T^j_{j+1} = 0) and for j = 0."""
        if i < 1 or j < 0 or j > self.n:
            raise IndexRangeError(f"T^{j}_{i} is outside a pattern of size {self.n}")
        if j == 0 or i > j:
            return 0
        return self.rows[j - 1][i - 1]

    def _check_ij(self, i: int, j: int) -> None:
        if not 1 <= i <= j + 1 <= self.n:
            raise IndexRangeError(f"NE/SE need 1 <= i <= j+1 <= n, got i={i}, j={j}, n={self.n}")

    def ne(self, i: int, j: int) -> int:
        """NE_{ij} = T^{j+1}_i - T^j_i."""
        self._check_ij(i, j)
        return self.value(i, j + 1) - self.value(i, j)

    def se(self, i: int, j: int) -> int:
        """SE_{ij} = T^j_i - T^{j+1}_{i+1}."""
        self._check_ij(i, j)
        return self.value(i, j) - self.value(i + 1, j + 1)

    def truncate(self) -> "GTPattern":
        """Delete the bottom-most row T^n."""
        if self.n < 1:
            raise PatternError("Cannot truncate an empty pattern")
        return GTPattern(self.rows[:-1])

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, raw: Any) -> "GTPattern":
        if not isinstance(raw, dict) or "rows" not in raw:
            raise InputFormatError("GT pattern JSON must be an object with 'rows'")
        try:
            pattern = cls(tuple(tuple(int(v) for v in r) for r in raw["rows"]))
        except (TypeError, ValueError, QWhittakerError) as e:
            raise InputFormatError(f"Malformed GT pattern JSON: {e}") from e
        if "n" in raw and int(raw["n"]) != pattern.n:
            raise InputFormatError(f"GT pattern declares n={raw['n']} but has {pattern.n} rows")
        return pattern


@dataclass(frozen=True, eq=False)
class POP:
    """A GT pattern with, for each (i, j), a partition in the NE_ij x SE_ij box.

    Overlays are stored zero-padded to exactly NE_ij parts.
    """

    gt: GTPattern
    overlay: Mapping[OverlayKey, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        overlay = {tuple(k): tuple(v) for k, v in self.overlay.items()}
        expected = set(overlay_keys(self.gt.n))
        if set(overlay) != expected:
            missing = sorted(expected - set(overlay))
            extra = sorted(set(overlay) - expected)
            raise OverlayError(f"Overlay keys mismatch: missing {missing}, unexpected {extra}")
        for (i, j), parts in overlay.items():
            k, l = self.gt.ne(i, j), self.gt.se(i, j)
            if len(parts) != k:
                raise OverlayError(f"Overlay ({i},{j}) = {parts} must have exactly NE={k} parts")
            if any(a < b for a, b in zip(parts, parts[1:])):
                raise OverlayError(f"Overlay ({i},{j}) = {parts} is not weakly decreasing")
            if any(not 0 <= p <= l for p in parts):
                raise OverlayError(f"Overlay ({i},{j}) = {parts} does not fit the {k} x {l} box")
        object.__setattr__(self, "overlay", dict(sorted(overlay.items(), key=lambda kv: (kv[0][1], kv[0][0]))))

    @property
    def n(self) -> int:
        return self.gt.n

    @property
    def shape(self) -> Partition:
        return self.gt.shape

    def lam(self, i: int, j: int) -> tuple[int, ...]:
        """Λ_ij."""
        try:
            return self.overlay[(i, j)]
        except KeyError as e:
            raise IndexRangeError(f"No overlay ({i},{j}) in a POP of size {self.n}") from e

    @property
    def weight(self) -> int:
        """|Λ| = Σ_ij |Λ_ij|."""
        return sum(sum(parts) for parts in self.overlay.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, POP):
            return NotImplemented
        return self.gt == other.gt and dict(self.overlay) == dict(other.overlay)

    def __hash__(self) -> int:
        return hash((self.gt, tuple(self.overlay.items())))

    def to_json(self) -> dict[str, Any]:
        return {
            "gt": self.gt.to_json(),
            "overlay": {f"{i},{j}": list(parts) for (i, j), parts in self.overlay.items()},
        }

    @classmethod
    def from_json(cls, raw: Any) -> "POP":
        if not isinstance(raw, dict) or "gt" not in raw:
            raise InputFormatError("POP JSON must be an object with 'gt' and 'overlay'")
        gt = GTPattern.from_json(raw["gt"])
        try:
            overlay = {}
            for key, parts in dict(raw.get("overlay", {})).items():
                i, j = (int(s) for s in str(key).split(","))
                overlay[(i, j)] = tuple(int(p) for p in parts)
            return cls(gt, overlay)
        except (TypeError, ValueError) as e:
            raise InputFormatError(f"Malformed POP overlay: {e}") from e
