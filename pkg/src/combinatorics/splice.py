"""Elementary splice, the S_i operators and the dsplice branching map."""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from src.combinatorics.triples import zcount
from src.core.errors import ColumnStrictnessError, IndexRangeError, SearchBudgetExceeded, ShapeError
from src.models.filling import Filling
from src.models.shapes import Cell, ColumnComposition

logger = logging.getLogger(__name__)

ColumnTuple = tuple[int, ...]
ChoicePolicy = Callable[[Sequence[int]], int]


def validate_column_tuple(values: Sequence[int]) -> ColumnTuple:
    """A strictly increasing tuple of positive integers (possibly empty)."""
    values = tuple(values)
    if any(v < 1 for v in values) or any(a >= b for a, b in zip(values, values[1:])):
        raise ColumnStrictnessError(f"{values} is not a column tuple")
    return values


def splice_index(sigma: Sequence[int], tau: Sequence[int]) -> int:
    """m = max{1 <= i <= k+1 : σ_{i-1} < τ_i}, with σ_0 = 0 and k = len(σ) < len(τ)."""
    k = len(sigma)
    if k >= len(tau):
        raise ShapeError(f"splice_index needs len(σ) < len(τ), got {len(sigma)} and {len(tau)}")
    padded = (0,) + tuple(sigma)
    return max(i for i in range(1, k + 2) if padded[i - 1] < tau[i - 1])


def _swap_row(sigma: Sequence[int], tau: Sequence[int]) -> int | None:
    """First row whose entries change columns, or None when the lengths agree."""
    if len(sigma) == len(tau):
        return None
    if len(sigma) < len(tau):
        return splice_index(sigma, tau)
    return splice_index(tau, sigma)


def elementary_splice(sigma: Sequence[int], tau: Sequence[int]) -> tuple[ColumnTuple, ColumnTuple]:
    """Swap the suffixes of σ and τ from the splice index on.

    Equal lengths are left alone; when σ is the longer tuple the operation is
    conjugated by the swap of the two arguments. The result is an involution.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    m = _swap_row(sigma, tau)
    if m is None:
        return sigma, tau
    return sigma[: m - 1] + tau[m - 1 :], tau[: m - 1] + sigma[m - 1 :]


@dataclass(frozen=True)
class SpliceStep:
    """One elementary splice of columns (j, j+1) with its cell correspondence."""

    index: int
    swap_row: int | None
    before: ColumnComposition
    correspondence: dict[Cell, Cell] = field(default_factory=dict)

    def image(self, cell: Cell) -> Cell:
        return self.correspondence.get(cell, cell)


def _require_splice_index(i: int, F: Filling) -> None:
    if not 1 <= i < F.shape.num_columns:
        raise IndexRangeError(f"S_{i} needs 1 <= i < {F.shape.num_columns}")


def s_i_with_correspondence(i: int, F: Filling) -> tuple[Filling, SpliceStep]:
    """Apply S_i and return the moved-cell correspondence c -> c~."""
    _require_splice_index(i, F)
    F.require_column_strict()
    sigma, tau = F.columns[i - 1], F.columns[i]
    m = _swap_row(sigma, tau)
    new_left, new_right = elementary_splice(sigma, tau)
    columns = list(F.columns)
    columns[i - 1], columns[i] = new_left, new_right
    correspondence: dict[Cell, Cell] = {}
    if m is not None:
        for row in range(m, len(sigma) + 1):
            correspondence[Cell(row, i)] = Cell(row, i + 1)
        for row in range(m, len(tau) + 1):
            correspondence[Cell(row, i + 1)] = Cell(row, i)
    return F.with_columns(columns), SpliceStep(i, m, F.shape, correspondence)


def s_i(i: int, F: Filling) -> Filling:
    """S_i: replace columns i, i+1 by their elementary splice."""
    return s_i_with_correspondence(i, F)[0]


# =============================================================================
# dsplice
# =============================================================================


def legal_indices(lengths: Sequence[int]) -> list[int]:
    """Columns j whose right neighbour is strictly longer."""
    return [j for j in range(1, len(lengths)) if lengths[j] > lengths[j - 1]]


def smallest_legal_index(choices: Sequence[int]) -> int:
    return min(choices)


def largest_legal_index(choices: Sequence[int]) -> int:
    return max(choices)


def delete_largest_entry(F: Filling) -> Filling:
    """F†: drop every cell holding n; entries then lie in [n-1]."""
    F.require_column_strict()
    if F.n < 1:
        return F
    return Filling(tuple(tuple(v for v in col if v != F.n) for col in F.columns), F.n - 1)


def _strip_empty_columns(columns: Sequence[ColumnTuple]) -> tuple[ColumnTuple, ...]:
    out = list(columns)
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass
class DspliceTrace:
    """Every intermediate state of one dsplice run."""

    source: Filling
    deleted: Filling
    steps: list[SpliceStep] = field(default_factory=list)
    states: list[Filling] = field(default_factory=list)
    result: Filling | None = None

    def cell_map(self) -> dict[Cell, Cell]:
        """Composite correspondence from the cells of F† to the cells of the result."""
        mapping = {c: c for c in self.deleted.cells()}
        for step in self.steps:
            mapping = {start: step.image(current) for start, current in mapping.items()}
        return mapping

    def zcount_changes(self) -> list[tuple[int, Cell, int, int]]:
        """(step, c, zcount before, zcount of c~ after) for every cell whose count moves.

        Empty whenever each elementary splice carries zcount along its correspondence.
        """
        changes = []
        for k, step in enumerate(self.steps, start=1):
            before, after = self.states[k - 1], self.states[k]
            for c in before.cells():
                old, new = zcount(c, before), zcount(step.image(c), after)
                if old != new:
                    changes.append((k, c, old, new))
        return changes

    def to_json(self) -> dict:
        return {
            "input": self.source.to_json(),
            "deleted": self.deleted.to_json(),
            "steps": [
                {"shape": list(step.before.column_lengths), "index": step.index, "swap_row": step.swap_row}
                for step in self.steps
            ],
            "result": self.result.to_json() if self.result is not None else None,
        }


def dsplice_with_trace(F: Filling, strategy: ChoicePolicy = smallest_legal_index) -> DspliceTrace:
    """Delete the n-cells of F, then splice until the column lengths weakly decrease."""
    F.require_partition_shape()
    start = time.perf_counter()
    current = delete_largest_entry(F)
    trace = DspliceTrace(source=F, deleted=current, states=[current])
    while True:
        choices = legal_indices(current.shape.column_lengths)
        if not choices:
            break
        j = strategy(choices)
        if j not in choices:
            raise IndexRangeError(f"Choice policy returned {j}, legal indices are {choices}")
        current, step = s_i_with_correspondence(j, current)
        trace.steps.append(step)
        trace.states.append(current)
    trace.result = Filling(_strip_empty_columns(current.columns), current.n)
    elapsed_ms = (time.perf_counter() - start) * 1000
    logger.debug(
        "EXIT: dsplice",
        extra={"extra_data": {"action": "dsplice", "steps": len(trace.steps), "elapsed_ms": round(elapsed_ms, 3)}},
    )
    return trace


def dsplice(F: Filling, strategy: ChoicePolicy = smallest_legal_index) -> Filling:
    """The branching map CSF(λ, n) -> ⊔_{μ ≺ λ} CSF(μ, n-1)."""
    result = dsplice_with_trace(F, strategy).result
    assert result is not None
    return result


def dsplice_outcomes(F: Filling, budget: int = 200_000) -> set[Filling]:
    """Every result reachable by some maximal sequence of legal splice choices."""
    F.require_partition_shape()
    start = delete_largest_entry(F)
    bound = start.n
    memo: dict[tuple[ColumnTuple, ...], frozenset[tuple[ColumnTuple, ...]]] = {}

    def explore(columns: tuple[ColumnTuple, ...]) -> frozenset[tuple[ColumnTuple, ...]]:
        if columns in memo:
            return memo[columns]
        if len(memo) >= budget:
            raise SearchBudgetExceeded(f"dsplice confluence search exceeded {budget} states for {F}")
        memo[columns] = frozenset()
        choices = legal_indices([len(c) for c in columns])
        if not choices:
            found = frozenset({_strip_empty_columns(columns)})
        else:
            reached: set[tuple[ColumnTuple, ...]] = set()
            for j in choices:
                cols = list(columns)
                cols[j - 1], cols[j] = elementary_splice(cols[j - 1], cols[j])
                reached |= explore(tuple(cols))
            found = frozenset(reached)
        memo[columns] = found
        return found

    outcomes = explore(start.columns)
    logger.debug(f"dsplice search for {F}: {len(memo)} states, {len(outcomes)} outcome(s)")
    return {Filling(cols, bound) for cols in outcomes}


def dsplice_confluent(F: Filling, budget: int = 200_000) -> bool:
    """True iff every order of legal splice choices gives the same result."""
    return len(dsplice_outcomes(F, budget)) == 1


# =============================================================================
# Relations among the S_i
# =============================================================================


def braid_holds(i: int, F: Filling) -> bool:
    """S_i S_{i+1} S_i F == S_{i+1} S_i S_{i+1} F."""
    left = s_i(i, s_i(i + 1, s_i(i, F)))
    right = s_i(i + 1, s_i(i, s_i(i + 1, F)))
    return left == right


def commutation_holds(i: int, j: int, F: Filling) -> bool:
    """S_i S_j F == S_j S_i F (intended for |i - j| > 1)."""
    return s_i(i, s_i(j, F)) == s_i(j, s_i(i, F))
