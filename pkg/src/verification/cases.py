"""Canonical case streams shared by the suites."""
from typing import Iterator

from src.combinatorics.fillings import enumerate_csf
from src.combinatorics.shapes import partitions_up_to
from src.models.filling import Filling
from src.models.shapes import Partition
from src.models.verification import Bounds, Case


def shapes(bounds: Bounds, min_n: int = 1, max_cells: int | None = None, max_n: int | None = None) -> Iterator[tuple[Partition, int]]:
    """(λ, n) with λ fitting in n rows, ordered by n, then |λ|, then reverse lex."""
    cells = bounds.max_cells if max_cells is None else min(max_cells, bounds.max_cells)
    top = bounds.max_n if max_n is None else min(max_n, bounds.max_n)
    for n in range(min_n, top + 1):
        for shape in partitions_up_to(cells, n):
            yield shape, n


def shape_case(shape: Partition, n: int) -> Case:
    return Case(
        label=f"λ={shape} n={n}",
        witness={"shape": shape.to_json(), "n": n},
        data={"shape": shape, "n": n},
    )


def shape_cases(bounds: Bounds, min_n: int = 1, **limits) -> Iterator[Case]:
    for shape, n in shapes(bounds, min_n, **limits):
        yield shape_case(shape, n)


def filling_case(F: Filling) -> Case:
    return Case(label=f"F={F}", witness={"filling": F.to_json()}, data={"filling": F})


def csf_cases(bounds: Bounds, min_n: int = 1, **limits) -> Iterator[Case]:
    """Every CSF of every (λ, n) in range."""
    for shape, n in shapes(bounds, min_n, **limits):
        for F in enumerate_csf(shape, n):
            yield filling_case(F)
