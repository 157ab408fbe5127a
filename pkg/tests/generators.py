"""Hypothesis generators for partitions and column strict fillings."""
from hypothesis import strategies as st


@st.composite
def partitions(draw, max_cells: int = 6, max_parts: int = 4):
    from src.models.shapes import Partition

    parts = draw(st.lists(st.integers(min_value=1, max_value=max_cells), max_size=max_parts))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_cells:
        parts.pop(0)
    return Partition(tuple(sorted(parts, reverse=True)))


@st.composite
def csfs(draw, max_cells: int = 5, max_n: int = 4, min_n: int = 1):
    """A column strict filling of a random shape with at most n rows."""
    from src.models.filling import Filling

    n = draw(st.integers(min_value=min_n, max_value=max_n))
    shape = draw(partitions(max_cells=max_cells, max_parts=n))
    columns = []
    for height in shape.conjugate().parts:
        entries = draw(st.lists(st.integers(min_value=1, max_value=n), min_size=height, max_size=height, unique=True))
        columns.append(tuple(sorted(entries)))
    return Filling(tuple(columns), n)
