"""SVG and text rendering of lattice-path ensembles.

Grid column labels run n..1 left to right and row labels 1..n top to bottom.
For filling column c of d, vertical segments sit at fraction (d-c+1)/(d+1)
of the tile width and horizontal segments at fraction c/(d+1) above the
tile bottom, so left filling columns are drawn right and low.
"""
import html
import logging
from typing import Sequence

from src.core.errors import InputFormatError
from src.models.ensemble import CircleMarking, LatticeEnsemble, Occupancy, TileType

logger = logging.getLogger(__name__)

DEFAULT_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
FORMATS = ("svg", "text")

MARGIN = 24


def render(
    E: LatticeEnsemble,
    fmt: str = "svg",
    circles: CircleMarking | None = None,
    tile_size: int = 40,
    palette: Sequence[str] | None = None,
    stroke_width: float = 2.0,
) -> bytes:
    if fmt == "svg":
        out = render_svg(E, circles, tile_size, palette or DEFAULT_PALETTE, stroke_width)
    elif fmt == "text":
        out = render_text(E, circles)
    else:
        raise InputFormatError(f"Unsupported render format: {fmt} (expected one of {', '.join(FORMATS)})")
    return out.encode("utf-8")


# =============================================================================
# SVG
# =============================================================================


class _Geometry:
    def __init__(self, n: int, d: int, size: int):
        self.n, self.d, self.size = n, d, size

    def origin(self, column: int, row: int) -> tuple[float, float]:
        return MARGIN + (self.n - column) * self.size, MARGIN + (row - 1) * self.size

    def vertical(self, column: int, row: int, c: int) -> float:
        x0, _ = self.origin(column, row)
        return x0 + self.size * (self.d - c + 1) / (self.d + 1)

    def horizontal(self, column: int, row: int, c: int) -> float:
        _, y0 = self.origin(column, row)
        return y0 + self.size - self.size * c / (self.d + 1)

    def points(self, occ: Occupancy, c: int) -> list[tuple[float, float]]:
        x0, y0 = self.origin(occ.column, occ.row)
        v = self.vertical(occ.column, occ.row, c)
        h = self.horizontal(occ.column, occ.row, c)
        if occ.tile_type is TileType.II:
            return [(x0 + self.size, h), (v, h), (v, y0 + self.size)]
        if occ.tile_type is TileType.I:
            return [(v, y0), (v, y0 + self.size)]
        return [(v, y0), (v, h), (x0, h)]


def _fmt(value: float) -> str:
    return f"{value:.2f}".rstrip("0").rstrip(".")


def _path_data(segments: list[list[tuple[float, float]]]) -> str:
    commands: list[str] = []
    last: tuple[float, float] | None = None
    for segment in segments:
        for idx, point in enumerate(segment):
            if idx == 0 and point == last:
                continue
            op = "L" if idx > 0 else "M"
            commands.append(f"{op} {_fmt(point[0])} {_fmt(point[1])}")
            last = point
    return " ".join(commands)


def render_svg(
    E: LatticeEnsemble,
    circles: CircleMarking | None,
    tile_size: int,
    palette: Sequence[str],
    stroke_width: float,
) -> str:
    n, d = E.n, E.num_strands
    geo = _Geometry(n, d, tile_size)
    width = height = 2 * MARGIN + n * tile_size
    svg_parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for row in range(1, n + 1):
        for column in range(1, n + 1):
            x0, y0 = geo.origin(column, row)
            svg_parts.append(
                f'<rect x="{x0}" y="{y0}" width="{tile_size}" height="{tile_size}" '
                f'style="fill: none; stroke: #bbbbbb; stroke-width: 1" />'
            )
    for column in range(1, n + 1):
        x0, _ = geo.origin(column, 1)
        svg_parts.append(
            f'<text x="{_fmt(x0 + tile_size / 2)}" y="{MARGIN - 8}" text-anchor="middle" '
            f'style="font-size: 12px;">{column}</text>'
        )
    for row in range(1, n + 1):
        _, y0 = geo.origin(1, row)
        svg_parts.append(
            f'<text x="{MARGIN - 8}" y="{_fmt(y0 + tile_size / 2 + 4)}" text-anchor="end" '
            f'style="font-size: 12px;">{row}</text>'
        )
    for strand in E.strands:
        colour = palette[(strand.filling_column - 1) % len(palette)]
        segments = [geo.points(occ, strand.filling_column) for occ in strand.occupancies]
        label = html.escape(f"column {strand.filling_column}: {list(strand.entries)}")
        svg_parts.append(
            f'<path d="{_path_data(segments)}" style="fill: none; stroke: {colour}; '
            f'stroke-width: {_fmt(stroke_width)}"><title>{label}</title></path>'
        )
    if circles is not None:
        radius = _fmt(max(2.0, tile_size / (4 * (d + 1))))
        for filled, marks in ((True, circles.solid), (False, circles.open)):
            for (column, row), pairs in sorted(marks.items()):
                for x, z in sorted(pairs):
                    cx = geo.vertical(column, row, x)
                    cy = geo.horizontal(column, row, z)
                    fill = "black" if filled else "white"
                    svg_parts.append(
                        f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{radius}" '
                        f'style="fill: {fill}; stroke: black; stroke-width: 1" />'
                    )
    svg_parts.append("</svg>")
    logger.debug(f"Rendered SVG with {d} strands on a {n}x{n} grid")
    return "\n".join(svg_parts) + "\n"


# =============================================================================
# Text
# =============================================================================


def _tile_label(profiles: dict, circles: CircleMarking | None, key: tuple[int, int]) -> str:
    profile = profiles.get(key)
    parts = []
    if profile is not None:
        if profile.type_ii or profile.type_i:
            parts.append(f"{len(profile.type_ii)}/{len(profile.type_i)}")
        if profile.type_iii:
            parts.append(f"+{len(profile.type_iii)}")
    if circles is not None:
        solid, open_ = len(circles.solid.get(key, ())), len(circles.open.get(key, ()))
        if solid or open_:
            parts.append(f"●{solid}○{open_}")
    return " ".join(parts) if parts else "·"


def render_text(E: LatticeEnsemble, circles: CircleMarking | None) -> str:
    """Each tile shows #II/#I, then +#III when present, then solid and open circle counts."""
    n = E.n
    if n == 0:
        return "(empty grid)\n"
    profiles = E.tile_profile()
    labels = {(c, r): _tile_label(profiles, circles, (c, r)) for c in range(1, n + 1) for r in range(1, n + 1)}
    width = max(len(s) for s in labels.values()) + 2
    columns = list(range(n, 0, -1))
    gutter = len(str(n)) + 1
    lines = [" " * gutter + " " + " ".join(str(c).center(width) for c in columns)]
    lines.append(" " * gutter + "┌" + "┬".join("─" * width for _ in columns) + "┐")
    for r in range(1, n + 1):
        cells = "│".join(labels[(c, r)].center(width) for c in columns)
        lines.append(f"{str(r).rjust(gutter - 1)} │{cells}│")
        if r < n:
            lines.append(" " * gutter + "├" + "┼".join("─" * width for _ in columns) + "┤")
    lines.append(" " * gutter + "└" + "┴".join("─" * width for _ in columns) + "┘")
    return "\n".join(lines) + "\n"
