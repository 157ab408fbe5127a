"""Tests for SVG and text rendering of ensembles."""
import pytest


def _ensemble():
    from src.lattice.ensemble import build_ensemble, declutter
    from src.models.filling import Filling

    return declutter(build_ensemble(Filling.from_rows([[1, 2, 1, 2], [3, 4]], n=4)))


def test_svg_output():
    from src.lattice.render import render

    svg = render(_ensemble()).decode("utf-8")
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<path") == 4
    assert svg.count("<rect") == 16
    assert "<circle" not in svg
    assert "column 1: [1, 3]" in svg


def test_svg_circles_and_palette():
    from src.lattice.ensemble import mark_circles
    from src.lattice.render import render

    E = _ensemble()
    svg = render(E, circles=mark_circles(E), palette=["#000001"], tile_size=60).decode("utf-8")
    assert svg.count("<circle") == 5
    assert svg.count('fill: white; stroke: black') == 1
    assert svg.count("stroke: #000001") == 4
    assert 'width="288"' in svg


def test_text_output():
    from src.lattice.ensemble import mark_circles
    from src.lattice.render import render

    E = _ensemble()
    text = render(E, fmt="text", circles=mark_circles(E)).decode("utf-8")
    lines = text.splitlines()
    assert lines[0].split() == ["4", "3", "2", "1"]
    assert "●3○1" in text
    assert "2/2" in text


def test_text_output_empty_grid():
    from src.lattice.ensemble import build_ensemble
    from src.lattice.render import render
    from src.models.filling import Filling

    assert render(build_ensemble(Filling.empty(0)), fmt="text") == b"(empty grid)\n"


def test_unknown_format():
    from src.core.errors import InputFormatError
    from src.lattice.render import render

    with pytest.raises(InputFormatError, match="Unsupported render format"):
        render(_ensemble(), fmt="png")


def test_text_output_matches_golden_file():
    from pathlib import Path

    from src.lattice.ensemble import build_ensemble, declutter, mark_circles
    from src.lattice.render import render
    from src.verification.suites.worked_examples import RUNNING_FILLING

    golden = Path(__file__).parent.parent / "fixtures" / "lattice" / "running_filling.txt"
    E = declutter(build_ensemble(RUNNING_FILLING))

    text = render(E, fmt="text", circles=mark_circles(E)).decode("utf-8")

    assert text == golden.read_text(encoding="utf-8")
