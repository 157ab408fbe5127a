"""Tests for models package exports."""


def test_all_models_importable():
    from src.models import (
        Cell,
        ColumnComposition,
        Partition,
        Filling,
        GTPattern,
        POP,
        CLAtom,
        CLWord,
        LatticeEnsemble,
        CircleMarking,
        Bounds,
        Case,
        CheckResult,
        SuiteReport,
    )

    assert Cell is not None
    assert ColumnComposition is not None
    assert Partition is not None
    assert Filling is not None
    assert GTPattern is not None
    assert POP is not None
    assert CLAtom is not None
    assert CLWord is not None
    assert LatticeEnsemble is not None
    assert CircleMarking is not None
    assert Bounds is not None
    assert Case is not None
    assert CheckResult is not None
    assert SuiteReport is not None


def test_all_list_matches_exports():
    import src.models as models

    for name in models.__all__:
        assert hasattr(models, name), name
