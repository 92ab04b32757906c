import pytest

from cabinet_psa.datasets import (
    SYNTHETIC_SCENARIOS,
    builtin_document,
    sample15_document,
    sample15_truncated,
    synthetic_document,
)
from cabinet_psa.model import normalize_edges


def test_sample15_shape():
    doc = sample15_document()
    assert len(doc.components) == 15
    assert sum(c.is_hot for c in doc.components) == 3
    assert {c.index for c in doc.components if c.is_hot} == {1, 2, 5}
    assert len(normalize_edges(list(doc.components))) == 17


def test_sample15_truncation_drops_out_of_range_links():
    doc = sample15_truncated(7)
    assert len(doc.components) == 7
    comp6 = doc.components[5]
    assert comp6.connects_to == ()  # pointed at 15 in the full set
    assert all(t <= 7 for c in doc.components for t in c.connects_to)
    with pytest.raises(ValueError):
        sample15_truncated(0)


@pytest.mark.parametrize("name", sorted(SYNTHETIC_SCENARIOS))
def test_synthetic_counts(name):
    n, hot, wires, _ = SYNTHETIC_SCENARIOS[name]
    doc = synthetic_document(name)
    assert len(doc.components) == n
    assert sum(c.is_hot for c in doc.components) == hot
    assert len(normalize_edges(list(doc.components))) == wires
    assert all(c.width_mm <= doc.cabinet.usable_width_mm for c in doc.components)


def test_synthetic_regeneration_is_deterministic():
    assert synthetic_document("synth-b") == synthetic_document("synth-b")


def test_builtin_lookup():
    assert builtin_document("sample-15") == sample15_document()
    assert builtin_document("synth-a") is not None
    assert builtin_document("nope") is None
