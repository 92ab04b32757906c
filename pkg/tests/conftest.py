from __future__ import annotations

import pytest

from cabinet_psa.datasets import sample15_document, sample15_truncated
from cabinet_psa.model import CabinetSpec, Component


@pytest.fixture(scope="session")
def sample15():
    return sample15_document()


@pytest.fixture(scope="session")
def sample7():
    return sample15_truncated(7)


@pytest.fixture()
def abc_components():
    """Three-component toy cabinet: A 100x100, B 200x100, C 150x50 (hot), wire A-C."""
    return [
        Component(1, "A", 100.0, 100.0, 50.0, (3,), False),
        Component(2, "B", 200.0, 100.0, 50.0, (), False),
        Component(3, "C", 150.0, 50.0, 50.0, (), True),
    ]


@pytest.fixture()
def abc_cabinet():
    return CabinetSpec(usable_width_mm=300.0, row_gap_mm=0.0, name="abc")
