"""Bundled cabinet descriptions: the 15-component sample and synthetic benchmarks.

The synthetic scenarios reproduce the component/hot/wire counts of the three
benchmark cabinets (14/4/5, 21/6/22 and 41/12/88) with dimensions drawn from
a fixed seed, since the original cabinets' dimensions are not public. They
exist to exercise scale, not to reproduce anyone's numbers.
"""

from __future__ import annotations

import random
from collections import defaultdict

from .io_formats import CabinetDocument, parse_components_csv
from .model import CabinetSpec, Component

SAMPLE_15_CSV = """\
!width=600
!rowgap=40
!name=sample-15
#,ID,Width,Height,Depth,ConnectsTo,IsHot
1,0001,120.0,150.0,200.0,3,1
2,0002,160.0,165.0,200.0,1,1
3,0002,160.0,165.0,200.0,7,0
4,0003,176.5,158.0,200.0,5,0
5,0004,132.6,165.0,200.0,6,1
6,0005,149.0,155.0,200.0,15,0
7,0005,149.0,155.0,200.0,14,0
8,0005,149.0,155.0,200.0,1;5,0
9,0006,129.1,165.0,200.0,10,0
10,0007,120.0,150.5,200.0,12,0
11,0008,138.0,152.0,200.0,10,0
12,0008,138.0,152.0,200.0,11,0
13,0008,138.0,152.0,200.0,12,0
14,0009,111.6,170.0,200.0,12;15,0
15,0010,121.3,150.0,200.0,11;6,0
"""

# name -> (components, hot components, wires, generator seed)
SYNTHETIC_SCENARIOS = {
    "synth-a": (14, 4, 5, 101),
    "synth-b": (21, 6, 22, 102),
    "synth-c": (41, 12, 88, 103),
}


def sample15_document() -> CabinetDocument:
    return parse_components_csv(SAMPLE_15_CSV)


def sample15_truncated(k: int) -> CabinetDocument:
    """First k sample components, with connections beyond k dropped.

    This is how small oracle-checkable instances are derived from the sample.
    """
    doc = sample15_document()
    if not 1 <= k <= len(doc.components):
        raise ValueError(f"k must be in 1..{len(doc.components)}")
    kept = [
        Component(
            index=c.index,
            id=c.id,
            width_mm=c.width_mm,
            height_mm=c.height_mm,
            depth_mm=c.depth_mm,
            connects_to=tuple(t for t in c.connects_to if t <= k),
            is_hot=c.is_hot,
        )
        for c in doc.components[:k]
    ]
    return CabinetDocument(CabinetSpec(600.0, 40.0, f"sample-{k}"), tuple(kept))


def synthetic_document(name: str) -> CabinetDocument:
    """Deterministically generated scenario with the named benchmark's counts."""
    n, hot_count, wire_count, seed = SYNTHETIC_SCENARIOS[name]
    rng = random.Random(seed)
    hot = set(rng.sample(range(1, n + 1), hot_count))
    pairs = [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]
    edges = rng.sample(pairs, wire_count)
    adjacency = defaultdict(list)
    for a, b in edges:
        adjacency[a].append(b)
    components = [
        Component(
            index=i,
            id=f"{i:04d}",
            width_mm=round(rng.uniform(80.0, 220.0), 1),
            height_mm=round(rng.uniform(120.0, 200.0), 1),
            depth_mm=200.0,
            connects_to=tuple(sorted(adjacency[i])),
            is_hot=i in hot,
        )
        for i in range(1, n + 1)
    ]
    return CabinetDocument(CabinetSpec(600.0, 40.0, name), tuple(components))


def builtin_document(name: str) -> CabinetDocument | None:
    """Look up a bundled dataset by name; None when the name is not bundled."""
    if name == "sample-15":
        return sample15_document()
    if name in SYNTHETIC_SCENARIOS:
        return synthetic_document(name)
    return None
