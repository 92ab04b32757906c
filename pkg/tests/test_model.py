import random

import pytest

from cabinet_psa.model import (
    Component,
    ComponentValidationError,
    Edge,
    ObjectiveVector,
    dominates,
    normalize_edges,
    validate_components,
)


def comp(index, connects=(), **kwargs):
    defaults = dict(id=f"{index:04d}", width_mm=100.0, height_mm=100.0, depth_mm=100.0)
    defaults.update(kwargs)
    return Component(index=index, connects_to=tuple(connects), **defaults)


class TestValidateComponents:
    def test_sample15_is_valid(self, sample15):
        comps = list(sample15.components)
        assert validate_components(comps) is comps
        assert len(comps) == 15

    def test_single_component_empty_connections(self):
        assert validate_components([comp(1)])

    def test_dangling_connection_names_offender(self):
        comps = [comp(1), comp(2, connects=[99]), comp(3)]
        with pytest.raises(ComponentValidationError) as err:
            validate_components(comps)
        assert err.value.codes() == {"DanglingConnection"}
        assert err.value.issues[0].index == 2
        assert "99" in str(err.value)

    def test_duplicate_index(self):
        with pytest.raises(ComponentValidationError) as err:
            validate_components([comp(1), comp(1)])
        assert "DuplicateIndex" in err.value.codes()

    def test_self_connection(self):
        with pytest.raises(ComponentValidationError) as err:
            validate_components([comp(1, connects=[1]), comp(2)])
        assert err.value.codes() == {"SelfConnection"}

    def test_non_positive_and_non_finite_dimensions(self):
        for bad in (0.0, -5.0, float("nan"), float("inf")):
            with pytest.raises(ComponentValidationError) as err:
                validate_components([comp(1, width_mm=bad)])
            assert "NonPositiveDimension" in err.value.codes()

    def test_index_gap_rejected(self):
        with pytest.raises(ComponentValidationError) as err:
            validate_components([comp(1), comp(5)])
        assert "IndexOutOfRange" in err.value.codes()

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            validate_components([])

    def test_idempotent(self, sample15):
        comps = list(sample15.components)
        once = validate_components(comps)
        assert validate_components(once) == once

    def test_collects_multiple_issues(self):
        comps = [comp(1, connects=[1], width_mm=-1.0), comp(2, connects=[9])]
        with pytest.raises(ComponentValidationError) as err:
            validate_components(comps)
        assert err.value.codes() == {"SelfConnection", "NonPositiveDimension", "DanglingConnection"}


class TestNormalizeEdges:
    def test_sample_rows_appear_once(self, sample15):
        edges = normalize_edges(list(sample15.components))
        assert Edge(1, 3) in edges
        assert Edge(1, 2) in edges

    def test_full_sample_edge_count(self, sample15):
        # 18 directed entries in the catalog, one reciprocal pair (6<->15).
        edges = normalize_edges(list(sample15.components))
        assert len(edges) == 17

    def test_no_connections_no_edges(self):
        assert normalize_edges([comp(1), comp(2)]) == set()

    def test_reciprocal_collapses_to_one(self):
        comps = [comp(1, connects=[2]), comp(2, connects=[1])]
        assert normalize_edges(comps) == {Edge(1, 2)}

    def test_invariant_under_direction_reversal(self, sample15):
        comps = list(sample15.components)
        forward = normalize_edges(comps)
        reversed_adj = {c.index: [] for c in comps}
        for c in comps:
            for t in c.connects_to:
                reversed_adj[t].append(c.index)
        flipped = [
            Component(c.index, c.id, c.width_mm, c.height_mm, c.depth_mm,
                      tuple(reversed_adj[c.index]), c.is_hot)
            for c in comps
        ]
        assert normalize_edges(flipped) == forward

    def test_size_bounded_by_entries(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.randint(2, 10)
            comps = []
            total = 0
            for i in range(1, n + 1):
                targets = [rng.randint(1, n) for _ in range(rng.randint(0, 4))]
                targets = [t for t in targets if t != i]
                total += len(targets)
                comps.append(comp(i, connects=targets))
            assert len(normalize_edges(comps)) <= total


class TestDominates:
    def test_strictly_better_in_both(self):
        assert dominates(ObjectiveVector(5, 100), ObjectiveVector(6, 120))

    def test_equal_vectors_do_not_dominate(self):
        assert not dominates(ObjectiveVector(5, 100), ObjectiveVector(5, 100))

    def test_incomparable_pair(self):
        a, b = ObjectiveVector(5, 130), ObjectiveVector(6, 120)
        assert not dominates(a, b)
        assert not dominates(b, a)

    def test_better_in_one_equal_in_other(self):
        assert dominates(ObjectiveVector(5, 100), ObjectiveVector(5, 120))
        assert dominates(ObjectiveVector(4, 100), ObjectiveVector(5, 100))

    def test_relation_properties(self):
        rng = random.Random(42)
        vecs = [ObjectiveVector(rng.choice([1.0, 2.0, 3.0]), rng.choice([10.0, 20.0, 30.0]))
                for _ in range(60)]
        for a in vecs:
            assert not dominates(a, a)
        for a in vecs:
            for b in vecs:
                assert not (dominates(a, b) and dominates(b, a))
        for a in vecs[:20]:
            for b in vecs[:20]:
                for c in vecs[:20]:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)
