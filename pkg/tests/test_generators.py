import itertools

import pytest

from bigelow_jones.generators import (
    distinguished_generator, enumerate_generators, permutation_parity, project_to_base,
)

from conftest import analysis


def _by_label(gens):
    return {g.compact_label: g for g in gens}


def test_trefoil_count(trefoil):
    assert len(trefoil.generators) == 18
    assert len(set(g.compact_label for g in trefoil.generators)) == 18


def test_identity_m1():
    a = analysis("", 1)
    assert [g.compact_label for g in a.generators] == ["x1", "x2"]
    assert distinguished_generator(a.system).compact_label == "x2"


def test_identity_m2():
    a = analysis("", 2)
    nu = distinguished_generator(a.system)
    assert [p.base.position[0] for p in nu.points] == [2, 4]


def test_trefoil_distinguished(trefoil):
    assert distinguished_generator(trefoil.system).compact_label == "u2v2"


def test_empty_matching(trefoil):
    only_beta1 = [p for p in trefoil.system.points if p.beta_index == 1]
    assert enumerate_generators(only_beta1, 2) == []


def test_projection(trefoil):
    g = _by_label(trefoil.generators)
    assert [p.label for p in project_to_base(g["x2'y2"])] == ["x2", "y2"]
    assert project_to_base(g["u1v1'"]) == project_to_base(g["u1v1"])
    nu = distinguished_generator(trefoil.system)
    assert [p.position[0] for p in project_to_base(nu)] == [2, 4]


def test_canonical_order_is_stable(trefoil):
    again = enumerate_generators(list(reversed(trefoil.system.points)), 2)
    assert [g.compact_label for g in again] == [g.compact_label for g in trefoil.generators]


def _permanent_count(points, m):
    counts = [[0] * m for _ in range(m)]
    for p in points:
        counts[p.alpha_index - 1][p.beta_index - 1] += 1
    total = 0
    for perm in itertools.permutations(range(m)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= counts[i][j]
        total += prod
    return total


@pytest.mark.parametrize("word,strands", [("-1 -1 -1", 2), ("1 -2 1 -2", 3), ("2 1 1 -2", 3), ("1 2 -1", 3), ("", 3)])
def test_count_is_permanent(word, strands):
    a = analysis(word, strands)
    assert len(a.generators) == _permanent_count(a.system.points, a.m)
    for g in a.generators:
        assert sorted(g.permutation) == list(range(1, a.m + 1))
        assert [p.alpha_index for p in g.points] == list(range(1, a.m + 1))


def test_permutation_parity(trefoil):
    g = _by_label(trefoil.generators)
    assert permutation_parity(g["u2v2"]) == 1
    assert permutation_parity(g["x1y1"]) == -1
