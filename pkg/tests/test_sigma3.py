"""
Σ₃ group algebra
"""

import random

import pytest

from src.core.exceptions import ValidationError
from src.nonassoc.constants import RANK_TABLE
from src.nonassoc.linalg import image_columns
from src.nonassoc.models import GroupAlgebraElement
from src.nonassoc.sigma3 import (
    BASIS,
    CYCLE,
    CYCLE2,
    IDENTITY,
    TAU12,
    TAU13,
    TAU23,
    Perm,
    combination_matrix,
    compose,
    left_translate,
    module_rank,
    monomial_at,
    orbit_matrix,
    perm_by_name,
    sign_value,
    sign_vector,
)

LEIBNIZ_LEFT = (1, 1, 1, -1, -1, 1)


def test_basis_order_and_names():
    assert [p.name for p in BASIS] == ["Id", "t12", "t13", "t23", "c", "c2"]
    assert CYCLE.images == (2, 3, 1)
    assert perm_by_name("t23") is TAU23


def test_unknown_permutation_name():
    with pytest.raises(ValidationError):
        perm_by_name("t21")


def test_not_a_permutation():
    with pytest.raises(ValidationError):
        Perm((1, 1, 2))


def test_composition_is_function_composition():
    assert compose(TAU12, TAU13) == CYCLE2
    assert compose(TAU12, CYCLE) == TAU23
    assert compose(CYCLE, CYCLE) == CYCLE2


@pytest.mark.parametrize("p", BASIS)
def test_inverse_and_sign(p):
    assert compose(p, p.inverse()) == IDENTITY
    assert p.sign == (1 if p in (IDENTITY, CYCLE, CYCLE2) else -1)


def test_left_translate():
    assert left_translate(TAU12, (1, 2, 3, 4, 5, 6)).coords == (2, 1, 6, 5, 4, 3)


def test_leibniz_combination_matrix():
    assert combination_matrix(LEIBNIZ_LEFT).to_lists() == [
        [1, 1, 1, -1, 1, -1],
        [1, 1, -1, 1, -1, 1],
        [1, 1, 1, -1, 1, -1],
        [-1, -1, 1, 1, 1, 1],
        [-1, -1, 1, 1, 1, 1],
        [1, 1, -1, 1, -1, 1],
    ]
    assert combination_matrix(LEIBNIZ_LEFT) == orbit_matrix(LEIBNIZ_LEFT).transpose()


def test_leibniz_rank_and_image_columns():
    assert module_rank(LEIBNIZ_LEFT) == 3
    # greedy pivot columns differ between a matrix and its transpose
    assert [c + 1 for c in image_columns(orbit_matrix(LEIBNIZ_LEFT))] == [1, 2, 4]
    assert [c + 1 for c in image_columns(combination_matrix(LEIBNIZ_LEFT))] == [1, 3, 4]


def test_module_rank_rejects_zero():
    with pytest.raises(ValidationError):
        module_rank((0, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("family", RANK_TABLE, ids=lambda f: f.name)
def test_rank_table(family):
    assert family.admits()
    assert module_rank(family.vector()) == family.rank


def test_rank_family_constraint():
    v22 = next(f for f in RANK_TABLE if f.name == "V2,2")
    assert not v22.admits(1, -1)
    assert module_rank(v22.vector(1, -1)) == 1


@pytest.mark.parametrize("seed", range(20))
def test_sign_vector_is_an_eigenvector(seed, rational_vector):
    v = rational_vector(random.Random(seed), 6)
    image = combination_matrix(v).apply(sign_vector().coords)
    assert image == tuple(sign_value(v) * s for s in sign_vector().coords)


def test_monomial_rendering():
    assert str(monomial_at(0)) == "(x1x2)x3"
    assert str(monomial_at(7)) == "x2(x1x3)"
    assert monomial_at(11).render(("x", "y", "z")) == "z(xy)"
    assert [monomial_at(p).position for p in range(12)] == list(range(12))


def test_monomial_index_range():
    with pytest.raises(ValidationError):
        monomial_at(12)


@pytest.mark.parametrize("seed", range(10))
def test_left_translation_is_a_group_action(seed, rational_vector):
    v = rational_vector(random.Random(seed), 6)
    for s in BASIS:
        for t in BASIS:
            assert left_translate(s, left_translate(t, v)) == left_translate(compose(s, t), v)


@pytest.mark.parametrize("seed", range(10))
def test_module_rank_is_constant_on_orbits(seed, rational_vector):
    rng = random.Random(50 + seed)
    v = rational_vector(rng, 6)
    # sparse support gives ranks below 6
    for k in rng.sample(range(6), rng.randint(0, 4)):
        v[k] = 0
    v[0] = v[0] or 1
    for s in BASIS:
        assert module_rank(left_translate(s, v)) == module_rank(v)


@pytest.mark.parametrize("family", RANK_TABLE, ids=lambda f: f.name)
def test_rank_table_ranks_survive_translation(family):
    for s in BASIS:
        assert module_rank(left_translate(s, family.vector())) == family.rank


@pytest.mark.parametrize("index", range(6))
def test_orbit_of_a_basis_element_is_a_permutation_matrix(index):
    rows = orbit_matrix(GroupAlgebraElement.unit(index)).to_lists()
    for line in rows + [list(col) for col in zip(*rows)]:
        assert sorted(line) == [0, 0, 0, 0, 0, 1]
