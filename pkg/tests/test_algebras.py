"""
Checks on structure-constant algebras and the polynomial model
"""

import random

import pytest

from src.core.exceptions import DimensionError, PreconditionError, ValidationError
from src.nonassoc.algebras import (
    check_identity,
    check_orbit,
    depolarize_algebra,
    is_anticommutative,
    is_commutative,
    opposite,
    poly_check,
    polarize_algebra,
    power_defect,
    random_algebra,
    sample_algebra,
)
from src.nonassoc.constants import NamedLaws
from src.nonassoc.identities import (
    ASSOCIATIVITY,
    FLEXIBILITY,
    JACOBI,
    LEIBNIZ,
    TRANSPOSED_LEIBNIZ,
)
from src.nonassoc.models import DistributiveLaw, StructureAlgebra
from src.nonassoc.superalgebra import skew_sp24, sp_family


class TestStructureAlgebra:
    def test_missing_products_are_zero(self):
        alg = sample_algebra("heisenberg")
        assert alg.product(0, 1) == (0, 0, 1)
        assert alg.product(2, 2) == (0, 0, 0)
        assert alg.multiply((1, 1, 0), (1, 2, 0)) == (0, 0, 1)

    def test_grading_is_enforced(self):
        with pytest.raises(ValidationError):
            StructureAlgebra.from_products(2, {(0, 0): (0, 1)}, grading=(0, 1))

    def test_shape_is_enforced(self):
        with pytest.raises(DimensionError):
            StructureAlgebra(dim=2, constants=[[(1, 0)]])

    def test_unknown_sample(self):
        with pytest.raises(ValidationError):
            sample_algebra("octonions")


class TestChecks:
    def test_jacobi_on_a_lie_bracket(self):
        assert check_identity(sample_algebra("heisenberg"), JACOBI).passed
        assert check_orbit(sample_algebra("affine_lie"), JACOBI).passed

    def test_first_failing_triple(self):
        result = check_identity(sample_algebra("nonflexible"), FLEXIBILITY)
        assert not result.passed
        assert result.triple == (1, 1, 1)
        assert result.residual == (-2, 0)
        assert str(result) == "FAIL at (1,1,1) residual -2 0"

    def test_graded_algebra_needs_signed_check(self):
        with pytest.raises(PreconditionError):
            check_identity(sp_family("SP2,1", 1), JACOBI)

    def test_even_grading_is_accepted(self):
        alg = StructureAlgebra.from_products(1, {(0, 0): (1,)}, grading=(0,))
        assert check_identity(alg, ASSOCIATIVITY).passed


class TestPolarization:
    def test_commutativity_helpers(self):
        assert is_anticommutative(sample_algebra("heisenberg"))
        assert not is_commutative(sample_algebra("heisenberg"))
        assert is_commutative(sample_algebra("idempotent"))

    def test_opposite_is_an_involution(self, rng):
        alg = random_algebra(3, rng)
        assert opposite(opposite(alg)) == alg

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(1000):
            mu = random_algebra(rng.randint(1, 3), rng)
            dot, bracket = polarize_algebra(mu)
            assert is_commutative(dot)
            assert is_anticommutative(bracket)
            assert depolarize_algebra(dot, bracket) == mu

    def test_depolarize_preconditions(self):
        heisenberg = sample_algebra("heisenberg")
        with pytest.raises(PreconditionError):
            depolarize_algebra(heisenberg, heisenberg)
        with pytest.raises(DimensionError):
            depolarize_algebra(sample_algebra("idempotent"), heisenberg)

    @pytest.mark.parametrize("kind", ["commutative", "anticommutative"])
    def test_random_algebra_kinds(self, kind, rng):
        alg = random_algebra(4, rng, kind=kind)
        assert (is_commutative if kind == "commutative" else is_anticommutative)(alg)

    def test_random_graded_algebra(self, rng):
        alg = random_algebra(3, rng, grading=(0, 1, 1))
        assert alg.grading == (0, 1, 1)

    def test_unknown_kind(self, rng):
        with pytest.raises(ValidationError):
            random_algebra(2, rng, kind="jordan")


class TestPowers:
    def test_skew_family_is_not_power_associative(self):
        values = power_defect(skew_sp24(2, 7), (1, 1), 3)
        assert set(values) == {(0, 14), (0, -14)}
        assert values[0] == (0, -14)

    def test_shipped_family_cubes_agree(self):
        assert power_defect(sp_family("SP2,4", 2, 7), (1, 1), 3) == [(46, 26)]

    @pytest.mark.parametrize("seed", range(5))
    def test_shipped_family_power_associative(self, seed):
        rng = random.Random(seed)
        a, d = rng.randint(-4, 4), rng.randint(-4, 4)
        x = (rng.randint(-3, 3), rng.randint(-3, 3))
        for n in range(1, 6):
            assert len(power_defect(sp_family("SP2,4", a, d), x, n)) == 1

    def test_power_range(self):
        with pytest.raises(ValidationError):
            power_defect(sample_algebra("idempotent"), (1,), 7)


class TestPolynomialModel:
    @pytest.mark.parametrize("identity", [TRANSPOSED_LEIBNIZ, JACOBI, ASSOCIATIVITY])
    def test_transposed_poisson_axioms_hold(self, identity):
        result = poly_check(identity, degree_bound=8, trials=5)
        assert result.passed
        assert result.checked == 9 ** 3 + 5

    def test_law_input(self):
        alpha, beta = NamedLaws.TRANSPOSED_LEIBNIZ
        assert poly_check(DistributiveLaw(alpha=alpha, beta=beta), degree_bound=4, trials=3).passed

    def test_leibniz_fails_with_witness(self):
        result = poly_check(LEIBNIZ)
        assert not result.passed
        assert result.witness is not None
        assert result.residual not in (None, "0")

    def test_negative_bounds(self):
        with pytest.raises(ValidationError):
            poly_check(JACOBI, degree_bound=-1)
