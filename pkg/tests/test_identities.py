"""
Identity calculus: polarization, distributive laws, implication
"""

import random
from fractions import Fraction

import pytest

from src.core.exceptions import ValidationError
from src.nonassoc.constants import NamedLaws
from src.nonassoc.identities import (
    AA_CYCLIC,
    ANTI_PRE_LIE,
    ASSOCIATIVITY,
    FLEXIBILITY,
    JACOBI,
    LEIBNIZ,
    POISSON,
    TRANSPOSED_LEIBNIZ,
    consequence_space,
    decode_distributive,
    depolarize_coeffs,
    encode_distributive,
    identity_b_conditions,
    implies,
    law_from_rho,
    named_identity,
    orbit_rank,
    orbit_vectors,
    polarize_coeffs,
    polarized_terms,
    rho_from_law,
    rho_rank,
    stacked_matrix,
    translate_identity,
)
from src.nonassoc.depolarization import jacass_family
from src.nonassoc.models import (
    DistributiveLaw,
    Identity,
    LinearSolution,
    NoSolution,
    NotDistributive,
    PolarizedIdentity,
    Witness,
)
from src.nonassoc.sigma3 import IDENTITY, TAU12, combination_matrix

TP_AXIOMS = [TRANSPOSED_LEIBNIZ, JACOBI, ASSOCIATIVITY]


def reproduces(family, target, witness: Witness) -> bool:
    """Σ_k A_k u_k = target.left and Σ_k B_k u_k = target.right"""
    left = [Fraction(0)] * 6
    right = [Fraction(0)] * 6
    for identity, u in zip(family, witness.elements):
        for i, x in enumerate(combination_matrix(identity.left).apply(u.coords)):
            left[i] += x
        for i, x in enumerate(combination_matrix(identity.right).apply(u.coords)):
            right[i] += x
    return tuple(left) == target.left.coords and tuple(right) == target.right.coords


class TestNamedIdentities:
    def test_lookup(self):
        assert named_identity("poisson") == POISSON
        assert POISSON.vector12() == (3, 1, 0, -1, -1, 1, -3, 0, 0, 0, 0, 0)

    def test_unknown_name(self):
        with pytest.raises(ValidationError):
            named_identity("jordan")

    def test_normalized(self):
        assert POISSON.scale(Fraction(-2, 3)).normalized() == POISSON


class TestPolarization:
    def test_poisson(self):
        polarized = polarize_coeffs(POISSON)
        assert polarized.lambdas == (4, -4, 0, 4, 2, 0, 2, 4, -2, 2, -2, -2)

    def test_jacobi_only_involves_brackets(self):
        assert polarize_coeffs(JACOBI).lambdas == (0,) * 9 + (4, -4, -4)
        assert polarized_terms(polarize_coeffs(JACOBI)) == [
            "4 [[x1,x2],x3]",
            "-4 [[x3,x2],x1]",
            "-4 [[x1,x3],x2]",
        ]

    @pytest.mark.parametrize("name", ["leibniz", "transposed_leibniz", "aa_cyclic"])
    def test_distributive_pattern(self, name):
        lambdas = polarize_coeffs(named_identity(name)).lambdas
        assert [lambdas[i] for i in (0, 1, 2, 9, 10, 11)] == [0] * 6

    def test_round_trip(self, rational_vector):
        rng = random.Random(7)
        for _ in range(1000):
            identity = Identity.from_vector12(rational_vector(rng, 12))
            assert depolarize_coeffs(polarize_coeffs(identity)) == identity
            polarized = PolarizedIdentity(lambdas=rational_vector(rng, 12))
            assert polarize_coeffs(depolarize_coeffs(polarized)) == polarized


class TestDistributiveLaws:
    def test_leibniz_law_encodes_leibniz_identity(self):
        alpha, beta = NamedLaws.LEIBNIZ
        assert encode_distributive(DistributiveLaw(alpha=alpha, beta=beta)) == LEIBNIZ

    def test_transposed_law(self):
        alpha, beta = NamedLaws.TRANSPOSED_LEIBNIZ
        assert encode_distributive(DistributiveLaw(alpha=alpha, beta=beta)) == TRANSPOSED_LEIBNIZ

    def test_cyclic_law_decodes(self):
        law = decode_distributive(AA_CYCLIC)
        assert law == DistributiveLaw(alpha=(1, 1, 1), beta=(0, 0, 0))

    def test_jacobi_is_not_distributive(self):
        result = decode_distributive(JACOBI)
        assert isinstance(result, NotDistributive)
        assert result.mismatched_positions == [1, 2, 3, 4, 5, 6]

    def test_round_trip(self, rational_vector):
        rng = random.Random(11)
        for _ in range(1000):
            law = DistributiveLaw(alpha=rational_vector(rng, 3), beta=rational_vector(rng, 3))
            assert decode_distributive(encode_distributive(law)) == law
            assert law_from_rho(rho_from_law(law)) == law

    def test_rho_rank(self):
        assert rho_rank(LEIBNIZ.left.coords) == 3


class TestImplication:
    def test_poisson_implies_leibniz(self):
        result = implies(POISSON, LEIBNIZ)
        assert isinstance(result, Witness)
        assert reproduces([POISSON], LEIBNIZ, result)

    def test_leibniz_implies_flexibility(self):
        result = implies(LEIBNIZ, FLEXIBILITY)
        assert isinstance(result, Witness)
        assert reproduces([LEIBNIZ], FLEXIBILITY, result)

    def test_leibniz_does_not_imply_anti_pre_lie(self):
        result = implies(LEIBNIZ, ANTI_PRE_LIE)
        assert isinstance(result, NoSolution)
        assert result.verify(stacked_matrix(LEIBNIZ).to_lists(), ANTI_PRE_LIE.vector12())

    @pytest.mark.parametrize("first", range(3))
    @pytest.mark.parametrize("second", range(3))
    def test_transposed_axioms_are_independent(self, first, second):
        if first == second:
            pytest.skip("an axiom implies itself")
        assert isinstance(implies(TP_AXIOMS[first], TP_AXIOMS[second]), NoSolution)

    def test_transposed_axioms_imply_cyclic_law(self):
        result = implies(TP_AXIOMS, AA_CYCLIC)
        assert isinstance(result, Witness)
        assert len(result.elements) == 3
        assert reproduces(TP_AXIOMS, AA_CYCLIC, result)

    def test_translates_are_implied(self):
        target = translate_identity(TAU12, POISSON)
        assert isinstance(implies(POISSON, target), Witness)
        assert translate_identity(IDENTITY, POISSON) == POISSON
        assert len(orbit_vectors(POISSON)) == 6

    def test_orbit_rank(self):
        assert orbit_rank(JACOBI) == 1
        assert orbit_rank(POISSON) == 6
        assert orbit_rank(TP_AXIOMS) == 6
        assert orbit_rank([]) == 0


class TestConsequenceSpace:
    @pytest.mark.parametrize(
        "a",
        [(0, 0, 0), (1, 2, 3), (5, -7, Fraction(2, 9))],
    )
    def test_generic_jacass_member_has_none(self, a):
        assert consequence_space(jacass_family(*a)) == ()

    def test_poisson_point(self):
        basis = consequence_space(jacass_family(-1, Fraction(-1, 3), 0))
        assert len(basis) == 3
        for rho in basis:
            assert rho[0] == rho[2]
            assert rho[1] == rho[5]
            assert rho[3] == rho[4]
        assert basis == consequence_space(POISSON)

    def test_transposed_axioms(self):
        basis = consequence_space(TP_AXIOMS)
        assert len(basis) == 3
        cyclic = AA_CYCLIC.left.coords
        assert isinstance(implies(TP_AXIOMS, encode_distributive(law_from_rho(cyclic))), Witness)

    def test_empty_family(self):
        assert consequence_space([]) == ()


class TestIdentityBConditions:
    def test_jacobi(self):
        result = identity_b_conditions(JACOBI)
        assert isinstance(result, LinearSolution)
        assert len(result.kernel) == 5
        a = result.solution
        assert a[0] - a[1] - a[2] - a[3] + a[4] + a[5] == -1

    def test_associativity(self):
        result = identity_b_conditions(ASSOCIATIVITY)
        assert len(result.kernel) == 4
        a = result.solution
        assert a[4] == 1 + a[0] - a[2] + a[3]
        assert a[5] == a[0] - a[1] + a[3]

    @pytest.mark.parametrize("seed", range(5))
    def test_jacass_members_satisfy_both(self, seed):
        rng = random.Random(seed)
        member = jacass_family(*(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)))
        a = member.left.coords
        assert a[0] - a[1] - a[2] - a[3] + a[4] + a[5] == -1
        assert a[4] == 1 + a[0] - a[2] + a[3]
        assert a[5] == a[0] - a[1] + a[3]
