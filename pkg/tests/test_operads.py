"""
Operads in arity 3 and free algebras on one generator
"""

import pytest

from src.core.exceptions import ValidationError
from src.nonassoc.constants import OperadMatrices
from src.nonassoc.identities import ASSOCIATIVITY, JACOBI, POISSON, TRANSPOSED_LEIBNIZ
from src.nonassoc.linalg import Matrix, rref
from src.nonassoc.operads import (
    annihilates,
    catalan,
    dim_arity3,
    dual_relations,
    free_dims,
    is_self_dual,
    koszul_note,
    orbit_span,
    pairing_matrix,
    render_tree,
    transposed_poisson_spaces,
    tree_monomials,
)

TP_AXIOMS = [TRANSPOSED_LEIBNIZ, JACOBI, ASSOCIATIVITY]


class TestArity3:
    def test_transposed_poisson(self):
        assert dim_arity3(TP_AXIOMS) == 6
        dual = dual_relations(orbit_span(TP_AXIOMS))
        assert dual.dimension == 6
        assert is_self_dual(orbit_span(TP_AXIOMS))

    def test_single_identities(self):
        assert dim_arity3([JACOBI]) == 11
        assert dim_arity3([POISSON]) == 6
        assert dim_arity3([]) == 12

    def test_shipped_matrices(self):
        tp, dtp = transposed_poisson_spaces()
        assert tp == orbit_span(TP_AXIOMS)
        assert dtp.dimension == 6
        assert annihilates(OperadMatrices.TP, OperadMatrices.DTP)
        twisted = Matrix(OperadMatrices.DTP, 12) @ pairing_matrix()
        assert rref(twisted).basis() == tp.basis

    def test_annihilates_detects_overlap(self):
        assert not annihilates(OperadMatrices.TP, OperadMatrices.TP)

    def test_no_relations_is_not_self_dual(self):
        empty = orbit_span([])
        assert empty.dimension == 0
        assert dual_relations(empty).dimension == 12
        assert not is_self_dual(empty)

    def test_koszul_note(self):
        note = koszul_note(orbit_span(TP_AXIOMS))
        assert note.startswith("self-dual: yes")
        assert "Koszulity is not decided" in note


class TestTrees:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_are_catalan(self, n):
        monomials = tree_monomials(n)
        assert len(monomials) == catalan(n - 1)
        assert len(set(monomials)) == len(monomials)

    def test_catalan(self):
        assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
        assert catalan(-1) == 0

    def test_render(self):
        assert [render_tree(t) for t in tree_monomials(3)] == ["X(XX)", "(XX)X"]


class TestFreeDims:
    def test_transposed_poisson(self):
        assert free_dims(TP_AXIOMS, 4) == [1, 1, 1, 2, 3]
        assert free_dims(TP_AXIOMS, 5) == [1, 1, 1, 2, 3, 5]

    def test_poisson(self):
        assert free_dims([POISSON], 5) == [1, 1, 1, 1, 1, 1]

    def test_free_magma(self):
        assert free_dims([], 5) == [1, 1, 1, 2, 5, 14]

    def test_degree_cap(self):
        with pytest.raises(ValidationError):
            free_dims(TP_AXIOMS, 6)
        assert free_dims(TP_AXIOMS, 0) == [1]
