"""
Arity-3 component of binary quadratic operads

Relation spaces are Σ₃-orbit spans inside the 12-dimensional space of
degree-3 monomials. The quadratic dual is the annihilator under the diagonal
pairing ⟨L(σ), L(σ)⟩ = ε(σ), ⟨R(σ), R(σ)⟩ = -ε(σ). Free algebras on one
generator are computed by brute force up to degree 5.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple, Union

from ..core.config import MAX_FREE_DEGREE
from ..core.exceptions import ValidationError
from ..utils.logger import get_logger
from .constants import OperadMatrices
from .identities import orbit_vectors
from .linalg import Matrix, kernel, rref
from .models import Identity, RelationSpace
from .sigma3 import MONOMIALS, SIGNS, Side

logger = get_logger(__name__)

Tree = Union[str, Tuple["Tree", "Tree"]]
LEAF = "X"


def orbit_span(ids: Sequence[Identity]) -> RelationSpace:
    """Span of every σ-translate of the given identities"""
    vectors = [v for identity in ids for v in orbit_vectors(identity)]
    if not vectors:
        return RelationSpace()
    return RelationSpace(basis=rref(Matrix(vectors, 12)).basis())


def dim_arity3(ids: Sequence[Identity]) -> int:
    """Dimension of the arity-3 component of the operad defined by ids"""
    return 12 - orbit_span(ids).dimension


def pairing_matrix() -> Matrix:
    return Matrix.diagonal(list(SIGNS) + [-s for s in SIGNS])


def dual_relations(space: RelationSpace) -> RelationSpace:
    """Annihilator of the space under the signed pairing"""
    paired = Matrix(space.basis, 12) @ pairing_matrix() if space.basis else Matrix.zeros(0, 12)
    annihilator = kernel(paired)
    if not annihilator:
        return RelationSpace()
    return RelationSpace(basis=rref(Matrix(annihilator, 12)).basis())


def is_self_dual(space: RelationSpace) -> bool:
    return dual_relations(space) == space


def annihilates(first: Sequence[Sequence], second: Sequence[Sequence]) -> bool:
    """Whether every row of first is orthogonal to every row of second, plain dot product"""
    if not first or not second:
        return True
    return (Matrix(first, 12) @ Matrix(second, 12).transpose()).is_zero()


def transposed_poisson_spaces() -> Tuple[RelationSpace, RelationSpace]:
    """Relation spaces of the shipped transposed Poisson matrix and of its dual matrix"""
    return (
        RelationSpace(basis=rref(Matrix(OperadMatrices.TP, 12)).basis()),
        RelationSpace(basis=rref(Matrix(OperadMatrices.DTP, 12)).basis()),
    )


def koszul_note(space: RelationSpace) -> str:
    """Self-duality summary; Koszulity itself is not computed"""
    answer = "yes" if is_self_dual(space) else "no"
    return (
        f"self-dual: {answer} (dim R = {space.dimension}, dim R^⊥ = {12 - space.dimension}); "
        "Koszulity is not decided here and needs a separate proof"
    )


def catalan(n: int) -> int:
    """The n-th Catalan number"""
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def tree_monomials(n: int) -> Tuple[Tree, ...]:
    """
    All full binary trees with n leaves labeled X

    Ordered by the size of the left subtree, then recursively.
    """
    if n < 1:
        return ()
    if n == 1:
        return (LEAF,)
    return tuple(
        (left, right)
        for k in range(1, n)
        for left in tree_monomials(k)
        for right in tree_monomials(n - k)
    )


def render_tree(tree: Tree, top: bool = True) -> str:
    if tree == LEAF:
        return LEAF
    inner = render_tree(tree[0], False) + render_tree(tree[1], False)
    return inner if top else f"({inner})"


def _substitute(monomial_position: int, trees: Sequence[Tree]) -> Tree:
    monomial = MONOMIALS[monomial_position]
    a, b, c = (trees[i - 1] for i in monomial.variables)
    if monomial.side is Side.LEFT:
        return ((a, b), c)
    return (a, (b, c))


def _relations_of_degree(
    n: int,
    ids: Sequence[Identity],
    lower: Dict[int, List[Dict[Tree, Fraction]]],
) -> List[Dict[Tree, Fraction]]:
    """
    Generators of the degree-n part of the ideal

    Substitutions of tree monomials into the identities plus left and right
    products of lower-degree relations with monomials.
    """
    relations: List[Dict[Tree, Fraction]] = []
    vectors = [identity.vector12() for identity in ids]
    for d1 in range(1, n - 1):
        for d2 in range(1, n - d1):
            d3 = n - d1 - d2
            for t1 in tree_monomials(d1):
                for t2 in tree_monomials(d2):
                    for t3 in tree_monomials(d3):
                        trees = (t1, t2, t3)
                        for vector in vectors:
                            relation: Dict[Tree, Fraction] = {}
                            for position, coefficient in enumerate(vector):
                                if coefficient == 0:
                                    continue
                                tree = _substitute(position, trees)
                                relation[tree] = relation.get(tree, Fraction(0)) + coefficient
                            relations.append(relation)
    for m, basis in lower.items():
        for monomial in tree_monomials(n - m):
            for relation in basis:
                relations.append({(tree, monomial): c for tree, c in relation.items()})
                relations.append({(monomial, tree): c for tree, c in relation.items()})
    return relations


def free_dims(ids: Sequence[Identity], max_degree: int) -> List[int]:
    """
    Dimensions of the free algebra on one generator, degrees 0..max_degree

    Args:
        ids: defining identities
        max_degree: highest degree, at most 5

    Returns:
        list of dimensions, entry n is Catalan(n-1) minus the relation rank
    """
    if not 0 <= max_degree <= MAX_FREE_DEGREE:
        raise ValidationError(
            f"max_degree must be between 0 and {MAX_FREE_DEGREE}, got {max_degree}",
            field_name="max_degree",
            field_value=max_degree,
        )
    dims = [1]
    lower: Dict[int, List[Dict[Tree, Fraction]]] = {}
    for n in range(1, max_degree + 1):
        monomials = tree_monomials(n)
        index = {tree: i for i, tree in enumerate(monomials)}
        relations = _relations_of_degree(n, ids, lower)
        rows = []
        for relation in relations:
            row = [Fraction(0)] * len(monomials)
            for tree, c in relation.items():
                row[index[tree]] += c
            if any(row):
                rows.append(row)
        basis = rref(Matrix(rows, len(monomials))).basis() if rows else ()
        lower[n] = [
            {monomials[j]: c for j, c in enumerate(vector) if c != 0} for vector in basis
        ]
        dims.append(len(monomials) - len(basis))
        logger.debug(f"free_dims: degree {n}, {len(relations)} generators, rank {len(basis)}")
    logger.info(f"free_dims: {dims}")
    return dims
