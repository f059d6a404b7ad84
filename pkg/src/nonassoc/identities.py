"""
Identity calculus on degree-3 multilinear relations

Encoding of relations in the fixed monomial order, the polarization transform
between a product μ and its pair (•, [,]), distributive laws, implication
through Σ₃-orbit linear algebra and consequence spaces.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Sequence, Tuple, Union

from ..core.exceptions import ValidationError
from ..utils.logger import get_logger
from ..utils.text_utils import format_rational
from .constants import NamedIdentities
from .linalg import Matrix, kernel, rank, rref, solve
from .models import (
    DistributiveLaw,
    GroupAlgebraElement,
    Identity,
    LinearSolution,
    NoSolution,
    NotDistributive,
    PolarizedIdentity,
    Vector,
    Witness,
    to_vector,
)
from .sigma3 import BASIS, Perm, combination_matrix, left_translate, module_rank

logger = get_logger(__name__)

IdentityFamily = Union[Identity, Sequence[Identity]]


def named_identity(name: str) -> Identity:
    """Named identity such as "jacobi" or "poisson" """
    try:
        left, right = NamedIdentities.BY_NAME[name]
    except KeyError:
        known = ", ".join(sorted(NamedIdentities.BY_NAME))
        raise ValidationError(f"unknown identity {name!r}, expected one of: {known}", field_name="name", field_value=name)
    return Identity(left=left, right=right)


JACOBI = named_identity("jacobi")
ASSOCIATIVITY = named_identity("associativity")
LEIBNIZ = named_identity("leibniz")
TRANSPOSED_LEIBNIZ = named_identity("transposed_leibniz")
AA_CYCLIC = named_identity("aa_cyclic")
POISSON = named_identity("poisson")
FLEXIBILITY = named_identity("flexibility")
ANTI_PRE_LIE = named_identity("anti_pre_lie")


# λ-forms over (a1..a6, b1..b6)
_LAMBDA_ROWS = (
    (1, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, -1),
    (0, 0, 1, 0, 1, 0, -1, 0, 0, -1, 0, 0),
    (0, 0, 0, 1, 0, 1, 0, -1, 0, 0, -1, 0),
    (1, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1),
    (0, 0, 1, 0, -1, 0, -1, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 0, -1, 0, 1, 0, 0, -1, 0),
    (1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1),
    (0, 0, 1, 0, -1, 0, 1, 0, 0, -1, 0, 0),
    (0, 0, 0, 1, 0, -1, 0, -1, 0, 0, 1, 0),
)

LAMBDA_MONOMIALS = (
    "(x1•x2)•x3",
    "(x2•x3)•x1",
    "(x1•x3)•x2",
    "[x1•x2,x3]",
    "[x2•x3,x1]",
    "[x1•x3,x2]",
    "[x1,x2]•x3",
    "[x3,x2]•x1",
    "[x1,x3]•x2",
    "[[x1,x2],x3]",
    "[[x3,x2],x1]",
    "[[x1,x3],x2]",
)


def lambda_matrix() -> Matrix:
    """The 12×12 matrix taking (a | b) to (λ1..λ12)"""
    return Matrix(_LAMBDA_ROWS, 12)


@lru_cache(maxsize=1)
def _inverse_lambda_matrix() -> Matrix:
    form = rref(lambda_matrix(), track=True)
    return form.transform


def polarize_coeffs(identity: Identity) -> PolarizedIdentity:
    """
    Rewrite a relation in μ as a relation in the products • and [,]

    Args:
        identity: relation in μ

    Returns:
        the twelve λ coefficients
    """
    return PolarizedIdentity(lambdas=lambda_matrix().apply(identity.vector12()))


def depolarize_coeffs(polarized: PolarizedIdentity) -> Identity:
    """Inverse of polarize_coeffs"""
    return Identity.from_vector12(_inverse_lambda_matrix().apply(polarized.lambdas))


def polarized_terms(polarized: PolarizedIdentity) -> List[str]:
    """Nonzero terms of the λ-relation, one "coefficient monomial" string each"""
    return [
        f"{format_rational(c)} {monomial}"
        for c, monomial in zip(polarized.lambdas, LAMBDA_MONOMIALS)
        if c != 0
    ]


def rho_from_law(law: DistributiveLaw) -> Vector:
    """The ρ-vector of a distributive law"""
    a1, a2, a3 = law.alpha
    b1, b2, b3 = law.beta
    return (a3 + b1, -a3 + b1, -a1 + b2, -a2 + b3, a1 + b2, a2 + b3)


def law_from_rho(rho: Sequence[Any]) -> DistributiveLaw:
    """Inverse of rho_from_law"""
    r1, r2, r3, r4, r5, r6 = to_vector(rho, 6, "rho")
    half = Fraction(1, 2)
    return DistributiveLaw(
        alpha=(half * (r5 - r3), half * (r6 - r4), half * (r1 - r2)),
        beta=(half * (r1 + r2), half * (r3 + r5), half * (r4 + r6)),
    )


def w1(rho: Sequence[Any]) -> GroupAlgebraElement:
    return GroupAlgebraElement(coords=rho)


def w2(rho: Sequence[Any]) -> GroupAlgebraElement:
    r1, r2, r3, r4, r5, r6 = to_vector(rho, 6, "rho")
    return GroupAlgebraElement(coords=(-r3, -r6, -r1, -r5, -r4, -r2))


# W2(ρ) = W2_MATRIX · ρ
W2_MATRIX = Matrix(
    [
        (0, 0, -1, 0, 0, 0),
        (0, 0, 0, 0, 0, -1),
        (-1, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, -1, 0),
        (0, 0, 0, -1, 0, 0),
        (0, -1, 0, 0, 0, 0),
    ],
    6,
)


def identity_from_rho(rho: Sequence[Any]) -> Identity:
    return Identity(left=w1(rho), right=w2(rho))


def encode_distributive(law: DistributiveLaw) -> Identity:
    """Identity in μ equivalent to a distributive law between • and [,]"""
    return identity_from_rho(rho_from_law(law))


def decode_distributive(identity: Identity) -> Union[DistributiveLaw, NotDistributive]:
    """
    Recover the distributive law encoded by an identity

    Returns:
        DistributiveLaw, or NotDistributive when right is not W2(left)
    """
    expected = w2(identity.left.coords)
    mismatched = [i + 1 for i in range(6) if expected[i] != identity.right[i]]
    if mismatched:
        return NotDistributive(
            reason="right side is not the permuted negation of the left side",
            mismatched_positions=mismatched,
        )
    return law_from_rho(identity.left.coords)


def translate_identity(s: Perm, identity: Identity) -> Identity:
    """The identity with x_i replaced by x_s(i)"""
    return Identity(left=left_translate(s, identity.left), right=left_translate(s, identity.right))


def orbit_vectors(identity: Identity) -> List[Vector]:
    """12-vectors of all six translates in basis order"""
    return [translate_identity(sigma, identity).vector12() for sigma in BASIS]


def _as_family(family: IdentityFamily) -> List[Identity]:
    if isinstance(family, Identity):
        return [family]
    return list(family)


def stacked_matrix(family: IdentityFamily) -> Matrix:
    """
    12 × 6k matrix whose columns span the orbit of the family

    Column block k is (combination_matrix(left_k) ; combination_matrix(right_k)).
    """
    blocks = [
        Matrix.vstack(combination_matrix(f.left), combination_matrix(f.right))
        for f in _as_family(family)
    ]
    if not blocks:
        return Matrix([[]] * 12, 0)
    return Matrix.hstack(*blocks)


def implies(family: IdentityFamily, target: Identity) -> Union[Witness, NoSolution]:
    """
    Decide whether target is a Σ₃-linear consequence of the family

    Args:
        family: one identity or several generating identities
        target: identity to derive

    Returns:
        Witness with one group algebra element per generator, or NoSolution
    """
    axioms = _as_family(family)
    m = stacked_matrix(axioms)
    logger.debug(f"implies: {len(axioms)} generator(s), {m.nrows}x{m.ncols} system")
    result = solve(m, target.vector12())
    if isinstance(result, NoSolution):
        return result
    elements = tuple(
        GroupAlgebraElement(coords=result.solution[6 * k: 6 * k + 6]) for k in range(len(axioms))
    )
    return Witness(elements=elements, kernel_dimension=len(result.kernel))


def consequence_space(family: IdentityFamily) -> Tuple[Vector, ...]:
    """
    Basis of the ρ-vectors whose distributive law follows from the family

    Solves A·U = W1(ρ), B·U = W2(ρ) as one homogeneous system in (U, ρ) and
    returns the reduced echelon basis of the projection onto ρ.
    """
    orbit = stacked_matrix(family)
    rho_block = Matrix.vstack(Matrix.identity(6), W2_MATRIX).scale(-1)
    system = Matrix.hstack(orbit, rho_block) if orbit.ncols else rho_block
    offset = orbit.ncols
    logger.debug(f"consequence_space: {system.nrows}x{system.ncols} system")
    projections = [v[offset:] for v in kernel(system)]
    projections = [p for p in projections if any(x != 0 for x in p)]
    if not projections:
        return ()
    return rref(Matrix(projections, 6)).basis()


def rho_rank(rho: Sequence[Any]) -> int:
    """Rank of the Σ₃-module generated by W1(ρ)"""
    return module_rank(w1(rho))


def identity_b_conditions(target: Identity) -> Union[LinearSolution, NoSolution]:
    """
    Affine space of a-vectors for which (a | e_Id) implies target

    With right side e_Id the combination matrix is the identity, so U is
    forced to target.right and the condition Σ a_k combination_matrix(e_k)·U
    = target.left is linear in a.
    """
    u = target.right.coords
    columns = [combination_matrix(GroupAlgebraElement.unit(k)).apply(u) for k in range(6)]
    return solve(Matrix.from_columns(columns, 6), target.left.coords)


def orbit_rank(family: IdentityFamily) -> int:
    """Dimension of the Σ₃-orbit span of the family"""
    m = stacked_matrix(family)
    return rank(m) if m.ncols else 0
