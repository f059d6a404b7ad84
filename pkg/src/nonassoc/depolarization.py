"""
Depolarization pipelines

The JacAss family of identities whose polarization gives a Lie bracket and an
associative commutative product, the Poisson solution inside that family and
the transposed Poisson negative result.
"""

from fractions import Fraction
from typing import Any, List

from ..core.exceptions import InconsistentSystemError, ValidationError
from ..utils.logger import get_logger
from .identities import (
    AA_CYCLIC,
    ASSOCIATIVITY,
    JACOBI,
    LEIBNIZ,
    TRANSPOSED_LEIBNIZ,
    decode_distributive,
    implies,
)
from .linalg import Matrix, solve
from .models import (
    AdmissibilityReport,
    CyclicConsequenceReport,
    GroupAlgebraElement,
    Identity,
    NoSolution,
    PipelineReport,
    Vector,
    Witness,
    integer_normalize,
    to_fraction,
)
from .sigma3 import combination_matrix, sign_value

logger = get_logger(__name__)

# left side of the family is _JACASS_CONSTANT + Σ a_k _JACASS_DIRECTIONS[k]
_JACASS_CONSTANT = (0, 0, 0, -2, -1, -2)
_JACASS_DIRECTIONS = (
    (1, 0, 0, -3, -2, -2),
    (0, 1, 0, 2, 2, 1),
    (0, 0, 1, 2, 1, 2),
)


def jacass_family(a1: Any, a2: Any, a3: Any) -> Identity:
    """
    Member of the family (a | e_Id) that is both Lie and associative admissible

    Args:
        a1, a2, a3: free parameters

    Returns:
        identity with left (a1, a2, a3, -2-3a1+2a2+2a3, -1-2a1+2a2+a3, -2-2a1+a2+2a3)
    """
    a = [to_fraction(a1), to_fraction(a2), to_fraction(a3)]
    left = [
        Fraction(c) + sum(a[k] * _JACASS_DIRECTIONS[k][i] for k in range(3))
        for i, c in enumerate(_JACASS_CONSTANT)
    ]
    return Identity(left=left, right=GroupAlgebraElement.unit(0))


def lie_admissible(identity: Identity) -> bool:
    """Whether the commutator of any μ satisfying identity obeys Jacobi"""
    return isinstance(implies(identity, JACOBI), Witness)


def assoc_admissible(identity: Identity) -> bool:
    """Whether the symmetrized product of any μ satisfying identity is associative"""
    return isinstance(implies(identity, ASSOCIATIVITY), Witness)


def admissibility_report(identity: Identity) -> AdmissibilityReport:
    lie = implies(identity, JACOBI)
    assoc = implies(identity, ASSOCIATIVITY)
    return AdmissibilityReport(
        lie_admissible=isinstance(lie, Witness),
        assoc_admissible=isinstance(assoc, Witness),
        lie_witness=lie if isinstance(lie, Witness) else None,
        assoc_witness=assoc if isinstance(assoc, Witness) else None,
        left_sign_value=sign_value(identity.left),
        right_sign_value=sign_value(identity.right),
    )


def _content_normalize(row: Vector) -> Vector:
    """Divide by the integer content, keeping the sign"""
    normalized = integer_normalize(row)
    if not any(normalized):
        return normalized
    lead = next(x for x in row if x != 0)
    first = next(x for x in normalized if x != 0)
    return normalized if (lead > 0) == (first > 0) else tuple(-x for x in normalized)


def _distinct_rows(rows: List[Vector]) -> List[Vector]:
    """Nonzero content-normalized rows, dropping repeats up to sign"""
    seen = set()
    distinct = []
    for row in rows:
        normalized = _content_normalize(row)
        if not any(normalized):
            continue
        key = integer_normalize(normalized)
        if key in seen:
            continue
        seen.add(key)
        distinct.append(normalized)
    return distinct


def jacass_pipeline(target: Identity) -> PipelineReport:
    """
    Find the JacAss members implying target

    B = Id forces U = target.right, and A(a)·U = target.left is then linear in
    (a1, a2, a3).

    Args:
        target: identity to derive, typically an encoded distributive law

    Returns:
        PipelineReport with the reduced system and its solution or certificate
    """
    u = target.right.coords
    base = combination_matrix(_JACASS_CONSTANT).apply(u)
    columns = [combination_matrix(d).apply(u) for d in _JACASS_DIRECTIONS]
    raw = [
        tuple(columns[k][i] for k in range(3)) + (target.left[i] - base[i],)
        for i in range(6)
    ]
    rows = _distinct_rows(raw)
    logger.debug(f"jacass_pipeline: {len(rows)} distinct equations in (a1, a2, a3)")

    coefficients = [row[:3] for row in rows]
    rhs = [row[3] for row in rows]
    result = solve(Matrix(coefficients, 3) if rows else Matrix.zeros(0, 3), rhs)
    if isinstance(result, NoSolution):
        logger.info("jacass_pipeline: no member of the family implies the target")
        return PipelineReport(target=target, rows=tuple(rows), certificate=result)

    a1, a2, a3 = result.solution
    identity = jacass_family(a1, a2, a3).normalized()
    logger.info(f"jacass_pipeline: solution a = ({a1}, {a2}, {a3})")
    return PipelineReport(target=target, rows=tuple(rows), solution=result, identity=identity)


def solve_poisson() -> Identity:
    """
    The identity of the JacAss family implying the Leibniz law

    Raises:
        InconsistentSystemError: the pipeline produced no solution
    """
    report = jacass_pipeline(LEIBNIZ)
    if not report.solved:
        raise InconsistentSystemError(
            "Leibniz pipeline has no solution",
            system=[[str(x) for x in row] for row in report.rows],
        )
    return report.identity


def solve_transposed() -> PipelineReport:
    """The JacAss pipeline for the transposed Leibniz law, expected inconsistent"""
    return jacass_pipeline(TRANSPOSED_LEIBNIZ)


def transposed_axioms() -> List[Identity]:
    """Transposed Leibniz, Jacobi and associativity"""
    return [TRANSPOSED_LEIBNIZ, JACOBI, ASSOCIATIVITY]


def abc_transposed(a: Any, b: Any, c: Any) -> Identity:
    """
    The (a, b, c)-transposed Leibniz relation

    Raises:
        ValidationError: a is zero
    """
    a, b, c = to_fraction(a), to_fraction(b), to_fraction(c)
    if a == 0:
        raise ValidationError("abc_transposed needs a != 0", field_name="a", field_value="0")
    return Identity(left=(a, -a, c, -b, c, -b), right=(-c, b, -a, -c, b, a))


def aa_cyclic_consequence() -> CyclicConsequenceReport:
    """
    Derive x1•[x2,x3] + x2•[x3,x1] + x3•[x1,x2] = 0 from the transposed axioms

    U = (1,-1,-1,-1,1,1) is a common eigenvector of all combination matrices;
    the eigenvalues of each axiom are reported alongside the witness.
    """
    witness = implies(transposed_axioms(), AA_CYCLIC)
    if not isinstance(witness, Witness):
        raise InconsistentSystemError("transposed axioms do not imply the cyclic law")
    law = decode_distributive(AA_CYCLIC)
    values = {}
    for name, identity in (
        ("transposed_leibniz", TRANSPOSED_LEIBNIZ),
        ("jacobi", JACOBI),
        ("associativity", ASSOCIATIVITY),
        ("jacass", jacass_family(0, 0, 0)),
    ):
        values[name] = (sign_value(identity.left), sign_value(identity.right))
    return CyclicConsequenceReport(witness=witness, law=law, sign_values=values)
