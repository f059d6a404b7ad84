"""
Hom-Lie brackets and the product x•y = [x, f(y)]

G(V) is the space of endomorphisms with [f(x), y] + [x, f(y)] = 0, exactly
the f for which x•y = [x, f(y)] is commutative. Depolarizing (•, [,]) then
gives a product whose alternating antiassociator sum vanishes whenever f is
Hom-Lie for the bracket.
"""

from fractions import Fraction
from typing import List, Tuple

from ..core.exceptions import DimensionError, PreconditionError
from ..utils.logger import get_logger
from .algebras import IdentityCheck, commutativity_witness, depolarize_algebra, sample_algebra
from .identities import AA_CYCLIC, FLEXIBILITY
from .interfaces import TripleCheck
from .linalg import Matrix, kernel, solve
from .models import (
    BulletProduct,
    CheckResult,
    ClosureReport,
    Endomorphism,
    Identity,
    NoSolution,
    StructureAlgebra,
)

logger = get_logger(__name__)

# A(x,y,z) + A(y,z,x) + A(z,x,y) with A the associator
CYCLIC_ASSOCIATOR = Identity(left=(1, 0, 0, 0, 1, 1), right=(-1, 0, 0, 0, -1, -1))


def heisenberg() -> StructureAlgebra:
    """h3 with [e1, e2] = e3"""
    return sample_algebra("heisenberg")


def _require_anticommutative(bracket: StructureAlgebra, operation: str) -> None:
    witness = commutativity_witness(bracket, -1)
    if witness is not None:
        raise PreconditionError(
            f"{operation} needs an anticommutative bracket, fails at e{witness[0]}, e{witness[1]}",
            operation=operation,
        )


def _require_same_dim(bracket: StructureAlgebra, f: Endomorphism) -> None:
    if f.dim != bracket.dim:
        raise DimensionError("endomorphism and algebra dimensions differ", expected=bracket.dim, actual=f.dim)


class HomJacobiCheck(TripleCheck):
    """[[x,y],f(z)] + [[y,z],f(x)] + [[z,x],f(y)] on basis triples"""

    label = "hom-jacobi"

    def __init__(self, algebra: StructureAlgebra, f: Endomorphism):
        super().__init__(algebra)
        self.f = f

    def residual(self, triple):
        br = self.algebra.multiply
        x, y, z = (self.algebra.unit(i) for i in triple)
        terms = (
            br(br(x, y), self.f(z)),
            br(br(y, z), self.f(x)),
            br(br(z, x), self.f(y)),
        )
        return tuple(sum(values) for values in zip(*terms))


def hom_jacobi_check(bracket: StructureAlgebra, f: Endomorphism) -> CheckResult:
    _require_anticommutative(bracket, "hom_jacobi_check")
    _require_same_dim(bracket, f)
    return HomJacobiCheck(bracket, f).run()


def gv_system(bracket: StructureAlgebra) -> Matrix:
    """
    Linear conditions on the row-major entries of f

    One row per (a, b, k): the e_k coordinate of [f(e_a), e_b] + [e_a, f(e_b)].
    """
    n = bracket.dim
    rows = []
    for a in range(n):
        for b in range(n):
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for i in range(n):
                    row[i * n + a] += bracket.product(i, b)[k]
                    row[i * n + b] += bracket.product(a, i)[k]
                rows.append(row)
    return Matrix(rows, n * n)


def gv_basis(bracket: StructureAlgebra) -> List[Endomorphism]:
    """Basis of G(V) = {f : [f(x), y] + [x, f(y)] = 0}"""
    _require_anticommutative(bracket, "gv_basis")
    n = bracket.dim
    basis = [Endomorphism.from_flat(v, n) for v in kernel(gv_system(bracket))]
    logger.debug(f"gv_basis: dim G(V) = {len(basis)}")
    return basis


def in_gv(bracket: StructureAlgebra, f: Endomorphism) -> bool:
    _require_same_dim(bracket, f)
    return not any(gv_system(bracket).apply(f.flat()))


def gv_closure_check(bracket: StructureAlgebra) -> ClosureReport:
    """
    Whether G(V) is closed under the commutator of endomorphisms

    Returns:
        ClosureReport, with the first basis pair (1-based) whose commutator
        leaves G(V) on failure
    """
    basis = gv_basis(bracket)
    if not basis:
        return ClosureReport(passed=True, dimension=0)
    span = Matrix.from_columns([f.flat() for f in basis], bracket.dim ** 2)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            commutator = basis[i].commutator(basis[j])
            if isinstance(solve(span, commutator.flat()), NoSolution):
                logger.info(f"gv_closure_check: [f{i + 1}, f{j + 1}] is outside G(V)")
                return ClosureReport(passed=False, dimension=len(basis), pair=(i + 1, j + 1))
    return ClosureReport(passed=True, dimension=len(basis))


def bullet_from_f(bracket: StructureAlgebra, f: Endomorphism) -> BulletProduct:
    """
    Structure constants of x•y = [x, f(y)]

    The product is commutative iff f lies in G(V); otherwise the first
    noncommuting basis pair is reported.
    """
    _require_same_dim(bracket, f)
    n = bracket.dim
    constants = [
        [bracket.multiply(bracket.unit(i), f(bracket.unit(j))) for j in range(n)]
        for i in range(n)
    ]
    dot = bracket.with_constants(constants)
    witness = commutativity_witness(dot, 1)
    return BulletProduct(product=dot, commutative=witness is None, witness=witness)


def associator_symmetry_check(dot: StructureAlgebra) -> CheckResult:
    """
    A(x,y,z) + A(y,z,x) + A(z,x,y) = 0 and A(x,y,z) + A(z,y,x) = 0

    Both hold for every commutative product.

    Raises:
        PreconditionError: dot is not commutative
    """
    witness = commutativity_witness(dot, 1)
    if witness is not None:
        raise PreconditionError(f"associator_symmetry_check needs a commutative product, fails at e{witness[0]}, e{witness[1]}", operation="associator_symmetry_check")
    for identity, label in ((CYCLIC_ASSOCIATOR, "cyclic associator"), (FLEXIBILITY, "flexibility")):
        result = IdentityCheck(dot, identity, label=label).run()
        if not result.passed:
            return result
    return CheckResult.success()


def antiassociator_check(mu: StructureAlgebra) -> CheckResult:
    """Alternating sum of AA(x,y,z) = (xy)z + x(yz) over the six orderings of (x1, x2, x3)"""
    return IdentityCheck(mu, AA_CYCLIC, label="antiassociator sum").run()


def depolarize_hom_lie(bracket: StructureAlgebra, f: Endomorphism) -> Tuple[StructureAlgebra, CheckResult]:
    """
    μ = ½(• + [,]) for x•y = [x, f(y)], f in G(V)

    Returns:
        μ and the Hom-Lie check of (bracket, f)

    Raises:
        PreconditionError: f is not in G(V)
    """
    bullet = bullet_from_f(bracket, f)
    if not bullet.commutative:
        raise PreconditionError("f is not in G(V), x•y = [x, f(y)] is not commutative", operation="depolarize_hom_lie")
    mu = depolarize_algebra(bullet.product, bracket)
    return mu, hom_jacobi_check(bracket, f)
