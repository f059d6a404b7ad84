"""
Verification on concrete algebras

Degree-3 identities are checked on structure-constant algebras basis triple by
basis triple, products are polarized and depolarized, and the polynomial
function model [f, g] = f'g - fg', f•g = fg is used for exact identity tests.
"""

import random
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from ..core.exceptions import DimensionError, PreconditionError, ValidationError
from ..utils.logger import get_logger
from .constants import Limits, SampleAlgebras
from .identities import encode_distributive, translate_identity
from .interfaces import TripleCheck
from .models import (
    CheckResult,
    DistributiveLaw,
    Identity,
    PolyCheckResult,
    StructureAlgebra,
    Vector,
    to_vector,
)
from .operads import tree_monomials
from .sigma3 import BASIS, MONOMIALS, Side

logger = get_logger(__name__)

T = TypeVar("T")

POLY_RING, POLY_T = ring("t", QQ)


def relation_terms(
    vector12: Sequence[Fraction],
    xs: Sequence[T],
    multiply: Callable[[T, T], T],
) -> Iterator[Tuple[int, Fraction, T]]:
    """
    Nonzero terms of a 12-term relation evaluated at x1, x2, x3

    Yields:
        (monomial position, coefficient, monomial value)
    """
    for position, coefficient in enumerate(vector12):
        if coefficient == 0:
            continue
        monomial = MONOMIALS[position]
        a, b, c = (xs[i - 1] for i in monomial.variables)
        if monomial.side is Side.LEFT:
            value = multiply(multiply(a, b), c)
        else:
            value = multiply(a, multiply(b, c))
        yield position, coefficient, value


def evaluate_identity(alg: StructureAlgebra, identity: Identity, xs: Sequence[Vector]) -> Vector:
    """Value of the identity's left-hand side at three coordinate vectors"""
    out = [Fraction(0)] * alg.dim
    for _, coefficient, value in relation_terms(identity.vector12(), xs, alg.multiply):
        for k, v in enumerate(value):
            out[k] += coefficient * v
    return tuple(out)


class IdentityCheck(TripleCheck):
    """An ungraded identity on basis triples"""

    def __init__(self, algebra: StructureAlgebra, identity: Identity, label: str = ""):
        super().__init__(algebra)
        self.identity = identity
        self.label = label

    def residual(self, triple):
        xs = [self.algebra.unit(i) for i in triple]
        return evaluate_identity(self.algebra, self.identity, xs)


def _require_ungraded(alg: StructureAlgebra, operation: str) -> None:
    if alg.has_odd_part:
        raise PreconditionError(f"{operation} needs an ungraded algebra, use check_signed for superalgebras", operation=operation)


def check_identity(alg: StructureAlgebra, identity: Identity) -> CheckResult:
    """
    Check an identity on every basis triple

    Args:
        alg: ungraded algebra, or one with all degrees even
        identity: relation to check

    Returns:
        Pass, or the lexicographically first failing triple (1-based) with its residual
    """
    _require_ungraded(alg, "check_identity")
    logger.debug(f"check_identity: {alg.dim ** 3} basis triples")
    return IdentityCheck(alg, identity).run()


def check_orbit(alg: StructureAlgebra, identity: Identity) -> CheckResult:
    """Check every σ-translate of the identity, reporting the first failing one"""
    _require_ungraded(alg, "check_orbit")
    for sigma in BASIS:
        result = IdentityCheck(alg, translate_identity(sigma, identity), label=sigma.name).run()
        if not result.passed:
            return result
    return CheckResult.success()


def commutativity_witness(alg: StructureAlgebra, sign: int = 1) -> Optional[Tuple[int, int]]:
    """
    First pair (i, j), 1-based, with e_i e_j != sign * e_j e_i

    sign = 1 tests commutativity, sign = -1 anticommutativity.
    """
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if alg.product(i, j) != tuple(sign * c for c in alg.product(j, i)):
                return i + 1, j + 1
    return None


def is_commutative(alg: StructureAlgebra) -> bool:
    return commutativity_witness(alg, 1) is None


def is_anticommutative(alg: StructureAlgebra) -> bool:
    return commutativity_witness(alg, -1) is None


def opposite(alg: StructureAlgebra) -> StructureAlgebra:
    """The algebra with product x*y = yx"""
    n = alg.dim
    return alg.with_constants([[alg.product(j, i) for j in range(n)] for i in range(n)])


def sample_algebra(name: str) -> StructureAlgebra:
    """Shipped example algebra: heisenberg, nonflexible, affine_lie or idempotent"""
    if name not in SampleAlgebras.BY_NAME:
        known = ", ".join(sorted(SampleAlgebras.BY_NAME))
        raise ValidationError(f"unknown sample algebra {name!r}, expected one of: {known}", field_name="name", field_value=name)
    sample = SampleAlgebras.BY_NAME[name]
    return StructureAlgebra.from_products(sample["dim"], sample["products"])


def depolarize_algebra(dot: StructureAlgebra, bracket: StructureAlgebra) -> StructureAlgebra:
    """
    μ = ½(• + [,])

    Raises:
        DimensionError: dimensions differ
        PreconditionError: dot is not commutative or bracket not anticommutative
    """
    if dot.dim != bracket.dim:
        raise DimensionError("dot and bracket must have the same dimension", expected=dot.dim, actual=bracket.dim)
    if dot.grading != bracket.grading:
        raise ValidationError("dot and bracket must carry the same grading", field_name="grading")
    witness = commutativity_witness(dot, 1)
    if witness is not None:
        raise PreconditionError(f"dot is not commutative at e{witness[0]}, e{witness[1]}", operation="depolarize_algebra")
    witness = commutativity_witness(bracket, -1)
    if witness is not None:
        raise PreconditionError(f"bracket is not anticommutative at e{witness[0]}, e{witness[1]}", operation="depolarize_algebra")
    n = dot.dim
    half = Fraction(1, 2)
    constants = [
        [[half * (a + b) for a, b in zip(dot.product(i, j), bracket.product(i, j))] for j in range(n)]
        for i in range(n)
    ]
    return dot.with_constants(constants)


def polarize_algebra(mu: StructureAlgebra) -> Tuple[StructureAlgebra, StructureAlgebra]:
    """x•y = xy + yx and [x, y] = xy - yx"""
    n = mu.dim
    dot = [
        [[a + b for a, b in zip(mu.product(i, j), mu.product(j, i))] for j in range(n)]
        for i in range(n)
    ]
    bracket = [
        [[a - b for a, b in zip(mu.product(i, j), mu.product(j, i))] for j in range(n)]
        for i in range(n)
    ]
    return mu.with_constants(dot), mu.with_constants(bracket)


def random_algebra(
    dim: int,
    rng: random.Random,
    kind: str = "generic",
    grading: Optional[Sequence[int]] = None,
    bound: int = 3,
) -> StructureAlgebra:
    """
    Algebra with random small integer structure constants

    Args:
        dim: dimension
        rng: seeded random generator
        kind: "generic", "commutative" or "anticommutative"
        grading: optional degrees, products are projected onto the right component
        bound: constants are drawn from [-bound, bound]
    """
    if kind not in ("generic", "commutative", "anticommutative"):
        raise ValidationError(f"unknown algebra kind {kind!r}", field_name="kind", field_value=kind)
    degrees = list(grading) if grading is not None else [0] * dim

    def draw(i: int, j: int) -> List[int]:
        target = (degrees[i] + degrees[j]) % 2
        return [rng.randint(-bound, bound) if degrees[k] == target else 0 for k in range(dim)]

    constants = [[None] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(dim):
            if kind == "generic" or j > i:
                constants[i][j] = draw(i, j)
            elif j == i:
                constants[i][j] = [0] * dim if kind == "anticommutative" else draw(i, j)
    if kind != "generic":
        sign = 1 if kind == "commutative" else -1
        for i in range(dim):
            for j in range(i):
                constants[i][j] = [sign * c for c in constants[j][i]]
    return StructureAlgebra(dim=dim, constants=constants, grading=grading)


def power_defect(alg: StructureAlgebra, x: Sequence[Any], n: int) -> List[Vector]:
    """
    Distinct values of all bracketings of x^n in tree order, so x(xx) comes
    before (xx)x

    A singleton means the n-th power of x associates.

    Raises:
        ValidationError: n outside 1..6
    """
    if not 1 <= n <= Limits.MAX_POWER:
        raise ValidationError(f"power must be between 1 and {Limits.MAX_POWER}, got {n}", field_name="n", field_value=n)
    x = to_vector(x, alg.dim, "element")
    cache = {}

    def value(tree) -> Vector:
        if tree == "X":
            return x
        if tree not in cache:
            cache[tree] = alg.multiply(value(tree[0]), value(tree[1]))
        return cache[tree]

    distinct: List[Vector] = []
    for tree in tree_monomials(n):
        v = value(tree)
        if v not in distinct:
            distinct.append(v)
    return distinct


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def poly_product(f, g):
    """μ(f, g) = ½(fg + f'g - fg')"""
    t = POLY_T
    return (f * g + f.diff(t) * g - f * g.diff(t)) * QQ(1, 2)


def _poly_relation(vector12: Sequence[Fraction], polys: Sequence[Any]):
    total = POLY_RING.zero
    for _, coefficient, value in relation_terms(vector12, polys, poly_product):
        total += value * _to_qq(coefficient)
    return total


def _random_poly(rng: random.Random, degree: int):
    p = POLY_RING.zero
    for e in range(degree + 1):
        p += POLY_T ** e * QQ(rng.randint(-5, 5), rng.randint(1, 4))
    return p


def poly_check(
    relation: Union[Identity, DistributiveLaw],
    degree_bound: int = 8,
    trials: int = 20,
    seed: int = 0,
) -> PolyCheckResult:
    """
    Check a relation in the polynomial model with μ = ½(fg + [f, g])

    Every triple of monomials t^a, t^b, t^c with a, b, c <= degree_bound is
    tested first, then `trials` random polynomial triples.

    Args:
        relation: identity in μ, or a distributive law in (•, [,])
        degree_bound: maximal exponent
        trials: number of random triples
        seed: seed of the random triples

    Returns:
        PolyCheckResult with the first witness on failure
    """
    if degree_bound < 0 or trials < 0:
        raise ValidationError("degree_bound and trials must be non-negative", field_name="degree_bound")
    identity = encode_distributive(relation) if isinstance(relation, DistributiveLaw) else relation
    vector = identity.vector12()
    checked = 0

    def fail(polys, residual) -> PolyCheckResult:
        witness = tuple(str(p) for p in polys)
        logger.info(f"poly_check: failure at {witness}")
        return PolyCheckResult(passed=False, checked=checked, witness=witness, residual=str(residual))

    for a, b, c in product(range(degree_bound + 1), repeat=3):
        polys = (POLY_T ** a, POLY_T ** b, POLY_T ** c)
        checked += 1
        residual = _poly_relation(vector, polys)
        if not residual.is_zero:
            return fail(polys, residual)

    rng = random.Random(seed)
    for _ in range(trials):
        polys = tuple(_random_poly(rng, degree_bound) for _ in range(3))
        checked += 1
        residual = _poly_relation(vector, polys)
        if not residual.is_zero:
            return fail(polys, residual)
    return PolyCheckResult(passed=True, checked=checked)
