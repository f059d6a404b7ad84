"""
Z₂-graded identities

A signed identity keeps, for every monomial, the set of variable pairs whose
degree product enters its sign, so one object covers all eight degree
patterns of (x, y, z). Ungraded identities lift to superalgebras by the
Koszul rule: a monomial picks up (-1)^{|u||v|} for every pair u, v whose
order it reverses.
"""

from fractions import Fraction
from itertools import product
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from ..core.exceptions import PreconditionError, ValidationError
from ..utils.logger import get_logger
from .algebras import evaluate_identity, relation_terms
from .constants import SuperFamilies
from .depolarization import jacass_family
from .identities import (
    ASSOCIATIVITY,
    FLEXIBILITY,
    JACOBI,
    LEIBNIZ,
    POISSON,
    TRANSPOSED_LEIBNIZ,
)
from .interfaces import TripleCheck
from .models import (
    CheckResult,
    Identity,
    SignedIdentity,
    SignedTerm,
    StructureAlgebra,
    integer_normalize,
    to_fraction,
)
from .sigma3 import MONOMIALS

logger = get_logger(__name__)

PARAM_RING, PARAM_A, PARAM_B, PARAM_C, PARAM_D = ring("a,b,c,d", QQ)

_PAIR_NAMES = {(1, 2): "xy", (1, 3): "xz", (2, 3): "yz"}


def koszul_signs(position: int) -> frozenset:
    """Variable pairs reversed by the monomial at a 0-based position"""
    order = MONOMIALS[position].variables
    return frozenset(
        _PAIR_NAMES[(order[j], order[i])]
        for i in range(3)
        for j in range(i + 1, 3)
        if order[i] > order[j]
    )


def signed_from_identity(identity: Identity) -> SignedIdentity:
    """Koszul lift of an ungraded identity"""
    return SignedIdentity(
        terms=[
            SignedTerm(position=p, coeff=c, signs=koszul_signs(p))
            for p, c in enumerate(identity.vector12())
        ]
    )


def koszul_deviations(sid: SignedIdentity) -> List[int]:
    """
    1-based positions whose stated sign set is not the Koszul one

    A term counts as stated when it has a coefficient or a sign set, so a
    parameter that happens to vanish does not hide its signs. Unlisted
    positions default to a zero term with no signs and are skipped.
    """
    return [
        term.position + 1
        for term in sid.terms
        if (term.coeff != 0 or term.signs) and term.signs != koszul_signs(term.position)
    ]


def _check_degrees(degrees: Sequence[int]) -> Tuple[int, int, int]:
    degrees = tuple(degrees)
    if len(degrees) != 3 or any(d not in (0, 1) for d in degrees):
        raise ValidationError(f"degrees must be three values in {{0, 1}}, got {degrees}", field_name="degrees", field_value=degrees)
    return degrees


def specialize(sid: SignedIdentity, degrees: Sequence[int]) -> Identity:
    """The plain identity realized when x, y, z have the given degrees"""
    degrees = _check_degrees(degrees)
    return Identity.from_vector12([t.coeff * t.sign_at(degrees) for t in sid.terms])


SUPER_POISSON = signed_from_identity(POISSON)
SUPER_JACOBI = signed_from_identity(JACOBI)
SUPER_ASSOCIATIVITY = signed_from_identity(ASSOCIATIVITY)
SUPER_LEIBNIZ = signed_from_identity(LEIBNIZ)
SUPER_TRANSPOSED_LEIBNIZ = signed_from_identity(TRANSPOSED_LEIBNIZ)
SUPERFLEXIBILITY = signed_from_identity(FLEXIBILITY)


def super_constructors() -> Dict[str, SignedIdentity]:
    """Named signed identities, each specializing at degrees (0, 0, 0) to its ungraded constant"""
    return {
        "super_poisson": SUPER_POISSON,
        "super_jacobi": SUPER_JACOBI,
        "super_associativity": SUPER_ASSOCIATIVITY,
        "super_leibniz": SUPER_LEIBNIZ,
        "super_transposed_leibniz": SUPER_TRANSPOSED_LEIBNIZ,
        "superflexibility": SUPERFLEXIBILITY,
    }


def named_signed_identity(name: str) -> SignedIdentity:
    constructors = super_constructors()
    if name not in constructors:
        known = ", ".join(sorted(constructors))
        raise ValidationError(f"unknown signed identity {name!r}, expected one of: {known}", field_name="name", field_value=name)
    return constructors[name]


# stated sign sets of the two transposed super axioms, keyed by 0-based position
_AXIOM1_SIGNS = {
    1: {"xy"},
    2: {"xz", "yz"},
    3: {"yz"},
    4: {"xy", "xz"},
    5: {"yz", "xz"},
}
_AXIOM2 = (
    (0, 2, ()),
    (6, -1, ()),
    (1, -2, ("xy",)),
    (7, 1, ("xy",)),
    (2, 1, ("xz", "yz")),
    (8, -2, ("xz", "yz")),
    (3, -1, ("yz",)),
    (4, 1, ("xy", "xz")),
    (5, -1, ("yz", "xz")),
    (9, -1, ()),
    (10, 1, ()),
    (11, 2, ()),
)


def transposed_super_axioms(a1: Any = 0, a2: Any = 0, a3: Any = 0) -> List[SignedIdentity]:
    """
    The two axioms of transposed Poisson superalgebras with their stated signs

    The first is the signed JacAss member at (a1, a2, a3), the second
    specializes to transposed Leibniz at even degrees. Some stated sign
    sets differ from the Koszul lift, see koszul_deviations.
    """
    first = jacass_family(a1, a2, a3).vector12()
    axiom1 = SignedIdentity(
        terms=[
            SignedTerm(position=p, coeff=c, signs=_AXIOM1_SIGNS.get(p, ()))
            for p, c in enumerate(first)
        ]
    )
    axiom2 = SignedIdentity(
        terms=[SignedTerm(position=p, coeff=c, signs=s) for p, c, s in _AXIOM2]
    )
    return [axiom1, axiom2]


class SignedCheck(TripleCheck):
    """A signed identity on homogeneous basis triples"""

    def __init__(self, algebra: StructureAlgebra, sid: SignedIdentity, label: str = ""):
        super().__init__(algebra)
        self.sid = sid
        self.label = label
        self._specialized: Dict[Tuple[int, int, int], Identity] = {}

    def residual(self, triple):
        degrees = tuple(self.algebra.degree(i) for i in triple)
        if degrees not in self._specialized:
            self._specialized[degrees] = specialize(self.sid, degrees)
        xs = [self.algebra.unit(i) for i in triple]
        return evaluate_identity(self.algebra, self._specialized[degrees], xs)


def check_signed(alg: StructureAlgebra, sid: SignedIdentity) -> CheckResult:
    """
    Check a signed identity on every basis triple of a graded algebra

    Raises:
        PreconditionError: the algebra carries no grading
    """
    if alg.grading is None:
        raise PreconditionError("check_signed needs a graded algebra, add a deg line", operation="check_signed")
    return SignedCheck(alg, sid).run()


def superflexibility_check(alg: StructureAlgebra) -> CheckResult:
    """A(x,y,z) + (-1)^{|x||y|+|x||z|+|y||z|} A(z,y,x) = 0, ungraded input counts as even"""
    return SignedCheck(alg, SUPERFLEXIBILITY, label="superflexibility").run()


def dim2_superalgebra(a: Any, b: Any, c: Any, d: Any) -> StructureAlgebra:
    """e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0 with e0 even and e1 odd"""
    a, b, c, d = (to_fraction(v) for v in (a, b, c, d))
    return StructureAlgebra.from_products(
        2,
        {(0, 0): (a, 0), (0, 1): (0, b), (1, 0): (0, c), (1, 1): (d, 0)},
        grading=(0, 1),
    )


def sp_family(name: str, *params: Any) -> StructureAlgebra:
    """
    Member of a shipped 2-dimensional Poisson superalgebra family

    Args:
        name: "SP2,1" .. "SP2,4"
        params: the family's parameters in order

    Raises:
        ValidationError: unknown family or wrong number of parameters
    """
    if name not in SuperFamilies.FAMILIES:
        known = ", ".join(SuperFamilies.FAMILIES)
        raise ValidationError(f"unknown family {name!r}, expected one of: {known}", field_name="name", field_value=name)
    names, build = SuperFamilies.FAMILIES[name]
    if len(params) != len(names):
        raise ValidationError(
            f"{name} takes parameters ({', '.join(names)}), got {len(params)}",
            field_name="params",
            field_value=len(params),
        )
    return dim2_superalgebra(*build(*params))


def skew_sp24(b: Any, d: Any) -> StructureAlgebra:
    return dim2_superalgebra(*SuperFamilies.SKEW_SP24(b, d))


def _param_multiply(table, x, y):
    out = [PARAM_RING.zero, PARAM_RING.zero]
    for i, j in product(range(2), repeat=2):
        if x[i] and y[j]:
            factor = x[i] * y[j]
            for k in range(2):
                out[k] += factor * table[i][j][k]
    return out


def _normalize_condition(p):
    """Integer coefficients without common factor, leading coefficient positive"""
    coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in p.coeffs()]
    normalized = integer_normalize(coeffs)
    factor = normalized[0] / coeffs[0]
    return p * QQ(factor.numerator, factor.denominator)


def classify_dim2_conditions(sid: SignedIdentity = SUPER_POISSON) -> List[Any]:
    """
    Polynomial conditions on (a, b, c, d) for the generic 2-dimensional product

    The identity is evaluated symbolically on all eight homogeneous basis
    triples; every nonzero coordinate of a residual is one condition.

    Returns:
        distinct normalized conditions as elements of ring("a,b,c,d", QQ), in
        order of first appearance
    """
    zero, one = PARAM_RING.zero, PARAM_RING.one
    table = [
        [[PARAM_A, zero], [zero, PARAM_B]],
        [[zero, PARAM_C], [PARAM_D, zero]],
    ]
    units = [[one, zero], [zero, one]]
    grading = (0, 1)
    conditions: List[Any] = []
    for triple in product(range(2), repeat=3):
        degrees = tuple(grading[i] for i in triple)
        vector = specialize(sid, degrees).vector12()
        xs = [units[i] for i in triple]
        residual = [zero, zero]
        for _, coefficient, value in relation_terms(
            vector, xs, lambda u, v: _param_multiply(table, u, v)
        ):
            for k in range(2):
                residual[k] += value[k] * QQ(coefficient.numerator, coefficient.denominator)
        for component in residual:
            if component.is_zero:
                continue
            condition = _normalize_condition(component)
            if condition not in conditions:
                conditions.append(condition)
    logger.info(f"classify_dim2_conditions: {len(conditions)} distinct conditions")
    return conditions


def conditions_vanish(conditions: Sequence[Any], a: Any, b: Any, c: Any, d: Any) -> bool:
    """Whether every condition vanishes at the given parameter values"""
    values = [to_fraction(v) for v in (a, b, c, d)]
    point = [
        (gen, QQ(v.numerator, v.denominator))
        for gen, v in zip((PARAM_A, PARAM_B, PARAM_C, PARAM_D), values)
    ]
    return all(condition.subs(point).is_zero for condition in conditions)
