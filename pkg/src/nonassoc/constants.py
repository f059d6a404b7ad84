"""
Constants of the identity calculus

Named degree-3 identities as (left | right) coefficient tuples, the rank
classification of Σ₃-module generators, the transposed Poisson relation
matrices and small sample algebras.
"""

from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

Coefficients = Tuple[int, ...]


class NamedIdentities:
    """Identities in the 12-term monomial order, left block then right block"""

    JACOBI = ((1, -1, -1, -1, 1, 1), (-1, 1, 1, 1, -1, -1))
    ASSOCIATIVITY = ((1, 1, -1, 0, -1, 0), (-1, 0, 1, -1, 0, 1))
    LEIBNIZ = ((1, 1, 1, -1, -1, 1), (-1, -1, -1, 1, 1, -1))
    TRANSPOSED_LEIBNIZ = ((2, -2, 1, -1, 1, -1), (-1, 1, -2, -1, 1, 2))
    AA_CYCLIC = ((1, -1, -1, -1, 1, 1), (1, -1, -1, -1, 1, 1))
    POISSON = ((3, 1, 0, -1, -1, 1), (-3, 0, 0, 0, 0, 0))
    FLEXIBILITY = ((1, 0, 1, 0, 0, 0), (-1, 0, -1, 0, 0, 0))
    ANTI_PRE_LIE = ((1, 1, 0, 0, 0, 0), (-1, -1, 0, 0, 0, 0))
    ASSOCIATOR = ((1, 0, 0, 0, 0, 0), (-1, 0, 0, 0, 0, 0))

    BY_NAME: Dict[str, Tuple[Coefficients, Coefficients]] = {
        "jacobi": JACOBI,
        "associativity": ASSOCIATIVITY,
        "leibniz": LEIBNIZ,
        "transposed_leibniz": TRANSPOSED_LEIBNIZ,
        "aa_cyclic": AA_CYCLIC,
        "poisson": POISSON,
        "flexibility": FLEXIBILITY,
        "anti_pre_lie": ANTI_PRE_LIE,
        "associator": ASSOCIATOR,
    }


class NamedLaws:
    """Distributive laws as ((α1, α2, α3), (β1, β2, β3))"""

    LEIBNIZ = ((-1, 1, 0), (1, 0, 0))
    TRANSPOSED_LEIBNIZ = ((0, 0, 2), (0, 1, -1))
    CYCLIC = ((1, 1, 1), (0, 0, 0))

    BY_NAME: Dict[str, Tuple[Coefficients, Coefficients]] = {
        "leibniz": LEIBNIZ,
        "transposed_leibniz": TRANSPOSED_LEIBNIZ,
        "cyclic": CYCLIC,
    }


@dataclass(frozen=True)
class RankFamily:
    """A representative family of generators with a fixed Σ₃-module rank"""

    name: str
    rank: int
    build: Callable[..., Coefficients]
    sample: Tuple = ()
    constraint: Optional[Callable[..., bool]] = None
    constraint_text: str = ""

    def vector(self, *params) -> Coefficients:
        return self.build(*(params or self.sample))

    def admits(self, *params) -> bool:
        if self.constraint is None:
            return True
        return self.constraint(*(params or self.sample))


RANK_TABLE: Tuple[RankFamily, ...] = (
    RankFamily("V1,1", 1, lambda: (1, -1, -1, -1, 1, 1)),
    RankFamily("V1,2", 1, lambda: (1, 1, 1, 1, 1, 1)),
    RankFamily(
        "V2,1", 2,
        lambda b1, b5: (b1, -b1, b1 + b5, -b5, b5, -b1 - b5),
        sample=(1, 1),
        constraint=lambda b1, b5: (b1, b5) != (0, 0),
        constraint_text="(b1, b5) != (0, 0)",
    ),
    RankFamily(
        "V2,2", 2,
        lambda b1, b2: (b1, b2, b2, b2, b1, b1),
        sample=(1, 2),
        constraint=lambda b1, b2: b2 != b1 and b2 != -b1,
        constraint_text="b2 != ±b1",
    ),
    RankFamily(
        "V3,1", 3,
        lambda t: (1, t, 0, -1, 0, -t),
        sample=(2,),
        constraint=lambda t: t != 1,
        constraint_text="t != 1",
    ),
    RankFamily("V3,2", 3, lambda: (1, -1, 0, -2, 2, 0)),
    RankFamily(
        "V3,3", 3,
        lambda t: (-2, 0, -(2 + t), t - 1, -(1 + t), t),
        sample=(2,),
    ),
    RankFamily(
        "V4,1", 4,
        lambda t: (2, 1 + t, 1, 0, 1, 1 - t),
        sample=(2,),
        constraint=lambda t: t != 1,
        constraint_text="t != 1",
    ),
    RankFamily("V4,2", 4, lambda: (2, 1, 0, 1, 1, 1)),
    RankFamily("V4,3", 4, lambda: (2, 0, 1, -1, 3, 1)),
    RankFamily(
        "V4,4", 4,
        lambda alpha, beta: (1, 0, alpha, -alpha, beta, -1 - beta),
        sample=(1, 1),
        constraint=lambda alpha, beta: alpha * alpha != 1 + beta + beta * beta,
        constraint_text="alpha² != 1 + beta + beta²",
    ),
    RankFamily("V5,1", 5, lambda: (2, -1, -1, -1, 1, 0)),
    RankFamily("V5,2", 5, lambda: (2, 1, 1, 1, 1, 0)),
    RankFamily("V6,1", 6, lambda: (1, 0, 0, 0, 0, 0)),
)


class OperadMatrices:
    """
    Relation matrices of the transposed Poisson operad and of its dual

    Rows are 12-vectors in the monomial order.
    """

    TP = (
        (2, -2, 1, -1, 1, -1, -1, 1, -2, -1, 1, 2),
        (1, 1, 2, -1, -2, -1, -2, 1, -1, 2, 1, -1),
        (-1, -1, 1, 2, 1, -2, -1, 2, 1, -1, -2, 1),
        (1, -1, -1, -1, 1, 1, -1, 1, 1, 1, -1, -1),
        (1, 1, -1, 0, -1, 0, -1, 0, 1, -1, 0, 1),
        (1, 1, 0, -1, 0, -1, 0, -1, 1, 0, -1, 1),
    )
    DTP = (
        (2, 2, -1, 1, 1, -1, 1, 1, -2, -1, -1, -2),
        (1, -1, -2, 1, -2, -1, 2, 1, -1, 2, -1, 1),
        (-1, 1, -1, -2, 1, -2, 1, 2, 1, -1, 2, -1),
        (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
        (1, -1, 1, 0, -1, 0, 1, 0, 1, -1, 0, -1),
        (1, -1, 0, 1, 0, -1, 0, -1, 1, 0, 1, -1),
    )


class SampleAlgebras:
    """
    Structure constants as {(i, j): product coordinates}, 0-based basis indices

    Missing pairs multiply to zero.
    """

    HEISENBERG = {
        "dim": 3,
        "products": {(0, 1): (0, 0, 1), (1, 0): (0, 0, -1)},
    }
    # e1e1 = e2, e1e2 = e1: noncommutative and not flexible
    NONFLEXIBLE = {
        "dim": 2,
        "products": {(0, 0): (0, 1), (0, 1): (1, 0)},
    }
    # [e1, e2] = e2 on two generators, a non-abelian Lie algebra
    AFFINE_LIE = {
        "dim": 2,
        "products": {(0, 1): (0, 1), (1, 0): (0, -1)},
    }
    IDEMPOTENT = {
        "dim": 1,
        "products": {(0, 0): (1,)},
    }

    BY_NAME = {
        "heisenberg": HEISENBERG,
        "nonflexible": NONFLEXIBLE,
        "affine_lie": AFFINE_LIE,
        "idempotent": IDEMPOTENT,
    }


class Limits:
    """Combinatorial guards"""

    MAX_POWER = 6


class SuperFamilies:
    """
    Two-dimensional superalgebras with e0 even and e1 odd

    Each family maps its parameters to (a, b, c, d) in the generic product
    e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0.
    """

    FAMILIES: Dict[str, Tuple[Tuple[str, ...], Callable[..., Tuple]]] = {
        "SP2,1": (("a",), lambda a: (a, 0, 0, 0)),
        "SP2,2": (("a",), lambda a: (a, a, a, 0)),
        "SP2,3": (("b",), lambda b: (0, b, -b, 0)),
        "SP2,4": (("a", "d"), lambda a, d: (a, a, a, d)),
    }
    # the fourth family with e0e1 = -e1e0, fails the superPoisson identity when b, d != 0
    SKEW_SP24 = staticmethod(lambda b, d: (0, b, -b, d))
