"""
The Σ₃ group algebra acting on degree-3 monomials

Permutations compose as functions, (s∘t)(i) = s(t(i)). The ordered basis is
(Id, τ12, τ13, τ23, c, c²) with c: 1↦2↦3↦1, and the twelve parenthesized
monomials are L(σ) = (x_σ1 x_σ2) x_σ3 followed by R(σ) = x_σ1 (x_σ2 x_σ3).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence, Tuple

from ..core.exceptions import ValidationError
from .linalg import Matrix, rank
from .models import GroupAlgebraElement


@dataclass(frozen=True)
class Perm:
    """Permutation of {1,2,3} stored as (σ(1), σ(2), σ(3))"""

    images: Tuple[int, int, int]

    def __post_init__(self):
        if tuple(sorted(self.images)) != (1, 2, 3):
            raise ValidationError(f"not a permutation of 1,2,3: {self.images}", field_name="images", field_value=self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    @property
    def index(self) -> int:
        """Position in the ordered basis"""
        return BASIS.index(self)

    @property
    def sign(self) -> int:
        inversions = sum(
            1 for i in range(3) for j in range(i + 1, 3) if self.images[i] > self.images[j]
        )
        return -1 if inversions % 2 else 1

    def inverse(self) -> "Perm":
        images = [0, 0, 0]
        for i, image in enumerate(self.images, start=1):
            images[image - 1] = i
        return Perm(tuple(images))

    @property
    def name(self) -> str:
        return BASIS_NAMES[self.index]

    def __str__(self) -> str:
        return self.name


IDENTITY = Perm((1, 2, 3))
TAU12 = Perm((2, 1, 3))
TAU13 = Perm((3, 2, 1))
TAU23 = Perm((1, 3, 2))
CYCLE = Perm((2, 3, 1))
CYCLE2 = Perm((3, 1, 2))

BASIS: Tuple[Perm, ...] = (IDENTITY, TAU12, TAU13, TAU23, CYCLE, CYCLE2)
BASIS_NAMES = ("Id", "t12", "t13", "t23", "c", "c2")

# ε(σ) in basis order
SIGNS: Tuple[int, ...] = (1, -1, -1, -1, 1, 1)


def perm_by_name(name: str) -> Perm:
    try:
        return BASIS[BASIS_NAMES.index(name)]
    except ValueError:
        raise ValidationError(f"unknown permutation {name!r}, expected one of {', '.join(BASIS_NAMES)}", field_name="perm", field_value=name)


def compose(s: Perm, t: Perm) -> Perm:
    """s applied after t"""
    return Perm(tuple(s(t(i)) for i in (1, 2, 3)))


def left_translate(s: Perm, v: Any) -> GroupAlgebraElement:
    """Coordinates of s∘v"""
    v = GroupAlgebraElement.of(v)
    out = [Fraction(0)] * 6
    for k, sigma in enumerate(BASIS):
        out[compose(s, sigma).index] += v[k]
    return GroupAlgebraElement(coords=out)


def orbit_matrix(v: Any) -> Matrix:
    """Row σ holds the coordinates of σ∘v"""
    return Matrix([left_translate(sigma, v).coords for sigma in BASIS], 6)


def combination_matrix(v: Any) -> Matrix:
    """
    Transpose of the orbit matrix

    coords(Σ_σ u_σ σ∘v) = combination_matrix(v)·u
    """
    return orbit_matrix(v).transpose()


def module_rank(v: Any) -> int:
    """
    Dimension of the Σ₃-module generated by v

    Raises:
        ValidationError: v is zero
    """
    v = GroupAlgebraElement.of(v)
    if v.is_zero():
        raise ValidationError("module_rank needs a nonzero vector", field_name="v")
    return rank(orbit_matrix(v))


def sign_value(v: Any) -> Fraction:
    """Σ ε(τ) v_τ, the eigenvalue of combination_matrix(v) on the sign vector"""
    v = GroupAlgebraElement.of(v)
    return sum((s * x for s, x in zip(SIGNS, v.coords)), Fraction(0))


def sign_vector() -> GroupAlgebraElement:
    return GroupAlgebraElement(coords=SIGNS)


class Side(Enum):
    """Parenthesization of a degree-3 monomial"""

    LEFT = "L"
    RIGHT = "R"


@dataclass(frozen=True)
class MonomialIndex:
    """One of the twelve monomials L(σ) or R(σ)"""

    side: Side
    sigma: Perm

    @property
    def position(self) -> int:
        """0-based index in the 12-term order"""
        offset = 0 if self.side is Side.LEFT else 6
        return offset + self.sigma.index

    @property
    def variables(self) -> Tuple[int, int, int]:
        return self.sigma.images

    def render(self, names: Sequence[str] = ("x1", "x2", "x3")) -> str:
        a, b, c = (names[i - 1] for i in self.sigma.images)
        if self.side is Side.LEFT:
            return f"({a}{b}){c}"
        return f"{a}({b}{c})"

    def __str__(self) -> str:
        return self.render()


MONOMIALS: Tuple[MonomialIndex, ...] = tuple(
    MonomialIndex(side, sigma) for side in (Side.LEFT, Side.RIGHT) for sigma in BASIS
)


def monomial_at(position: int) -> MonomialIndex:
    if not 0 <= position < 12:
        raise ValidationError(f"monomial index out of range: {position}", field_name="position", field_value=position)
    return MONOMIALS[position]
