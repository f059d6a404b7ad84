"""
Data models of the nonassociative identity calculus

Value types (group algebra elements, identities, distributive laws) and the
result records returned by solvers and checkers. Rational fields accept ints,
Fractions and "p/q" strings and are stored as Fractions.
"""

import re
from fractions import Fraction
from math import gcd
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..core.exceptions import DimensionError, ValidationError
from ..utils.text_utils import format_rational, format_vector

Vector = Tuple[Fraction, ...]

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(/\d+)?$")


def to_fraction(value: Any) -> Fraction:
    """
    Coerce a scalar to an exact Fraction

    Accepts int, Fraction and strings of the form "p" or "p/q". Floats are
    rejected, there is no tolerance anywhere in the toolkit.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError("booleans are not rationals", field_value=value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_PATTERN.match(text):
            raise ValidationError(f"not a rational: {value!r}", field_value=value)
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ValidationError(f"zero denominator: {value!r}", field_value=value)
        return Fraction(text)
    raise ValidationError(f"unsupported scalar type {type(value).__name__}", field_value=value)


def to_vector(values: Any, length: Optional[int] = None, name: str = "vector") -> Vector:
    """Coerce a sequence to a tuple of Fractions, optionally checking its length"""
    if isinstance(values, GroupAlgebraElement):
        values = values.coords
    result = tuple(to_fraction(v) for v in values)
    if length is not None and len(result) != length:
        raise DimensionError(f"{name} needs {length} entries, got {len(result)}", expected=length, actual=len(result))
    return result


def integer_normalize(values: Sequence[Fraction]) -> Vector:
    """
    Smallest integer multiple with a positive leading coefficient

    The zero vector is returned unchanged.
    """
    values = tuple(Fraction(v) for v in values)
    nonzero = [v for v in values if v != 0]
    if not nonzero:
        return values
    denominator = 1
    for v in nonzero:
        denominator = denominator * v.denominator // gcd(denominator, v.denominator)
    integers = [int(v * denominator) for v in values]
    content = 0
    for n in integers:
        content = gcd(content, abs(n))
    sign = 1 if nonzero[0] > 0 else -1
    return tuple(Fraction(sign * n, content) for n in integers)


def vector_to_strings(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


class RationalModel(BaseModel):
    """Frozen model base allowing Fraction fields"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class GroupAlgebraElement(RationalModel):
    """Element of the Σ₃ group algebra in the ordered basis (Id, τ12, τ13, τ23, c, c²)"""

    coords: Tuple[Fraction, ...]

    @field_validator("coords", mode="before")
    @classmethod
    def validate_coords(cls, v):
        return to_vector(v, 6, "group algebra element")

    @classmethod
    def of(cls, values: Any) -> "GroupAlgebraElement":
        if isinstance(values, GroupAlgebraElement):
            return values
        return cls(coords=values)

    @classmethod
    def zero(cls) -> "GroupAlgebraElement":
        return cls(coords=(0,) * 6)

    @classmethod
    def unit(cls, index: int) -> "GroupAlgebraElement":
        """Basis element at position index of the ordered basis"""
        return cls(coords=tuple(1 if i == index else 0 for i in range(6)))

    def __getitem__(self, index: int) -> Fraction:
        return self.coords[index]

    def __len__(self) -> int:
        return 6

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(coords=tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(coords=tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(coords=tuple(-a for a in self.coords))

    def scale(self, factor: Any) -> "GroupAlgebraElement":
        factor = to_fraction(factor)
        return GroupAlgebraElement(coords=tuple(factor * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return format_vector(self.coords)

    def to_list(self) -> List[str]:
        return vector_to_strings(self.coords)


def _as_element(v: Any) -> GroupAlgebraElement:
    return GroupAlgebraElement.of(v)


class Identity(RationalModel):
    """
    Degree-3 multilinear identity

    left holds the coefficients of the six (x x)x monomials, right those of the
    six x(x x) monomials, both in the fixed monomial order.
    """

    left: GroupAlgebraElement
    right: GroupAlgebraElement

    @field_validator("left", "right", mode="before")
    @classmethod
    def validate_side(cls, v):
        return _as_element(v)

    @classmethod
    def from_vectors(cls, left: Any, right: Any) -> "Identity":
        return cls(left=left, right=right)

    @classmethod
    def from_vector12(cls, values: Sequence[Any]) -> "Identity":
        values = to_vector(values, 12, "identity vector")
        return cls(left=values[:6], right=values[6:])

    @classmethod
    def zero(cls) -> "Identity":
        return cls(left=(0,) * 6, right=(0,) * 6)

    def vector12(self) -> Vector:
        return self.left.coords + self.right.coords

    def is_zero(self) -> bool:
        return self.left.is_zero() and self.right.is_zero()

    def scale(self, factor: Any) -> "Identity":
        return Identity(left=self.left.scale(factor), right=self.right.scale(factor))

    def __add__(self, other: "Identity") -> "Identity":
        return Identity(left=self.left + other.left, right=self.right + other.right)

    def normalized(self) -> "Identity":
        """Smallest integer multiple with positive leading coefficient"""
        return Identity.from_vector12(integer_normalize(self.vector12()))

    def __str__(self) -> str:
        return f"{self.left} | {self.right}"

    def to_dict(self) -> Dict[str, Any]:
        return {"left": self.left.to_list(), "right": self.right.to_list()}


class PolarizedIdentity(RationalModel):
    """The twelve coefficients λ1..λ12 of the relation between • and [,]"""

    lambdas: Tuple[Fraction, ...]

    @field_validator("lambdas", mode="before")
    @classmethod
    def validate_lambdas(cls, v):
        return to_vector(v, 12, "lambda vector")

    def __str__(self) -> str:
        return format_vector(self.lambdas)

    def to_dict(self) -> Dict[str, Any]:
        return {"lambda": vector_to_strings(self.lambdas)}


class DistributiveLaw(RationalModel):
    """
    Distributive law between a commutative • and an anticommutative [,]

    Σ αi xi•[x(i+1),x(i+2)] + Σ βi [xi•x(i+1),x(i+2)] = 0
    """

    alpha: Tuple[Fraction, ...]
    beta: Tuple[Fraction, ...]

    @field_validator("alpha", "beta", mode="before")
    @classmethod
    def validate_coefficients(cls, v):
        return to_vector(v, 3, "law coefficients")

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.alpha + self.beta)

    def __str__(self) -> str:
        return f"alpha: {format_vector(self.alpha)} beta: {format_vector(self.beta)}"

    def to_dict(self) -> Dict[str, Any]:
        return {"alpha": vector_to_strings(self.alpha), "beta": vector_to_strings(self.beta)}


class NotDistributive(BaseModel):
    """decode_distributive result for identities outside the W1/W2 pattern"""

    reason: str
    mismatched_positions: List[int] = []

    def to_dict(self) -> Dict[str, Any]:
        return {"distributive": False, "reason": self.reason, "mismatched_positions": self.mismatched_positions}


class LinearSolution(RationalModel):
    """A particular solution and a kernel basis"""

    solution: Vector
    kernel: Tuple[Vector, ...] = ()

    @field_validator("solution", mode="before")
    @classmethod
    def validate_solution(cls, v):
        return to_vector(v)

    @field_validator("kernel", mode="before")
    @classmethod
    def validate_kernel(cls, v):
        return tuple(to_vector(row) for row in v)

    @property
    def consistent(self) -> bool:
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "consistent": True,
            "solution": vector_to_strings(self.solution),
            "kernel": [vector_to_strings(k) for k in self.kernel],
        }


class NoSolution(RationalModel):
    """
    Inconsistency certificate

    certificate is a row combination y with y·M = 0 and y·rhs = residual != 0.
    """

    certificate: Vector
    residual: Fraction

    @field_validator("certificate", mode="before")
    @classmethod
    def validate_certificate(cls, v):
        return to_vector(v)

    @field_validator("residual", mode="before")
    @classmethod
    def validate_residual(cls, v):
        return to_fraction(v)

    @property
    def consistent(self) -> bool:
        return False

    def verify(self, rows: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> bool:
        """Check the certificate against the original system"""
        if len(rows) != len(self.certificate) or len(rhs) != len(self.certificate):
            return False
        ncols = len(rows[0]) if rows else 0
        for j in range(ncols):
            if sum(y * to_fraction(row[j]) for y, row in zip(self.certificate, rows)) != 0:
                return False
        value = sum(y * to_fraction(b) for y, b in zip(self.certificate, rhs))
        return value == self.residual and value != 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "consistent": False,
            "certificate": vector_to_strings(self.certificate),
            "residual": format_rational(self.residual),
        }


class Witness(RationalModel):
    """
    Successful implication: one group algebra element per generating axiom

    Σ_k A_k u_k = target.left and Σ_k B_k u_k = target.right.
    """

    elements: Tuple[GroupAlgebraElement, ...]
    kernel_dimension: int = 0

    @property
    def u(self) -> GroupAlgebraElement:
        return self.elements[0]

    @property
    def consistent(self) -> bool:
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "implied": True,
            "witness": [e.to_list() for e in self.elements],
            "kernel_dimension": self.kernel_dimension,
        }


class CheckResult(BaseModel):
    """Pass, or the lexicographically first failing basis triple with its residual"""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    passed: bool
    label: str = ""
    triple: Optional[Tuple[int, ...]] = None
    residual: Optional[Vector] = None

    @classmethod
    def success(cls, label: str = "") -> "CheckResult":
        return cls(passed=True, label=label)

    @classmethod
    def failure(cls, triple: Sequence[int], residual: Sequence[Any], label: str = "") -> "CheckResult":
        return cls(passed=False, label=label, triple=tuple(triple), residual=to_vector(residual))

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        indices = ",".join(str(i) for i in self.triple)
        return f"FAIL at ({indices}) residual {format_vector(self.residual)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "label": self.label,
            "triple": list(self.triple) if self.triple is not None else None,
            "residual": vector_to_strings(self.residual) if self.residual is not None else None,
        }


class PolyCheckResult(BaseModel):
    """Outcome of checking an identity in the polynomial function model"""

    passed: bool
    checked: int
    witness: Optional[Tuple[str, str, str]] = None
    residual: Optional[str] = None

    def __str__(self) -> str:
        if self.passed:
            return f"PASS ({self.checked} triples)"
        f, g, h = self.witness
        return f"FAIL at f={f}, g={g}, h={h} residual {self.residual}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "witness": list(self.witness) if self.witness else None,
            "residual": self.residual,
        }


class PipelineReport(BaseModel):
    """
    The JacAss substitution pipeline for one target law

    rows hold integer-normalized equations (a1, a2, a3 | rhs).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    target: Identity
    rows: Tuple[Vector, ...]
    solution: Optional[LinearSolution] = None
    certificate: Optional[NoSolution] = None
    identity: Optional[Identity] = None

    @property
    def solved(self) -> bool:
        return self.solution is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "target": self.target.to_dict(),
            "system": [vector_to_strings(r) for r in self.rows],
            "solved": self.solved,
            "solution": self.solution.to_dict() if self.solution else None,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "identity": self.identity.to_dict() if self.identity else None,
        }


class CommandReport(BaseModel):
    """Result of one CLI invocation"""

    command: str
    result: Dict[str, Any] = {}
    lines: List[str] = []
    exit_code: int = 0
    output_format: str = "text"

    def to_dict(self) -> Dict[str, Any]:
        return {"command": self.command, "exit_code": self.exit_code, "result": self.result}


class AdmissibilityReport(RationalModel):
    """Lie and associative admissibility of one identity"""

    lie_admissible: bool
    assoc_admissible: bool
    lie_witness: Optional[Witness] = None
    assoc_witness: Optional[Witness] = None
    left_sign_value: Fraction
    right_sign_value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "lie_admissible": self.lie_admissible,
            "assoc_admissible": self.assoc_admissible,
            "lie_witness": self.lie_witness.to_dict() if self.lie_witness else None,
            "assoc_witness": self.assoc_witness.to_dict() if self.assoc_witness else None,
            "sign_values": [format_rational(self.left_sign_value), format_rational(self.right_sign_value)],
        }


class CyclicConsequenceReport(RationalModel):
    """
    The cyclic distributive law derived from the transposed Poisson axioms

    sign_values maps an identity name to the eigenvalues of its left and right
    combination matrices on the sign vector.
    """

    witness: Witness
    law: DistributiveLaw
    sign_values: Dict[str, Tuple[Fraction, Fraction]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "witness": self.witness.to_dict(),
            "law": self.law.to_dict(),
            "sign_values": {k: vector_to_strings(v) for k, v in self.sign_values.items()},
        }


class RelationSpace(RationalModel):
    """
    Σ₃-invariant subspace of the twelve degree-3 monomials

    basis is the reduced echelon basis, so equal spaces compare equal.
    """

    basis: Tuple[Vector, ...] = ()

    @field_validator("basis", mode="before")
    @classmethod
    def validate_basis(cls, v):
        return tuple(to_vector(row, 12, "relation vector") for row in v)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_dict(self) -> Dict[str, Any]:
        return {"dimension": self.dimension, "basis": [vector_to_strings(row) for row in self.basis]}


class StructureAlgebra(RationalModel):
    """
    Finite-dimensional algebra given by structure constants

    constants[i][j] holds the coordinates of e_i e_j. An optional Z2 grading
    assigns 0 or 1 to every basis vector; products must respect it.
    """

    dim: int
    constants: Tuple[Tuple[Vector, ...], ...]
    grading: Optional[Tuple[int, ...]] = None

    @field_validator("dim")
    @classmethod
    def validate_dim(cls, v):
        if v < 0:
            raise ValidationError(f"dimension must be non-negative, got {v}", field_name="dim", field_value=v)
        return v

    @field_validator("constants", mode="before")
    @classmethod
    def validate_constants(cls, v):
        return tuple(tuple(to_vector(cell) for cell in row) for row in v)

    @field_validator("grading", mode="before")
    @classmethod
    def validate_grading(cls, v):
        if v is None:
            return None
        degrees = tuple(int(d) for d in v)
        if any(d not in (0, 1) for d in degrees):
            raise ValidationError(f"degrees must be 0 or 1, got {degrees}", field_name="grading", field_value=degrees)
        return degrees

    @model_validator(mode="after")
    def check_shape_and_grading(self):
        n = self.dim
        if len(self.constants) != n or any(len(row) != n for row in self.constants):
            raise DimensionError("structure constants must form an n×n table", expected=n, actual=len(self.constants))
        for row in self.constants:
            for cell in row:
                if len(cell) != n:
                    raise DimensionError("product coordinates must have dim entries", expected=n, actual=len(cell))
        if self.grading is not None:
            if len(self.grading) != n:
                raise DimensionError("grading needs one degree per basis vector", expected=n, actual=len(self.grading))
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        if self.constants[i][j][k] != 0 and self.grading[k] != (self.grading[i] + self.grading[j]) % 2:
                            raise ValidationError(
                                f"product e{i + 1}e{j + 1} has a component on e{k + 1} of the wrong degree",
                                field_name="constants",
                                field_value=(i + 1, j + 1, k + 1),
                            )
        return self

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Dict[Tuple[int, int], Sequence[Any]],
        grading: Optional[Sequence[int]] = None,
    ) -> "StructureAlgebra":
        """Build from {(i, j): coordinates} with 0-based indices, missing pairs are zero"""
        zero = (Fraction(0),) * dim
        constants = [[products.get((i, j), zero) for j in range(dim)] for i in range(dim)]
        return cls(dim=dim, constants=constants, grading=grading)

    @classmethod
    def zero(cls, dim: int, grading: Optional[Sequence[int]] = None) -> "StructureAlgebra":
        return cls.from_products(dim, {}, grading)

    @property
    def is_graded(self) -> bool:
        return self.grading is not None

    @property
    def has_odd_part(self) -> bool:
        return self.grading is not None and any(self.grading)

    def degree(self, i: int) -> int:
        return self.grading[i] if self.grading is not None else 0

    def product(self, i: int, j: int) -> Vector:
        return self.constants[i][j]

    def unit(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def multiply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the basis products"""
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                factor = xi * yj
                for k, c in enumerate(self.constants[i][j]):
                    if c != 0:
                        out[k] += factor * c
        return tuple(out)

    def with_constants(self, constants: Sequence[Sequence[Sequence[Any]]]) -> "StructureAlgebra":
        return StructureAlgebra(dim=self.dim, constants=constants, grading=self.grading)

    def to_dict(self) -> Dict[str, Any]:
        products = {
            f"e{i + 1}e{j + 1}": vector_to_strings(self.constants[i][j])
            for i in range(self.dim)
            for j in range(self.dim)
            if any(self.constants[i][j])
        }
        return {"dim": self.dim, "grading": list(self.grading) if self.grading else None, "products": products}


SIGN_PAIRS = ("xy", "xz", "yz")


class SignedTerm(RationalModel):
    """
    One monomial of a signed identity

    On homogeneous x, y, z the term carries (-1)^(Σ |u||v|) over its sign pairs.
    """

    position: int
    coeff: Fraction
    signs: FrozenSet[str] = frozenset()

    @field_validator("position")
    @classmethod
    def validate_position(cls, v):
        if not 0 <= v < 12:
            raise ValidationError(f"monomial index out of range: {v + 1}", field_name="position", field_value=v)
        return v

    @field_validator("coeff", mode="before")
    @classmethod
    def validate_coeff(cls, v):
        return to_fraction(v)

    @field_validator("signs", mode="before")
    @classmethod
    def validate_signs(cls, v):
        signs = frozenset(v)
        unknown = signs - set(SIGN_PAIRS)
        if unknown:
            raise ValidationError(f"unknown sign pairs: {sorted(unknown)}", field_name="signs", field_value=sorted(unknown))
        return signs

    def sign_at(self, degrees: Sequence[int]) -> int:
        """Realized sign for the degrees of (x, y, z)"""
        exponent = 0
        for pair in self.signs:
            first = "xyz".index(pair[0])
            second = "xyz".index(pair[1])
            exponent += degrees[first] * degrees[second]
        return -1 if exponent % 2 else 1

    def signs_text(self) -> str:
        return ",".join(p for p in SIGN_PAIRS if p in self.signs) or "-"


class SignedIdentity(RationalModel):
    """Twelve signed terms, one per monomial in the fixed order"""

    terms: Tuple[SignedTerm, ...]

    @field_validator("terms", mode="before")
    @classmethod
    def validate_terms(cls, v):
        by_position: Dict[int, SignedTerm] = {}
        for term in v:
            term = term if isinstance(term, SignedTerm) else SignedTerm(**term)
            if term.position in by_position:
                raise ValidationError(f"monomial {term.position + 1} listed twice", field_name="terms", field_value=term.position + 1)
            by_position[term.position] = term
        return tuple(by_position.get(p, SignedTerm(position=p, coeff=0)) for p in range(12))

    @classmethod
    def from_parts(cls, coefficients: Sequence[Any], signs: Sequence[Any]) -> "SignedIdentity":
        coefficients = to_vector(coefficients, 12, "signed identity coefficients")
        if len(signs) != 12:
            raise DimensionError("signed identity needs 12 sign sets", expected=12, actual=len(signs))
        return cls(terms=[SignedTerm(position=p, coeff=c, signs=s) for p, (c, s) in enumerate(zip(coefficients, signs))])

    def coefficients(self) -> Vector:
        return tuple(term.coeff for term in self.terms)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "terms": [
                {"index": t.position + 1, "coeff": format_rational(t.coeff), "signs": sorted(t.signs)}
                for t in self.terms
            ]
        }


class Endomorphism(RationalModel):
    """
    Linear map of an algebra's underlying space

    Column j holds the coordinates of f(e_j), so f(e_j) = Σ_i matrix[i][j] e_i.
    """

    matrix: Tuple[Vector, ...]

    @field_validator("matrix", mode="before")
    @classmethod
    def validate_matrix(cls, v):
        rows = tuple(to_vector(row, name="endomorphism row") for row in v)
        for row in rows:
            if len(row) != len(rows):
                raise DimensionError("endomorphism matrix must be square", expected=len(rows), actual=len(row))
        return rows

    @classmethod
    def identity(cls, n: int) -> "Endomorphism":
        return cls(matrix=[[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Endomorphism":
        return cls(matrix=[[0] * n for _ in range(n)])

    @classmethod
    def from_flat(cls, values: Sequence[Any], n: int) -> "Endomorphism":
        """Row-major n² entries"""
        values = to_vector(values, n * n, "endomorphism entries")
        return cls(matrix=[values[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def combine(cls, basis: Sequence["Endomorphism"], coefficients: Sequence[Any]) -> "Endomorphism":
        """Σ_k coefficients[k] basis[k], basis must be nonempty"""
        n = basis[0].dim
        flat = [Fraction(0)] * (n * n)
        for f, c in zip(basis, to_vector(coefficients, len(basis), "coefficients")):
            for k, x in enumerate(f.flat()):
                flat[k] += c * x
        return cls.from_flat(flat, n)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def flat(self) -> Vector:
        return tuple(x for row in self.matrix for x in row)

    def __call__(self, x: Sequence[Fraction]) -> Vector:
        return tuple(sum(row[j] * x[j] for j in range(self.dim)) for row in self.matrix)

    def __matmul__(self, other: "Endomorphism") -> "Endomorphism":
        n = self.dim
        return Endomorphism(
            matrix=[
                [sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n)) for j in range(n)]
                for i in range(n)
            ]
        )

    def commutator(self, other: "Endomorphism") -> "Endomorphism":
        """f∘g - g∘f"""
        first, second = self @ other, other @ self
        return Endomorphism(
            matrix=[[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(first.matrix, second.matrix)]
        )

    def is_zero(self) -> bool:
        return not any(self.flat())

    def __str__(self) -> str:
        return "\n".join(" ".join(format_rational(x) for x in row) for row in self.matrix)

    def to_dict(self) -> Dict[str, Any]:
        return {"matrix": [vector_to_strings(row) for row in self.matrix]}


class BulletProduct(RationalModel):
    """x•y = [x, f(y)] with its commutativity status"""

    product: StructureAlgebra
    commutative: bool
    witness: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "product": self.product.to_dict(),
            "commutative": self.commutative,
            "witness": list(self.witness) if self.witness else None,
        }


class ClosureReport(BaseModel):
    """Whether the commutators of a basis of G(V) stay inside G(V)"""

    passed: bool
    dimension: int
    pair: Optional[Tuple[int, int]] = None

    def __str__(self) -> str:
        if self.passed:
            return f"PASS (dim G(V) = {self.dimension})"
        return f"FAIL: [f{self.pair[0]}, f{self.pair[1]}] leaves G(V)"

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "dimension": self.dimension, "pair": list(self.pair) if self.pair else None}
