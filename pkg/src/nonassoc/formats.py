"""
Plain-text input formats

Blank lines and text after "#" are ignored. Rationals are written p or p/q.

    identity     left: a1 .. a6 / right: b1 .. b6 (a family repeats the pair),
                 or "named: jacobi" for a shipped identity
    lambda       lambda: l1 .. l12
    law          alpha: a1 a2 a3 / beta: b1 b2 b3, or "named: leibniz"
    algebra      dim n, optional deg d1 .. dn, then e i j = c1 .. cn (1-based)
    signed       term <index> coeff <p/q> signs <xy,xz,yz or ->
    endomorphism n lines of n rationals
"""

import re
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar, Union

from ..core.exceptions import ParseError, ToolkitError
from ..utils.text_utils import format_rational, format_vector
from .constants import NamedIdentities, NamedLaws
from .models import (
    DistributiveLaw,
    Endomorphism,
    Identity,
    PolarizedIdentity,
    SignedIdentity,
    SignedTerm,
    StructureAlgebra,
    to_fraction,
)

T = TypeVar("T")

Token = Tuple[int, str]

_TOKEN = re.compile(r"\S+")


class _Line:
    """One significant input line with 1-based column positions"""

    def __init__(self, number: int, text: str, path: Optional[str]):
        self.number = number
        self.path = path
        self.tokens: List[Token] = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(text)]

    def error(self, message: str, column: Optional[int] = None) -> ParseError:
        column = column if column is not None else (self.tokens[0][0] if self.tokens else 1)
        return ParseError(message, path=self.path, line=self.number, column=column)

    @property
    def keyword(self) -> str:
        return self.tokens[0][1].lower()

    def rationals(self, tokens: Sequence[Token], count: Optional[int] = None, what: str = "values"):
        if count is not None and len(tokens) != count:
            column = tokens[count][0] if len(tokens) > count else self._end_column()
            raise self.error(f"{what}: expected {count} values, got {len(tokens)}", column)
        values = []
        for column, text in tokens:
            try:
                values.append(to_fraction(text))
            except ToolkitError:
                raise self.error(f"not a rational: {text!r}", column)
        return values

    def integer(self, token: Token, what: str) -> int:
        column, text = token
        if not re.fullmatch(r"[+-]?\d+", text):
            raise self.error(f"{what} must be an integer, got {text!r}", column)
        return int(text)

    def _end_column(self) -> int:
        if not self.tokens:
            return 1
        column, text = self.tokens[-1]
        return column + len(text)


def _lines(text: str, path: Optional[str]) -> List[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            lines.append(_Line(number, content, path))
    return lines


def _expect_keyword(line: _Line, allowed: Sequence[str]) -> str:
    keyword = line.keyword.rstrip(":")
    if keyword not in allowed:
        raise line.error(f"expected one of {', '.join(allowed)}, got {line.tokens[0][1]!r}")
    return keyword


def _named(line: _Line, table: Dict[str, T], what: str) -> T:
    if len(line.tokens) != 2:
        raise line.error(f"named: takes exactly one {what} name")
    column, name = line.tokens[1]
    if name not in table:
        raise line.error(f"unknown {what} {name!r}, expected one of: {', '.join(sorted(table))}", column)
    return table[name]


def _guard(line: _Line, build: Callable[[], T]) -> T:
    """Turn model validation errors into located parse errors"""
    try:
        return build()
    except ParseError:
        raise
    except ToolkitError as e:
        raise line.error(e.message)


def parse_identities(text: str, path: Optional[str] = None) -> List[Identity]:
    """
    One or more identities

    Raises:
        ParseError: malformed line, unpaired left/right, or an empty file
    """
    identities: List[Identity] = []
    pending: Optional[Tuple[_Line, list]] = None
    for line in _lines(text, path):
        keyword = _expect_keyword(line, ("left", "right", "named"))
        if keyword == "named":
            if pending is not None:
                raise line.error("left: line without matching right: line")
            left, right = _named(line, NamedIdentities.BY_NAME, "identity")
            identities.append(Identity(left=left, right=right))
        elif keyword == "left":
            if pending is not None:
                raise line.error("two left: lines in a row")
            pending = (line, line.rationals(line.tokens[1:], 6, "left"))
        else:
            if pending is None:
                raise line.error("right: line without preceding left: line")
            right = line.rationals(line.tokens[1:], 6, "right")
            left = pending[1]
            identities.append(_guard(line, lambda: Identity(left=left, right=right)))
            pending = None
    if pending is not None:
        raise pending[0].error("left: line without matching right: line")
    if not identities:
        raise ParseError("no identity found", path=path, line=1, column=1)
    return identities


def parse_identity(text: str, path: Optional[str] = None) -> Identity:
    identities = parse_identities(text, path)
    if len(identities) != 1:
        raise ParseError(f"expected one identity, found {len(identities)}", path=path, line=1, column=1)
    return identities[0]


def parse_lambda(text: str, path: Optional[str] = None) -> PolarizedIdentity:
    lines = _lines(text, path)
    if len(lines) != 1:
        raise ParseError("expected a single lambda: line", path=path, line=lines[1].number if len(lines) > 1 else 1, column=1)
    line = lines[0]
    _expect_keyword(line, ("lambda",))
    return PolarizedIdentity(lambdas=line.rationals(line.tokens[1:], 12, "lambda"))


def parse_law(text: str, path: Optional[str] = None) -> DistributiveLaw:
    values: Dict[str, list] = {}
    for line in _lines(text, path):
        keyword = _expect_keyword(line, ("alpha", "beta", "named"))
        if keyword == "named":
            alpha, beta = _named(line, NamedLaws.BY_NAME, "law")
            values["alpha"], values["beta"] = list(alpha), list(beta)
            continue
        if keyword in values:
            raise line.error(f"duplicate {keyword}: line")
        values[keyword] = line.rationals(line.tokens[1:], 3, keyword)
    missing = [k for k in ("alpha", "beta") if k not in values]
    if missing:
        raise ParseError(f"missing {missing[0]}: line", path=path, line=1, column=1)
    return DistributiveLaw(alpha=values["alpha"], beta=values["beta"])


def parse_algebra(text: str, path: Optional[str] = None) -> StructureAlgebra:
    """
    Structure constants with an optional grading

    Raises:
        ParseError: missing dim line, indices out of range, a product listed
            twice, or constants that break the grading
    """
    lines = _lines(text, path)
    if not lines:
        raise ParseError("empty algebra file", path=path, line=1, column=1)
    first = lines[0]
    if first.keyword != "dim" or len(first.tokens) != 2:
        raise first.error("first line must be: dim n")
    dim = first.integer(first.tokens[1], "dim")
    if dim < 1:
        raise first.error(f"dim must be positive, got {dim}", first.tokens[1][0])

    grading = None
    products: Dict[Tuple[int, int], list] = {}
    anchor = first
    for line in lines[1:]:
        if line.keyword == "deg":
            if grading is not None:
                raise line.error("duplicate deg line")
            if products:
                raise line.error("deg must come before the products")
            grading = []
            if len(line.tokens) - 1 != dim:
                raise line.error(f"deg: expected {dim} values, got {len(line.tokens) - 1}")
            for token in line.tokens[1:]:
                d = line.integer(token, "degree")
                if d not in (0, 1):
                    raise line.error(f"degrees are 0 or 1, got {d}", token[0])
                grading.append(d)
            continue
        if line.keyword != "e":
            raise line.error(f"expected dim, deg or e, got {line.tokens[0][1]!r}")
        if len(line.tokens) < 4 or line.tokens[3][1] != "=":
            raise line.error("product lines read: e i j = c1 .. cn")
        i = line.integer(line.tokens[1], "index")
        j = line.integer(line.tokens[2], "index")
        for token, index in ((line.tokens[1], i), (line.tokens[2], j)):
            if not 1 <= index <= dim:
                raise line.error(f"index {index} outside 1..{dim}", token[0])
        if (i - 1, j - 1) in products:
            raise line.error(f"product e{i} e{j} listed twice")
        products[(i - 1, j - 1)] = line.rationals(line.tokens[4:], dim, f"e{i} e{j}")
        anchor = line
    return _guard(anchor, lambda: StructureAlgebra.from_products(dim, products, grading))


def parse_signed(text: str, path: Optional[str] = None) -> SignedIdentity:
    terms = []
    seen = set()
    for line in _lines(text, path):
        _expect_keyword(line, ("term",))
        words = [t[1] for t in line.tokens]
        if len(words) != 6 or words[2] != "coeff" or words[4] != "signs":
            raise line.error("term lines read: term <index> coeff <p/q> signs <pairs or ->")
        index = line.integer(line.tokens[1], "term index")
        if not 1 <= index <= 12:
            raise line.error(f"term index {index} outside 1..12", line.tokens[1][0])
        if index in seen:
            raise line.error(f"term {index} listed twice", line.tokens[1][0])
        seen.add(index)
        coeff = line.rationals([line.tokens[3]])[0]
        signs = () if words[5] == "-" else tuple(words[5].split(","))
        terms.append(_guard(line, lambda: SignedTerm(position=index - 1, coeff=coeff, signs=signs)))
    if not terms:
        raise ParseError("no term lines", path=path, line=1, column=1)
    return SignedIdentity(terms=terms)


def parse_endomorphism(text: str, path: Optional[str] = None) -> Endomorphism:
    lines = _lines(text, path)
    if not lines:
        raise ParseError("empty endomorphism file", path=path, line=1, column=1)
    n = len(lines)
    rows = [line.rationals(line.tokens, n, f"row {k + 1}") for k, line in enumerate(lines)]
    return Endomorphism(matrix=rows)


def read_file(path: Union[str, Path], parser: Callable[[str, Optional[str]], T]) -> T:
    """Read a file and parse it, errors carry the path"""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parser(text, str(path))


def render_identity(identity: Identity) -> str:
    return f"left: {format_vector(identity.left.coords)}\nright: {format_vector(identity.right.coords)}\n"


def render_law(law: DistributiveLaw) -> str:
    return f"alpha: {format_vector(law.alpha)}\nbeta: {format_vector(law.beta)}\n"


def render_algebra(alg: StructureAlgebra) -> str:
    lines = [f"dim {alg.dim}"]
    if alg.grading is not None:
        lines.append("deg " + " ".join(str(d) for d in alg.grading))
    for i in range(alg.dim):
        for j in range(alg.dim):
            if any(alg.product(i, j)):
                lines.append(f"e {i + 1} {j + 1} = {format_vector(alg.product(i, j))}")
    return "\n".join(lines) + "\n"


def render_signed(sid: SignedIdentity) -> str:
    return "".join(
        f"term {t.position + 1} coeff {format_rational(t.coeff)} signs {t.signs_text()}\n"
        for t in sid.terms
    )


def render_endomorphism(f: Endomorphism) -> str:
    return str(f) + "\n"
