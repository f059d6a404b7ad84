"""
Checks on concrete algebras: verify, poly-check, power
"""

from pathlib import Path

from ..core.exceptions import ValidationError
from ..nonassoc.algebras import check_identity, poly_check, power_defect
from ..nonassoc.constants import NamedIdentities, NamedLaws
from ..nonassoc.formats import parse_algebra, parse_identity, parse_law, parse_signed
from ..nonassoc.identities import named_identity
from ..nonassoc.models import CommandReport, DistributiveLaw, StructureAlgebra, to_fraction, vector_to_strings
from ..nonassoc.superalgebra import check_signed, signed_from_identity
from ..utils.logger import get_logger
from ..utils.text_utils import format_vector
from .report import load

logger = get_logger(__name__)


def _is_signed_file(path: str) -> bool:
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        content = line.split("#", 1)[0].strip()
        if content:
            return content.split()[0] == "term"
    return False


def verify_command(args, config) -> CommandReport:
    """
    Check an identity on an algebra, signed when the algebra has odd elements

    A plain identity on a graded algebra is checked through its Koszul lift;
    a signed identity on an ungraded algebra sees every element as even.
    """
    alg = load(args.alg_file, parse_algebra)
    if _is_signed_file(args.id_file):
        sid = load(args.id_file, parse_signed)
        mode = "signed"
    else:
        identity = load(args.id_file, parse_identity)
        sid = signed_from_identity(identity) if alg.has_odd_part else None
        mode = "signed" if sid is not None else "plain"

    if sid is None:
        result = check_identity(alg, identity)
    else:
        if alg.grading is None:
            alg = StructureAlgebra(dim=alg.dim, constants=alg.constants, grading=[0] * alg.dim)
        result = check_signed(alg, sid)
    logger.debug(f"verify: {mode} check on a {alg.dim}-dimensional algebra")
    payload = result.to_dict()
    payload["mode"] = mode
    return CommandReport(command="verify", result=payload, lines=[str(result)])


def _relation(name_or_path: str):
    """A named law, a named identity, or a law or identity file"""
    if name_or_path in NamedLaws.BY_NAME:
        alpha, beta = NamedLaws.BY_NAME[name_or_path]
        return DistributiveLaw(alpha=alpha, beta=beta)
    if name_or_path in NamedIdentities.BY_NAME:
        return named_identity(name_or_path)
    if not Path(name_or_path).exists():
        known = ", ".join(sorted(set(NamedLaws.BY_NAME) | set(NamedIdentities.BY_NAME)))
        raise ValidationError(f"{name_or_path!r} is neither a file nor one of: {known}", field_name="relation", field_value=name_or_path)
    for line in Path(name_or_path).read_text(encoding="utf-8").splitlines():
        content = line.split("#", 1)[0].strip()
        if content:
            keyword = content.split()[0].rstrip(":")
            return load(name_or_path, parse_law if keyword in ("alpha", "beta") else parse_identity)
    return load(name_or_path, parse_identity)


def poly_check_command(args, config) -> CommandReport:
    degree = args.degree if args.degree is not None else config.poly_degree
    trials = args.trials if args.trials is not None else config.poly_trials
    seed = args.seed if args.seed is not None else config.poly_seed
    result = poly_check(_relation(args.relation), degree_bound=degree, trials=trials, seed=seed)
    return CommandReport(command="poly-check", result=result.to_dict(), lines=[str(result)])


def power_command(args, config) -> CommandReport:
    alg = load(args.alg_file, parse_algebra)
    element = [to_fraction(v) for v in args.element.replace(",", " ").split()]
    values = power_defect(alg, element, args.n)
    associates = len(values) == 1
    lines = [f"{'✅' if associates else '❌'} {len(values)} distinct value(s) of x^{args.n}"]
    lines += [format_vector(v) for v in values]
    result = {"n": args.n, "associates": associates, "values": [vector_to_strings(v) for v in values]}
    return CommandReport(command="power", result=result, lines=lines)


def add_algebra_parsers(subparsers) -> None:
    p = subparsers.add_parser("verify", help="check an identity on a structure-constant algebra")
    p.add_argument("alg_file", help="algebra file, a deg line makes it graded")
    p.add_argument("id_file", help="identity or signed identity file")
    p.set_defaults(handler=verify_command)

    p = subparsers.add_parser("poly-check", help="check a relation in the polynomial model")
    p.add_argument("relation", help="law or identity name, or a law or identity file")
    p.add_argument("--degree", type=int, default=None, help="maximal monomial exponent")
    p.add_argument("--trials", type=int, default=None, help="number of random triples")
    p.add_argument("--seed", type=int, default=None, help="seed of the random triples")
    p.set_defaults(handler=poly_check_command)

    p = subparsers.add_parser("power", help="all bracketings of x^n")
    p.add_argument("alg_file", help="algebra file")
    p.add_argument("--element", required=True, help="coordinates of x, comma separated, e.g. --element=1,-1")
    p.add_argument("--n", type=int, default=3, help="power, 1 to 6")
    p.set_defaults(handler=power_command)
