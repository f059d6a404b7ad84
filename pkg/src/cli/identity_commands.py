"""
Identity calculus commands

polarize, depolarize, encode-dist, decode-dist, implies, consequences,
module-rank and rank-table.
"""

from typing import Any, Dict, List

from ..core.exceptions import ValidationError
from ..nonassoc.constants import RANK_TABLE
from ..nonassoc.formats import parse_identities, parse_identity, parse_lambda, parse_law
from ..nonassoc.identities import (
    consequence_space,
    decode_distributive,
    depolarize_coeffs,
    encode_distributive,
    implies,
    law_from_rho,
    polarize_coeffs,
    polarized_terms,
)
from ..nonassoc.linalg import image_columns
from ..nonassoc.models import CommandReport, NotDistributive, Witness, to_fraction, vector_to_strings
from ..nonassoc.sigma3 import combination_matrix, module_rank
from ..utils.logger import get_logger
from ..utils.text_utils import format_rational, format_vector
from .report import indent, load

logger = get_logger(__name__)


def _implication_lines(result) -> List[str]:
    if isinstance(result, Witness):
        lines = ["✅ IMPLIED"]
        lines += [f"u{k + 1}: {u}" for k, u in enumerate(result.elements)]
        if result.kernel_dimension:
            lines.append(f"kernel dimension: {result.kernel_dimension}")
        return lines
    return [
        "❌ NO SOLUTION",
        f"certificate: {format_vector(result.certificate)}",
        f"residual: {format_rational(result.residual)}",
    ]


def polarize_command(args, config) -> CommandReport:
    identity = load(args.id_file, parse_identity)
    polarized = polarize_coeffs(identity)
    lines = [f"lambda: {polarized}"] + indent(polarized_terms(polarized))
    return CommandReport(command="polarize", result=polarized.to_dict(), lines=lines)


def depolarize_command(args, config) -> CommandReport:
    identity = depolarize_coeffs(load(args.lambda_file, parse_lambda))
    return CommandReport(command="depolarize", result=identity.to_dict(), lines=[str(identity)])


def encode_dist_command(args, config) -> CommandReport:
    law = load(args.law_file, parse_law)
    identity = encode_distributive(law)
    return CommandReport(command="encode-dist", result=identity.to_dict(), lines=[str(identity)])


def decode_dist_command(args, config) -> CommandReport:
    result = decode_distributive(load(args.id_file, parse_identity))
    if isinstance(result, NotDistributive):
        positions = " ".join(str(p) for p in result.mismatched_positions)
        lines = [f"❌ NOT DISTRIBUTIVE: {result.reason}", f"mismatched positions: {positions}"]
    else:
        lines = [f"alpha: {format_vector(result.alpha)}", f"beta: {format_vector(result.beta)}"]
    return CommandReport(command="decode-dist", result=result.to_dict(), lines=lines)


def implies_command(args, config) -> CommandReport:
    family = load(args.family_file, parse_identities)
    target = load(args.target_file, parse_identity)
    logger.debug(f"implies: {len(family)} generator(s) from {args.family_file}")
    result = implies(family, target)
    return CommandReport(command="implies", result=result.to_dict(), lines=_implication_lines(result))


def consequences_command(args, config) -> CommandReport:
    family = load(args.family_file, parse_identities)
    basis = consequence_space(family)
    lines = [f"dim {len(basis)}"]
    for rho in basis:
        law = law_from_rho(rho)
        lines.append(f"rho: {format_vector(rho)}  ({law})")
    result: Dict[str, Any] = {
        "dimension": len(basis),
        "basis": [vector_to_strings(rho) for rho in basis],
        "laws": [law_from_rho(rho).to_dict() for rho in basis],
    }
    return CommandReport(command="consequences", result=result, lines=lines)


def _parse_vector(tokens: List[str]):
    values = [part for token in tokens for part in token.replace(",", " ").split()]
    if len(values) != 6:
        raise ValidationError(f"expected 6 coordinates, got {len(values)}", field_name="vector", field_value=len(values))
    return [to_fraction(v) for v in values]


def module_rank_command(args, config) -> CommandReport:
    vector = _parse_vector(args.vector)
    rank = module_rank(vector)
    columns = [c + 1 for c in image_columns(combination_matrix(vector))]
    lines = [f"rank {rank}", "image columns: " + " ".join(str(c) for c in columns)]
    return CommandReport(command="module-rank", result={"rank": rank, "image_columns": columns}, lines=lines)


def rank_table_command(args, config) -> CommandReport:
    rows = []
    lines = []
    for family in RANK_TABLE:
        vector = family.vector()
        computed = module_rank(vector)
        rows.append({
            "name": family.name,
            "rank": family.rank,
            "sample": vector_to_strings(to_fraction(v) for v in vector),
            "computed_rank": computed,
            "constraint": family.constraint_text,
        })
        status = "✅" if computed == family.rank else "❌"
        constraint = f"  [{family.constraint_text}]" if family.constraint_text else ""
        lines.append(f"{status} {family.name}: rank {computed}  {format_vector(vector)}{constraint}")
    return CommandReport(command="rank-table", result={"families": rows}, lines=lines)


def add_identity_parsers(subparsers) -> None:
    """
    Register the identity calculus commands

    Args:
        subparsers: argparse subparsers of the top-level parser
    """
    p = subparsers.add_parser("polarize", help="rewrite an identity in • and [,]")
    p.add_argument("id_file", help="identity file")
    p.set_defaults(handler=polarize_command)

    p = subparsers.add_parser("depolarize", help="rewrite a λ-relation as an identity in μ")
    p.add_argument("lambda_file", help="lambda file")
    p.set_defaults(handler=depolarize_command)

    p = subparsers.add_parser("encode-dist", help="identity of a distributive law")
    p.add_argument("law_file", help="law file")
    p.set_defaults(handler=encode_dist_command)

    p = subparsers.add_parser("decode-dist", help="distributive law of an identity")
    p.add_argument("id_file", help="identity file")
    p.set_defaults(handler=decode_dist_command)

    p = subparsers.add_parser("implies", help="decide whether a family implies a target")
    p.add_argument("family_file", help="identity file with one or more identities")
    p.add_argument("target_file", help="identity file")
    p.set_defaults(handler=implies_command)

    p = subparsers.add_parser("consequences", help="distributive laws implied by a family")
    p.add_argument("family_file", help="identity file with one or more identities")
    p.set_defaults(handler=consequences_command)

    p = subparsers.add_parser("module-rank", help="rank of the Σ₃-module generated by a vector")
    p.add_argument("vector", nargs="+", help="six rationals, space or comma separated")
    p.set_defaults(handler=module_rank_command)

    p = subparsers.add_parser("rank-table", help="representatives of every module rank")
    p.set_defaults(handler=rank_table_command)
