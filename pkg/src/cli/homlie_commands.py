"""
Hom-Lie commands: homlie gv, homlie check
"""

from ..nonassoc.formats import parse_algebra, parse_endomorphism
from ..nonassoc.homlie import (
    antiassociator_check,
    bullet_from_f,
    depolarize_hom_lie,
    gv_basis,
    gv_closure_check,
    hom_jacobi_check,
)
from ..nonassoc.models import CommandReport
from .report import indent, load


def homlie_command(args, config) -> CommandReport:
    bracket = load(args.alg_file, parse_algebra)

    if args.homlie_action == "gv":
        basis = gv_basis(bracket)
        closure = gv_closure_check(bracket)
        lines = [f"dim G(V) = {len(basis)}"]
        for k, f in enumerate(basis, start=1):
            lines.append(f"f{k}:")
            lines += indent(str(f).splitlines())
        lines.append(f"closed under commutators: {closure}")
        result = {"dimension": len(basis), "basis": [f.to_dict() for f in basis], "closure": closure.to_dict()}
        return CommandReport(command="homlie gv", result=result, lines=lines)

    f = load(args.endo_file, parse_endomorphism)
    bullet = bullet_from_f(bracket, f)
    hom_jacobi = hom_jacobi_check(bracket, f)
    lines = [
        f"x•y = [x, f(y)] commutative: {'yes' if bullet.commutative else 'no'}",
        f"hom-jacobi: {hom_jacobi}",
    ]
    result = {"bullet": bullet.to_dict(), "hom_jacobi": hom_jacobi.to_dict(), "antiassociator": None}
    if bullet.commutative:
        mu, _ = depolarize_hom_lie(bracket, f)
        antiassociator = antiassociator_check(mu)
        lines.append(f"antiassociator sum of ½(• + [,]): {antiassociator}")
        result["antiassociator"] = antiassociator.to_dict()
    else:
        i, j = bullet.witness
        lines.append(f"f is not in G(V): e{i}•e{j} != e{j}•e{i}")
    return CommandReport(command="homlie check", result=result, lines=lines)


def add_homlie_parser(subparsers) -> None:
    p = subparsers.add_parser("homlie", help="Hom-Lie brackets and x•y = [x, f(y)]")
    homlie_subparsers = p.add_subparsers(dest="homlie_action", required=True, help="homlie action")

    sub = homlie_subparsers.add_parser("gv", help="basis of G(V) and its commutator closure")
    sub.add_argument("alg_file", help="algebra file of an anticommutative bracket")

    sub = homlie_subparsers.add_parser("check", help="bullet product, Hom-Lie and antiassociator checks")
    sub.add_argument("alg_file", help="algebra file of an anticommutative bracket")
    sub.add_argument("endo_file", help="endomorphism file")

    p.set_defaults(handler=homlie_command)
