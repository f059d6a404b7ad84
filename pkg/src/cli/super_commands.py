"""
Superalgebra commands: super conditions, super verify, super axioms
"""

from ..core.exceptions import PreconditionError
from ..nonassoc.formats import parse_algebra, render_signed
from ..nonassoc.models import CommandReport
from ..nonassoc.superalgebra import (
    check_signed,
    classify_dim2_conditions,
    koszul_deviations,
    named_signed_identity,
    transposed_super_axioms,
    super_constructors,
    superflexibility_check,
)
from .report import indent, load


def super_command(args, config) -> CommandReport:
    action = args.super_action

    if action == "conditions":
        conditions = [str(p) for p in classify_dim2_conditions()]
        lines = ["e0e0 = a e0, e0e1 = b e1, e1e0 = c e1, e1e1 = d e0 is Poisson super iff:"]
        lines += indent([f"{p} = 0" for p in conditions])
        return CommandReport(command="super conditions", result={"conditions": conditions}, lines=lines)

    if action == "verify":
        alg = load(args.alg_file, parse_algebra)
        if alg.grading is None:
            raise PreconditionError("super verify needs a deg line in the algebra file", operation="super verify")
        names = args.identity or ["super_poisson", "superflexibility"]
        results = {}
        lines = []
        for name in names:
            result = (
                superflexibility_check(alg) if name == "superflexibility"
                else check_signed(alg, named_signed_identity(name))
            )
            results[name] = result.to_dict()
            lines.append(f"{name}: {result}")
        return CommandReport(command="super verify", result=results, lines=lines)

    axioms = transposed_super_axioms()
    lines = []
    result = []
    for k, sid in enumerate(axioms, start=1):
        deviations = koszul_deviations(sid)
        lines.append(f"axiom {k}:")
        lines += indent(render_signed(sid).splitlines())
        lines.append("  terms off the Koszul rule: " + (" ".join(str(p) for p in deviations) or "none"))
        entry = sid.to_dict()
        entry["koszul_deviations"] = deviations
        result.append(entry)
    return CommandReport(command="super axioms", result={"axioms": result}, lines=lines)


def add_super_parser(subparsers) -> None:
    p = subparsers.add_parser("super", help="Z2-graded identities")
    super_subparsers = p.add_subparsers(dest="super_action", required=True, help="super action")

    super_subparsers.add_parser("conditions", help="conditions on the generic 2-dimensional superalgebra")

    sub = super_subparsers.add_parser("verify", help="check signed identities on a graded algebra")
    sub.add_argument("alg_file", help="algebra file with a deg line")
    sub.add_argument(
        "--identity",
        action="append",
        choices=sorted(super_constructors()),
        help="signed identity to check, repeatable (default: super_poisson and superflexibility)",
    )

    super_subparsers.add_parser("axioms", help="the transposed Poisson super axioms with their stated signs")

    p.set_defaults(handler=super_command)
