"""
Depolarization pipelines: solve poisson, solve transposed, solve cyclic
"""

from typing import List

from ..nonassoc.depolarization import aa_cyclic_consequence, solve_poisson, solve_transposed, jacass_pipeline
from ..nonassoc.identities import LEIBNIZ
from ..nonassoc.models import CommandReport, PipelineReport
from ..utils.text_utils import format_rational, format_vector
from .report import indent


def _system_lines(report: PipelineReport) -> List[str]:
    lines = ["system in (a1, a2, a3):"]
    for row in report.rows:
        terms = " ".join(f"{format_rational(c)}·a{k + 1}" for k, c in enumerate(row[:3]) if c != 0)
        lines.append(f"  {terms or '0'} = {format_rational(row[3])}")
    return lines


def solve_command(args, config) -> CommandReport:
    """
    Run one named pipeline

    Args:
        args: parsed arguments with .target in poisson, transposed, cyclic
    """
    if args.target == "poisson":
        identity = solve_poisson()
        report = jacass_pipeline(LEIBNIZ)
        a = ", ".join(format_rational(x) for x in report.solution.solution)
        lines = _system_lines(report) + [f"a = ({a})", str(identity)]
        return CommandReport(command="solve poisson", result=report.to_dict(), lines=lines)

    if args.target == "transposed":
        report = solve_transposed()
        lines = _system_lines(report)
        if report.solved:
            lines.append(str(report.identity))
        else:
            lines += [
                "❌ NO SOLUTION",
                f"certificate: {format_vector(report.certificate.certificate)}",
                f"residual: {format_rational(report.certificate.residual)}",
            ]
        return CommandReport(command="solve transposed", result=report.to_dict(), lines=lines)

    consequence = aa_cyclic_consequence()
    lines = [f"law: {consequence.law}", "witness:"]
    lines += indent([f"u{k + 1}: {u}" for k, u in enumerate(consequence.witness.elements)])
    lines.append("eigenvalues on the sign vector (A, B):")
    lines += indent([
        f"{name}: {format_rational(a)}, {format_rational(b)}"
        for name, (a, b) in consequence.sign_values.items()
    ])
    return CommandReport(command="solve cyclic", result=consequence.to_dict(), lines=lines)


def add_solve_parser(subparsers) -> None:
    p = subparsers.add_parser("solve", help="depolarization pipelines")
    p.add_argument(
        "target",
        choices=["poisson", "transposed", "cyclic"],
        help="poisson: the JacAss member implying Leibniz; transposed: the inconsistent "
        "transposed system; cyclic: the law derived from the transposed axioms",
    )
    p.set_defaults(handler=solve_command)
