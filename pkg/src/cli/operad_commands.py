"""
Operad commands: dim3, dual, selfdual, free-dims
"""

from typing import List

from ..core.config import MAX_FREE_DEGREE
from ..nonassoc.formats import parse_identities
from ..nonassoc.models import CommandReport, Identity
from ..nonassoc.operads import dim_arity3, dual_relations, free_dims, is_self_dual, koszul_note, orbit_span
from ..utils.text_utils import format_vector
from .report import load


def _load_all(paths: List[str]) -> List[Identity]:
    return [identity for path in paths for identity in load(path, parse_identities)]


def operad_command(args, config) -> CommandReport:
    """
    Arity-3 data of the operad defined by the given identity files

    Args:
        args: parsed arguments with .operad_action and .id_files
        config: ToolkitConfig, supplies the default free-dims degree
    """
    ids = _load_all(args.id_files)
    action = args.operad_action

    if action == "dim3":
        dim = dim_arity3(ids)
        return CommandReport(command="operad dim3", result={"dimension": dim}, lines=[str(dim)])

    if action == "dual":
        dual = dual_relations(orbit_span(ids))
        lines = [f"dim R^⊥ = {dual.dimension}", f"dim dual(3) = {12 - dual.dimension}"]
        lines += [format_vector(row) for row in dual.basis]
        return CommandReport(command="operad dual", result=dual.to_dict(), lines=lines)

    if action == "selfdual":
        space = orbit_span(ids)
        result = {"self_dual": is_self_dual(space), "relations": space.dimension}
        return CommandReport(command="operad selfdual", result=result, lines=[koszul_note(space)])

    max_degree = args.max if args.max is not None else config.free_dims_max_degree
    dims = free_dims(ids, max_degree)
    return CommandReport(
        command="operad free-dims",
        result={"max_degree": max_degree, "dimensions": dims},
        lines=[" ".join(str(d) for d in dims)],
    )


def add_operad_parser(subparsers) -> None:
    p = subparsers.add_parser("operad", help="quadratic operad in arity 3")
    operad_subparsers = p.add_subparsers(dest="operad_action", required=True, help="operad action")

    for name, help_text in (
        ("dim3", "dimension of the arity-3 component"),
        ("dual", "relations of the quadratic dual"),
        ("selfdual", "whether the relation space is its own dual"),
    ):
        sub = operad_subparsers.add_parser(name, help=help_text)
        sub.add_argument("id_files", nargs="+", help="identity files")

    sub = operad_subparsers.add_parser("free-dims", help="free algebra on one generator")
    sub.add_argument("--max", type=int, default=None, help=f"highest degree, at most {MAX_FREE_DEGREE}")
    sub.add_argument("id_files", nargs="*", help="identity files, none for the free magma")

    p.set_defaults(handler=operad_command)
