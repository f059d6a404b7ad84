"""
nonassoc-toolkit

Exact depolarization calculus for degree-3 identities of nonassociative
algebras: polarization of a product into (•, [,]), Σ₃-orbit implication,
distributive laws, operads in arity 3 and checks on concrete algebras.
"""

from pathlib import Path


def _get_version():
    """Read the version from version.txt"""
    try:
        version_file = Path(__file__).parent.parent / "version.txt"

        if version_file.exists():
            with open(version_file, 'r', encoding='utf-8') as f:
                version = f.read().strip()
                if version:
                    return version

        return "0.1.0"

    except Exception:
        return "0.1.0"


__version__ = _get_version()
__author__ = "nonassoc-toolkit developers"
__description__ = "Exact depolarization calculus for nonassociative algebras"

from .core.config import ToolkitConfig
from .nonassoc.models import DistributiveLaw, GroupAlgebraElement, Identity, StructureAlgebra
from .nonassoc.identities import implies, named_identity
from .nonassoc.depolarization import solve_poisson, solve_transposed

__all__ = [
    "ToolkitConfig",
    "DistributiveLaw",
    "GroupAlgebraElement",
    "Identity",
    "StructureAlgebra",
    "implies",
    "named_identity",
    "solve_poisson",
    "solve_transposed",
    "__version__",
    "__author__",
    "__description__",
]
