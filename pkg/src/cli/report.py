"""
Report rendering shared by all commands

Text mode prints the report lines, json mode prints one top-level object.
"""

import json
from pathlib import Path
from typing import Callable, List, Optional, TypeVar

from ..nonassoc.formats import read_file
from ..nonassoc.models import CommandReport
from ..utils.text_utils import safe_print

T = TypeVar("T")


def emit(report: CommandReport, output_format: str = "text") -> None:
    if output_format == "json":
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
        return
    for line in report.lines:
        safe_print(line)


def load(path: str, parser: Callable[[str, Optional[str]], T]) -> T:
    """Parse one input file, a missing file surfaces as FileNotFoundError"""
    return read_file(Path(path), parser)


def indent(lines: List[str], prefix: str = "  ") -> List[str]:
    return [prefix + line for line in lines]
