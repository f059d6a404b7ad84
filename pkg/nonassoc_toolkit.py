#!/usr/bin/env python3
"""
nonassoc-toolkit - unified entry point

Polarization, implication and depolarization of degree-3 identities from the
command line.
"""

import sys
from typing import List, Optional

from src.cli import emit, run
from src.utils.logger import get_logger
from src.utils.text_utils import safe_print

logger = get_logger(__name__)


def main(argv: Optional[List[str]] = None) -> None:
    """Entry point, exits with the report's exit code"""
    try:
        report = run(argv)
    except KeyboardInterrupt:
        safe_print("\n👋 Interrupted")
        sys.exit(1)

    if report.command:
        emit(report, report.output_format)
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
