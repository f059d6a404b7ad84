"""
Command-line front end
"""

from .runner import build_parser, run
from .report import emit

__all__ = ['build_parser', 'run', 'emit']
