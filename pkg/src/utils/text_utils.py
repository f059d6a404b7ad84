"""
Text helpers

Rendering of rationals and vectors, and console-safe printing.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Union

Rational = Union[int, Fraction]


def format_rational(value: Rational) -> str:
    """
    Render a rational as "p" or "p/q"

    Args:
        value: int or Fraction

    Returns:
        canonical text form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(values: Iterable[Rational]) -> str:
    """Space-separated rationals"""
    return " ".join(format_rational(v) for v in values)


def format_matrix(rows: Sequence[Sequence[Rational]]) -> List[str]:
    """One line per row, columns right-aligned"""
    cells = [[format_rational(v) for v in row] for row in rows]
    if not cells:
        return []
    width = max((len(c) for row in cells for c in row), default=1)
    return [" ".join(c.rjust(width) for c in row) for row in cells]


def safe_print(text: str) -> None:
    """
    Print that survives consoles without Unicode support

    Args:
        text: text to print
    """
    try:
        print(text)
    except UnicodeEncodeError:
        replacements = {
            '✅': '[ok]',
            '❌': '[fail]',
            '⚠️': '[warn]',
            '💡': '[hint]',
            '🔧': '[config]',
            '📄': '[file]',
            '∘': 'o',
            '•': '.',
            '≠': '!=',
            'Σ': 'S',
            'λ': 'lambda',
            'ρ': 'rho',
            'α': 'alpha',
            'β': 'beta',
        }

        safe_text = text
        for symbol, replacement in replacements.items():
            safe_text = safe_text.replace(symbol, replacement)

        print(safe_text.encode("ascii", "replace").decode("ascii"))
