"""
Unified exception module for the toolkit

Defines the custom exception hierarchy and the shared error handling helpers.
Mathematical outcomes such as NoSolution or a failing identity check are
result values, not exceptions; everything here signals bad input or an
internal fault.
"""

from typing import Optional, Dict, Any, Callable
from functools import wraps
from ..utils.logger import get_logger

logger = get_logger(__name__)


class ToolkitError(Exception):
    """Base exception of the toolkit"""

    def __init__(self, message: str, error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.error_code = error_code or "UNKNOWN_ERROR"
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the exception to a dict for logging and JSON reports"""
        return {
            "error": True,
            "error_code": self.error_code,
            "message": self.message,
            "details": self.details
        }


class ConfigurationError(ToolkitError):
    """Configuration problems"""

    def __init__(self, message: str, config_item: Optional[str] = None):
        super().__init__(message, "CONFIG_ERROR", {"config_item": config_item})


class ValidationError(ToolkitError):
    """Invalid argument values"""

    def __init__(self, message: str, field_name: Optional[str] = None, field_value: Optional[Any] = None):
        super().__init__(message, "VALIDATION_ERROR", {"field_name": field_name, "field_value": field_value})


class DimensionError(ToolkitError):
    """Shape mismatch between matrices, vectors or algebras"""

    def __init__(self, message: str, expected: Optional[Any] = None, actual: Optional[Any] = None):
        super().__init__(message, "DIMENSION_ERROR", {"expected": expected, "actual": actual})


class ParseError(ToolkitError):
    """Malformed input file, located by 1-based line and column"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None, column: Optional[int] = None):
        self.path = path
        self.line = line
        self.column = column
        location = ":".join(str(part) for part in (path, line, column) if part is not None)
        full_message = f"{location}: {message}" if location else message
        super().__init__(full_message, "PARSE_ERROR", {"path": path, "line": line, "column": column})


class PreconditionError(ToolkitError):
    """An operation was called on input outside its contract"""

    def __init__(self, message: str, operation: Optional[str] = None):
        super().__init__(message, "PRECONDITION_ERROR", {"operation": operation})


class InconsistentSystemError(ToolkitError):
    """A pipeline that must be solvable produced an inconsistent system"""

    def __init__(self, message: str, system: Optional[Any] = None):
        super().__init__(message, "INCONSISTENT_SYSTEM", {"system": system})


# Errors caused by what the user supplied; the CLI maps them to exit code 2
INPUT_ERROR_CODES = frozenset({
    "CONFIG_ERROR",
    "VALIDATION_ERROR",
    "DIMENSION_ERROR",
    "PARSE_ERROR",
    "PRECONDITION_ERROR",
})


def handle_exception(func: Callable) -> Callable:
    """
    Exception handling decorator

    Known toolkit errors pass through, anything else is wrapped into a
    ToolkitError that keeps the original as its cause.
    """
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ToolkitError:
            raise
        except Exception as e:
            logger.error(f"Unhandled exception in {func.__name__}: {str(e)}")
            raise ToolkitError(f"Unexpected error while running {func.__name__}: {str(e)}") from e

    return wrapper


def format_error_message(error: ToolkitError) -> str:
    """
    Format an error for display with a hint for the user

    Args:
        error: toolkit exception instance

    Returns:
        formatted message
    """
    base_message = error.message

    suggestions = {
        "CONFIG_ERROR": "check the environment variables or the .env file",
        "VALIDATION_ERROR": "check the argument values",
        "DIMENSION_ERROR": "check that vectors have 6 entries and algebras share a dimension",
        "PARSE_ERROR": "rationals are written p or p/q; see the file format in the docs",
        "PRECONDITION_ERROR": "the input does not satisfy the operation's requirements",
        "INCONSISTENT_SYSTEM": "this indicates an internal fault, please report it"
    }

    suggestion = suggestions.get(error.error_code, "see the detailed error output")

    return f"{base_message}\n💡 Hint: {suggestion}"


class ErrorHandler:
    """Logs errors raised while running a command and maps them to exit codes"""

    def handle_error(self, error: Exception) -> int:
        """
        Log an error and return the matching exit code

        Args:
            error: the exception instance

        Returns:
            2 for input errors, 1 for anything else
        """
        if isinstance(error, ToolkitError):
            logger.error(f"❌ {error.error_code}: {error.message}")
            if error.details:
                logger.debug(f"Error details: {error.details}")
            return 2 if error.error_code in INPUT_ERROR_CODES else 1
        if isinstance(error, (FileNotFoundError, IsADirectoryError, PermissionError)):
            logger.error(f"❌ Cannot read input: {error}")
            return 2
        logger.error(f"❌ Unknown error: {str(error)}")
        return 1
