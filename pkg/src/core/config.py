"""
Configuration management for the toolkit

Loads the .env file and exposes the defaults used by the CLI.
"""

import os
import platform
from typing import Dict, Any, Optional
from dotenv import load_dotenv

from .exceptions import ConfigurationError, handle_exception
from ..utils.logger import get_logger

logger = get_logger(__name__)

VALID_LOG_LEVELS = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]
VALID_OUTPUT_FORMATS = ["text", "json"]
MAX_FREE_DEGREE = 5


class ToolkitConfig:
    """Toolkit configuration"""

    def __init__(self, env_file_path: Optional[str] = None):
        """
        Initialize the configuration

        Args:
            env_file_path: path of the env file, .env in the working directory by default
        """
        self.env_file_path = env_file_path or ".env"
        self._load_environment_variables()
        self._init_config_values()

    def _load_environment_variables(self) -> None:
        """Load the env file when present"""
        try:
            if not os.path.exists(self.env_file_path):
                logger.debug(f"No env file at {self.env_file_path}, using defaults")
                return
            load_dotenv(self.env_file_path)
        except Exception as e:
            raise ConfigurationError(
                f"Failed to load env file: {str(e)}",
                config_item="env_file"
            ) from e

    def _init_config_values(self) -> None:
        """Read configuration values"""
        self.log_level = os.getenv("LOG_LEVEL", "WARNING").upper()
        self.log_file = os.getenv("LOG_FILE", "")

        self.output_format = os.getenv("OUTPUT_FORMAT", "text").lower()

        self.free_dims_max_degree = self._get_int("FREE_DIMS_MAX_DEGREE", 4)
        self.poly_degree = self._get_int("POLY_DEGREE", 8)
        self.poly_trials = self._get_int("POLY_TRIALS", 20)
        self.poly_seed = self._get_int("POLY_SEED", 0)

    @staticmethod
    def _get_int(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return int(raw)
        except ValueError as e:
            raise ConfigurationError(f"{name} must be an integer, got {raw!r}", config_item=name) from e

    @handle_exception
    def validate_config(self) -> Dict[str, Any]:
        """
        Check the configuration values

        Returns:
            dict with "valid" and the list of "issues"
        """
        issues = []

        if self.log_level not in VALID_LOG_LEVELS:
            issues.append(f"Invalid log level: {self.log_level}")

        if self.output_format not in VALID_OUTPUT_FORMATS:
            issues.append(f"Invalid output format: {self.output_format}")

        if not (0 <= self.free_dims_max_degree <= MAX_FREE_DEGREE):
            issues.append(f"FREE_DIMS_MAX_DEGREE must be between 0 and {MAX_FREE_DEGREE}: {self.free_dims_max_degree}")

        if self.poly_degree < 0:
            issues.append(f"POLY_DEGREE must be non-negative: {self.poly_degree}")

        if self.poly_trials < 0:
            issues.append(f"POLY_TRIALS must be non-negative: {self.poly_trials}")

        if self.log_file:
            log_dir = os.path.dirname(os.path.abspath(self.log_file))
            if not os.path.isdir(log_dir):
                issues.append(f"Log directory does not exist: {log_dir}")

        return {
            "valid": len(issues) == 0,
            "issues": issues
        }

    def get_env_example_content(self) -> str:
        """
        Example env file content

        Returns:
            env file text
        """
        content = """# nonassoc-toolkit environment configuration

# Logging (LOG_FILE empty disables the file sink)
LOG_LEVEL=WARNING
LOG_FILE=

# Default report format: text or json
OUTPUT_FORMAT=text

# free-dims default maximal degree (at most 5)
FREE_DIMS_MAX_DEGREE=4

# poly-check defaults
POLY_DEGREE=8
POLY_TRIALS=20
POLY_SEED=0
"""
        return content

    def save_env_example(self, file_path: str = "env_example") -> None:
        """
        Write the example env file

        Args:
            file_path: target path
        """
        try:
            with open(file_path, "w", encoding="utf-8") as f:
                f.write(self.get_env_example_content())
        except Exception as e:
            raise ConfigurationError(f"Failed to write env example: {str(e)}") from e

    def to_dict(self) -> Dict[str, Any]:
        """
        Configuration as a dict

        Returns:
            configuration dict
        """
        return {
            "log_level": self.log_level,
            "log_file": self.log_file,
            "output_format": self.output_format,
            "free_dims_max_degree": self.free_dims_max_degree,
            "poly_degree": self.poly_degree,
            "poly_trials": self.poly_trials,
            "poly_seed": self.poly_seed,
            "platform": platform.system(),
            "python_version": platform.python_version()
        }

    def __str__(self) -> str:
        config_dict = self.to_dict()
        return "\n".join([f"{k}: {v}" for k, v in config_dict.items()])


def create_config(env_file_path: Optional[str] = None) -> ToolkitConfig:
    """
    Convenience constructor

    Args:
        env_file_path: env file path

    Returns:
        configuration instance
    """
    return ToolkitConfig(env_file_path)
