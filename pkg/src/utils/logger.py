"""
Unified logging configuration for the toolkit

Wraps loguru: one stderr sink and an optional rotating file sink.
"""

import os
import sys
from typing import Optional, Any
from loguru import logger


class LoggerConfig:
    """Logging configuration manager"""

    def __init__(self, log_level: str = "WARNING", log_file: str = ""):
        """
        Initialize the logging configuration

        Args:
            log_level: log level name
            log_file: log file path, empty for no file sink
        """
        self.log_level = log_level.upper()
        self.log_file = log_file
        self._setup_loguru()

    def _setup_loguru(self) -> None:
        """Configure the loguru sinks"""
        logger.remove()

        logger.add(
            sys.stderr,
            level=self.log_level,
            format="<green>{time:HH:mm:ss}</green> | <level>{level:<8}</level> | <level>{message}</level>",
            colorize=True
        )

        if self.log_file:
            logger.add(
                self.log_file,
                rotation="10 MB",
                retention="7 days",
                level=self.log_level,
                format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level:<8} | {name}:{function}:{line} - {message}",
                encoding="utf-8"
            )

        if self.log_level == "DEBUG":
            logger.debug("🔧 DEBUG mode enabled")
            logger.debug(f"🔧 Log file: {self.log_file or '(none)'}")
            logger.debug(f"🔧 Working directory: {os.getcwd()}")
            logger.debug(f"🔧 Python version: {sys.version}")

    def get_logger(self, name: str) -> Any:
        """
        Logger bound to a module name

        Args:
            name: module name

        Returns:
            bound loguru logger
        """
        return logger.bind(name=name)


_logger_config: Optional[LoggerConfig] = None


def setup_logger(log_level: str = None, log_file: str = None) -> None:
    """
    Set up the global logging configuration

    Args:
        log_level: log level, defaults to the LOG_LEVEL environment variable
        log_file: log file, defaults to the LOG_FILE environment variable
    """
    global _logger_config

    if log_level is None:
        log_level = os.getenv("LOG_LEVEL", "WARNING")

    if log_file is None:
        log_file = os.getenv("LOG_FILE", "")

    _logger_config = LoggerConfig(log_level, log_file)


def get_logger(name: Optional[str] = None) -> Any:
    """
    Get a logger instance

    Args:
        name: module name

    Returns:
        bound loguru logger
    """
    if name is None:
        name = __name__

    if _logger_config is None:
        setup_logger()

    return _logger_config.get_logger(name)


setup_logger()
