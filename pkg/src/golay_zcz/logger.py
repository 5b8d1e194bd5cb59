"""
Logging configuration for golay-zcz
Provides consistent logging across all modules
"""
import logging
import sys
from pathlib import Path
from typing import Optional

from pythonjsonlogger import jsonlogger

from .config import get_settings

TEXT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


def _build_formatter(log_format: str) -> logging.Formatter:
    if log_format == "json":
        return jsonlogger.JsonFormatter(
            '%(asctime)s %(name)s %(levelname)s %(message)s',
            datefmt=DATE_FORMAT
        )
    return logging.Formatter(TEXT_FORMAT, datefmt=DATE_FORMAT)


def setup_logger(name: str, level: Optional[int] = None) -> logging.Logger:
    """
    Create and configure a logger

    Args:
        name: Logger name (usually __name__)
        level: Logging level (default: GZCZ_LOG_LEVEL, else INFO)

    Returns:
        Configured logger instance
    """
    settings = get_settings()
    if level is None:
        level = logging.getLevelName(settings.log_level)
        if not isinstance(level, int):
            level = logging.INFO

    logger = logging.getLogger(name)

    # Only add handlers if logger doesn't have any
    if not logger.handlers:
        logger.setLevel(level)

        # Prevent propagation to avoid duplicate logs
        logger.propagate = False

        # stdout is reserved for reports and CSV output
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(_build_formatter(settings.log_format))

        logger.addHandler(console_handler)

    return logger


def setup_file_logger(name: str, log_file: Path, level: int = logging.DEBUG) -> logging.Logger:
    """
    Create a logger that writes to both console and file

    Args:
        name: Logger name
        log_file: Path to log file
        level: Logging level

    Returns:
        Configured logger instance
    """
    logger = setup_logger(name, level)

    file_handler = logging.FileHandler(log_file, encoding='utf-8')
    file_handler.setLevel(level)
    file_handler.setFormatter(_build_formatter(get_settings().log_format))

    logger.addHandler(file_handler)

    return logger


def set_level(level: int) -> None:
    """Change the level of every golay_zcz logger and its handlers."""
    for name, logger in logging.Logger.manager.loggerDict.items():
        if not name.startswith("golay_zcz") or not isinstance(logger, logging.Logger):
            continue
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)
