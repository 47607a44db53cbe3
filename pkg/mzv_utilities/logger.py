import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .constants import LOG_FILE_NAME

formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")

CONSOLE_LOGGER_LEVEL = "INFO"
FILE_LOGGER_LEVEL = "INFO"

# stdout carries command results (`dual 1,2` prints `3`), so log lines go to stderr
console_logger = logging.StreamHandler(sys.stderr)
console_logger.setLevel(logging.DEBUG)
console_logger.setFormatter(formatter)


logger = logging.getLogger("main")
logger.setLevel(getattr(logging, CONSOLE_LOGGER_LEVEL))
logger.addHandler(console_logger)


def get_full_log_file_path(log_dir=None):
    """If a log directory is configured, generate full path to log file"""
    full_log_file_path = None
    if log_dir:
        log_file_path = Path(log_dir)
        log_file_path.mkdir(parents=True, exist_ok=True)
        full_log_file_path = log_file_path.joinpath(LOG_FILE_NAME)
    return full_log_file_path


def enable_file_logging(log_dir):
    """Attach a rotating file handler writing to `log_dir`, at most once per path.

    Args:
        log_dir (str): Directory for the log file. Created when missing.

    Returns:
        Path: The full path of the log file, or None when `log_dir` is empty.
    """
    full_log_file_path = get_full_log_file_path(log_dir)
    if not full_log_file_path:
        return None
    for handler in logger.handlers:
        if isinstance(handler, RotatingFileHandler) and Path(
            handler.baseFilename
        ) == full_log_file_path.resolve():
            return full_log_file_path
    file_logger = RotatingFileHandler(
        filename=full_log_file_path, mode="a", maxBytes=5 * 1024 * 1024, delay=0
    )
    file_logger.setLevel(getattr(logging, FILE_LOGGER_LEVEL))
    file_logger.setFormatter(formatter)
    logger.addHandler(file_logger)
    return full_log_file_path
