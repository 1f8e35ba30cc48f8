import logging
import os
from logging.handlers import RotatingFileHandler

from config.runtime import LOG_DIR, LOG_LEVEL_NAME, LOG_LEVELS


def resolve_level(name=None):
    """Map a LIFTLAB_LOG value to a logging level (unknown -> ERROR)"""
    if name is None:
        name = LOG_LEVEL_NAME
    return LOG_LEVELS.get(str(name).strip().lower(), logging.ERROR)


def setup_logger(name, log_file, level=None):
    """Setup logger with file and console handlers

    Args:
        name: Logger name
        log_file: Log file name (created in the log directory)
        level: Logging level (default: from LIFTLAB_LOG)

    Returns:
        Configured logger instance
    """

    # Create logs directory if needed
    os.makedirs(LOG_DIR, exist_ok=True)

    if level is None:
        level = resolve_level()

    formatter = logging.Formatter(
        '%(asctime)s %(levelname)s %(name)s: %(message)s'
    )

    logger = logging.getLogger(name)

    # Clear any existing handlers to avoid duplicates
    if logger.handlers:
        logger.handlers.clear()

    logger.setLevel(level)

    # File handler with rotation
    file_handler = RotatingFileHandler(
        os.path.join(LOG_DIR, log_file),
        maxBytes=10*1024*1024,  # 10MB
        backupCount=5,
        encoding='utf-8'
    )
    file_handler.setFormatter(formatter)

    # Console handler (stderr, stdout is reserved for payloads)
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    logger.propagate = False

    return logger


# Create main application loggers
surface_logger = setup_logger('liftlab.surface', 'surface.log')
cover_logger = setup_logger('liftlab.cover', 'cover.log')
engine_logger = setup_logger('liftlab.engine', 'engine.log')
harness_logger = setup_logger('liftlab.harness', 'harness.log')
main_logger = setup_logger('liftlab.main', 'main.log')
