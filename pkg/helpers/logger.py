import os
import logging
import logging.handlers

LOGGER_NAME = "spreadpoly"

"""
Setup logger
"""

def setup_logger(level: str = "WARNING", log_file: str = ""):
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(getattr(logging, level.upper(), logging.WARNING))
    # Re-running setup must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    # Define the console_handler (stderr, stdout carries data)
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter("{levelname}: {message}", style="{"))
    logger.addHandler(console_handler)

    # Define the file handler
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_file, when='midnight', backupCount=5
        )
        file_handler_formatter = logging.Formatter(
            "[{asctime}] [{levelname:<8}] {name}: {message}", "%Y-%m-%d %H:%M:%S", style="{")
        file_handler.setFormatter(file_handler_formatter)
        logger.addHandler(file_handler)

    return logger

logger = setup_logger(os.environ.get("SPREADPOLY_LOG_LEVEL", "WARNING"),
                      os.environ.get("SPREADPOLY_LOG_FILE", ""))
