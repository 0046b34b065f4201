# Logger factory shared by the library modules and the CLI
import logging
import sys

PACKAGE_LOGGERS: dict[str, logging.Logger] = {}


def get_logger(name: str, level: int = logging.WARNING) -> logging.Logger:
    """Return a logger writing to stderr, so stdout only carries reports"""
    # Default logger
    #   log.hasHandlers() = False
    #   log.getEffectiveLevel() = 30 = warning
    #   log.propagate = True
    logger = logging.getLogger(f"quantum_concepts_py.{name}")
    logger.setLevel(level)
    if not len(logger.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(CustomFormatter(use_colour=sys.stderr.isatty()))
        logger.addHandler(handler)
    logger.propagate = False  # Do not propagate up to root logger, which may have other handlers
    PACKAGE_LOGGERS[name] = logger
    return logger


def set_log_level(level: str | int) -> None:
    """Apply a level (name or number) to every logger created through get_logger."""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    for logger in PACKAGE_LOGGERS.values():
        logger.setLevel(level)


class CustomFormatter(logging.Formatter):
    grey = "\x1b[38;20m"
    yellow = "\x1b[33;20m"
    green = "\x1b[32;20m"
    red = "\x1b[31;20m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"
    fmt = "%(asctime)s - %(name)s - %(levelname)s - %(message)s (%(filename)s:%(lineno)d)"

    COLOURS = {
        logging.DEBUG: green,
        logging.INFO: grey,
        logging.WARNING: yellow,
        logging.ERROR: red,
        logging.CRITICAL: bold_red,
    }

    def __init__(self, use_colour: bool = True):
        super().__init__(self.fmt)
        self.use_colour = use_colour

    def format(self, record):
        if not self.use_colour:
            return super().format(record)
        log_fmt = self.COLOURS.get(record.levelno, "") + self.fmt + self.reset
        formatter = logging.Formatter(log_fmt)
        return formatter.format(record)
