import logging
from thetanerve.constants.enums import LoggingType, LoggingLevel

PACKAGE_LOGGER = "thetanerve"
# above CRITICAL, so the package loggers emit nothing
SILENT = logging.CRITICAL + 1

class Logger():
    """Mixin that wires the standard library logging for long-lived objects.

    Parameters
    ----------
    log_type : LoggingType
        Where the records go.
    level : LoggingLevel
        The minimum level that is emitted.
    log_filename : str, optional, default="thetanerve.log"
        The file used by the FILE and FILE_AND_CONSOLE types.
    """
    def __init__(self, log_type: LoggingType, level: LoggingLevel, log_filename: str = "thetanerve.log"):

        self.log_filename = log_filename
        self.log_type = log_type
        format = '%(asctime)s.%(msecs)03d %(name)s %(levelname)s %(message)s'
        datetime = '%Y-%m-%d, %H:%M:%S'

        package_logger = logging.getLogger(PACKAGE_LOGGER)
        if log_type == LoggingType.NOTSET:
            package_logger.setLevel(SILENT)
            return
        if package_logger.level == SILENT:
            package_logger.setLevel(logging.NOTSET)

        handlers = []
        if log_type in (LoggingType.FILE, LoggingType.FILE_AND_CONSOLE):
            handlers.append(logging.FileHandler(self.log_filename))
        if log_type in (LoggingType.CONSOLE, LoggingType.FILE_AND_CONSOLE):
            handlers.append(logging.StreamHandler())

        # basicConfig is a no-op once the package root handler exists
        logging.basicConfig(
            format=format,
            datefmt=datetime,
            level=level.value,
            handlers=handlers,
        )
