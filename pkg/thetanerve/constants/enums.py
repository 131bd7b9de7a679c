from enum import Enum

class LoggingType(str, Enum):
    FILE='FILE'
    CONSOLE='CONSOLE'
    FILE_AND_CONSOLE='FILE_AND_CONSOLE'
    NOTSET='NOTSET'

class LoggingLevel(str, Enum):
    CRITICAL = "CRITICAL"
    FATAL = "FATAL"
    ERROR = "ERROR"
    WARNING = "WARNING"
    WARN = "WARN"
    INFO = "INFO"
    DEBUG = "DEBUG"
    NOTSET = "NOTSET"

class VerificationSuite(str, Enum):
    SIMPLICIAL_IDENTITIES = "simplicial-identities"
    COSKELETAL = "coskeletal"
    PHI_ORACLE = "phi-oracle"
    FREECELL_RELATIONS = "freecell-relations"
    BIJECTION = "bijection"

class CommandStatus(str, Enum):
    OK = "ok"
    VIOLATION = "violation"
    ERROR = "error"

class Step(str, Enum):
    """A unit step of a monotone path through a matrix."""
    HORIZONTAL = "H"
    VERTICAL = "V"
