from .logger import Logger
from .validation import ValidationReport
