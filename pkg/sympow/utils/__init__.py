from .guards import Deadline, Guards, check_degree, current_guards, guarded
from .logger import configure_logging, logger
from .parser import split_top_level

__all__ = [
    'Guards',
    'Deadline',
    'guarded',
    'current_guards',
    'check_degree',
    'split_top_level',
    'configure_logging',
    'logger',
]
