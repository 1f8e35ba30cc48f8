from . import logger
from . import error_handler

__all__ = ['logger', 'error_handler']