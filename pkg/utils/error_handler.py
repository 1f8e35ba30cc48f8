import functools
import sys


class RibbonDataError(Exception):
    """Custom exception for invalid or unsupported ribbon data"""
    pass


class WordError(Exception):
    """Custom exception for curve word errors"""
    pass


class CoverError(Exception):
    """Custom exception for cover construction errors"""
    pass


class SelfIntersectionError(Exception):
    """Custom exception for inputs the intersection engine rejects"""
    pass


class OracleError(Exception):
    """Custom exception for numerical oracle failures"""
    pass


class VerificationError(Exception):
    """Custom exception for failed certificate checks"""
    pass


class InvalidInputError(Exception):
    """Custom exception for invalid command-line input"""
    pass


LIFTLAB_ERRORS = (
    RibbonDataError,
    WordError,
    CoverError,
    SelfIntersectionError,
    OracleError,
    VerificationError,
    InvalidInputError
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2


def exit_code_for(error):
    """Exit code for a raised liftlab error"""
    if isinstance(error, VerificationError):
        return EXIT_VERIFICATION_FAILED
    return EXIT_INVALID_INPUT


def exit_code_on_error(func):
    """Decorator turning liftlab errors into CLI exit codes

    Args:
        func: Command handler returning an exit code

    Returns:
        Decorated handler that reports errors on stderr instead of raising
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LIFTLAB_ERRORS as e:
            # deferred: utils.logger creates log files on import
            try:
                from utils.logger import main_logger
                main_logger.error(f"{func.__name__} failed: {str(e)}")
            except Exception:
                pass
            print(f"error: {str(e)}", file=sys.stderr)
            return exit_code_for(e)
    return wrapper
