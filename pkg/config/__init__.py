from . import runtime
from . import surfaces
from . import engine
from . import harness

__all__ = ['runtime', 'surfaces', 'engine', 'harness']
