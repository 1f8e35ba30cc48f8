from . import selfint
from . import oracle

__all__ = ['selfint', 'oracle']
