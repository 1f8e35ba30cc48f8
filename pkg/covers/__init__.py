from . import permutations
from . import cover
from . import constructors
from . import curves

__all__ = ['permutations', 'cover', 'constructors', 'curves']
