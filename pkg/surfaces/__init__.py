from . import fatgraph
from . import words
from . import serialization

__all__ = ['fatgraph', 'words', 'serialization']
