# Edge labels of the canonical one-vertex models.
# Pants order: t_a h_a h_b t_b. One-holed torus order: t_a t_b h_a h_b.
PANTS_LABELS = ('a', 'b')
TORUS_LABELS = ('a', 'b')
ANNULUS_LABEL = 'c'

HANDLE_PREFIXES = ('x', 'y')
CLOSED_PREFIXES = ('c', 'd')
PLANAR_PREFIX = 'a'

# Largest 2g + k accepted by build_fatgraph
MAX_MODEL_COMPLEXITY = 40

# Exponent grammar for curve words
WORD_TERM_PATTERN = r'([A-Za-z][0-9]*)(\^([+-]?[0-9]*))?'
