"""
Independent cross-check of self-intersection numbers.

A one-vertex fat graph of rank r is realized by a Schottky group: 2r
disjoint intervals on the real line in the vertex's cyclic order, each
generator mapping the exterior of its tail interval onto the interior of its
head interval. A translate g(A) of the axis A of w crosses A exactly when the
fixed points of g w g^-1 separate those of w; crossing translates are
collected up to the double coset <w> g <w>, and each self-crossing of the
curve is seen twice. Generator entries are exact, so the separation test is
a sign and never a tolerance.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from config.engine import ORACLE_CONFIG
from surfaces.fatgraph import HEAD, TAIL, FatGraph, HalfEdge
from surfaces.words import CyclicWord, is_primitive
from utils.error_handler import OracleError
from utils.logger import engine_logger as logger

Number = Union[int, Fraction]


@dataclass(frozen=True)
class MobiusGen:
    label: str
    matrix: np.ndarray
    tail_interval: Tuple[float, float]
    head_interval: Tuple[float, float]


class OracleResult(NamedTuple):
    count: int
    stable: bool
    depth: int


def make_sl2(m) -> np.ndarray:
    m = np.array(m, dtype=float)
    return m / np.sqrt(np.linalg.det(m))


def transform_point(m: np.ndarray, z: float) -> float:
    return (m[0, 0] * z + m[0, 1]) / (m[1, 0] * z + m[1, 1])


def schottky_rep(graph: FatGraph) -> List[MobiusGen]:
    """
    Schottky generators realizing a one-vertex fat graph

    Args:
        graph: FatGraph with a single vertex

    Returns:
        One MobiusGen per edge; interval i sits at i * spacing
    """
    if graph.vertex_count != 1:
        raise OracleError("the oracle needs a one-vertex fat graph")

    spacing = ORACLE_CONFIG['interval_spacing']
    s = ORACLE_CONFIG['interval_radius']
    tolerance = ORACLE_CONFIG['pairing_tolerance']

    generators = []
    for edge in graph.edges:
        p = graph.position(HalfEdge(edge.edge_id, TAIL)) * spacing
        q = graph.position(HalfEdge(edge.edge_id, HEAD)) * spacing

        # z -> q - s^2 / (z - p)
        matrix = make_sl2([[q, -q * p - s * s], [1.0, -p]])

        for z, expected in ((p + s, q - s), (p - s, q + s)):
            if abs(transform_point(matrix, z) - expected) > tolerance:
                raise OracleError(f"pairing check failed for {edge.label!r}")

        generators.append(MobiusGen(edge.label, matrix, (p - s, p + s), (q - s, q + s)))

    return generators


def default_depth(word: CyclicWord) -> int:
    depth = ORACLE_CONFIG['depth_per_letter'] * len(word) + ORACLE_CONFIG['depth_padding']
    return max(len(word) + 1, min(depth, ORACLE_CONFIG['max_default_depth']))


def oracle_self_intersection(graph: FatGraph, word: CyclicWord,
                             depth: Optional[int] = None) -> OracleResult:
    """
    Count crossing axis translates up to a word-length bound

    Every crossing double coset has a representative of length at most
    len(word), so counts are final from depth len(word) on.

    Args:
        graph: One-vertex FatGraph
        word: Primitive cyclically reduced word
        depth: Bound B on the length of translating elements (>= len(word))

    Returns:
        OracleResult(count, stable, depth); stable means depths B-1 and B agree
    """
    if depth is None:
        depth = default_depth(word)
    if depth < len(word):
        raise OracleError(f"depth {depth} is shorter than the word")

    index = {gen.label: k + 1 for k, gen in enumerate(schottky_rep(graph))}
    for letter in word:
        if letter.generator not in index:
            raise OracleError(f"unknown generator {letter.generator!r}")
    if not is_primitive(word):
        raise OracleError(f"{word} is a proper power")

    matrices = _letter_matrices(graph)
    w = tuple(index[letter.generator] * letter.sign for letter in word)
    w_matrix = _product(matrices, w)
    a, b, c, d = w_matrix
    if (a + d) ** 2 <= 4 * (a * d - b * c):
        raise OracleError("word is not hyperbolic")

    counts = _count_by_depth(matrices, w, w_matrix, depth)

    count = counts[depth] // 2
    stable = counts[depth] % 2 == 0 and counts[depth] == counts[depth - 1]

    logger.debug(f"oracle {word}: depth {depth} count {count} stable {stable}")
    return OracleResult(count, stable, depth)


# ============================================================================
# PRIVATE HELPERS
# ============================================================================

# Matrices are 2x2 tuples (a, b, c, d) with exact entries. Scalar multiples
# act identically, so inverses are taken as adjugates.
_Matrix = Tuple[Number, Number, Number, Number]
_IDENTITY: _Matrix = (1, 0, 0, 1)
_OFFSETS = tuple((i, j) for i in range(-2, 3) for j in range(-2, 3) if (i, j) != (0, 0))


def _exact(value: float) -> Number:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def _mul(m: _Matrix, n: _Matrix) -> _Matrix:
    return (m[0] * n[0] + m[1] * n[2], m[0] * n[1] + m[1] * n[3],
            m[2] * n[0] + m[3] * n[2], m[2] * n[1] + m[3] * n[3])


def _adjugate(m: _Matrix) -> _Matrix:
    return (m[3], -m[1], -m[2], m[0])


def _letter_matrices(graph: FatGraph) -> Dict[int, _Matrix]:
    """
    Exact letter matrices keyed by +-(generator index + 1)

    A letter acts by the inverse of its generator, which makes the map from
    words to matrices a homomorphism; the axis of a word is unchanged.
    """
    spacing = _exact(ORACLE_CONFIG['interval_spacing'])
    s = _exact(ORACLE_CONFIG['interval_radius'])

    matrices = {}
    for k, edge in enumerate(graph.edges, start=1):
        p = graph.position(HalfEdge(edge.edge_id, TAIL)) * spacing
        q = graph.position(HalfEdge(edge.edge_id, HEAD)) * spacing
        generator = (q, -q * p - s * s, 1, -p)
        matrices[k] = _adjugate(generator)
        matrices[-k] = generator
    return matrices


def _product(matrices: Dict[int, _Matrix], letters: Sequence[int]) -> _Matrix:
    result = _IDENTITY
    for x in letters:
        result = _mul(result, matrices[x])
    return result


def _fixed_form(m: _Matrix) -> Tuple[Number, Number, Number]:
    # fixed points of z -> (az + b) / (cz + d) are the roots of c z^2 + (d - a) z - b
    return m[2], m[3] - m[0], -m[1]


def _linked(f: Tuple[Number, Number, Number], g: Tuple[Number, Number, Number]) -> bool:
    """Root pairs of two binary quadratics interleave iff their resultant is negative"""
    a1, b1, c1 = f
    a2, b2, c2 = g
    resultant = (a1 * c2 - a2 * c1) ** 2 - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1)
    return resultant < 0


def _count_by_depth(matrices: Dict[int, _Matrix], w: Tuple[int, ...],
                    w_matrix: _Matrix, depth: int) -> Dict[int, int]:
    """Number of crossing double cosets <w> g <w> met with |g| <= length, per length"""
    axis = _fixed_form(w_matrix)
    w_inv = tuple(-x for x in reversed(w))

    keys = set()
    counts = {0: 0}
    level: List[Tuple[Tuple[int, ...], _Matrix]] = [((), _IDENTITY)]
    for length in range(1, depth + 1):
        next_level = []
        for g, m in level:
            for x, mx in matrices.items():
                if g and g[-1] == -x:
                    continue
                h, mh = g + (x,), _mul(m, mx)
                next_level.append((h, mh))

                conjugate = _mul(_mul(mh, w_matrix), _adjugate(mh))
                if _linked(axis, _fixed_form(conjugate)):
                    key = _double_coset_key(h, w, w_inv)
                    if key is not None:
                        keys.add(key)
        level = next_level
        counts[length] = len(keys)

    return counts


def _reduce(letters: Sequence[int]) -> Tuple[int, ...]:
    stack: List[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def _neighbours(h: Tuple[int, ...], w: Tuple[int, ...], w_inv: Tuple[int, ...]):
    for i, j in _OFFSETS:
        left = w * i if i > 0 else w_inv * -i
        right = w * j if j > 0 else w_inv * -j
        yield _reduce(left + h + right)


def _double_coset_key(g: Tuple[int, ...], w: Tuple[int, ...],
                      w_inv: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Shortest, then least, element of <w> g <w>; None when g lies in <w>"""
    limit = ORACLE_CONFIG['plateau_limit']
    best = g
    while True:
        improved = True
        while improved and best:
            improved = False
            for h in _neighbours(best, w, w_inv):
                if len(h) < len(best):
                    best, improved = h, True
                    break
        if not best:
            return None

        # shortest elements form a band along the shared segment of the axes
        plateau = {best}
        frontier = [best]
        shorter = None
        while frontier and shorter is None:
            for h in _neighbours(frontier.pop(), w, w_inv):
                if len(h) < len(best):
                    shorter = h
                    break
                if len(h) == len(best) and h not in plateau:
                    plateau.add(h)
                    frontier.append(h)
            if len(plateau) > limit:
                raise OracleError("double coset search did not close")

        if shorter is None:
            return min(plateau)
        best = shorter
