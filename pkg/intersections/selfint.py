"""
Exact self-intersection numbers of closed curves carried by a fat graph.

The curve is pulled taut along the spine: every traversal of an edge is a
strand inside that edge's band, every visit to a vertex is a passage joining
two strand ends. Strands sharing a band are ordered by their head-ward rays;
two passages at a vertex cross iff their ends interleave around the vertex.
"""

from functools import cmp_to_key
from typing import Any, Dict, List, Sequence, Tuple, Union

from config.engine import ENGINE_CONFIG
from covers.cover import LiftedPath
from surfaces.fatgraph import TAIL, DirectedEdge, FatGraph
from surfaces.words import CyclicWord
from utils.error_handler import SelfIntersectionError
from utils.logger import engine_logger as logger


CurveInput = Union[CyclicWord, LiftedPath, Sequence[DirectedEdge]]


class ChordDiagram:
    """Passage endpoints around each vertex for one closed edge-path"""

    def __init__(self, graph: FatGraph, steps: Sequence[DirectedEdge]):
        self.graph = graph
        self.steps = tuple(steps)
        self.length = len(self.steps)
        self.limit = ENGINE_CONFIG['ray_agreement_factor'] * self.length

        self.band_order: Dict[int, List[int]] = {}
        self.endpoints: Dict[int, List[int]] = {}

        self._order_bands()
        self._place_endpoints()

    # ========================================================================
    # PUBLIC METHODS
    # ========================================================================

    def crossings(self) -> int:
        """Number of interleaving passage pairs over all vertices"""
        total = 0
        for labels in self.endpoints.values():
            positions: Dict[int, List[int]] = {}
            for index, label in enumerate(labels):
                positions.setdefault(label, []).append(index)
            spans = list(positions.values())
            for i in range(len(spans)):
                p1, p2 = spans[i]
                for q1, q2 in spans[i + 1:]:
                    if (p1 < q1 < p2) != (p1 < q2 < p2):
                        total += 1
        return total

    def ray(self, strand: int, k: int) -> DirectedEdge:
        """k-th directed edge of the head-ward ray of a strand"""
        _, sign = self.steps[strand]
        if sign > 0:
            return self.steps[(strand + k) % self.length]
        edge_id, back = self.steps[(strand - k) % self.length]
        return (edge_id, -back)

    def compare(self, s: int, t: int) -> int:
        """-1 if strand s runs to the right of strand t in their band, else 1"""
        graph = self.graph
        for k in range(1, self.limit + 1):
            step_s, step_t = self.ray(s, k), self.ray(t, k)
            if step_s == step_t:
                continue
            arrival = graph.in_half(self.ray(s, k - 1))
            base = graph.position(arrival)
            degree = graph.degree(graph.vertex_of(arrival))
            offset_s = (graph.position(graph.out_half(step_s)) - base) % degree
            offset_t = (graph.position(graph.out_half(step_t)) - base) % degree
            return -1 if offset_s < offset_t else 1

        if self.steps[s][1] == self.steps[t][1]:
            raise SelfIntersectionError("proper power unsupported")
        raise SelfIntersectionError("degenerate (reversible) class unsupported")

    # ========================================================================
    # PRIVATE HELPER METHODS
    # ========================================================================

    def _order_bands(self):
        strands: Dict[int, List[int]] = {}
        for t, (edge_id, _) in enumerate(self.steps):
            strands.setdefault(edge_id, []).append(t)
        for edge_id, members in strands.items():
            # right-most strand first
            self.band_order[edge_id] = sorted(members, key=cmp_to_key(self.compare))

    def _place_endpoints(self):
        graph = self.graph
        for vertex, order in enumerate(graph.orders):
            labels: List[int] = []
            for half in order:
                members = self.band_order.get(half.edge_id, [])
                # transverse order reverses between the two ends of a band
                sequence = members if half.end == TAIL else list(reversed(members))
                for t in sequence:
                    if graph.out_half(self.steps[t]) == half:
                        labels.append(t)
                    else:
                        labels.append((t + 1) % self.length)
            if labels:
                self.endpoints[vertex] = labels


# ============================================================================
# PUBLIC API
# ============================================================================

def closed_path(graph: FatGraph, curve: CurveInput) -> Tuple[DirectedEdge, ...]:
    """
    Normalize a curve to a closed, cyclically reduced edge-path

    Args:
        graph: FatGraph carrying the curve
        curve: CyclicWord over graph labels, LiftedPath, or directed edges

    Returns:
        Tuple of (edge_id, sign)
    """
    if isinstance(curve, CyclicWord):
        steps = tuple((graph.edge_id(letter.generator), letter.sign) for letter in curve)
    elif isinstance(curve, LiftedPath):
        steps = curve.path
    else:
        steps = tuple((int(e), int(s)) for e, s in curve)

    if not steps:
        raise SelfIntersectionError("empty path")
    for i, step in enumerate(steps):
        following = steps[(i + 1) % len(steps)]
        if not 0 <= step[0] < graph.edge_count or step[1] not in (1, -1):
            raise SelfIntersectionError(f"invalid directed edge {step}")
        if graph.end_vertex(step) != graph.start_vertex(following):
            raise SelfIntersectionError("path is not closed")
        if following == (step[0], -step[1]):
            raise SelfIntersectionError("path is not cyclically reduced")
    return steps


def is_primitive_path(steps: Sequence[DirectedEdge]) -> bool:
    n = len(steps)
    steps = tuple(steps)
    return not any(n % t == 0 and steps[t:] + steps[:t] == steps for t in range(1, n))


def self_intersection(graph: FatGraph, curve: CurveInput) -> int:
    """
    Minimal self-intersection number of a primitive closed curve

    Args:
        graph: FatGraph (a spine of a surface with boundary)
        curve: CyclicWord, LiftedPath or closed edge-path

    Returns:
        Nonnegative crossing count
    """
    steps = closed_path(graph, curve)
    if not is_primitive_path(steps):
        raise SelfIntersectionError("proper power unsupported")

    count = ChordDiagram(graph, steps).crossings()
    logger.debug(f"self-intersection of {len(steps)}-step path: {count}")
    return count


def is_simple(graph: FatGraph, curve: CurveInput) -> bool:
    return self_intersection(graph, curve) == 0


def vertex_simple_certificate(graph: FatGraph, curve: CurveInput) -> bool:
    """True iff the path visits each vertex at most once (then it is embedded)"""
    steps = closed_path(graph, curve)
    visited = [graph.start_vertex(step) for step in steps]
    return len(set(visited)) == len(visited)


def analyze(graph: FatGraph, curve: CurveInput) -> Dict[str, Any]:
    """Intersection summary as reported by the selfint command"""
    steps = closed_path(graph, curve)
    if vertex_simple_certificate(graph, steps):
        count, used = 0, 'vertex-simple'
    else:
        count, used = self_intersection(graph, steps), 'chord-diagram'
    return {
        'word': str(curve) if isinstance(curve, CyclicWord) else None,
        'length': len(steps),
        'i': count,
        'simple': count == 0,
        'certificate_used': used
    }
