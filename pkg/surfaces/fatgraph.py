"""
Ribbon-graph models of compact oriented surfaces with boundary.

A fat graph is stored as vertices 0..V-1, edges 0..E-1 (each with a label,
a tail vertex and a head vertex) and, per vertex, the counterclockwise
cyclic order of the half-edges incident to it.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from config.surfaces import (
    ANNULUS_LABEL,
    CLOSED_PREFIXES,
    HANDLE_PREFIXES,
    MAX_MODEL_COMPLEXITY,
    PANTS_LABELS,
    PLANAR_PREFIX,
    TORUS_LABELS
)
from utils.error_handler import RibbonDataError
from utils.logger import surface_logger as logger


TAIL = 'tail'
HEAD = 'head'

# A directed edge: (edge_id, +1) runs tail -> head, (edge_id, -1) head -> tail
DirectedEdge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class HalfEdge:
    """One end of an edge"""
    edge_id: int
    end: str

    def opposite(self) -> 'HalfEdge':
        return HalfEdge(self.edge_id, HEAD if self.end == TAIL else TAIL)

    @property
    def token(self) -> str:
        return f"e{self.edge_id}{'+' if self.end == TAIL else '-'}"


@dataclass(frozen=True)
class Edge:
    edge_id: int
    label: str
    tail: int
    head: int


@dataclass(frozen=True)
class SurfaceSpec:
    """Genus and boundary count of a compact oriented surface"""
    genus: int
    boundary_count: int

    @property
    def closed(self) -> bool:
        return self.boundary_count == 0

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    def validate(self):
        """Reject negative data and surfaces with non-negative Euler characteristic"""
        if self.genus < 0 or self.boundary_count < 0:
            raise RibbonDataError(
                f"invalid surface S_{{{self.genus},{self.boundary_count}}}"
            )
        if self.euler >= 0:
            raise RibbonDataError(
                f"unsupported surface S_{{{self.genus},{self.boundary_count}}} "
                f"(euler characteristic {self.euler} >= 0)"
            )

    @classmethod
    def parse(cls, text: str) -> 'SurfaceSpec':
        """Parse 'g,k'"""
        try:
            genus, boundaries = (int(part) for part in text.split(','))
        except ValueError:
            raise RibbonDataError(f"surface must be given as 'g,k', got {text!r}")
        spec = cls(genus, boundaries)
        spec.validate()
        return spec

    def __str__(self) -> str:
        return f"S_{{{self.genus},{self.boundary_count}}}"


class SurfaceInvariants(NamedTuple):
    euler: int
    genus: int
    boundaries: int


class FatGraph:
    """Immutable ribbon graph"""

    def __init__(self, vertex_count: int, edges: Sequence[Edge],
                 orders: Sequence[Sequence[HalfEdge]]):
        self._vertex_count = int(vertex_count)
        self._edges = tuple(edges)
        self._orders = tuple(tuple(order) for order in orders)

        self._position: Dict[HalfEdge, Tuple[int, int]] = {}
        self._by_label: Dict[str, int] = {}

        self._validate()

    # ========================================================================
    # PUBLIC METHODS
    # ========================================================================

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def orders(self) -> Tuple[Tuple[HalfEdge, ...], ...]:
        return self._orders

    @property
    def labels(self) -> List[str]:
        return [edge.label for edge in self._edges]

    def edge(self, edge_id: int) -> Edge:
        return self._edges[edge_id]

    def edge_id(self, label: str) -> int:
        """Edge id carrying a label"""
        if label not in self._by_label:
            raise RibbonDataError(f"no edge labelled {label!r}")
        return self._by_label[label]

    def has_label(self, label: str) -> bool:
        return label in self._by_label

    def vertex_of(self, half: HalfEdge) -> int:
        return self._position[half][0]

    def position(self, half: HalfEdge) -> int:
        """Index of a half-edge in its vertex's cyclic order"""
        return self._position[half][1]

    def degree(self, vertex: int) -> int:
        return len(self._orders[vertex])

    def successor(self, half: HalfEdge) -> HalfEdge:
        vertex, index = self._position[half]
        order = self._orders[vertex]
        return order[(index + 1) % len(order)]

    def out_half(self, step: DirectedEdge) -> HalfEdge:
        """Half-edge through which a directed edge leaves its start vertex"""
        edge_id, sign = step
        return HalfEdge(edge_id, TAIL if sign > 0 else HEAD)

    def in_half(self, step: DirectedEdge) -> HalfEdge:
        """Half-edge through which a directed edge enters its end vertex"""
        edge_id, sign = step
        return HalfEdge(edge_id, HEAD if sign > 0 else TAIL)

    def start_vertex(self, step: DirectedEdge) -> int:
        edge = self._edges[step[0]]
        return edge.tail if step[1] > 0 else edge.head

    def end_vertex(self, step: DirectedEdge) -> int:
        edge = self._edges[step[0]]
        return edge.head if step[1] > 0 else edge.tail

    def relabeled(self, mapping: Dict[str, str]) -> 'FatGraph':
        """Copy with edge labels renamed (unmapped labels kept)"""
        edges = [
            Edge(edge.edge_id, mapping.get(edge.label, edge.label), edge.tail, edge.head)
            for edge in self._edges
        ]
        return FatGraph(self._vertex_count, edges, self._orders)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FatGraph):
            return NotImplemented
        return (self._vertex_count, self._edges, self._orders) == \
            (other._vertex_count, other._edges, other._orders)

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._edges, self._orders))

    def __repr__(self) -> str:
        return f"FatGraph(V={self._vertex_count}, E={len(self._edges)})"

    # ========================================================================
    # PRIVATE HELPER METHODS
    # ========================================================================

    def _validate(self):
        if self._vertex_count < 1:
            raise RibbonDataError("fat graph needs at least one vertex")
        if len(self._orders) != self._vertex_count:
            raise RibbonDataError(
                f"expected {self._vertex_count} cyclic orders, got {len(self._orders)}"
            )

        for index, edge in enumerate(self._edges):
            if edge.edge_id != index:
                raise RibbonDataError(f"edge ids must be 0..E-1 in order, got {edge.edge_id} at {index}")
            if edge.label in self._by_label:
                raise RibbonDataError(f"duplicate edge label {edge.label!r}")
            for vertex in (edge.tail, edge.head):
                if not 0 <= vertex < self._vertex_count:
                    raise RibbonDataError(f"edge {edge.label!r} has unknown vertex {vertex}")
            self._by_label[edge.label] = index

        for vertex, order in enumerate(self._orders):
            for index, half in enumerate(order):
                if half in self._position:
                    raise RibbonDataError(f"half-edge {half.token} listed twice")
                if not 0 <= half.edge_id < len(self._edges) or half.end not in (TAIL, HEAD):
                    raise RibbonDataError(f"unknown half-edge {half!r}")
                edge = self._edges[half.edge_id]
                expected = edge.tail if half.end == TAIL else edge.head
                if expected != vertex:
                    raise RibbonDataError(
                        f"half-edge {half.token} listed at vertex {vertex}, belongs to {expected}"
                    )
                self._position[half] = (vertex, index)

        if len(self._position) != 2 * len(self._edges):
            raise RibbonDataError("every half-edge must occur in exactly one cyclic order")

        if not self._is_connected():
            raise RibbonDataError("not connected")

    def _is_connected(self) -> bool:
        parent = list(range(self._vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge in self._edges:
            parent[find(edge.tail)] = find(edge.head)

        roots = {find(v) for v in range(self._vertex_count)}
        return len(roots) == 1


# ============================================================================
# BOUNDARY TRACING AND INVARIANTS
# ============================================================================

def trace_boundaries(graph: FatGraph) -> List[Tuple[DirectedEdge, ...]]:
    """
    Trace the boundary cycles of a fat graph

    The walk leaves through half-edge h, arrives at its opposite and continues
    with the successor of the opposite in that vertex's cyclic order.

    Args:
        graph: FatGraph

    Returns:
        List of boundary cycles, each a tuple of directed edges
    """
    visited = set()
    cycles = []

    for order in graph.orders:
        for start in order:
            if start in visited:
                continue
            cycle = []
            half = start
            while half not in visited:
                visited.add(half)
                cycle.append((half.edge_id, 1 if half.end == TAIL else -1))
                half = graph.successor(half.opposite())
            cycles.append(tuple(cycle))

    return cycles


def invariants(graph: FatGraph) -> SurfaceInvariants:
    """Euler characteristic, genus and boundary count of the thickened graph"""
    euler = graph.vertex_count - graph.edge_count
    boundaries = len(trace_boundaries(graph))
    twice_genus = 2 - euler - boundaries

    if twice_genus < 0 or twice_genus % 2:
        raise RibbonDataError("non-orientable or corrupt ribbon data")

    return SurfaceInvariants(euler, twice_genus // 2, boundaries)


def boundary_words(graph: FatGraph):
    """Boundary cycles as cyclic words over the edge labels"""
    from surfaces.words import CyclicWord, Letter

    return [
        CyclicWord(tuple(Letter(graph.edge(edge_id).label, sign) for edge_id, sign in cycle))
        for cycle in trace_boundaries(graph)
    ]


# ============================================================================
# CANONICAL MODELS
# ============================================================================

def one_vertex_graph(tokens: Iterable[Tuple[str, str]]) -> FatGraph:
    """
    Build a one-vertex fat graph from its cyclic order

    Args:
        tokens: (label, end) pairs in counterclockwise order; edge ids follow
            the order in which labels first appear

    Returns:
        FatGraph with every edge a loop at vertex 0
    """
    tokens = list(tokens)
    labels: List[str] = []
    for label, _ in tokens:
        if label not in labels:
            labels.append(label)

    index = {label: i for i, label in enumerate(labels)}
    edges = [Edge(i, label, 0, 0) for i, label in enumerate(labels)]
    order = [HalfEdge(index[label], end) for label, end in tokens]
    return FatGraph(1, edges, [order])


def planar_block(labels: Sequence[str]) -> List[Tuple[str, str]]:
    """(t_first, h_first, h_2, t_2, ..., h_last, t_last)"""
    first, rest = labels[0], labels[1:]
    tokens = [(first, TAIL), (first, HEAD)]
    for label in rest:
        tokens.extend([(label, HEAD), (label, TAIL)])
    return tokens


def handle_block(x: str, y: str) -> List[Tuple[str, str]]:
    """(t_x, t_y, h_x, h_y)"""
    return [(x, TAIL), (y, TAIL), (x, HEAD), (y, HEAD)]


def handle_labels(genus: int, prefixes: Tuple[str, str] = HANDLE_PREFIXES) -> List[Tuple[str, str]]:
    return [(f"{prefixes[0]}{i}", f"{prefixes[1]}{i}") for i in range(1, genus + 1)]


def planar_labels(boundary_count: int, genus: int = 0) -> List[str]:
    """Planar generators: a, b for the pants, a2..ak otherwise"""
    if genus == 0 and boundary_count == 3:
        return list(PANTS_LABELS)
    return [f"{PLANAR_PREFIX}{i}" for i in range(2, boundary_count + 1)]


def handle_model(pairs: Sequence[Tuple[str, str]]) -> FatGraph:
    """One-vertex model of S_{g,1} on the given handle generator pairs"""
    tokens: List[Tuple[str, str]] = []
    for x, y in pairs:
        tokens.extend(handle_block(x, y))
    return one_vertex_graph(tokens)


def planar_model(labels: Sequence[str]) -> FatGraph:
    """One-vertex model of S_{0,len(labels)+1}"""
    return one_vertex_graph(planar_block(labels))


def build_fatgraph(spec: SurfaceSpec) -> FatGraph:
    """
    Canonical one-vertex model of S_{g,k}, k >= 1

    Args:
        spec: SurfaceSpec with negative Euler characteristic

    Returns:
        FatGraph with 2g + k - 1 labelled loops
    """
    spec.validate()
    if spec.closed:
        raise RibbonDataError("closed surfaces are modelled by regular_neighborhood")
    if 2 * spec.genus + spec.boundary_count > MAX_MODEL_COMPLEXITY:
        raise RibbonDataError(f"{spec} exceeds the supported model size")

    g, k = spec.genus, spec.boundary_count
    tokens: List[Tuple[str, str]] = []

    if g == 0:
        tokens = planar_block(planar_labels(k))
    else:
        pairs = [TORUS_LABELS] if (g, k) == (1, 1) else handle_labels(g)
        if k == 2:
            tokens.extend([(ANNULUS_LABEL, TAIL), (ANNULUS_LABEL, HEAD)])
        for x, y in pairs:
            tokens.extend(handle_block(x, y))
        if k >= 3:
            tokens.extend(planar_block(planar_labels(k, g)))

    graph = one_vertex_graph(tokens)
    logger.debug(f"Built model of {spec}: {graph.edge_count} loops")
    return graph


def regular_neighborhood(genus: int) -> FatGraph:
    """
    One-vertex S_{g,1} model on c1, d1, ..., cg, dg

    Its boundary word is the surface relator up to rotation and inversion.
    """
    if genus < 1:
        raise RibbonDataError("regular neighbourhood needs genus >= 1")
    return handle_model(handle_labels(genus, CLOSED_PREFIXES))


def model_for(spec: SurfaceSpec) -> FatGraph:
    """Base model: build_fatgraph, or the regular neighbourhood for closed surfaces"""
    if spec.closed:
        spec.validate()
        return regular_neighborhood(spec.genus)
    return build_fatgraph(spec)


def planar_generators(spec: SurfaceSpec) -> List[str]:
    """Labels of the planar block of a model (empty if none)"""
    if spec.genus == 0 or spec.boundary_count >= 3:
        return planar_labels(spec.boundary_count, spec.genus)
    return []


def handle_generators(spec: SurfaceSpec) -> List[Tuple[str, str]]:
    """Handle generator pairs of a model"""
    if spec.closed:
        return handle_labels(spec.genus, CLOSED_PREFIXES)
    if (spec.genus, spec.boundary_count) == (1, 1):
        return [TORUS_LABELS]
    return handle_labels(spec.genus)
