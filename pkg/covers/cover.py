"""
Finite covers of fat graphs given by permutation monodromy.

Sheet s of base vertex v is total vertex s * V + v; sheet s of base edge e
is total edge e * n + s and runs from (tail(e), s) to (head(e), sigma_e(s)).
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, NamedTuple, Sequence, Tuple

from covers.permutations import (
    Perm,
    compose,
    cycle_count,
    cycles,
    identity,
    inverse,
    is_permutation,
    is_transitive,
    orbits,
    restrict
)
from surfaces.fatgraph import (
    DirectedEdge,
    Edge,
    FatGraph,
    HalfEdge,
    TAIL,
    boundary_words,
    invariants
)
from surfaces.words import CyclicWord, Letter
from utils.error_handler import CoverError, VerificationError, WordError
from utils.logger import cover_logger as logger


@dataclass(frozen=True)
class CoverRep:
    """Permutation representation of the base free group on `degree` sheets"""
    degree: int
    perms: Dict[str, Perm]
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'perms', {label: tuple(p) for label, p in self.perms.items()})

    def perm(self, label: str) -> Perm:
        if label not in self.perms:
            raise CoverError(f"representation has no permutation for {label!r}")
        return self.perms[label]

    def monodromy(self, letters: Iterable[Letter]) -> Perm:
        """Sheet permutation of a word, letters applied left to right"""
        result = identity(self.degree)
        for letter in letters:
            p = self.perm(letter.generator)
            result = compose(result, p if letter.sign > 0 else inverse(p))
        return result

    def with_provenance(self, **provenance) -> 'CoverRep':
        return CoverRep(self.degree, dict(self.perms), dict(provenance))

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            'degree': self.degree,
            'perms': {label: list(p) for label, p in sorted(self.perms.items())}
        }
        if self.provenance:
            payload['provenance'] = self.provenance
        return payload

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CoverRep':
        try:
            degree = int(data['degree'])
            perms = {str(label): tuple(int(i) for i in images)
                     for label, images in data['perms'].items()}
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise CoverError(f"malformed representation JSON: {str(e)}")
        return cls(degree, perms, dict(data.get('provenance', {})))


class CoverInfo(NamedTuple):
    degree: int
    euler: int
    genus: int
    boundaries: int
    transitive: bool


class ComponentInfo(NamedTuple):
    sheets: Tuple[int, ...]
    degree: int
    euler: int
    genus: int
    boundaries: int


@dataclass(frozen=True)
class CoverComplex:
    base: FatGraph
    rep: CoverRep
    total: FatGraph
    projection: Tuple[int, ...]

    def total_edge(self, base_edge: int, sheet: int) -> int:
        return base_edge * self.rep.degree + sheet

    def sheet_of_edge(self, total_edge: int) -> int:
        return total_edge % self.rep.degree


@dataclass(frozen=True)
class LiftedPath:
    """One component of the preimage of a closed curve"""
    start_sheet: int
    degree: int
    path: Tuple[DirectedEdge, ...]
    sheets: Tuple[int, ...]

    def word(self, total: FatGraph) -> CyclicWord:
        """The lift as a cyclic word over the cover's edge labels"""
        return CyclicWord(tuple(Letter(total.edge(e).label, sign) for e, sign in self.path))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'start_sheet': self.start_sheet,
            'degree': self.degree,
            'path': [[edge_id, sign] for edge_id, sign in self.path]
        }


# ============================================================================
# CONSTRUCTION AND VALIDATION
# ============================================================================

def build_cover(base: FatGraph, rep: CoverRep) -> CoverComplex:
    """
    Total fat graph of the cover induced by a transitive representation

    Args:
        base: Base FatGraph
        rep: CoverRep defined on every base label

    Returns:
        CoverComplex whose vertex orders replicate the base orders
    """
    _check_rep(base, rep)

    n = rep.degree
    V = base.vertex_count
    sigma = [rep.perm(edge.label) for edge in base.edges]
    sigma_inv = [inverse(p) for p in sigma]

    edges = []
    for edge in base.edges:
        for s in range(n):
            edges.append(Edge(
                edge.edge_id * n + s,
                f"{edge.label}_{s}",
                s * V + edge.tail,
                sigma[edge.edge_id][s] * V + edge.head
            ))

    orders: List[List[HalfEdge]] = [[] for _ in range(n * V)]
    for s in range(n):
        for v, order in enumerate(base.orders):
            orders[s * V + v] = [
                HalfEdge(half.edge_id * n + s, half.end) if half.end == TAIL
                else HalfEdge(half.edge_id * n + sigma_inv[half.edge_id][s], half.end)
                for half in order
            ]

    projection = tuple(e for e in range(base.edge_count) for _ in range(n))
    total = FatGraph(n * V, edges, orders)
    return CoverComplex(base, rep, total, projection)


def validate_rep(base: FatGraph, rep: CoverRep) -> CoverInfo:
    """
    Invariants of the cover induced by rep, with self-tests

    Raises:
        CoverError: rep malformed or not transitive
        VerificationError: multiplicativity of Euler characteristic or the
            boundary-count bounds fail (internal error)
    """
    complex_ = build_cover(base, rep)
    euler, genus, boundaries = invariants(complex_.total)
    base_euler, _, base_boundaries = invariants(base)
    n = rep.degree

    if euler != n * base_euler:
        raise VerificationError(f"euler characteristic {euler} != {n} * {base_euler}")
    if not base_boundaries <= boundaries <= n * base_boundaries:
        raise VerificationError(
            f"boundary count {boundaries} outside [{base_boundaries}, {n * base_boundaries}]"
        )

    by_monodromy = sum(cycle_count(rep.monodromy(word)) for word in boundary_words(base))
    if by_monodromy != boundaries:
        raise VerificationError(
            f"traced boundary count {boundaries} != monodromy count {by_monodromy}"
        )

    return CoverInfo(n, euler, genus, boundaries, True)


def _check_rep(base: FatGraph, rep: CoverRep):
    if rep.degree < 1:
        raise CoverError("degree must be at least 1")
    if set(rep.perms) != set(base.labels):
        missing = sorted(set(base.labels) - set(rep.perms))
        extra = sorted(set(rep.perms) - set(base.labels))
        raise CoverError(f"representation labels mismatch (missing {missing}, extra {extra})")
    for label, p in rep.perms.items():
        if not is_permutation(p, rep.degree):
            raise CoverError(f"{label!r} is not a permutation of {rep.degree} sheets: {p}")
    if not is_transitive(rep.perms.values(), rep.degree):
        raise CoverError("disconnected cover")


# ============================================================================
# LIFTING
# ============================================================================

def lift_path(complex_: CoverComplex, word: CyclicWord, start_sheet: int) -> LiftedPath:
    """
    Lift a closed curve starting at a sheet until it closes up

    Args:
        complex_: CoverComplex
        word: CyclicWord over the base labels
        start_sheet: Sheet of the first letter's start vertex

    Returns:
        LiftedPath whose degree is the orbit length of start_sheet
    """
    base, rep = complex_.base, complex_.rep
    n = rep.degree
    if not 0 <= start_sheet < n:
        raise CoverError(f"sheet {start_sheet} out of range for degree {n}")

    steps = []
    for letter in word:
        if not base.has_label(letter.generator):
            raise WordError(f"unknown generator {letter.generator!r}")
        steps.append((base.edge_id(letter.generator), letter.sign))
    for i, step in enumerate(steps):
        if base.end_vertex(step) != base.start_vertex(steps[(i + 1) % len(steps)]):
            raise WordError(f"{word} is not a closed edge-path")

    sigma = {label: rep.perm(label) for label in base.labels}
    sigma_inv = {label: inverse(p) for label, p in sigma.items()}

    path: List[DirectedEdge] = []
    sheets: List[int] = []
    current = start_sheet
    degree = 0
    while True:
        for (edge_id, sign), letter in zip(steps, word):
            sheets.append(current)
            if sign > 0:
                path.append((complex_.total_edge(edge_id, current), 1))
                current = sigma[letter.generator][current]
            else:
                current = sigma_inv[letter.generator][current]
                path.append((complex_.total_edge(edge_id, current), -1))
        degree += 1
        if current == start_sheet:
            break
        if degree > n:
            raise VerificationError("lift failed to close within the degree")

    return LiftedPath(start_sheet, degree, tuple(path), tuple(sheets))


def preimage_components(complex_: CoverComplex, word: CyclicWord) -> List[LiftedPath]:
    """One lift per cycle of the word's monodromy"""
    monodromy = complex_.rep.monodromy(word)
    return [lift_path(complex_, word, cycle[0]) for cycle in cycles(monodromy)]


def components_over(complex_: CoverComplex, labels: Sequence[str],
                    piece: FatGraph) -> List[ComponentInfo]:
    """
    Components of the preimage of a piece of the base surface

    Args:
        complex_: CoverComplex
        labels: Generators of the piece's fundamental group
        piece: FatGraph model of the piece on exactly those labels

    Returns:
        ComponentInfo per orbit of the subgroup generated by the labels
    """
    if set(labels) != set(piece.labels) or not set(labels) <= set(complex_.rep.perms):
        raise CoverError("piece/labels mismatch")

    rep = complex_.rep
    components = []
    for orbit in orbits([rep.perm(label) for label in labels], rep.degree):
        sub = CoverRep(len(orbit), {label: restrict(rep.perm(label), orbit) for label in labels})
        info = validate_rep(piece, sub)
        components.append(ComponentInfo(tuple(orbit), info.degree, info.euler,
                                        info.genus, info.boundaries))

    logger.debug(f"components over {list(labels)}: {[c.degree for c in components]}")
    return components


def is_boundary_parallel(graph: FatGraph, word: CyclicWord) -> bool:
    """True iff word is a boundary cycle of graph, up to rotation and inversion"""
    return any(word.equals_unoriented(boundary) for boundary in boundary_words(graph))
