"""
Minimal degree of a cover to which a curve lifts simply.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from config.harness import MINDEG_CONFIG
from covers.cover import CoverRep, build_cover, preimage_components
from covers.permutations import all_permutations, canonical_form, cycle_notation, is_transitive
from intersections.selfint import self_intersection
from surfaces.fatgraph import FatGraph, invariants
from surfaces.words import CyclicWord
from utils.error_handler import InvalidInputError
from utils.logger import harness_logger as logger


@dataclass(frozen=True)
class MinDegResult:
    word: str
    surface: str
    degree: Optional[int]
    witness: Optional[CoverRep]
    max_degree: int
    searched_degree: int
    exhaustive: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'word': self.word,
            'surface': self.surface,
            'degree': self.degree,
            'witness': self.witness.to_dict() if self.witness else None,
            'witness_cycles': (
                {label: cycle_notation(p) for label, p in sorted(self.witness.perms.items())}
                if self.witness else None
            ),
            'max_degree': self.max_degree,
            'searched_degree': self.searched_degree,
            'exhaustive': self.exhaustive
        }


def mindeg_search(graph: FatGraph, word: CyclicWord,
                  max_degree: int = MINDEG_CONFIG['max_degree']) -> MinDegResult:
    """
    Smallest degree admitting a connected cover with a simple preimage component

    Transitive tuples are enumerated up to conjugacy (canonical relabelling)
    in lexicographic order; the first tuple with a simple component is the
    witness.

    Args:
        graph: Base FatGraph
        word: Non-simple primitive word over the graph labels
        max_degree: Largest degree searched

    Returns:
        MinDegResult; degree is None if nothing was found up to the bound.
        exhaustive is False when a degree was skipped for its size.
    """
    if self_intersection(graph, word) == 0:
        raise InvalidInputError(f"{word} is already simple")

    labels = graph.labels
    euler, genus, boundaries = invariants(graph)
    surface = f"S_{{{genus},{boundaries}}}"
    searched = 1

    for d in range(2, max_degree + 1):
        if math.factorial(d) ** len(labels) > MINDEG_CONFIG['max_tuples']:
            logger.info(f"mindeg: degree {d} exceeds the enumeration bound, stopping")
            return MinDegResult(str(word), surface, None, None, max_degree, searched, False)

        witness = _search_degree(graph, word, labels, d)
        searched = d
        if witness is not None:
            logger.info(f"mindeg {word}: degree {d}")
            return MinDegResult(str(word), surface, d, witness, max_degree, searched, True)

    return MinDegResult(str(word), surface, None, None, max_degree, searched, True)


def simple_lift_survey(graph: FatGraph, word: CyclicWord, reps: List[CoverRep]) -> List[Dict[str, Any]]:
    """For each cover: whether some preimage component of word is simple"""
    survey = []
    for rep in reps:
        complex_ = build_cover(graph, rep)
        counts = [self_intersection(complex_.total, lift)
                  for lift in preimage_components(complex_, word)]
        survey.append({
            'provenance': rep.provenance,
            'component_i': counts,
            'lifts_simply': 0 in counts
        })
    return survey


def _search_degree(graph: FatGraph, word: CyclicWord, labels: List[str],
                   d: int) -> Optional[CoverRep]:
    seen = set()
    for images in itertools.product(list(all_permutations(d)), repeat=len(labels)):
        if not is_transitive(images, d):
            continue
        perms = dict(zip(labels, images))
        canonical = canonical_form(perms, labels)
        if canonical in seen:
            continue
        seen.add(canonical)

        rep = CoverRep(d, dict(zip(labels, canonical)))
        complex_ = build_cover(graph, rep)
        for lift in preimage_components(complex_, word):
            if self_intersection(complex_.total, lift) == 0:
                return rep.with_provenance(section='search', case='minimal-degree',
                                           params={'start_sheet': lift.start_sheet})
    return None
