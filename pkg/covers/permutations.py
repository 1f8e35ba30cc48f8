"""
Permutations of sheets {0, ..., n-1} stored as image tuples: p[i] is the image of i.

Composition is left to right: compose(p, q) applies p first, then q.
"""

import itertools
from collections import deque
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from utils.error_handler import CoverError


Perm = Tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def full_cycle(n: int) -> Perm:
    """(0 1 ... n-1)"""
    return tuple((i + 1) % n for i in range(n))


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    images = list(range(n))
    seen = set()
    for cycle in cycles:
        for i, point in enumerate(cycle):
            if point in seen or not 0 <= point < n:
                raise CoverError(f"invalid cycle {tuple(cycle)} on {n} sheets")
            seen.add(point)
            images[point] = cycle[(i + 1) % len(cycle)]
    return tuple(images)


def with_cycles(n: int, count: int) -> Perm:
    """Permutation with exactly `count` cycles: a cycle on 0..n-count, rest fixed"""
    if not 1 <= count <= n:
        raise CoverError(f"cannot have {count} cycles on {n} sheets")
    return from_cycles(n, [list(range(n - count + 1))])


def compose(*perms: Perm) -> Perm:
    """Apply the permutations in the given order"""
    result = perms[0]
    for p in perms[1:]:
        result = tuple(p[i] for i in result)
    return result


def inverse(p: Perm) -> Perm:
    images = [0] * len(p)
    for i, image in enumerate(p):
        images[image] = i
    return tuple(images)


def power(p: Perm, exponent: int) -> Perm:
    base = p if exponent >= 0 else inverse(p)
    result = identity(len(p))
    for _ in range(abs(exponent)):
        result = compose(result, base)
    return result


def cycles(p: Perm) -> List[Tuple[int, ...]]:
    """Cycle decomposition including fixed points, each cycle starting at its least point"""
    seen = set()
    result = []
    for start in range(len(p)):
        if start in seen:
            continue
        cycle = []
        point = start
        while point not in seen:
            seen.add(point)
            cycle.append(point)
            point = p[point]
        result.append(tuple(cycle))
    return result


def cycle_count(p: Perm) -> int:
    return len(cycles(p))


def is_full_cycle(p: Perm) -> bool:
    return cycle_count(p) == 1


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def cycle_notation(p: Perm) -> str:
    moved = [c for c in cycles(p) if len(c) > 1]
    if not moved:
        return '()'
    return ''.join('(' + ' '.join(str(i) for i in c) + ')' for c in moved)


def all_permutations(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(n))


# ============================================================================
# GROUP ACTIONS
# ============================================================================

def orbits(perms: Iterable[Perm], n: int) -> List[List[int]]:
    """Orbits of the group generated by perms, sorted by least element"""
    perms = list(perms)
    seen = set()
    result = []
    for start in range(n):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            point = queue.popleft()
            for p in perms:
                for image in (p[point], p.index(point)):
                    if image not in orbit:
                        orbit.add(image)
                        queue.append(image)
        seen |= orbit
        result.append(sorted(orbit))
    return result


def is_transitive(perms: Iterable[Perm], n: int) -> bool:
    return len(orbits(perms, n)) == 1


def restrict(p: Perm, points: Sequence[int]) -> Perm:
    """Restriction to an invariant subset, relabelled by position in `points`"""
    index = {point: i for i, point in enumerate(points)}
    try:
        return tuple(index[p[point]] for point in points)
    except KeyError:
        raise CoverError("restriction to a non-invariant set of sheets")


def relabel_from(perms: Dict[str, Perm], labels: Sequence[str], start: int) -> Dict[str, Perm]:
    """
    Relabel sheets in breadth-first order from `start`

    Sheets are numbered as first reached, exploring generators in `labels`
    order, forward image before backward image.
    """
    n = len(perms[labels[0]])
    inverses = {label: inverse(perms[label]) for label in labels}
    new_index = {start: 0}
    queue = deque([start])
    while queue:
        point = queue.popleft()
        for label in labels:
            for image in (perms[label][point], inverses[label][point]):
                if image not in new_index:
                    new_index[image] = len(new_index)
                    queue.append(image)

    if len(new_index) != n:
        raise CoverError("disconnected cover")

    old_at = {new: old for old, new in new_index.items()}
    return {
        label: tuple(new_index[perms[label][old_at[i]]] for i in range(n))
        for label in labels
    }


def canonical_form(perms: Dict[str, Perm], labels: Sequence[str]) -> Tuple[Perm, ...]:
    """Conjugacy-class representative of a transitive tuple"""
    n = len(perms[labels[0]])
    return min(
        tuple(relabeled[label] for label in labels)
        for relabeled in (relabel_from(perms, labels, start) for start in range(n))
    )
