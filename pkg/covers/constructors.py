"""
Explicit cover constructors for every surface case.

Each constructor returns a CoverRep on the labels of the canonical model
(surfaces.fatgraph.model_for) whose provenance names the construction:
{'section': ..., 'case': ..., 'params': {...}}.
"""

import functools
import itertools
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from config.harness import SEARCH_CONFIG
from config.surfaces import ANNULUS_LABEL
from covers.cover import CoverRep
from covers.permutations import (
    Perm,
    compose,
    cycle_count,
    cycle_notation,
    from_cycles,
    full_cycle,
    identity,
    inverse,
    is_full_cycle,
    power,
    with_cycles
)
from surfaces.fatgraph import (
    FatGraph,
    SurfaceSpec,
    boundary_words,
    handle_generators,
    model_for,
    planar_labels
)
from surfaces.words import Letter
from utils.error_handler import CoverError, VerificationError
from utils.logger import cover_logger as logger


BOUNDARIES = 'boundaries'
GENUS = 'genus'


class AdmissibleTarget(NamedTuple):
    kind: str
    value: int

    def __str__(self) -> str:
        return f"{self.kind}={self.value}"


class ClosedCover(NamedTuple):
    rep: CoverRep
    q_rep: CoverRep
    genus: int


# ============================================================================
# ADMISSIBILITY
# ============================================================================

def section_of(spec: SurfaceSpec) -> str:
    """Name of the construction family handling a surface"""
    g, k = spec.genus, spec.boundary_count
    if k == 0:
        return 'closed'
    if g == 0:
        return 'pants' if k == 3 else 'planar'
    if (g, k) == (1, 1):
        return 'one-holed-torus'
    if k == 1:
        return 'one-boundary'
    if k == 2:
        return 'two-boundary'
    return 'multi-boundary'


def admissible_targets(spec: SurfaceSpec, n: int) -> List[AdmissibleTarget]:
    """
    Targets realizable by an n-sheeted connected cover of spec

    Args:
        spec: SurfaceSpec with negative Euler characteristic
        n: Degree, at least 2

    Returns:
        Sorted list of AdmissibleTarget; boundary counts for planar surfaces
        and the one-holed torus, genera otherwise
    """
    spec.validate()
    if n < 2:
        raise CoverError(f"degree must be at least 2, got {n}")

    g, k = spec.genus, spec.boundary_count
    section = section_of(spec)

    if section == 'closed':
        if g < 2:
            raise CoverError("closed surfaces need genus at least 2")
        return [AdmissibleTarget(GENUS, 1 + n * (g - 1))]

    if section == 'pants':
        values = [v for v in range(3, n + 3) if (v - n) % 2 == 0]
        return [AdmissibleTarget(BOUNDARIES, v) for v in values]

    if section == 'planar':
        values = [v for v in range(k, (k - 2) * n + 3) if (v - n * k) % 2 == 0]
        return [AdmissibleTarget(BOUNDARIES, v) for v in values]

    if section == 'one-holed-torus':
        values = [v for v in range(1, n + 1) if (v - n) % 2 == 0]
        return [AdmissibleTarget(BOUNDARIES, v) for v in values]

    low = n * g - n + 1
    high = (2 * n * g + (n - 1) * k - 2 * n + 2) // 2
    return [AdmissibleTarget(GENUS, v) for v in range(low, high + 1)]


def is_admissible(spec: SurfaceSpec, n: int, target: AdmissibleTarget) -> bool:
    return target in admissible_targets(spec, n)


# ============================================================================
# CONSTRUCTORS
# ============================================================================

def pants_cover(n: int, m: int, labels: Sequence[str] = ('a', 'b')) -> CoverRep:
    """
    Pants cover with m preimage components of a mapped homeomorphically

    sigma_b is the full cycle; sigma_a fixes 1..m and cycles
    0 -> n-1 -> n-2 -> ... -> m+1 -> 0, so the a-edge at sheet m+1 ends at sheet 0.
    """
    if n < 2 or not 0 <= m <= n - 2:
        raise CoverError(f"pants cover needs 0 <= m <= n - 2, got n={n}, m={m}")

    sigma_a = from_cycles(n, [[0] + list(range(n - 1, m, -1))])
    a, b = labels
    return CoverRep(n, {a: sigma_a, b: full_cycle(n)},
                    _provenance('pants', 'fixed-sheets', m=m))


def s11_cover(n: int, q: int, labels: Sequence[str] = ('a', 'b')) -> CoverRep:
    """
    One-holed torus cover whose boundary preimage has q components

    Args:
        n: Degree
        q: 1 <= q <= n with q = n mod 2; sigma_a fixes 0..q-1 and pairs the rest
        labels: Generator pair carrying the cover
    """
    if not 1 <= q <= n or (n - q) % 2:
        raise CoverError(f"one-holed torus cover needs 1 <= q <= n and q = n mod 2, got n={n}, q={q}")

    sigma_a = from_cycles(n, [[j, j + 1] for j in range(q, n, 2)])
    x, y = labels
    return CoverRep(n, {x: sigma_a, y: full_cycle(n)},
                    _provenance('one-holed-torus', 'fixed-sheets', q=q))


def planar_cover(n: int, k: int, pis: Sequence[Perm],
                 labels: Optional[Sequence[str]] = None) -> CoverRep:
    """
    Planar cover for even k from k/2 gluing permutations

    sigma(a2) = pi_1; the i-th pair of remaining generators gets
    (pi_i, pi_i^-1), so the inverses of sigma(a3)..sigma(ak) multiply to the
    identity.
    """
    labels = list(labels or planar_labels(k))
    if k < 4 or k % 2:
        raise CoverError(f"planar_cover needs even k >= 4, got {k}")
    if len(pis) != k // 2 or len(labels) != k - 1:
        raise CoverError(f"planar_cover needs {k // 2} gluing permutations")
    if not is_full_cycle(pis[0]):
        raise CoverError(f"first gluing permutation must be an {n}-cycle")

    perms = {labels[0]: tuple(pis[0])}
    for i, pi in enumerate(pis[1:], start=1):
        perms[labels[2 * i - 1]] = tuple(pi)
        perms[labels[2 * i]] = inverse(pi)

    rep = CoverRep(n, perms, _provenance(
        'planar', 'paired-cuts', gluings=[cycle_notation(p) for p in pis]
    ))
    _check_planar_cancellation(rep, labels)
    return rep


def planar_cover_odd(n: int, k: int, params: Dict,
                     labels: Optional[Sequence[str]] = None) -> CoverRep:
    """
    Planar cover for odd k: paired cuts followed by one solved triple

    The surface is cut the other way round from a pants-plus-(k-1)-holed
    gluing. a2 carries the full n-cycle and makes the cover connected. The
    circle enclosing the last three boundaries has trivial monodromy, so it
    lifts to n circles. Beyond it the four-holed block is covered through
    (alpha, rho), and the triple search picks these to reach the target
    boundary count; case `solved-triple` names this block. The curve tau
    lives on a2 and the paired cuts, away from the block, so its simple lift
    does not depend on how the block is glued.

    Args:
        n: Degree
        k: Odd boundary count, at least 5 (3 for the pants block of a handle surface)
        params: {'pairs': [pi, ...], 'alpha': perm, 'rho': perm}; the last
            generator is solved so the inverses of sigma(a3)..sigma(ak) cancel
    """
    labels = list(labels or planar_labels(k))
    if k % 2 == 0 or k < 5:
        raise CoverError(f"planar_cover_odd needs odd k >= 5, got {k}")

    pairs = list(params.get('pairs', []))
    alpha, rho = tuple(params['alpha']), tuple(params['rho'])
    if 2 * len(pairs) + 4 != len(labels):
        raise CoverError(f"planar_cover_odd needs {(k - 5) // 2} paired cuts")

    perms = {labels[0]: full_cycle(n)}
    for i, pi in enumerate(pairs):
        perms[labels[2 * i + 1]] = tuple(pi)
        perms[labels[2 * i + 2]] = inverse(pi)
    perms[labels[-3]] = alpha
    perms[labels[-2]] = rho
    perms[labels[-1]] = compose(inverse(alpha), inverse(rho))

    rep = CoverRep(n, perms, _provenance(
        'planar', 'solved-triple',
        pairs=[cycle_notation(p) for p in pairs],
        alpha=cycle_notation(alpha),
        rho=cycle_notation(rho)
    ))
    _check_planar_cancellation(rep, labels)
    return rep


def sg1_cover(n: int, g: int, q: int) -> CoverRep:
    """One-holed torus cover on the first handle, identity on the others"""
    spec = SurfaceSpec(g, 1)
    handle = handle_generators(spec)[0]
    rep = _complete(spec, n, s11_cover(n, q, handle).perms)
    section = section_of(spec)
    return rep.with_provenance(**_provenance(section, 'first-handle', q=q))


def sg2_cover(n: int, g: int, u: int) -> CoverRep:
    """
    Two-boundary cover of genus ng - u

    u = 0: the annulus generator carries the full cycle. u >= 1: the first
    handle carries a (u+1)-sheeted cover of maximal genus and the annulus
    generator cycles the remaining sheets through sheet u.
    """
    if not 0 <= u <= n - 1:
        raise CoverError(f"two-boundary cover needs 0 <= u <= n - 1, got n={n}, u={u}")

    spec = SurfaceSpec(g, 2)
    if u == 0:
        rep = _complete(spec, n, {ANNULUS_LABEL: full_cycle(n)})
        return rep.with_provenance(**_provenance('two-boundary', 'full-genus', u=0))

    _, y = handle_generators(spec)[0]
    perms = {
        y: from_cycles(n, [list(range(u + 1))]),
        ANNULUS_LABEL: from_cycles(n, [list(range(u, n))])
    }
    return _complete(spec, n, perms).with_provenance(**_provenance('two-boundary', 'split', u=u))


def sgk_cover(n: int, g: int, k: int, target_genus: int) -> CoverRep:
    """
    Cover of S_{g,k}, k >= 3, of the requested genus

    Args:
        n: Degree
        g: Genus, at least 1
        k: Boundary count, at least 3
        target_genus: Admissible genus of the cover

    Returns:
        CoverRep from the handle case, the planar case or the split case
    """
    spec = SurfaceSpec(g, k)
    if g < 1 or k < 3:
        raise CoverError(f"sgk_cover needs g >= 1 and k >= 3, got {spec}")
    target = AdmissibleTarget(GENUS, target_genus)
    if not is_admissible(spec, n, target):
        raise CoverError(f"genus {target_genus} not admissible for {spec} at degree {n}")

    handle = handle_generators(spec)[0]
    a_labels = planar_labels(k, g)

    if 2 * target_genus <= 2 * n * g - n + 1:
        q = 2 + 2 * n * g - n - 2 * target_genus
        rep = _complete(spec, n, s11_cover(n, q, handle).perms)
        return rep.with_provenance(**_provenance('multi-boundary', 'handle', q=q))

    if target_genus >= n * g:
        # boundary count of the planar block's cover
        boundaries = 2 - 2 * n + 2 * n * g + n * k - 2 * target_genus
        if k == 3:
            block = _pants_for_boundaries(n, boundaries, a_labels)
            params = dict(block.provenance['params'])
        else:
            block = planar_for_boundaries(n, k, boundaries, a_labels)
            params = dict(block.provenance['params'], block_case=block.provenance['case'])
        return _complete(spec, n, block.perms).with_provenance(
            **_provenance('multi-boundary', 'planar', block_boundaries=boundaries, **params)
        )

    l = n * g - target_genus + 1
    perms = {
        handle[1]: from_cycles(n, [list(range(l))]),
        a_labels[0]: from_cycles(n, [[0] + list(range(l, n))])
    }
    return _complete(spec, n, perms).with_provenance(**_provenance('multi-boundary', 'split', l=l))


def closed_cover(n: int, g: int) -> ClosedCover:
    """
    Cyclic cover of the closed surface of genus g

    Returns:
        ClosedCover(rep on c1, d1, ..., the same rep on the regular
        neighbourhood Q, genus 1 + n(g - 1))
    """
    if n < 2 or g < 2:
        raise CoverError(f"closed cover needs n >= 2 and g >= 2, got n={n}, g={g}")

    spec = SurfaceSpec(g, 0)
    _, d = handle_generators(spec)[0]
    rep = _complete(spec, n, {d: full_cycle(n)})
    rep = rep.with_provenance(**_provenance('closed', 'cyclic'))

    relator = []
    for c, d in handle_generators(spec):
        relator.extend([Letter(c, 1), Letter(d, 1), Letter(c, -1), Letter(d, -1)])
    if rep.monodromy(relator) != identity(n):
        raise VerificationError("surface relator monodromy is not the identity")

    q_rep = rep.with_provenance(**_provenance('closed', 'regular-neighbourhood'))
    return ClosedCover(rep, q_rep, 1 + n * (g - 1))


# ============================================================================
# REALIZATION
# ============================================================================

def realize_target(spec: SurfaceSpec, n: int, target: AdmissibleTarget) -> CoverRep:
    """
    Construct a cover of spec realizing an admissible target

    Raises:
        CoverError: target not admissible, or the construction search ran out
    """
    if not is_admissible(spec, n, target):
        raise CoverError(f"target {target} not admissible for {spec} at degree {n}")

    g, k = spec.genus, spec.boundary_count
    section = section_of(spec)

    if section == 'closed':
        rep = closed_cover(n, g).rep
    elif section == 'pants':
        rep = _pants_for_boundaries(n, target.value)
    elif section == 'planar':
        rep = planar_for_boundaries(n, k, target.value)
    elif section == 'one-holed-torus':
        rep = s11_cover(n, target.value)
    elif section == 'one-boundary':
        rep = sg1_cover(n, g, 2 + 2 * n * g - n - 2 * target.value)
    elif section == 'two-boundary':
        rep = sg2_cover(n, g, n * g - target.value)
    else:
        rep = sgk_cover(n, g, k, target.value)

    logger.info(f"{spec} degree {n} {target}: {rep.provenance['case']} {rep.provenance['params']}")
    return rep


def build_from_params(spec: SurfaceSpec, n: int, params: Dict[str, int]) -> CoverRep:
    """Constructor call from explicit parameters (m, q, u, genus, boundaries)"""
    section = section_of(spec)
    g, k = spec.genus, spec.boundary_count

    def param(name: str) -> int:
        if name not in params:
            raise CoverError(f"{section} covers need the parameter {name!r}")
        return int(params[name])

    if section == 'pants':
        return pants_cover(n, param('m'))
    if section == 'one-holed-torus':
        return s11_cover(n, param('q'))
    if section == 'one-boundary':
        return sg1_cover(n, g, param('q'))
    if section == 'two-boundary':
        return sg2_cover(n, g, param('u'))
    if section == 'multi-boundary':
        return sgk_cover(n, g, k, param('genus'))
    if section == 'planar':
        return realize_target(spec, n, AdmissibleTarget(BOUNDARIES, param('boundaries')))
    return closed_cover(n, g).rep


def realized_targets(spec: SurfaceSpec, n: int) -> List[AdmissibleTarget]:
    """
    Targets reached by sweeping the constructor parameters

    Pants and torus families sweep m and q directly; the other families
    realize each admissible value.
    """
    section = section_of(spec)
    model = model_for(spec)

    if section == 'pants':
        reps = [pants_cover(n, m) for m in range(n - 1)]
    elif section == 'one-holed-torus':
        reps = [s11_cover(n, q) for q in range(n % 2 or 2, n + 1, 2)]
    else:
        reps = [realize_target(spec, n, target) for target in admissible_targets(spec, n)]

    kind = admissible_targets(spec, n)[0].kind
    realized = set()
    for rep in reps:
        boundaries = boundary_count(model, rep)
        if spec.closed:
            value = 1 + n * (spec.genus - 1)
        elif kind == BOUNDARIES:
            value = boundaries
        else:
            value = (2 - n * spec.euler - boundaries) // 2
        realized.add(AdmissibleTarget(kind, value))
    return sorted(realized)


def planar_for_boundaries(n: int, k: int, boundaries: int,
                          labels: Optional[Sequence[str]] = None) -> CoverRep:
    """
    Planar cover of S_{0,k}, k >= 4, with the given boundary count

    The count is 2 plus the cycle counts of sigma(a3)..sigma(ak).
    """
    total = boundaries - 2
    if k % 2 == 0:
        counts = _spread(total // 2, (k - 2) // 2, n) if total % 2 == 0 else None
        if counts is None:
            raise CoverError(f"no paired-cut planar cover of degree {n} with {boundaries} boundaries")
        return planar_cover(n, k, [full_cycle(n)] + [with_cycles(n, c) for c in counts], labels)

    pair_count = (k - 5) // 2
    for triple, (alpha, rho) in sorted(_triple_sums(n).items()):
        rest = total - triple
        if rest % 2:
            continue
        counts = _spread(rest // 2, pair_count, n)
        if counts is not None:
            params = {'pairs': [with_cycles(n, c) for c in counts], 'alpha': alpha, 'rho': rho}
            return planar_cover_odd(n, k, params, labels)

    raise CoverError(f"search exhausted: no planar cover of S_{{0,{k}}} of degree {n} "
                     f"with {boundaries} boundaries")


def boundary_count(graph: FatGraph, rep: CoverRep) -> int:
    """Boundary components of the cover, from the monodromy of the boundary words"""
    return sum(cycle_count(rep.monodromy(word)) for word in boundary_words(graph))


# ============================================================================
# PRIVATE HELPERS
# ============================================================================

def _provenance(section: str, case: str, **params) -> Dict:
    return {'section': section, 'case': case, 'params': params}


def _complete(spec: SurfaceSpec, n: int, perms: Dict[str, Perm]) -> CoverRep:
    """Identity on every model label not given"""
    labels = model_for(spec).labels
    unknown = set(perms) - set(labels)
    if unknown:
        raise CoverError(f"labels {sorted(unknown)} not in the model of {spec}")
    return CoverRep(n, {label: perms.get(label, identity(n)) for label in labels})


def _check_planar_cancellation(rep: CoverRep, labels: Sequence[str]):
    letters = [Letter(label, -1) for label in labels[1:]]
    if rep.monodromy(letters) != identity(rep.degree):
        raise VerificationError("planar gluing constraint not satisfied")


def _pants_for_boundaries(n: int, boundaries: int,
                          labels: Sequence[str] = ('a', 'b')) -> CoverRep:
    """First m whose pants cover has the given boundary count"""
    pants = model_for(SurfaceSpec(0, 3))
    for m in range(n - 1):
        rep = pants_cover(n, m)
        if boundary_count(pants, rep) == boundaries:
            if tuple(labels) == ('a', 'b'):
                return rep
            return CoverRep(n, {labels[0]: rep.perm('a'), labels[1]: rep.perm('b')}, rep.provenance)
    raise CoverError(f"no pants cover of degree {n} with {boundaries} boundaries")


def _spread(total: int, parts: int, n: int) -> Optional[List[int]]:
    """Split total into `parts` values in [1, n], largest first"""
    if parts == 0:
        return [] if total == 0 else None
    if not parts <= total <= parts * n:
        return None
    counts = []
    for i in range(parts):
        value = min(n, total - (parts - i - 1))
        counts.append(value)
        total -= value
    return counts


@functools.lru_cache(maxsize=None)
def _triple_sums(n: int) -> Dict[int, Tuple[Perm, Perm]]:
    """
    Cycle-count sums of (alpha, rho, alpha^-1 rho^-1), first witness per sum

    All of S_n up to the exhaustive degree, a catalog of cycle powers and
    partial cycles beyond.
    """
    if n <= SEARCH_CONFIG['exhaustive_degree']:
        candidates = list(itertools.permutations(range(n)))
    else:
        candidates = [power(full_cycle(n), j) for j in range(n)]
        candidates += [with_cycles(n, c) for c in range(1, n + 1)]

    sums: Dict[int, Tuple[Perm, Perm]] = {}
    for alpha in candidates:
        for rho in candidates:
            solved = compose(inverse(alpha), inverse(rho))
            total = cycle_count(alpha) + cycle_count(rho) + cycle_count(solved)
            sums.setdefault(total, (tuple(alpha), tuple(rho)))
    return sums
