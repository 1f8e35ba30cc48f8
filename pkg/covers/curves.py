"""
Non-simple curve families and the curve chosen for each construction.
"""

import re
from dataclasses import dataclass
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from config.surfaces import ANNULUS_LABEL
from covers.constructors import AdmissibleTarget, realize_target, section_of
from covers.cover import CoverRep
from surfaces.fatgraph import SurfaceSpec, handle_generators, planar_labels
from surfaces.words import CyclicWord, Letter, rename
from utils.error_handler import WordError


@dataclass(frozen=True)
class CurveFamily:
    name: str
    template: str
    home: SurfaceSpec
    min_exponent: int
    expected: Callable[[int], int]


FAMILIES: Dict[str, CurveFamily] = {
    'gamma': CurveFamily('gamma', 'a b^k', SurfaceSpec(0, 3), 1, lambda k: k),
    'tau': CurveFamily('tau', 'a2 a3^-1 ... ak^-1 a2^j', SurfaceSpec(0, 4), 1, lambda j: j),
    'eta': CurveFamily('eta', 'a b a b^k', SurfaceSpec(1, 1), 3, lambda k: k - 2),
    'sigma': CurveFamily('sigma', 'a b a^n b', SurfaceSpec(1, 1), 3, lambda n: n - 2),
    'a2bn': CurveFamily('a2bn', 'a^2 b^n', SurfaceSpec(1, 1), 2, lambda n: n - 1),
    'zeta': CurveFamily('zeta', 'c^k x1', SurfaceSpec(1, 2), 2, lambda k: k - 1),
}

# one-holed torus curve with two self-crossings that lifts simply to the 3-sheeted q=3 cover
TWISTED_TORUS_CURVE = ((0, 1), (1, 1), (0, 2), (1, 2))
TWISTED_TORUS_EXPECTED = 2


class SelectedCurve(NamedTuple):
    word: CyclicWord
    expected_i: int
    start_sheet: int
    family: Optional[str]
    exponent: Optional[int]


# ============================================================================
# FAMILIES
# ============================================================================

def family_word(name: str, exponent: int,
                spec: Optional[SurfaceSpec] = None) -> Tuple[CyclicWord, int]:
    """
    Word of a curve family and its self-intersection number

    Args:
        name: Family name (gamma, tau, eta, sigma, a2bn, zeta)
        exponent: The family's parameter
        spec: Surface whose model alphabet the word is written in; defaults
            to the family's home surface

    Returns:
        (CyclicWord, expected_i)
    """
    if name not in FAMILIES:
        raise WordError(f"unknown curve family {name!r}; known: {', '.join(FAMILIES)}")
    family = FAMILIES[name]
    if exponent < family.min_exponent:
        raise WordError(f"{name} needs exponent >= {family.min_exponent}, got {exponent}")

    spec = spec or family.home

    if name == 'gamma':
        a, b = _pants_block(spec)
        word = _word((a, 1), (b, exponent))
    elif name == 'tau':
        labels = planar_labels(spec.boundary_count, spec.genus) if not spec.closed else []
        if len(labels) < 3:
            raise WordError(f"tau needs at least four boundaries, got {spec}")
        word = _word((labels[0], 1), *((label, -1) for label in labels[1:]),
                     (labels[0], exponent))
    elif name == 'zeta':
        if spec.genus < 1 or spec.boundary_count != 2:
            raise WordError(f"zeta lives on two-boundary surfaces of positive genus, got {spec}")
        x, _ = handle_generators(spec)[0]
        word = _word((ANNULUS_LABEL, exponent), (x, 1))
    else:
        a, b = _torus_block(spec)
        terms = {
            'eta': ((a, 1), (b, 1), (a, 1), (b, exponent)),
            'sigma': ((a, 1), (b, 1), (a, exponent), (b, 1)),
            'a2bn': ((a, 2), (b, exponent)),
        }[name]
        word = _word(*terms)

    return word, family.expected(exponent)


def parse_curve(text: str) -> Tuple[str, int]:
    """Parse 'family:exponent', e.g. 'eta:3'"""
    match = re.fullmatch(r'\s*([a-z0-9]+)\s*:\s*([0-9]+)\s*', text)
    if not match:
        raise WordError(f"curve must be given as family:exponent, got {text!r}")
    name, exponent = match.group(1), int(match.group(2))
    if name not in FAMILIES:
        raise WordError(f"unknown curve family {name!r}; known: {', '.join(FAMILIES)}")
    return name, exponent


# ============================================================================
# SELECTION
# ============================================================================

def torus_curve(n: int, q: int, labels: Sequence[str] = ('a', 'b')) -> SelectedCurve:
    """
    Curve lifting simply to the one-holed torus cover with parameters (n, q)

    n = 2 and (3, 1) use sigma^3, (3, 3) the twisted curve, n >= 4 with
    q >= 2 eta^(n-1), odd n >= 5 with q = 1 eta^(n-2). Start sheet 0.
    """
    a, b = labels
    if n == 2 or (n, q) == (3, 1):
        word, expected = family_word('sigma', 3)
        return SelectedCurve(rename(word, {'a': a, 'b': b}), expected, 0, 'sigma', 3)
    if (n, q) == (3, 3):
        word = _word(*((labels[i], e) for i, e in TWISTED_TORUS_CURVE))
        return SelectedCurve(word, TWISTED_TORUS_EXPECTED, 0, None, None)

    exponent = n - 1 if q >= 2 else n - 2
    word, expected = family_word('eta', exponent)
    return SelectedCurve(rename(word, {'a': a, 'b': b}), expected, 0, 'eta', exponent)


def select_curve(spec: SurfaceSpec, n: int, target: AdmissibleTarget,
                 rep: Optional[CoverRep] = None) -> SelectedCurve:
    """
    Non-simple curve whose lift is simple in the cover realizing target

    Args:
        spec: Base surface
        n: Degree
        target: Admissible target
        rep: The realizing cover; constructed with realize_target if omitted

    Returns:
        SelectedCurve in the model alphabet with its start sheet
    """
    rep = rep or realize_target(spec, n, target)
    case = rep.provenance.get('case')
    params = rep.provenance.get('params', {})
    section = section_of(spec)

    if section == 'pants' or (section == 'multi-boundary' and case == 'planar'
                              and spec.boundary_count == 3):
        m = params['m']
        word, expected = family_word('gamma', m + 1, spec)
        return SelectedCurve(word, expected, m + 1, 'gamma', m + 1)

    if section == 'planar' or (section == 'multi-boundary' and case == 'planar'):
        word, expected = family_word('tau', n - 1, spec)
        return SelectedCurve(word, expected, 0, 'tau', n - 1)

    if section == 'two-boundary':
        u = params['u']
        if u == 0:
            word, expected = family_word('zeta', n, spec)
            return SelectedCurve(word, expected, 0, 'zeta', n)
        return torus_curve(u + 1, u + 1, handle_generators(spec)[0])

    handle = handle_generators(spec)[0]
    if section == 'closed':
        return torus_curve(n, n, handle)
    if case == 'split':
        return torus_curve(params['l'], params['l'], handle)
    return torus_curve(n, params['q'], handle)


def family_instances(spec: SurfaceSpec, exponents: Sequence[int]) -> List[Tuple[str, int]]:
    """Family instances that can be written on spec"""
    instances = []
    for name, family in FAMILIES.items():
        for exponent in exponents:
            if exponent < family.min_exponent:
                continue
            try:
                family_word(name, exponent, spec)
            except WordError:
                break
            instances.append((name, exponent))
    return instances


# ============================================================================
# PRIVATE HELPERS
# ============================================================================

def _word(*terms: Tuple[str, int]) -> CyclicWord:
    letters: List[Letter] = []
    for label, exponent in terms:
        sign = 1 if exponent > 0 else -1
        letters.extend(Letter(label, sign) for _ in range(abs(exponent)))
    return CyclicWord(tuple(letters))


def _pants_block(spec: SurfaceSpec) -> Tuple[str, str]:
    if spec.closed:
        raise WordError(f"gamma needs a planar block, got {spec}")
    labels = planar_labels(spec.boundary_count, spec.genus)
    if spec.boundary_count < 3:
        raise WordError(f"gamma needs at least three boundaries, got {spec}")
    return labels[0], labels[1]


def _torus_block(spec: SurfaceSpec) -> Tuple[str, str]:
    if spec.genus < 1:
        raise WordError(f"torus curves need positive genus, got {spec}")
    x, y = handle_generators(spec)[0]
    return x, y
