"""
Certification of simple lifts: one certificate per (surface, degree, target).
"""

from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
import pandas as pd

from config.harness import GRID_CONFIG
from config.runtime import CERT_SCHEMA, REPORT_SCHEMA
from covers.constructors import (
    AdmissibleTarget,
    admissible_targets,
    closed_cover,
    realize_target,
    section_of
)
from covers.cover import (
    CoverRep,
    build_cover,
    components_over,
    is_boundary_parallel,
    lift_path,
    preimage_components,
    validate_rep
)
from covers.curves import select_curve
from intersections.selfint import self_intersection, vertex_simple_certificate
from surfaces.fatgraph import (
    SurfaceSpec,
    handle_generators,
    handle_model,
    model_for,
    planar_labels,
    planar_model
)
from surfaces.words import homology_gcd, word_from_text
from utils.error_handler import LIFTLAB_ERRORS, CoverError, VerificationError
from utils.logger import harness_logger as logger


class GridBounds(NamedTuple):
    max_genus: int = GRID_CONFIG['max_genus']
    max_boundaries: int = GRID_CONFIG['max_boundaries']
    max_degree: int = GRID_CONFIG['max_degree']
    closed: bool = False
    closed_genera: Tuple[int, ...] = tuple(GRID_CONFIG['closed_genera'])
    closed_max_degree: int = GRID_CONFIG['closed_max_degree']


# ============================================================================
# SINGLE INSTANCES
# ============================================================================

def verify_instance(spec: SurfaceSpec, n: int, target: AdmissibleTarget) -> Dict[str, Any]:
    """
    Run the full pipeline for one instance

    Constructor, validation, curve selection, the downstairs count, the lift
    and the upstairs count. Failed checks produce a failure certificate
    naming the first violated check.

    Args:
        spec: Base surface
        n: Degree
        target: Admissible target

    Returns:
        Certificate dictionary
    """
    if target not in admissible_targets(spec, n):
        raise CoverError(f"target {target} not admissible for {spec} at degree {n}")

    certificate: Dict[str, Any] = OrderedDict(
        schema=CERT_SCHEMA,
        surface={'genus': spec.genus, 'boundaries': spec.boundary_count},
        degree=n,
        target={'kind': target.kind, 'value': target.value}
    )
    checks: Dict[str, bool] = OrderedDict()

    try:
        rep = closed_cover(n, spec.genus).q_rep if spec.closed else realize_target(spec, n, target)
        certificate['provenance'] = rep.provenance
        certificate['rep'] = rep.to_dict()
        _certify(spec, n, target, rep, certificate, checks)
    except LIFTLAB_ERRORS as e:
        logger.error(f"{spec} degree {n} {target}: {str(e)}")
        checks['pipeline'] = False
        certificate['error'] = str(e)

    _finish(certificate, checks)
    return certificate


def recheck_certificate(certificate: Dict[str, Any]) -> Dict[str, Any]:
    """
    Re-validate a certificate from its serialized form alone

    Only the surface, degree, target, rep, curve word and start sheet are
    read; everything else is recomputed.

    Returns:
        Fresh certificate built from the embedded data
    """
    try:
        spec = SurfaceSpec(int(certificate['surface']['genus']),
                           int(certificate['surface']['boundaries']))
        n = int(certificate['degree'])
        target = AdmissibleTarget(certificate['target']['kind'], int(certificate['target']['value']))
        rep = CoverRep.from_dict(certificate['rep'])
        curve = certificate['curve']
        word_text, start_sheet = curve['word'], int(certificate['lift']['start_sheet'])
        expected_i = int(curve['expected_i'])
    except (KeyError, TypeError, ValueError) as e:
        raise VerificationError(f"certificate is missing data: {str(e)}")

    spec.validate()
    base = model_for(spec)
    word = word_from_text(word_text, base.labels)

    fresh: Dict[str, Any] = OrderedDict(
        schema=CERT_SCHEMA,
        surface={'genus': spec.genus, 'boundaries': spec.boundary_count},
        degree=n,
        target={'kind': target.kind, 'value': target.value},
        provenance=rep.provenance,
        rep=rep.to_dict()
    )
    checks: Dict[str, bool] = OrderedDict()
    try:
        _certify(spec, n, target, rep, fresh, checks,
                 chosen=(word, expected_i, start_sheet, curve.get('family'), curve.get('exponent')))
    except LIFTLAB_ERRORS as e:
        checks['pipeline'] = False
        fresh['error'] = str(e)
    _finish(fresh, checks)
    return fresh


# ============================================================================
# GRIDS
# ============================================================================

def grid_instances(bounds: GridBounds) -> List[Tuple[SurfaceSpec, int, AdmissibleTarget]]:
    """Every (surface, degree, admissible target) in the grid, in report order"""
    instances = []
    for g in range(bounds.max_genus + 1):
        for k in range(1, bounds.max_boundaries + 1):
            spec = SurfaceSpec(g, k)
            if spec.euler >= 0:
                continue
            for n in range(2, bounds.max_degree + 1):
                instances.extend((spec, n, target) for target in admissible_targets(spec, n))

    if bounds.closed:
        for g in bounds.closed_genera:
            spec = SurfaceSpec(g, 0)
            for n in range(2, bounds.closed_max_degree + 1):
                instances.extend((spec, n, target) for target in admissible_targets(spec, n))

    return instances


def sample_instances(instances: List[Tuple[SurfaceSpec, int, AdmissibleTarget]],
                     size: int, seed: Optional[int] = None
                     ) -> List[Tuple[SurfaceSpec, int, AdmissibleTarget]]:
    """Seeded draw without replacement, kept in grid order"""
    if size < 1:
        raise VerificationError("sample size must be at least 1")
    rng = np.random.default_rng(seed)
    picked = rng.choice(len(instances), size=min(size, len(instances)), replace=False)
    return [instances[i] for i in sorted(int(i) for i in picked)]


def verify_all(bounds: GridBounds, jobs: int = 1, sample: Optional[int] = None,
               seed: Optional[int] = None) -> Dict[str, Any]:
    """
    Certify every instance of a grid, or a seeded random subset of it

    Args:
        bounds: GridBounds
        jobs: Worker threads; the report order does not depend on it
        sample: Number of instances to draw; all of them when None
        seed: Seed for the draw

    Returns:
        Report with totals and the ordered certificates
    """
    instances = grid_instances(bounds)
    if sample is not None:
        instances = sample_instances(instances, sample, seed)
    logger.info(f"Verifying {len(instances)} instances with {jobs} job(s)")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            certificates = list(executor.map(lambda args: verify_instance(*args), instances))
    else:
        certificates = [verify_instance(*args) for args in instances]

    passed = sum(1 for c in certificates if c['passed'])
    report = OrderedDict(
        schema=REPORT_SCHEMA,
        total=len(certificates),
        passed=passed,
        failed=len(certificates) - passed,
        certificates=certificates
    )
    if sample is not None:
        report['sample'] = OrderedDict(size=len(certificates), seed=seed)
    logger.info(f"Grid verified: {passed}/{len(certificates)} passed")
    return report


def report_frame(report: Dict[str, Any]) -> pd.DataFrame:
    """One row per certificate"""
    rows = []
    for c in report['certificates']:
        curve = c.get('curve', {})
        lift = c.get('lift', {})
        provenance = c.get('provenance', {})
        rows.append({
            'surface': f"{c['surface']['genus']},{c['surface']['boundaries']}",
            'degree': c['degree'],
            'target_kind': c['target']['kind'],
            'target': c['target']['value'],
            'section': provenance.get('section'),
            'case': provenance.get('case'),
            'word': curve.get('word'),
            'expected_i': curve.get('expected_i'),
            'computed_i': curve.get('computed_i'),
            'lift_degree': lift.get('degree'),
            'lift_i': lift.get('lift_i'),
            'passed': c['passed'],
            'first_failure': c.get('first_failure')
        })
    columns = ['surface', 'degree', 'target_kind', 'target', 'section', 'case', 'word',
               'expected_i', 'computed_i', 'lift_degree', 'lift_i', 'passed', 'first_failure']
    return pd.DataFrame(rows, columns=columns)


def write_report_csv(report: Dict[str, Any], path: str) -> str:
    report_frame(report).to_csv(path, index=False)
    logger.info(f"Report table written to {path}")
    return path


# ============================================================================
# PRIVATE HELPERS
# ============================================================================

def _certify(spec: SurfaceSpec, n: int, target: AdmissibleTarget, rep: CoverRep,
             certificate: Dict[str, Any], checks: Dict[str, bool], chosen=None):
    base = model_for(spec)
    info = validate_rep(base, rep)

    if spec.closed:
        # the closed cover is the cover of Q with one disk glued per relator lift
        euler = info.euler + n
        genus, boundaries = info.genus, 0
        checks['relator_disks'] = info.boundaries == n
        certificate['reduction'] = 'simplicity checked in the cover of the regular neighbourhood'
    else:
        euler, genus, boundaries = info.euler, info.genus, info.boundaries

    certificate['cover'] = {'euler': euler, 'genus': genus, 'boundaries': boundaries}
    checks['euler'] = euler == n * spec.euler
    checks['boundary_bounds'] = spec.boundary_count <= boundaries <= n * spec.boundary_count
    achieved = boundaries if target.kind == 'boundaries' else genus
    checks['target'] = achieved == target.value

    if chosen is None:
        selected = select_curve(spec, n, target, rep)
        chosen = (selected.word, selected.expected_i, selected.start_sheet,
                  selected.family, selected.exponent)
    word, expected_i, start_sheet, family, exponent = chosen

    computed_i = self_intersection(base, word)
    if not spec.closed:
        nonsimplicity = 'computed'
    elif homology_gcd(word) > 1:
        nonsimplicity = 'homology'
    else:
        nonsimplicity = 'paper-claim'

    certificate['curve'] = OrderedDict(
        word=str(word),
        family=family,
        exponent=exponent,
        expected_i=expected_i,
        computed_i=computed_i,
        nonsimplicity=nonsimplicity
    )
    checks['curve_i'] = computed_i == expected_i >= 1
    checks['essential'] = not is_boundary_parallel(base, word)

    complex_ = build_cover(base, rep)
    lift = lift_path(complex_, word, start_sheet)
    lift_i = self_intersection(complex_.total, lift)
    vertex_simple = vertex_simple_certificate(complex_.total, lift)

    certificate['lift'] = OrderedDict(
        start_sheet=start_sheet,
        degree=lift.degree,
        path_length=len(lift.path),
        lift_i=lift_i,
        vertex_simple=vertex_simple
    )
    checks['lift_closed'] = len(lift.path) == lift.degree * len(word)
    checks['lift_simple'] = lift_i == 0
    components = preimage_components(complex_, word)
    certificate['lift']['preimage_components'] = len(components)
    checks['lift_essential'] = not any(
        is_boundary_parallel(complex_.total, component.word(complex_.total))
        for component in components
    )
    checks['vertex_simple_consistent'] = lift_i == 0 or not vertex_simple

    pieces = _piece_components(spec, n, rep, complex_)
    if pieces is not None:
        certificate['pieces'], checks['pieces'] = pieces


def _piece_components(spec: SurfaceSpec, n: int, rep: CoverRep, complex_):
    """Preimages of the pieces a split construction names, with their expected genera"""
    case = rep.provenance.get('case')
    params = rep.provenance.get('params', {})
    section = section_of(spec)
    if case != 'split':
        return None

    handles = handle_generators(spec)
    handle_labels = [label for pair in handles for label in pair]
    handle_piece = components_over(complex_, handle_labels, handle_model(handles))
    g = spec.genus
    payload = {'handles': [c._asdict() for c in handle_piece]}

    if section == 'two-boundary':
        u = params['u']
        ok = any(c.degree == u + 1 and c.genus == u * g + g - u for c in handle_piece)
    else:
        l = params['l']
        a_labels = planar_labels(spec.boundary_count, g)
        planar_piece = components_over(complex_, a_labels, planar_model(a_labels))
        payload['planar'] = [c._asdict() for c in planar_piece]
        ok = (any(c.degree == l and c.genus == l * (g - 1) + 1 for c in handle_piece)
              and all(c.genus == 0 for c in planar_piece))

    for key in payload:
        for component in payload[key]:
            component['sheets'] = list(component['sheets'])
    return payload, ok


def _finish(certificate: Dict[str, Any], checks: Dict[str, bool]):
    certificate['checks'] = checks
    failures = [name for name, ok in checks.items() if not ok]
    certificate['passed'] = not failures
    certificate['first_failure'] = failures[0] if failures else None
