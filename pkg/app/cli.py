"""
Command-line front end.

JSON (or DOT) goes to stdout or the requested file; diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from app.config_validator import ConfigValidator
from app.harness import GridBounds, verify_all, verify_instance, write_report_csv
from app.search import mindeg_search
from config.harness import GRID_CONFIG, MINDEG_CONFIG
from covers.constructors import (
    BOUNDARIES,
    GENUS,
    AdmissibleTarget,
    admissible_targets,
    build_from_params,
    realize_target
)
from covers.cover import CoverRep, build_cover, lift_path, preimage_components, validate_rep
from covers.curves import family_word, parse_curve
from intersections.oracle import oracle_self_intersection
from intersections.selfint import analyze, self_intersection
from surfaces.fatgraph import FatGraph, SurfaceSpec, boundary_words, invariants, model_for
from surfaces.serialization import dump_json, graph_from_dict, graph_to_dict, graph_to_dot
from surfaces.words import CyclicWord, is_primitive, word_from_text
from utils.error_handler import (
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    InvalidInputError,
    exit_code_on_error
)
from utils.logger import main_logger as logger


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='liftlab',
        description='Covers of surfaces, self-intersection numbers and simple lifts'
    )
    parser.add_argument('--seed', type=int, default=None,
                        help='Seed for sampled modes (verify-grid --sample)')
    commands = parser.add_subparsers(dest='command', required=True)

    surface = commands.add_parser('surface', help='Canonical fat graph model of S_{g,k}')
    _add_surface(surface)
    surface.add_argument('--dot', action='store_true', help='Print DOT instead of JSON')

    cover = commands.add_parser('cover', help='Build or check a cover')
    cover.add_argument('action', choices=['build', 'check'])
    _add_surface(cover)
    _add_cover_source(cover, degree_required=False)

    selfint = commands.add_parser('selfint', help='Exact self-intersection number of a curve')
    _add_surface(selfint)
    _add_curve(selfint)

    lift = commands.add_parser('lift', help='Lift a curve to a cover')
    _add_surface(lift)
    _add_cover_source(lift)
    _add_curve(lift)
    lift.add_argument('--sheet', type=int, default=None,
                      help='Start sheet (default: every preimage component)')

    oracle = commands.add_parser('oracle', help='Numerical self-intersection cross-check')
    _add_surface(oracle)
    _add_curve(oracle)
    oracle.add_argument('--depth', type=int, default=None,
                        help='Word-length bound B (default 2L + 2, capped)')

    verify = commands.add_parser('verify', help='Certify simple lifts for one surface and degree')
    _add_surface(verify)
    verify.add_argument('--degree', type=int, required=True)
    _add_target(verify)
    verify.add_argument('--all-targets', action='store_true',
                        help='Certify every admissible target')
    verify.add_argument('--out', default=None, help='Write certificates to PATH')

    grid = commands.add_parser('verify-grid', help='Certify every instance of a grid')
    grid.add_argument('--max-g', type=int, default=GRID_CONFIG['max_genus'])
    grid.add_argument('--max-k', type=int, default=GRID_CONFIG['max_boundaries'])
    grid.add_argument('--max-n', type=int, default=GRID_CONFIG['max_degree'])
    grid.add_argument('--closed', action='store_true', help='Add the closed-surface grid')
    grid.add_argument('--jobs', type=int, default=GRID_CONFIG['jobs'])
    grid.add_argument('--sample', type=int, default=None,
                      help='Certify N randomly drawn instances instead of the whole grid')
    grid.add_argument('--csv', default=None, help='Write a summary table to PATH')
    grid.add_argument('--out', default=None, help='Write the report to PATH')

    mindeg = commands.add_parser('mindeg', help='Minimal degree of a simple lift')
    _add_surface(mindeg)
    _add_curve(mindeg)
    mindeg.add_argument('--max-degree', type=int, default=MINDEG_CONFIG['max_degree'])

    emit = commands.add_parser('emit', help='Write a surface model or a cover as JSON or DOT')
    _add_surface(emit, required=False)
    _add_cover_source(emit, degree_required=False)
    emit.add_argument('--input', default=None, help='Read a fat graph JSON instead of a surface')
    output = emit.add_mutually_exclusive_group(required=True)
    output.add_argument('--json', metavar='PATH', help="JSON output ('-' for stdout)")
    output.add_argument('--dot', metavar='PATH', help="DOT output ('-' for stdout)")

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and dispatch to the subcommand

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    handlers = {
        'surface': _cmd_surface,
        'cover': _cmd_cover,
        'selfint': _cmd_selfint,
        'lift': _cmd_lift,
        'oracle': _cmd_oracle,
        'verify': _cmd_verify,
        'verify-grid': _cmd_verify_grid,
        'mindeg': _cmd_mindeg,
        'emit': _cmd_emit,
    }
    logger.info(f"liftlab {args.command}")
    return handlers[args.command](args)


# ============================================================================
# COMMANDS
# ============================================================================

@exit_code_on_error
def _cmd_surface(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    graph = model_for(spec)
    if args.dot:
        _write('-', graph_to_dot(graph))
        return EXIT_OK

    euler, genus, boundaries = invariants(graph)
    _write('-', dump_json({
        'surface': {'genus': spec.genus, 'boundaries': spec.boundary_count},
        'model': {'euler': euler, 'genus': genus, 'boundaries': boundaries},
        'boundary_words': [str(word) for word in boundary_words(graph)],
        'graph': graph_to_dict(graph)
    }))
    return EXIT_OK


@exit_code_on_error
def _cmd_cover(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    base = model_for(spec)
    rep = _cover_rep(args, spec)
    info = validate_rep(base, rep)

    payload: Dict[str, Any] = {
        'surface': {'genus': spec.genus, 'boundaries': spec.boundary_count},
        'rep': rep.to_dict(),
        'invariants': {
            'degree': info.degree,
            'euler': info.euler,
            'genus': info.genus,
            'boundaries': info.boundaries,
            'transitive': info.transitive
        }
    }
    if args.action == 'build' and not spec.closed:
        payload['admissible_targets'] = [
            {'kind': t.kind, 'value': t.value} for t in admissible_targets(spec, rep.degree)
        ]
    _write('-', dump_json(payload))
    return EXIT_OK


@exit_code_on_error
def _cmd_selfint(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    graph = model_for(spec)
    word = _curve(args, spec, graph)
    _write('-', dump_json(analyze(graph, word)))
    return EXIT_OK


@exit_code_on_error
def _cmd_lift(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    base = model_for(spec)
    word = _curve(args, spec, base)
    complex_ = build_cover(base, _cover_rep(args, spec))

    if args.sheet is not None:
        lifts = [lift_path(complex_, word, args.sheet)]
    else:
        lifts = preimage_components(complex_, word)

    _write('-', dump_json({
        'word': str(word),
        'degree': complex_.rep.degree,
        'lifts': [
            dict(lift.to_dict(),
                 word=str(lift.word(complex_.total)),
                 i=self_intersection(complex_.total, lift))
            for lift in lifts
        ]
    }))
    return EXIT_OK


@exit_code_on_error
def _cmd_oracle(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    graph = model_for(spec)
    word = _curve(args, spec, graph)
    if not is_primitive(word):
        raise InvalidInputError(f"{word} is a proper power")

    result = oracle_self_intersection(graph, word, args.depth)
    _write('-', dump_json({
        'word': str(word),
        'count': result.count,
        'stable': result.stable,
        'depth': result.depth
    }))
    return EXIT_OK


@exit_code_on_error
def _cmd_verify(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    if args.degree < 2:
        raise InvalidInputError("degree must be at least 2")

    if args.all_targets:
        targets = admissible_targets(spec, args.degree)
    else:
        target = _target(args)
        targets = [target] if target else admissible_targets(spec, args.degree)[:1]

    certificates = [verify_instance(spec, args.degree, target) for target in targets]
    _write(args.out or '-', dump_json(certificates))

    if all(c['passed'] for c in certificates):
        return EXIT_OK
    return EXIT_VERIFICATION_FAILED


@exit_code_on_error
def _cmd_verify_grid(args) -> int:
    validation = ConfigValidator().validate_all()
    if validation['overall_status'] == 'invalid':
        failed = [name for name, r in validation.items()
                  if isinstance(r, dict) and r['status'] == 'error']
        raise InvalidInputError(f"configuration invalid: {', '.join(failed)}")
    if args.jobs < 1:
        raise InvalidInputError("--jobs must be at least 1")
    if args.sample is not None and args.sample < 1:
        raise InvalidInputError("--sample must be at least 1")

    bounds = GridBounds(args.max_g, args.max_k, args.max_n, closed=args.closed)
    report = verify_all(bounds, jobs=args.jobs, sample=args.sample, seed=args.seed)

    _write(args.out or '-', dump_json(report))
    if args.csv:
        write_report_csv(report, args.csv)

    return EXIT_OK if report['failed'] == 0 else EXIT_VERIFICATION_FAILED


@exit_code_on_error
def _cmd_mindeg(args) -> int:
    spec = SurfaceSpec.parse(args.surface)
    graph = model_for(spec)
    word = _curve(args, spec, graph)
    if args.max_degree < 2:
        raise InvalidInputError("--max-degree must be at least 2")

    _write('-', dump_json(mindeg_search(graph, word, args.max_degree).to_dict()))
    return EXIT_OK


@exit_code_on_error
def _cmd_emit(args) -> int:
    if args.input:
        graph = _read_graph(args.input)
    elif args.surface:
        spec = SurfaceSpec.parse(args.surface)
        graph = model_for(spec)
        if args.degree is not None or args.rep:
            graph = build_cover(graph, _cover_rep(args, spec)).total
    else:
        raise InvalidInputError("emit needs --surface or --input")

    if args.json:
        _write(args.json, dump_json(graph_to_dict(graph)))
    else:
        _write(args.dot, graph_to_dot(graph))
    return EXIT_OK


# ============================================================================
# ARGUMENT HELPERS
# ============================================================================

def _add_surface(parser, required: bool = True):
    parser.add_argument('--surface', required=required, metavar='G,K',
                        help='Genus and boundary count, e.g. 0,3 (K = 0 for closed)')


def _add_curve(parser):
    curve = parser.add_mutually_exclusive_group(required=True)
    curve.add_argument('--word', help='Curve word, e.g. "a b^3" or abab^3')
    curve.add_argument('--curve', metavar='FAMILY:K', help='Curve family instance, e.g. eta:3')


def _add_target(parser):
    target = parser.add_mutually_exclusive_group()
    target.add_argument('--target-boundaries', type=int, default=None)
    target.add_argument('--target-genus', type=int, default=None)


def _add_cover_source(parser, degree_required: bool = True):
    parser.add_argument('--degree', type=int, required=False, default=None,
                        help='Number of sheets' + ('' if degree_required else ' (optional)'))
    parser.add_argument('--param', action='append', default=[], metavar='NAME=VALUE',
                        help='Constructor parameter (m, q, u, genus, boundaries)')
    parser.add_argument('--rep', default=None, help='Read the representation from a JSON file')
    _add_target(parser)


def _target(args) -> Optional[AdmissibleTarget]:
    if getattr(args, 'target_boundaries', None) is not None:
        return AdmissibleTarget(BOUNDARIES, args.target_boundaries)
    if getattr(args, 'target_genus', None) is not None:
        return AdmissibleTarget(GENUS, args.target_genus)
    return None


def _cover_rep(args, spec: SurfaceSpec) -> CoverRep:
    """Representation from --rep, --param, a target, or the first admissible target"""
    if args.rep:
        try:
            with open(args.rep, encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, ValueError) as e:
            raise InvalidInputError(f"cannot read representation {args.rep}: {str(e)}")
        return CoverRep.from_dict(data.get('rep', data))

    if args.degree is None:
        raise InvalidInputError("--degree is required")
    if args.degree < 2:
        raise InvalidInputError("degree must be at least 2")

    if args.param:
        return build_from_params(spec, args.degree, _params(args.param))
    target = _target(args) or admissible_targets(spec, args.degree)[0]
    return realize_target(spec, args.degree, target)


def _params(items: List[str]) -> Dict[str, int]:
    params = {}
    for item in items:
        name, _, value = item.partition('=')
        try:
            params[name.strip()] = int(value)
        except ValueError:
            raise InvalidInputError(f"parameter must be NAME=INTEGER, got {item!r}")
    return params


def _curve(args, spec: SurfaceSpec, graph: FatGraph) -> CyclicWord:
    if args.curve:
        name, exponent = parse_curve(args.curve)
        return family_word(name, exponent, spec)[0]
    return word_from_text(args.word, graph.labels)


def _read_graph(path: str) -> FatGraph:
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise InvalidInputError(f"cannot read fat graph {path}: {str(e)}")
    return graph_from_dict(data)


def _write(path: str, text: str):
    if path == '-':
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Wrote {path}")
