#!/usr/bin/env python3
"""
API Routes for Conflict Lattice
Read-only JSON endpoints over the built-in scenarios and the drift generator.
"""

from flask import Blueprint, current_app, jsonify, request

from errors import ConflictError, UnknownExample
from measures.conflict import conflict, grid_oracle
from measures.formats import emit_lattice
from measures.lattice import check_monotone, check_normal, full_lattice, leave_one_out, rank_increments
from measures.scenarios import gen_drift, paper_example
from measures.stream import conflict_series, summarize
from models import DriftScenarioConfig, SourceSubset, WindowConfig
from utils.event_log import log_event

api_bp = Blueprint('api', __name__)


def _example_lattice(number):
    evidence = paper_example(number)
    lattice = full_lattice(
        evidence,
        max_sources=current_app.config['MAX_LATTICE_SOURCES'],
        workers=current_app.config['LATTICE_WORKERS'],
    )
    return evidence, lattice


@api_bp.errorhandler(ConflictError)
def conflict_error(error):
    """Report library errors as JSON"""
    status = 404 if isinstance(error, UnknownExample) else 400
    log_event('WARNING', 'API', str(status), f'{request.path}: {error}')
    return jsonify({'error': str(error), 'type': type(error).__name__}), status


@api_bp.route('/health')
def health():
    return jsonify({'name': current_app.config['APP_NAME'],
                    'version': current_app.config['APP_VERSION']})


@api_bp.route('/examples/<int:number>')
def get_example(number):
    """Get the evidence of a built-in example"""
    evidence = paper_example(number)
    return jsonify({'name': f'example{number}', **evidence.to_dict()})


@api_bp.route('/examples/<int:number>/lattice')
def get_example_lattice(number):
    """Get the conflict lattice of a built-in example"""
    _, lattice = _example_lattice(number)
    document = emit_lattice(lattice, 'structured', current_app.config['DECIMAL_PLACES'])
    return current_app.response_class(document, mimetype='application/json')


@api_bp.route('/examples/<int:number>/identify')
def identify_example(number):
    """Get leave-one-out deltas and measure checks for a built-in example"""
    evidence, lattice = _example_lattice(number)
    full = evidence.full_subset()
    tol = current_app.config['MEASURE_TOLERANCE']
    increments = rank_increments(lattice)
    return jsonify({
        **leave_one_out(lattice, tol).to_dict(),
        'normal': check_normal(lattice, tol).to_dict(),
        'monotone': check_monotone(lattice, tol).to_dict(),
        'steepest': increments[0].to_dict() if increments else None,
        'grid_check': {
            'subset': full.label,
            'cf': conflict(evidence, full),
            'grid': grid_oracle(evidence, full, current_app.config['GRID_ORACLE_CELLS']),
        },
    })


@api_bp.route('/drift')
def drift_series():
    """Get the windowed conflict of a generated drift scenario"""
    try:
        seed = request.args.get('seed', DriftScenarioConfig.seed, type=int)
        window = request.args.get('window', current_app.config['DEFAULT_WINDOW'], type=int)
        stride = request.args.get('stride', current_app.config['DEFAULT_STRIDE'], type=int)
        subset_arg = request.args.get('subset', '')
        ids = [int(token.strip().lstrip('xX')) for token in subset_arg.split(',') if token.strip()]
        subset = SourceSubset.from_ids(ids) if ids else None
    except ValueError as exc:
        return jsonify({'error': f'bad query parameter: {exc}', 'type': 'ValueError'}), 400

    series = gen_drift(DriftScenarioConfig(seed=seed))
    cs = conflict_series(series, WindowConfig(window, stride, subset))
    return jsonify({
        'points': [{'time': t, 'cf': v} for t, v in cs],
        'summary': summarize(cs).to_dict(),
    })

