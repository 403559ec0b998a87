#!/usr/bin/env python3
"""
Conflict Lattice - File Formats
Scenario files (JSON), sensor series files (CSV), lattice and conflict-series
renderings.

Scenario file:
    {"name": "example1", "sources": [{"id": 1, "lo": 0.0, "hi": 12.0}, ...]}

Series file:
    time,s1,s2,...
    1.0,22.1,21.9,...
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
from decimal import ROUND_HALF_EVEN, Decimal

import numpy as np

from errors import (
    ConflictError,
    NonFiniteValue,
    NonIncreasingTime,
    RaggedRow,
    ScenarioSyntaxError,
    SeriesSyntaxError,
    ValidationError,
)
from measures.conflict import validate_evidence
from models import ConflictLattice, ConflictSeries, EvidenceSet, Scenario, SensorSeries
from utils.event_log import log_event

LATTICE_FORMATS = ('table', 'structured')
SENSOR_COLUMN = re.compile(r'^s(\d+)$')


def format_value(value: float, places: int = 6) -> str:
    """Fixed-point rendering, ties rounded half to even on the exact binary value."""
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(value).quantize(quantum, rounding=ROUND_HALF_EVEN))


# ---------------------------------------------------------------------------
# Scenario files
# ---------------------------------------------------------------------------

def _number(value, field):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioSyntaxError(f'expected a number, got {value!r}', field=field)
    return value


def load_scenario(text: str) -> Scenario:
    """Parse a scenario document into a validated, named EvidenceSet."""
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSyntaxError(exc.msg, line=exc.lineno, column=exc.colno) from None

    if not isinstance(document, dict):
        raise ScenarioSyntaxError('document must be an object')
    name = document.get('name', 'scenario')
    if not isinstance(name, str):
        raise ScenarioSyntaxError('expected a string', field='name')
    sources = document.get('sources')
    if not isinstance(sources, list):
        raise ScenarioSyntaxError('expected a list of sources', field='sources')

    raw = []
    for position, entry in enumerate(sources):
        where = f'sources[{position}]'
        if not isinstance(entry, dict):
            raise ScenarioSyntaxError('expected an object', field=where)
        for key in ('id', 'lo', 'hi'):
            if key not in entry:
                raise ScenarioSyntaxError('missing value', field=f'{where}.{key}')
        source_id = entry['id']
        if isinstance(source_id, bool) or not isinstance(source_id, int):
            raise ScenarioSyntaxError(f'expected an integer, got {source_id!r}', field=f'{where}.id')
        raw.append((source_id, _number(entry['lo'], f'{where}.lo'), _number(entry['hi'], f'{where}.hi')))

    try:
        evidence = validate_evidence(raw)
    except ConflictError as exc:
        raise ValidationError(exc) from exc

    log_event('DEBUG', 'IO', 'load_scenario', f'scenario {name!r} with {evidence.n} sources')
    return Scenario(name, evidence)


def parse_scenario(text: str) -> EvidenceSet:
    return load_scenario(text).evidence


def emit_scenario(evidence: EvidenceSet, name: str = 'scenario') -> str:
    document = {'name': name, **evidence.to_dict()}
    return json.dumps(document, indent=2) + '\n'


# ---------------------------------------------------------------------------
# Series files
# ---------------------------------------------------------------------------

def _parse_float(text, row, field):
    try:
        value = float(text)
    except ValueError:
        raise SeriesSyntaxError(f'not a decimal number: {text!r}', row=row, field=field) from None
    if not math.isfinite(value):
        raise NonFiniteValue(row, field, value)
    return value


def parse_series(text: str) -> SensorSeries:
    """
    Parse a ``time,s<id>,...`` CSV document.

    Row numbers in errors count the header as row 1. Column order defines
    source order; ids must cover 1..n.
    """
    reader = csv.reader(io.StringIO(text))
    rows = [(reader.line_num, row) for row in reader if row]
    if not rows:
        raise SeriesSyntaxError('document is empty')

    _, header = rows[0]
    header = [cell.strip() for cell in header]
    if header[0] != 'time':
        raise SeriesSyntaxError(f"first column must be 'time', got {header[0]!r}", row=1, field=header[0])
    if len(header) < 2:
        raise SeriesSyntaxError('at least one sensor column is required', row=1)
    source_ids = []
    for column in header[1:]:
        match = SENSOR_COLUMN.match(column)
        if not match:
            raise SeriesSyntaxError(f'sensor columns are named s<id>, got {column!r}', row=1, field=column)
        source_ids.append(int(match.group(1)))

    width = len(header)
    if len(rows) == 1:
        raise SeriesSyntaxError('no data rows', row=1)

    timestamps = []
    readings = [[] for _ in source_ids]
    for line, row in rows[1:]:
        if len(row) != width:
            raise RaggedRow(line, width, len(row))
        time = _parse_float(row[0].strip(), line, 'time')
        if timestamps and time <= timestamps[-1]:
            raise NonIncreasingTime(line, timestamps[-1], time)
        timestamps.append(time)
        for column, cell in enumerate(row[1:]):
            readings[column].append(_parse_float(cell.strip(), line, header[column + 1]))

    try:
        series = SensorSeries(np.array(timestamps), np.array(readings), tuple(source_ids))
    except ConflictError as exc:
        raise ValidationError(exc) from exc

    log_event('DEBUG', 'IO', 'parse_series', f'{series.n} sensors x {series.length} samples')
    return series


def emit_series(series: SensorSeries) -> str:
    """CSV with full-precision floats (parse_series reproduces it exactly)."""
    return series.to_frame().to_csv(index=False, lineterminator='\n', float_format=lambda value: repr(float(value)))


def emit_conflict_series(cs: ConflictSeries, places: int = 6) -> str:
    """``time,cf`` rows, cf fixed to ``places`` decimals."""
    frame = cs.to_frame()
    frame['time'] = frame['time'].map(lambda value: repr(float(value)))
    frame['cf'] = frame['cf'].map(lambda value: format_value(value, places))
    return frame.to_csv(index=False, lineterminator='\n')


# ---------------------------------------------------------------------------
# Lattice output
# ---------------------------------------------------------------------------

def emit_lattice(lat: ConflictLattice, format: str = 'table', places: int = 6) -> str:
    """
    Render one row per non-empty subset, ordered by (size, members).

    ``table`` gives ``subset,size,cf`` CSV rows; ``structured`` gives the same
    rows as a JSON document.
    """
    if format not in LATTICE_FORMATS:
        raise ValueError(f'unknown lattice format {format!r}')

    rows = [(subset, format_value(value, places)) for subset, value in lat.items()]
    if format == 'table':
        lines = ['subset,size,cf']
        lines.extend(f'{subset.label},{subset.size},{cf}' for subset, cf in rows)
        return '\n'.join(lines) + '\n'

    document = {
        'n': lat.n,
        'subsets': [
            {
                'subset': subset.label,
                'members': [f'x{i}' for i in subset.members],
                'size': subset.size,
                'cf': float(cf),
            }
            for subset, cf in rows
        ],
    }
    return json.dumps(document, indent=2) + '\n'
