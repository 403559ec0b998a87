#!/usr/bin/env python3
"""
Conflict Lattice - Errors
Exception hierarchy shared by the measure library, the CLI and the API.
"""


class ConflictError(Exception):
    """Base class for every error raised by Conflict Lattice."""


# Evidence validation

class EvidenceError(ConflictError):
    """Raw evidence could not be turned into an EvidenceSet."""


class EmptyInput(EvidenceError):
    def __init__(self):
        super().__init__('evidence must contain at least one source')


class InvalidInterval(EvidenceError):
    def __init__(self, lo, hi, source_id=None):
        self.lo = lo
        self.hi = hi
        self.source_id = source_id
        where = f'source x{source_id}: ' if source_id is not None else ''
        super().__init__(f'{where}invalid interval [{lo}, {hi}] '
                         '(endpoints must be finite with lo <= hi)')


class InvalidSourceId(EvidenceError):
    def __init__(self, source_id):
        self.source_id = source_id
        super().__init__(f'source id must be an integer, got {source_id!r}')


class DuplicateId(EvidenceError):
    def __init__(self, source_id):
        self.source_id = source_id
        super().__init__(f'duplicate source id {source_id}')


class NonContiguousIds(EvidenceError):
    def __init__(self, ids):
        self.ids = tuple(ids)
        super().__init__(f'source ids must be exactly 1..{len(self.ids)}, got {sorted(self.ids)}')


# Subset shape

class SubsetError(ConflictError):
    """A source subset has the wrong shape for the requested operation."""


class EmptySubset(SubsetError):
    def __init__(self):
        super().__init__('subset must contain at least one source')


class SingletonSubset(SubsetError):
    def __init__(self):
        super().__init__('the weighted sub-interval sum needs at least two sources')


class UnknownSourceInSubset(SubsetError):
    def __init__(self, source_id, n):
        self.source_id = source_id
        self.n = n
        super().__init__(f'source x{source_id} is not one of the {n} available sources')


# Lattice

class LatticeError(ConflictError):
    pass


class TooManySources(LatticeError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f'{n} sources exceed the lattice enumeration limit of {limit}')


class TooFewSources(LatticeError):
    def __init__(self, n):
        self.n = n
        super().__init__(f'leave-one-out needs at least two sources, got {n}')


# Sensor series and windows

class SeriesError(ConflictError):
    pass


class EmptySeries(SeriesError):
    def __init__(self, what='series'):
        super().__init__(f'{what} is empty')


class WindowTooLong(SeriesError):
    def __init__(self, window_len, length):
        self.window_len = window_len
        self.length = length
        super().__init__(f'window of {window_len} samples is longer than the {length}-sample series')


class InvalidWindow(SeriesError):
    pass


class InvalidSeries(SeriesError):
    pass


class NonIncreasingTime(SeriesError):
    def __init__(self, row, previous, current):
        self.row = row
        super().__init__(f'row {row}: time {current} does not increase on {previous}')


class NonFiniteValue(SeriesError):
    def __init__(self, row, column, value):
        self.row = row
        self.column = column
        super().__init__(f'row {row}, column {column}: non-finite value {value!r}')


class RaggedRow(SeriesError):
    def __init__(self, row, expected, found):
        self.row = row
        super().__init__(f'row {row}: expected {expected} fields, found {found}')


# Scenarios

class ScenarioError(ConflictError):
    pass


class UnknownExample(ScenarioError):
    def __init__(self, number):
        self.number = number
        super().__init__(f'unknown example {number!r}; choose 1, 2 or 3')


class InvalidConfig(ScenarioError):
    pass


# File formats

class FileFormatError(ConflictError):
    pass


class ScenarioSyntaxError(FileFormatError):
    def __init__(self, message, line=None, column=None, field=None):
        self.line = line
        self.column = column
        self.field = field
        location = []
        if line is not None:
            location.append(f'line {line}')
        if column is not None:
            location.append(f'column {column}')
        if field is not None:
            location.append(f'field {field}')
        prefix = ', '.join(location)
        super().__init__(f'{prefix}: {message}' if prefix else message)


class SeriesSyntaxError(FileFormatError):
    def __init__(self, message, row=None, field=None):
        self.row = row
        self.field = field
        location = []
        if row is not None:
            location.append(f'row {row}')
        if field is not None:
            location.append(f'field {field}')
        prefix = ', '.join(location)
        super().__init__(f'{prefix}: {message}' if prefix else message)


class ValidationError(FileFormatError):
    """A document parsed but its content failed evidence validation."""

    def __init__(self, cause):
        self.cause = cause
        super().__init__(f'{type(cause).__name__}: {cause}')
