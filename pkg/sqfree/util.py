"""utility functions and classes shared by all modules"""

import re
from concurrent.futures import ThreadPoolExecutor

__all__ = ['SqfreeError', 'LinAlgError', 'ComplexError', 'LatticeError',
           'IncidenceError', 'ClosureError', 'ModuleError',
           'ResolutionError', 'OracleError', 'InputError',
           'natural_key', 'parallel_map']


class SqfreeError(Exception):
    """Base of all errors raised by this package.

    Args:
        message (str): human readable description
        kind (str): short machine readable error kind
        witness (tuple): offending objects, usually face ids
    """

    kind = 'error'

    def __init__(self, message, kind=None, witness=()):
        super().__init__(message)
        if kind:
            self.kind = kind
        self.witness = tuple(witness)

    def as_dict(self):
        """diagnostics as JSON-able dict"""
        return {'error': type(self).__name__, 'kind': self.kind,
                'message': str(self),
                'witness': [str(w) for w in self.witness]}


class LinAlgError(SqfreeError):
    """inconsistent linear system or shape mismatch"""
    kind = 'linalg'


class ComplexError(SqfreeError):
    """a complex whose differentials do not compose to zero"""
    kind = 'composition-not-zero'


class LatticeError(SqfreeError):
    """face lattice data violating a lattice invariant"""
    kind = 'lattice'


class IncidenceError(LatticeError):
    """an interval of length 2 is no diamond or the diamond sign system has
    no solution"""
    kind = 'invalid-cell-structure'


class ClosureError(SqfreeError):
    """a face set that is not downward (upward) closed"""
    kind = 'closure'


class ModuleError(SqfreeError):
    """inconsistent squarefree module or morphism data"""
    kind = 'module'


class ResolutionError(SqfreeError):
    """projective resolution did not terminate within n steps"""
    kind = 'resolution-length'


class OracleError(SqfreeError):
    """topology oracle called outside its domain"""
    kind = 'oracle'


class InputError(SqfreeError):
    """malformed input file, demo name or option"""
    kind = 'input'


_token = re.compile(r'(\d+)')


def natural_key(text):
    """Sort key that orders embedded numbers numerically.

    ``'1,10'`` sorts after ``'1,2'``.

    Args:
        text (str): text to make a key for

    Returns:
        tuple: sort key
    """
    return tuple((0, int(t), '') if t.isdigit() else (1, 0, t)
                 for t in _token.split(str(text)) if t)


def parallel_map(func, items, jobs=1):
    """map func over items, optionally on a pool of worker threads

    Results are returned in the order of items, regardless of completion order.

    Args:
        func (callable): function of one argument
        items (iterable): arguments
        jobs (int): # of worker threads, <=1 runs in the calling thread

    Returns:
        list: func(item) for each item
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(i) for i in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, items))
