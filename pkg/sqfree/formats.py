"""JSON input schemas and text/json/csv rendering of reports.

Input files are JSON objects, the kind is recognized by their keys:

* simplicial: ``{"n": 4, "facets": [[1, 2, 3], ...]}``
* relative: ``{"n": 3, "facets": [[1, 2, 3]], "subcomplex": [[1]]}``
* lattice: ``{"n": 3, "faces": [{"id": "0", "dim": 0}, ...],
  "covers": [["0", "r1"], ...], "ideal": ["0", "r1", ...]}``
  (``ideal`` is optional and defaults to the whole lattice)
* module: ``{"lattice": <lattice or n>, "dims": {"1": 1, ...},
  "maps": {"0->1": [["1"]], ...}}``, matrix entries as decimal strings

``demo:<name>`` selects a built-in example instead of a file.
"""

import csv
import io
import json
from dataclasses import dataclass, field as _field

from .lattice import OrderIdeal, boolean_lattice, from_cover_list, \
    validate_order_ideal, ideal_from_facets
from .library import Subject, demo, simplicial_complex
from .linalg import QQ
from .module import SquarefreeModule
from .util import InputError

__all__ = ['Report', 'load_input', 'parse_subject', 'module_from_dict',
           'module_to_dict', 'to_json', 'to_csv', 'table_grid', 'table_rows',
           'TABLE_HEADER']

TABLE_HEADER = ('i', 'face', 'cone_dim', 'cell_dim', 'dim')


def _integer(v, what):
    """an int from a JSON number or digit string, fractions are refused"""
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            pass
    elif isinstance(v, int) and not isinstance(v, bool):
        return v
    raise InputError('{} {!r} is not an integer'.format(what, v),
                     kind='schema', witness=(v,))


def _mapping(data, key):
    value = data.get(key, {})
    if not isinstance(value, dict):
        raise InputError('"{}" must be an object'.format(key), kind='schema')
    return value


def _lattice(data):
    if isinstance(data, dict):
        return from_cover_list(data)
    return boolean_lattice(_integer(data, 'lattice'))


def _facets(data, key):
    try:
        return [tuple(_integer(v, 'vertex') for v in f) for f in data[key]]
    except (TypeError, ValueError) as e:
        raise InputError('bad {} list: {}'.format(key, e), kind='schema')


def module_from_dict(data, field=QQ):
    """Parse the JSON module schema.

    Raises:
        InputError: on schema violations or bad matrix entries
        LatticeError, ModuleError: if the data is not a valid module
    """
    if 'lattice' not in data or 'dims' not in data:
        raise InputError('module needs "lattice" and "dims"', kind='schema')
    L = _lattice(data['lattice'])
    dims = [0] * len(L)
    for f, d in _mapping(data, 'dims').items():
        dims[L.idx(f)] = _integer(d, 'dimension')
    maps = {}
    for key, rows in _mapping(data, 'maps').items():
        try:
            lo, up = key.split('->')
        except ValueError:
            raise InputError('map key {!r} is not "lower->upper"'.format(key),
                             kind='schema', witness=(key,))
        a, b = L.idx(lo.strip()), L.idx(up.strip())
        try:
            entries = [[field.parse(x) for x in r] for r in rows]
        except TypeError:
            raise InputError('map {!r} is not a list of rows'.format(key),
                             kind='schema', witness=(key,))
        maps[(a, b)] = field.matrix(entries, shape=(dims[b], dims[a]))
    return SquarefreeModule(L, dims, maps, field=field,
                            name=data.get('name', 'module'))


def module_to_dict(M):
    """the JSON module schema of M, only nonempty maps are listed"""
    L, fmt = M.lattice, M.field.format
    maps = {}
    for (a, b), m in M.maps.items():
        if m.size:
            maps['{}->{}'.format(L.id(a), L.id(b))] = [[fmt(x) for x in r]
                                                       for r in m.tolist()]
    return {'lattice': L.as_dict(), 'dims': M.dims_by_id(), 'maps': maps}


def parse_subject(data, field=QQ, name=''):
    """Turn parsed JSON into a :class:`~sqfree.library.Subject`."""
    if not isinstance(data, dict):
        raise InputError('input must be a JSON object', kind='schema')
    if 'dims' in data:
        M = module_from_dict(data, field)
        return Subject('module', M.lattice, given=M, name=name)
    if 'faces' in data and 'covers' in data:
        L = from_cover_list(data)
        if 'ideal' in data:
            ideal = validate_order_ideal(L, data['ideal'])
        else:
            ideal = OrderIdeal(L, L)
        return Subject('ideal', L, ideal, name=name)
    if 'n' in data and 'facets' in data:
        s = simplicial_complex(_integer(data['n'], 'n'),
                               _facets(data, 'facets'), name)
        if 'subcomplex' in data:
            L = s.lattice
            sub = ideal_from_facets(L, [L.subset(f)
                                        for f in _facets(data, 'subcomplex')])
            if not sub.members <= s.ideal.members:
                raise InputError('subcomplex is not contained in the complex',
                                 kind='not-subset')
            s = Subject('relative', L, s.ideal, sub, name=name)
        return s
    raise InputError('cannot tell the kind of input from keys {}'.format(
        sorted(data)), kind='schema')


def load_input(arg, field=QQ):
    """Load a subject from a JSON file or ``demo:<name>``.

    Raises:
        InputError: if the file cannot be read or parsed
    """
    if arg.startswith('demo:'):
        return demo(arg[5:])
    try:
        with open(arg) as f:
            data = json.load(f)
    except OSError as e:
        raise InputError('cannot read {}: {}'.format(arg, e), kind='io')
    except json.JSONDecodeError as e:
        raise InputError('{} is not valid JSON: {}'.format(arg, e),
                         kind='json')
    return parse_subject(data, field, name=arg)


def to_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def to_csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator='\n')
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def table_rows(table):
    """rows ``(i, face, cone dim, cell dim, entry)`` of a local cohomology
    table"""
    return [(i, f, d, d - 1, v) for i, f, d, v in table.rows()]


def table_grid(table):
    """the table as text, one row per i and one column per face"""
    L = table.lattice
    ids = [L.id(f) for f in L]
    width = max([len(x) for x in ids] + [3])
    head = 'i\\F'.ljust(4) + ' '.join(x.rjust(width) for x in ids)
    lines = [head]
    for i in range(L.n + 1):
        lines.append(str(i).ljust(4) + ' '.join(
            str(table.entry(i, f)).rjust(width) for f in L))
    return '\n'.join(lines) + '\n'


@dataclass
class Report:
    """The output of a command in all formats.

    Attributes:
        data (dict): JSON representation
        text (str): human readable representation
        header (tuple): csv header
        rows (list): csv rows
        passed (bool): False makes the command exit with 1
    """

    data: dict
    text: str
    header: tuple = ()
    rows: list = _field(default_factory=list)
    passed: bool = True

    def render(self, fmt):
        if fmt == 'json':
            return to_json(self.data)
        if fmt == 'csv':
            return to_csv(self.header, self.rows)
        return self.text
