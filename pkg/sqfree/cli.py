"""The ``sqfree`` command line tool.

::

    sqfree localcoh demo:cycle3
    sqfree classify --field fp:2 demo:rp2-6
    sqfree check hochster --format json complex.json

Exit codes: 0 on success or passed check, 1 on failed check or invalid
input, 2 on usage errors.
"""

import logging
import sys
from argparse import ArgumentParser, ArgumentDefaultsHelpFormatter
from dataclasses import dataclass

from .checks import CHECK_NAMES, check_duality, check_hochster, \
    check_poincare, check_omega, check_ext, check_sheaf, check_global, \
    check_compact
from .classify import classify, classify_relative
from .cohomology import local_cohomology_table
from .formats import Report, load_input, table_grid, table_rows, to_json, \
    TABLE_HEADER
from .lattice import OrderIdeal
from .library import DEMOS, demo
from .linalg import parse_field, QQ
from .module import positive_part
from .resolution import ext_modules
from .util import SqfreeError, InputError
from .__version__ import __version__

__all__ = ['RunConfig', 'main', 'run', 'COMMANDS']

log = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Settings of one invocation.

    Attributes:
        command (str): one of :data:`COMMANDS`
        input (str): input file, ``demo:<name>`` or, for ``demo``, the name
            with or without the ``demo:`` prefix
        field (Field): coefficient field
        format (str): ``text``, ``json`` or ``csv``
        out (str): output file, stdout if None
        jobs (int): worker threads for local cohomology columns
        verbose (int): 0 warnings, 1 info, 2 debug
        check (str): check name for the ``check`` command
    """

    command: str
    input: str
    field: object = QQ
    format: str = 'text'
    out: str = None
    jobs: int = 1
    verbose: int = 0
    check: str = None

    @classmethod
    def from_args(cls, args):
        return cls(args.command, args.input, parse_field(args.field),
                   args.format, args.out, args.jobs, args.verbose,
                   getattr(args, 'check', None))


def _yes(v):
    return {True: 'yes', False: 'no', None: 'n/a'}[v]


def cmd_validate(cfg, subject):
    """structural validation, done while loading, plus incidence signs

    A lattice breaking the diamond property fails with an
    :class:`~sqfree.util.IncidenceError` of kind ``diamond``.
    """
    L = subject.lattice
    L.incidence.check()
    if subject.kind == 'module':
        subject.given.check()
    data = {'status': 'ok', 'kind': subject.kind, 'n': L.n, 'faces': len(L),
            'name': subject.name}
    if subject.ideal is not None:
        data['ideal'] = subject.ideal.ids()
    return Report(data, 'ok\n', ('status', 'kind', 'n', 'faces'),
                  [('ok', subject.kind, L.n, len(L))])


def cmd_localcoh(cfg, subject):
    M = subject.module(cfg.field)
    table = local_cohomology_table(M, cfg.jobs)
    rows = table_rows(table)
    data = {'name': subject.name, 'field': str(cfg.field),
            'n': M.lattice.n,
            'table': [dict(zip(TABLE_HEADER, r)) for r in rows]}
    text = 'local cohomology of {} over {}\n'.format(subject.name, cfg.field)
    return Report(data, text + table_grid(table), TABLE_HEADER, rows)


def cmd_ext(cfg, subject):
    M = subject.module(cfg.field)
    L = M.lattice
    ext = ext_modules(M)
    rows = [(j, L.id(f), L.dim(f), e.dims[f])
            for j, e in enumerate(ext) for f in L]
    data = {'name': subject.name, 'field': str(cfg.field),
            'ext': [{'j': j, 'dims': e.dims_by_id()}
                    for j, e in enumerate(ext)]}
    lines = ['Ext^j({}, K) over {}'.format(subject.name, cfg.field)]
    for j, e in enumerate(ext):
        lines.append('{}: {}'.format(j, ' '.join(
            '{}={}'.format(L.id(f), d) for f, d in enumerate(e.dims) if d)
            or '0'))
    return Report(data, '\n'.join(lines) + '\n',
                  ('j', 'face', 'cone_dim', 'dim'), rows)


def _classification(cfg, subject):
    if subject.kind == 'relative':
        return classify_relative(subject.ideal, subject.sub, cfg.field,
                                 cfg.jobs)
    M = subject.module(cfg.field)
    return classify(M, subject.ideal, cfg.jobs)


def _classify_text(name, field, r):
    lines = ['name: {}'.format(name), 'field: {}'.format(field),
             'krull dimension: {}'.format(r.krull_dim),
             'depth: {}'.format(r.depth),
             'Cohen-Macaulay: {}'.format(_yes(r.cohen_macaulay.holds)),
             'Buchsbaum: {}'.format(_yes(r.buchsbaum.holds))]
    for i, face, v in r.buchsbaum.evidence[:1]:
        lines.append('  witness: H^{} at {} = {}'.format(i, face, v))
    if r.gorenstein_like is not None:
        lines.append('Gorenstein-like: {}'.format(
            _yes(r.gorenstein_like.holds)))
    if r.components is not None:
        lines.append('components: {}'.format(r.components))
    o = r.orientability
    if o is not None:
        if o.applicable:
            lines.append('orientability index: {} ({})'.format(
                o.index, 'orientable' if o.orientable else 'not orientable'))
        else:
            lines.append('orientability: n/a ({})'.format(o.reason))
    return '\n'.join(lines) + '\n'


def cmd_classify(cfg, subject):
    r = _classification(cfg, subject)
    data = r.as_dict()
    data.update(name=subject.name, field=str(cfg.field))
    rows = [('krull_dim', r.krull_dim), ('depth', r.depth),
            ('cohen_macaulay', r.cohen_macaulay.holds),
            ('buchsbaum', r.buchsbaum.holds)]
    return Report(data, _classify_text(subject.name, cfg.field, r),
                  ('property', 'value'), rows)


def _need(subject, *kinds):
    if subject.kind not in kinds:
        raise InputError('this check needs input of kind {}, got {}'.format(
            ' or '.join(kinds), subject.kind), kind='subject')


def run_check(name, subject, field=QQ):
    """Run a named check on a subject.

    Raises:
        InputError: if the check does not fit the kind of input
    """
    if name == 'duality':
        return check_duality(subject.module(field))
    if name == 'omega':
        return check_omega(subject.lattice, field)
    if name == 'global':
        if subject.kind == 'module':
            M = subject.given
            return check_global(M, OrderIdeal(M.lattice, M.lattice))
        _need(subject, 'ideal')
        return check_global(positive_part(subject.module(field)),
                            subject.ideal)
    if name == 'compact':
        _need(subject, 'relative')
        return check_compact(subject.ideal, subject.sub, field)
    funcs = {'hochster': check_hochster, 'poincare': check_poincare,
             'ext': check_ext, 'sheaf': check_sheaf}
    if name not in funcs:
        raise InputError('unknown check {!r}'.format(name), kind='check')
    _need(subject, 'ideal')
    return funcs[name](subject.ideal, field)


def cmd_check(cfg, subject):
    res = run_check(cfg.check, subject, cfg.field)
    data = res.as_dict()
    data.update(name=subject.name, field=str(cfg.field))
    text = '{} {}: {}'.format(cfg.check, subject.name, res.status)
    if res.counterexample:
        text += ' at {}'.format(', '.join(map(str, res.counterexample)))
    elif 'reason' in res.details:
        text += ' ({})'.format(res.details['reason'])
    return Report(data, text + '\n', ('check', 'status', 'counterexample'),
                  [(cfg.check, res.status, ' '.join(
                      map(str, res.counterexample or ())))],
                  passed=res.passed is not False)


def cmd_demo(cfg, subject):
    """local cohomology table and classification of a built-in example"""
    lc = cmd_localcoh(cfg, subject)
    cl = cmd_classify(cfg, subject)
    data = {'demo': subject.name, 'field': str(cfg.field),
            'table': lc.data['table'], 'classification': cl.data}
    return Report(data, lc.text + '\n' + cl.text, lc.header, lc.rows)


COMMANDS = {
    'validate': cmd_validate,
    'localcoh': cmd_localcoh,
    'ext': cmd_ext,
    'classify': cmd_classify,
    'check': cmd_check,
    'demo': cmd_demo,
}


def run(cfg):
    """Execute a configured command.

    Returns:
        Report: the command output
    """
    arg = cfg.input
    if cfg.command == 'demo':
        subject = demo(arg[5:] if arg.startswith('demo:') else arg)
    else:
        subject = load_input(arg, cfg.field)
    log.info('%s %s (%s) over %s', cfg.command, subject.name, subject.kind,
             cfg.field)
    return COMMANDS[cfg.command](cfg, subject)


def parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('-f', '--field', default='q',
                        help='coefficient field, q or fp:<p>')
    common.add_argument('-F', '--format', default='text',
                        choices=['text', 'json', 'csv'], help='output format')
    common.add_argument('-o', '--out', help='output file instead of stdout')
    common.add_argument('-j', '--jobs', type=int, default=1,
                        help='worker threads for local cohomology')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='more log output, repeat for debug')

    p = ArgumentParser(
        prog='sqfree',
        description='local cohomology and duality of squarefree modules',
        formatter_class=ArgumentDefaultsHelpFormatter)
    p.add_argument('--version', action='version', version=__version__)
    sub = p.add_subparsers(dest='command', required=True)
    kw = dict(parents=[common], formatter_class=ArgumentDefaultsHelpFormatter)
    inp = 'JSON file or demo:<name>'
    sub.add_parser('validate', help='validate input', **kw).add_argument(
        'input', help=inp)
    sub.add_parser('localcoh', help='local cohomology table',
                   **kw).add_argument('input', help=inp)
    sub.add_parser('ext', help='Ext modules into the canonical module',
                   **kw).add_argument('input', help=inp)
    sub.add_parser('classify', help='Cohen-Macaulay, Buchsbaum, orientable',
                   **kw).add_argument('input', help=inp)
    c = sub.add_parser('check', help='consistency checks', **kw)
    c.add_argument('check', choices=CHECK_NAMES, help='check to run')
    c.add_argument('input', help=inp)
    sub.add_parser('demo', help='run a built-in example', **kw).add_argument(
        'input', metavar='name',
        help='demo name, one of ' + ', '.join(sorted(DEMOS)))
    return p


def main(argv=None):
    args = parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose,
                                                               2)]
    logging.basicConfig(level=level,
                        format='%(name)s:%(levelname)s:%(message)s')
    try:
        cfg = RunConfig.from_args(args)
        report = run(cfg)
    except SqfreeError as e:
        log.info('failed: %s', e)
        sys.stdout.write(to_json(e.as_dict()))
        return 1
    out = report.render(cfg.format)
    if cfg.out:
        with open(cfg.out, 'w') as f:
            f.write(out)
    else:
        sys.stdout.write(out)
    return 0 if report.passed else 1


if __name__ == '__main__':
    sys.exit(main())
