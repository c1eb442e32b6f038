"""Cohen-Macaulay, Buchsbaum and orientability verdicts from the local
cohomology table.

Buchsbaumness is decided by the table criterion: a module M of dimension r is
Buchsbaum iff ``[H^i_m(M)]_a = 0`` for all ``i != r`` and ``a != 0``.
"""

import logging
from dataclasses import dataclass, field as _field

from .cohomology import LocalCohomologyTable
from .linalg import QQ
from .module import stanley_reisner, relative_ideal, positive_part, \
    krull_dimension
from .resolution import ext_modules, canonical_module_of
from .topology import connected_components, is_homology_manifold, \
    reduced_homology, local_homology

__all__ = ['Verdict', 'OrientabilityReport', 'ClassificationReport',
           'MunkresReport', 'depth', 'is_cohen_macaulay', 'is_buchsbaum',
           'gorenstein_like', 'classify', 'classify_relative',
           'orientability_report', 'poincare_duality_check',
           'munkres_criterion']

log = logging.getLogger(__name__)


@dataclass
class Verdict:
    """Outcome of a criterion.

    Attributes:
        holds (bool): the answer, None if the criterion does not apply
        evidence (list): tuples backing the answer, for table criteria
            ``(i, face id, entry)`` of the offending entries
        reason (str): short explanation
    """

    holds: bool
    evidence: list = _field(default_factory=list)
    reason: str = ''

    def __bool__(self):
        return bool(self.holds)

    def as_dict(self):
        return {'holds': self.holds, 'reason': self.reason,
                'evidence': [list(e) for e in self.evidence]}


@dataclass
class OrientabilityReport:
    components: int
    index: int = None
    orientable: bool = None
    applicable: bool = False
    reason: str = ''

    def as_dict(self):
        return {'components': self.components, 'index': self.index,
                'orientable': self.orientable, 'applicable': self.applicable,
                'reason': self.reason}


@dataclass
class ClassificationReport:
    """Everything :func:`classify` finds out about a module."""

    name: str
    krull_dim: int
    depth: int
    cohen_macaulay: Verdict
    buchsbaum: Verdict
    gorenstein_like: Verdict = None
    components: int = None
    orientability: OrientabilityReport = None
    table: LocalCohomologyTable = None

    def as_dict(self):
        d = {'name': self.name, 'krull_dim': self.krull_dim,
             'depth': self.depth,
             'cohen_macaulay': self.cohen_macaulay.as_dict(),
             'buchsbaum': self.buchsbaum.as_dict(),
             'components': self.components}
        if self.gorenstein_like is not None:
            d['gorenstein_like'] = self.gorenstein_like.as_dict()
        if self.orientability is not None:
            d['orientability'] = self.orientability.as_dict()
        return d


def depth(M, table=None):
    """least i with ``H^i_m(M) != 0``, None for the zero module"""
    if M.is_zero():
        return None
    table = table or LocalCohomologyTable(M)
    L = M.lattice
    return min(i for i in range(L.n + 1) for f in L if table.entry(i, f))


def _offending(table, keep):
    L = table.lattice
    return [(i, L.id(f), table.entry(i, f))
            for i in range(L.n + 1) for f in L
            if keep(i, f) and table.entry(i, f)]


def is_cohen_macaulay(M, table=None, ideal=None):
    """Cohen-Macaulay iff local cohomology vanishes below the dimension.

    Args:
        M (SquarefreeModule): the module
        table (LocalCohomologyTable): its table, computed if omitted
        ideal (OrderIdeal): Delta if M is k[Delta], then dimension <= 1
            is decided without the table

    Returns:
        Verdict: with the offending ``(i, face, entry)`` as evidence
    """
    r = krull_dimension(M)
    if r is None:
        return Verdict(True, reason='zero module')
    if ideal is not None and r <= 1:
        return Verdict(True, reason='k[Delta] of dimension <= 1')
    table = table or LocalCohomologyTable(M)
    bad = _offending(table, lambda i, f: i != r)
    return Verdict(not bad, bad, 'local cohomology {} below dimension {}'
                   .format('vanishes' if not bad else 'nonzero', r))


def is_buchsbaum(M, table=None):
    """Buchsbaum iff local cohomology below the dimension lives in degree 0.

    Returns:
        Verdict: with the offending ``(i, face, entry)`` as evidence
    """
    r = krull_dimension(M)
    if r is None:
        return Verdict(True, reason='zero module')
    table = table or LocalCohomologyTable(M)
    bottom = M.lattice.bottom
    bad = _offending(table, lambda i, f: i != r and f != bottom)
    return Verdict(not bad, bad, 'local cohomology below dimension {} is {}'
                   .format(r, 'of finite length' if not bad else
                           'not of finite length'))


def gorenstein_like(M, ext=None):
    """Compare the dimension vectors of ``(K_M)_{>0}`` and ``M_{>0}``.

    ``K_M = Ext^{n-r}(M, K)``. A module isomorphism is not attempted, the
    verdict only says whether the dimensions agree.

    Returns:
        Verdict: evidence is the first differing ``(face, dim K_M, dim M)``
    """
    r = krull_dimension(M)
    if r is None:
        return Verdict(True, reason='zero module')
    L = M.lattice
    ext = ext or ext_modules(M)
    K = positive_part(ext[L.n - r])
    P = positive_part(M)
    for f in L:
        if K.dims[f] != P.dims[f]:
            return Verdict(False, [(L.id(f), K.dims[f], P.dims[f])],
                           'not Gorenstein-like')
    return Verdict(True, reason='canonical module has the same dimensions')


def orientability_report(ideal, table=None, field=QQ):
    """Orientability of a closed homology manifold via the index
    ``dim [H^{d+1}_m(k[Delta])]_0``.

    The manifold is orientable iff the index equals the number of connected
    components. For anything but a closed manifold over a boolean lattice
    the report is marked not applicable.
    """
    L = ideal.lattice
    comps = connected_components(ideal)
    if not L.is_boolean:
        return OrientabilityReport(comps, reason='needs a boolean lattice')
    if ideal.dim is None or ideal.dim < 1:
        return OrientabilityReport(comps, reason='dimension below 1')
    if table is not None:
        field = table.module.field
    closed = is_homology_manifold(ideal, False, field)
    if not closed:
        if is_homology_manifold(ideal, True, field):
            why = 'manifold with boundary'
        else:
            why = 'not a homology manifold: {}'.format(closed.reason)
        return OrientabilityReport(comps, reason=why)
    table = table or LocalCohomologyTable(stanley_reisner(ideal, field))
    index = table.entry(ideal.dim + 1, L.bottom)
    return OrientabilityReport(comps, index, index == comps, True,
                               'closed homology manifold')


def poincare_duality_check(ideal, field=QQ, table=None):
    """Compare ``[H^i_m((K_Delta)_{>0})]_0`` with
    ``[H^{d-i+2}_m(k[Delta]_{>0})]_0`` for i = 1..d+1.

    Needs k[Delta] Buchsbaum, otherwise the verdict does not apply.

    Returns:
        Verdict: evidence ``(i, left, right)`` for every i
    """
    L = ideal.lattice
    d = ideal.dim
    R = stanley_reisner(ideal, field)
    if d is None or d < 0:
        return Verdict(None, reason='empty complex')
    table = table or LocalCohomologyTable(R)
    if not is_buchsbaum(R, table):
        return Verdict(None, reason='k[Delta] is not Buchsbaum')
    K = canonical_module_of(ideal, field)
    left = LocalCohomologyTable(positive_part(K))
    right = LocalCohomologyTable(positive_part(R))
    rows = [(i, left.entry(i, L.bottom), right.entry(d - i + 2, L.bottom))
            for i in range(1, d + 2)]
    ok = all(a == b for _, a, b in rows)
    return Verdict(ok, rows, 'duality {}'.format('holds' if ok else 'fails'))


def classify(M, ideal=None, jobs=1):
    """Classify a module.

    Args:
        M (SquarefreeModule): the module
        ideal (OrderIdeal): Delta if M is k[Delta], enables components and
            orientability
        jobs (int): worker threads for the table columns

    Returns:
        ClassificationReport: the report, the table is attached
    """
    table = LocalCohomologyTable(M).compute_all(jobs)
    r = krull_dimension(M)
    cm = is_cohen_macaulay(M, table, ideal)
    bb = is_buchsbaum(M, table)
    if cm.holds and not bb.holds:
        log.warning('Cohen-Macaulay but not Buchsbaum: %s', bb.evidence)
    gl = gorenstein_like(M) if r is not None else None
    comps = orient = None
    if ideal is not None:
        comps = connected_components(ideal)
        orient = orientability_report(ideal, table, M.field)
    report = ClassificationReport(M.name or 'M', r, depth(M, table), cm, bb,
                                  gl, comps, orient, table)
    log.info('classified %s: dim %s, depth %s, CM %s, Buchsbaum %s',
             report.name, r, report.depth, cm.holds, bb.holds)
    return report


def classify_relative(ideal, sub, field=QQ, jobs=1):
    """Classify the relative ideal I_{Delta/Sigma}.

    For empty Sigma this is :func:`classify` of k[Delta].
    """
    if not sub.members:
        return classify(stanley_reisner(ideal, field), ideal, jobs)
    return classify(relative_ideal(ideal, sub, field), jobs=jobs)


@dataclass
class MunkresReport:
    topological: Verdict
    algebraic: Verdict

    @property
    def agree(self):
        return bool(self.topological) == bool(self.algebraic)

    def as_dict(self):
        return {'topological': self.topological.as_dict(),
                'algebraic': self.algebraic.as_dict(), 'agree': self.agree}


def munkres_criterion(ideal, field=QQ):
    """Decide Cohen-Macaulayness of k[Delta] topologically.

    k[Delta] is Cohen-Macaulay iff the reduced homology of Delta and the local
    homology at every point vanish below the dimension d. The topological
    verdict is returned together with the algebraic one.
    """
    L = ideal.lattice
    d = ideal.dim
    bad = []
    if d is not None:
        for i, h in enumerate(reduced_homology(ideal, field), -1):
            if i < d and h:
                bad.append((i, L.id(L.bottom), h))
        for f in ideal:
            if f == L.bottom:
                continue
            for i, h in enumerate(local_homology(ideal, f, field)):
                if i < d and h:
                    bad.append((i, L.id(f), h))
    top = Verdict(not bad, bad, 'homology below dimension {}'.format(d))
    alg = is_cohen_macaulay(stanley_reisner(ideal, field), ideal=ideal)
    return MunkresReport(top, alg)
