"""Consistency checks between independent computations.

Every check returns a :class:`CheckResult`. ``passed`` is None when the
check does not apply to its input, the reason is then in ``details``.
"""

import logging
from dataclasses import dataclass, field as _field

from .classify import poincare_duality_check
from .cohomology import LocalCohomologyTable, sheaf_cohomology_dims
from .linalg import QQ
from .lattice import OrderIdeal
from .module import stanley_reisner, relative_ideal, canonical_K
from .resolution import ext_modules, ext_via_dualizing, dualizing_complex, \
    global_duality_dims
from .topology import reduced_homology, local_homology, relative_homology, \
    connected_components, compact_support_oracle, SimplicialPair

__all__ = ['CheckResult', 'CHECK_NAMES', 'check_duality', 'check_hochster',
           'check_poincare', 'check_omega', 'check_ext', 'check_sheaf',
           'check_global', 'check_compact']

log = logging.getLogger(__name__)

CHECK_NAMES = ('duality', 'hochster', 'poincare', 'omega', 'ext', 'sheaf',
               'global', 'compact')


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: tuple = None
    details: dict = _field(default_factory=dict)

    @property
    def status(self):
        return {True: 'pass', False: 'fail', None: 'skipped'}[self.passed]

    def as_dict(self):
        return {'check': self.name, 'status': self.status,
                'counterexample': (list(self.counterexample)
                                   if self.counterexample else None),
                'details': self.details}


def _first_mismatch(name, pairs, **details):
    """pairs yields ``(key tuple, expected, found)``"""
    count = 0
    for key, a, b in pairs:
        count += 1
        if a != b:
            log.info('%s check fails at %s: %s != %s', name, key, a, b)
            return CheckResult(name, False, tuple(key) + (a, b),
                               dict(details, compared=count))
    return CheckResult(name, True, details=dict(details, compared=count))


def check_duality(M, table=None, ext=None):
    """``dim Ext^{n-i}(M, K)_F`` equals the table entry ``(i, F)`` for all
    i and F.

    The counterexample is ``(i, face, ext dim, table entry)``.
    """
    L = M.lattice
    table = table or LocalCohomologyTable(M)
    ext = ext or ext_modules(M)
    pairs = (((i, L.id(f)), ext[L.n - i].dims[f], table.entry(i, f))
             for i in range(L.n + 1) for f in L)
    return _first_mismatch('duality', pairs)


def _require_boolean(name, ideal):
    if not ideal.lattice.is_boolean:
        return CheckResult(name, None,
                           details={'reason': 'needs a boolean lattice'})


def check_hochster(ideal, field=QQ, table=None):
    """Compare the table of k[Delta] with simplicial homology.

    ``entry(i+1, bottom)`` is the reduced homology ``H_i(Delta)``, and for a
    nonempty face F of Delta ``entry(i+1, F)`` is the local homology at F.
    Columns of faces outside Delta vanish.
    """
    skip = _require_boolean('hochster', ideal)
    if skip:
        return skip
    L = ideal.lattice
    table = table or LocalCohomologyTable(stanley_reisner(ideal, field))

    def pairs():
        red = reduced_homology(ideal, field)
        for i in range(-1, L.n):
            h = red[i + 1] if i + 1 < len(red) else 0
            yield (i + 1, L.id(L.bottom)), h, table.entry(i + 1, L.bottom)
        for f in L:
            if f == L.bottom:
                continue
            if f in ideal:
                loc = local_homology(ideal, f, field)
            else:
                loc = []
            yield (0, L.id(f)), 0, table.entry(0, f)
            for i in range(L.n):
                h = loc[i] if i < len(loc) else 0
                yield (i + 1, L.id(f)), h, table.entry(i + 1, f)

    return _first_mismatch('hochster', pairs())


def check_poincare(ideal, field=QQ):
    """both sides of Poincare duality for a Buchsbaum k[Delta]"""
    v = poincare_duality_check(ideal, field)
    if v.holds is None:
        return CheckResult('poincare', None, details={'reason': v.reason})
    bad = [e for e in v.evidence if e[1] != e[2]]
    return CheckResult('poincare', v.holds, bad[0] if bad else None,
                       {'rows': [list(e) for e in v.evidence]})


def check_omega(L, field=QQ):
    """The dualizing complex resolves K: its only cohomology is K at
    position -n+1."""
    C = dualizing_complex(L, field)
    K = canonical_K(L, field)

    def pairs():
        for i in range(C.lo, C.hi + 1):
            H = C.cohomology(i)
            for f in L:
                want = K.dims[f] if i == C.lo else 0
                yield (i, L.id(f)), want, H.dims[f]

    return _first_mismatch('omega', pairs())


def check_ext(ideal, field=QQ):
    """Ext of k[Delta] from a projective resolution and from the dualizing
    complex agree in every degree."""
    L = ideal.lattice
    a = ext_modules(stanley_reisner(ideal, field))
    b = ext_via_dualizing(ideal, field)
    pairs = (((j, L.id(f)), a[j].dims[f], b[j].dims[f])
             for j in range(L.n + 1) for f in L)
    return _first_mismatch('ext', pairs)


def check_sheaf(ideal, field=QQ):
    """Sheaf cohomology of k[Delta]+ is the cohomology of ``|Delta|``, and
    h^0 counts the connected components."""
    skip = _require_boolean('sheaf', ideal)
    if skip:
        return skip
    L = ideal.lattice
    h = sheaf_cohomology_dims(stanley_reisner(ideal, field))
    top = relative_homology(SimplicialPair(ideal, OrderIdeal(L, ())), field)
    comps = connected_components(ideal)

    def pairs():
        yield ('components',), comps, h[0]
        for i in range(L.n):
            yield (i,), top[i] if i < len(top) else 0, h[i]

    return _first_mismatch('sheaf', pairs(), sheaf=h)


def check_global(M, ideal):
    """Degree 0 of ``Ext^i(M, omega_Delta)`` against ``h^{-i}(B, M+)`` for
    M vanishing at the bottom face."""
    L = M.lattice
    if M.dims[L.bottom]:
        return CheckResult('global', None, details={
            'reason': 'module does not vanish at the bottom face'})
    h = sheaf_cohomology_dims(M)
    dims = global_duality_dims(M, ideal)
    pairs = (((i,), h[-i], d) for i, d in dims)
    return _first_mismatch('global', pairs)


def check_compact(ideal, sub, field=QQ):
    """``[H^{i+1}_m(I_{Delta/Sigma})]_0`` against the compactly supported
    cohomology of ``|Delta| - |Sigma|``, for nonempty Sigma."""
    skip = _require_boolean('compact', ideal)
    if skip:
        return skip
    L = ideal.lattice
    if not sub.members:
        return CheckResult('compact', None,
                           details={'reason': 'subcomplex is empty'})
    table = LocalCohomologyTable(relative_ideal(ideal, sub, field))
    oracle = compact_support_oracle(ideal, sub, field)
    pairs = (((i,), oracle[i] if i < len(oracle) else 0,
              table.entry(i + 1, L.bottom)) for i in range(L.n))
    return _first_mismatch('compact', pairs)

