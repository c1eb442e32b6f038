"""Local cohomology of squarefree modules via the complexes C_F(M).

For a face F the complex C_F(M) has the term ``sum M_G`` over faces G
containing F with ``dim G = i`` in position i, its differential is built from
the incidence function of the lattice. ``H^i(C_F(M))`` is the graded piece
of ``H^i_m(M)`` in degree ``-a`` for any ``a`` in the relative interior of F,
all other pieces vanish.
"""

import logging
from threading import Lock

from .linalg import QQ
from .util import ComplexError, ModuleError, parallel_map

__all__ = ['VectorSpaceComplex', 'LocalCohomologyTable', 'cech_complex',
           'local_cohomology_table', 'sheaf_cohomology_dims',
           'compact_support_dims']

log = logging.getLogger(__name__)


class VectorSpaceComplex:
    """A bounded cochain complex of finite dimensional vector spaces.

    Args:
        lo (int): position of the first term
        dims (list): dimensions of the terms at positions lo, lo+1, ...
        diffs (dict): position i -> matrix of shape (dims[i+1], dims[i]),
            missing differentials are zero
        field (Field): coefficient field
    """

    def __init__(self, lo, dims, diffs=None, field=QQ):
        self.lo = lo
        self.hi = lo + len(dims) - 1
        self.field = field
        self._dims = list(dims)
        self.diffs = {}
        for i in range(lo, self.hi):
            m = (diffs or {}).get(i)
            shape = (self.dim(i + 1), self.dim(i))
            if m is None:
                m = field.zeros(*shape)
            elif m.shape != shape:
                raise ComplexError('differential at {} has shape {}, expected '
                                   '{}'.format(i, m.shape, shape),
                                   kind='shape', witness=(i,))
            self.diffs[i] = m
        self._ranks = {}

    def __repr__(self):
        return 'VectorSpaceComplex(lo={}, dims={})'.format(self.lo, self._dims)

    def dim(self, i):
        if self.lo <= i <= self.hi:
            return self._dims[i - self.lo]
        return 0

    def diff(self, i):
        """the differential leaving position i"""
        if i in self.diffs:
            return self.diffs[i]
        return self.field.zeros(self.dim(i + 1), self.dim(i))

    def _rank(self, i):
        if i not in self.diffs:
            return 0
        if i not in self._ranks:
            self._ranks[i] = self.field.rank(self.diffs[i])
        return self._ranks[i]

    def check(self):
        """verify d.d = 0

        Raises:
            ComplexError: with the offending position as witness
        """
        f = self.field
        for i in range(self.lo, self.hi - 1):
            if not f.is_zero(f.mul(self.diffs[i + 1], self.diffs[i])):
                raise ComplexError('d.d != 0 at position {}'.format(i),
                                   witness=(i,))
        return True

    def cohomology(self, i):
        """dimension of the cohomology at position i"""
        return self.dim(i) - self._rank(i) - self._rank(i - 1)

    def euler_characteristic(self):
        return sum((-1) ** i * self.dim(i)
                   for i in range(self.lo, self.hi + 1))


def cech_complex(M, face):
    """The complex C_F(M) in positions dim F .. n.

    The basis of each term is ordered by face, then by the basis of M_G.

    Raises:
        ComplexError: if d.d != 0, which points at a corrupt module or
            incidence function
    """
    L, field = M.lattice, M.field
    f = L.idx(face)
    eps = L.incidence
    lo = L.dim(f)
    above = L.above(f)
    terms = [[g for g in L.faces_of_dim(i) if g in above]
             for i in range(lo, L.n + 1)]
    offsets = []
    for faces in terms:
        off, n = {}, 0
        for g in faces:
            off[g] = n
            n += M.dims[g]
        offsets.append((off, n))
    diffs = {}
    for k in range(len(terms) - 1):
        (src, ns), (dst, nd) = offsets[k], offsets[k + 1]
        d = field.zeros(nd, ns)
        for g in terms[k]:
            for h in L.upper_covers(g):
                if h in dst and M.dims[g] and M.dims[h]:
                    block = field.scale(eps[(h, g)], M.maps[(g, h)])
                    d[dst[h]:dst[h] + M.dims[h],
                      src[g]:src[g] + M.dims[g]] = block
        diffs[lo + k] = d
    C = VectorSpaceComplex(lo, [n for _, n in offsets], diffs, field)
    C.check()
    return C


class LocalCohomologyTable:
    """Dimensions ``[H^i_m(M)]_{-a(F)}`` for all i in 0..n and faces F.

    Columns are computed on demand and memoized, :meth:`compute_all` may
    spread the columns over worker threads.

    Args:
        module (SquarefreeModule): the module
    """

    def __init__(self, module):
        self.module = module
        self.lattice = module.lattice
        self._columns = {}
        self._lock = Lock()

    def __repr__(self):
        return 'LocalCohomologyTable({!r})'.format(self.module)

    def _compute(self, f):
        C = cech_complex(self.module, f)
        col = tuple(C.cohomology(i) for i in range(self.lattice.n + 1))
        log.debug('local cohomology column at %s: %s', self.lattice.id(f), col)
        return col

    def column(self, face):
        """entries for i = 0..n at a face"""
        f = self.lattice.idx(face)
        col = self._columns.get(f)
        if col is None:
            col = self._compute(f)
            with self._lock:
                col = self._columns.setdefault(f, col)
        return col

    def entry(self, i, face):
        if not 0 <= i <= self.lattice.n:
            return 0
        return self.column(face)[i]

    def compute_all(self, jobs=1):
        """fill every column, with jobs worker threads"""
        parallel_map(self.column, list(self.lattice), jobs)
        return self

    def rows(self):
        """``(i, face id, cone dim, entry)`` ordered by i, then face"""
        L = self.lattice
        return [(i, L.id(f), L.dim(f), self.entry(i, f))
                for i in range(L.n + 1) for f in L]

    def nonzero(self):
        """``(i, face, entry)`` for all nonzero entries, face as position"""
        L = self.lattice
        return [(i, f, self.entry(i, f))
                for i in range(L.n + 1) for f in L if self.entry(i, f)]

    def finite_length(self, i):
        """True if ``H^i_m(M)`` lives in degree 0 only"""
        return all(self.entry(i, f) == 0 for f in self.lattice
                   if f != self.lattice.bottom)

    def euler_characteristic(self, face):
        return sum((-1) ** i * v for i, v in enumerate(self.column(face)))


def local_cohomology_table(M, jobs=1):
    """The full local cohomology table of M.

    Args:
        M (SquarefreeModule): the module
        jobs (int): worker threads for the columns

    Returns:
        LocalCohomologyTable: the completed table
    """
    return LocalCohomologyTable(M).compute_all(jobs)


def sheaf_cohomology_dims(M, table=None):
    """Dimensions ``h^i(B, M+)`` for i = 0..n-1.

    For i >= 1 they are ``[H^{i+1}_m(M)]_0``. h^0 follows from the exact
    sequence ``0 -> H^0_m(M)_0 -> M_0 -> H^0(B, M+) -> H^1_m(M)_0 -> 0``.
    """
    table = table or LocalCohomologyTable(M)
    L = M.lattice
    b = L.bottom
    h = [M.dims[b] - table.entry(0, b) + table.entry(1, b)]
    h.extend(table.entry(i + 1, b) for i in range(1, L.n))
    return h


def compact_support_dims(M, face, table=None):
    """Dimensions of ``H^i_c(U_F, M+)`` for i = 0..n-1, F not the bottom face.

    Raises:
        ModuleError: for the bottom face
    """
    L = M.lattice
    f = L.idx(face)
    if f == L.bottom:
        raise ModuleError('compact support cohomology needs a face other '
                          'than the bottom one', kind='bottom-face',
                          witness=(L.id(f),))
    table = table or LocalCohomologyTable(M)
    return [table.entry(i + 1, f) for i in range(L.n)]
