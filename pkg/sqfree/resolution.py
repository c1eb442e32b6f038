"""Projective resolutions, Ext into the canonical module, dualizing complexes.

Projectives of the category of squarefree modules are direct sums of the
J_F, and ``Hom(J_F, J_G)`` is at most one dimensional (nonzero iff G <= F).
A map between sums of J_F's is therefore a scalar matrix, rows indexed by
the summands of the target and columns by the summands of the source, and
is only materialized facewise when needed.
"""

import logging

import numpy as np

from .linalg import QQ
from .module import SquarefreeModule, ModuleMorphism, indicator_module, \
    indicator_sum, projective_sum, injective_sum, stanley_reisner, \
    kernel_embedding, cohomology_module
from .util import ComplexError, ModuleError, ResolutionError

__all__ = ['ProjectiveResolution', 'SquarefreeComplex',
           'minimal_projective_resolution', 'hom_projective_to_K',
           'ext_modules', 'dualizing_complex', 'dualizing_complex_of',
           'ext_via_dualizing', 'canonical_module_of', 'global_duality_dims',
           'zero_module']

log = logging.getLogger(__name__)


def zero_module(L, field=QQ):
    return SquarefreeModule(L, [0] * len(L), field=field, name='0',
                            check=False)


def _scalar_map(source, target, src_faces, dst_faces, coeff, member):
    """Facewise matrices of a scalar map between indicator sums.

    ``member(f, h)`` tells whether the summand for face f lives at face h,
    ``coeff[b, c]`` is the scalar from source summand c to target summand b.
    """
    L, field = source.lattice, source.field
    mats = []
    for h in L:
        rows = [b for b, f in enumerate(dst_faces) if member(f, h)]
        cols = [c for c, f in enumerate(src_faces) if member(f, h)]
        m = field.zeros(len(rows), len(cols))
        for r, b in enumerate(rows):
            for s, c in enumerate(cols):
                m[r, s] = coeff[b, c]
        mats.append(m)
    return ModuleMorphism(source, target, mats)


class SquarefreeComplex:
    """A bounded cochain complex of squarefree modules.

    Args:
        lo (int): position of the first term
        terms (list): SquarefreeModule at positions lo, lo+1, ...
        diffs (dict): position i -> ModuleMorphism from term i to term i+1,
            missing differentials are zero
    """

    def __init__(self, lo, terms, diffs=None):
        self.lo = lo
        self.terms = list(terms)
        self.hi = lo + len(self.terms) - 1
        self.lattice = self.terms[0].lattice
        self.field = self.terms[0].field
        self.diffs = dict(diffs or {})

    def __repr__(self):
        return 'SquarefreeComplex(lo={}, terms={})'.format(
            self.lo, [t.total_dim for t in self.terms])

    def term(self, i):
        if self.lo <= i <= self.hi:
            return self.terms[i - self.lo]
        return zero_module(self.lattice, self.field)

    def diff(self, i):
        """the differential leaving position i"""
        d = self.diffs.get(i)
        if d is None:
            d = ModuleMorphism.zero(self.term(i), self.term(i + 1))
        return d

    def check(self):
        """verify d.d = 0 facewise

        Raises:
            ComplexError: with the offending position as witness
        """
        for i in range(self.lo, self.hi - 1):
            if not self.diff(i + 1).compose(self.diff(i)).is_zero():
                raise ComplexError('d.d != 0 at position {}'.format(i),
                                   witness=(i,))
        return True

    def cohomology(self, i):
        """the cohomology module at position i"""
        return cohomology_module(self.diff(i - 1), self.diff(i))


class ProjectiveResolution:
    """A projective resolution ``... -> P_1 -> P_0 -> M -> 0``.

    Attributes:
        module (SquarefreeModule): the resolved module
        faces (list): per position j the list of faces F of the summands J_F
            of P_j, in basis order
        coefficients (list): per position j >= 1 the scalar matrix of
            ``P_j -> P_{j-1}``, shape ``(len(faces[j-1]), len(faces[j]))``
        augmentation (ModuleMorphism): the surjection ``P_0 -> M``
    """

    def __init__(self, module, faces, coefficients, augmentation):
        self.module = module
        self.lattice = module.lattice
        self.field = module.field
        self.faces = faces
        self.coefficients = coefficients
        self.augmentation = augmentation
        self._terms = {}

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return 'ProjectiveResolution({})'.format(self.betti())

    @property
    def length(self):
        """index of the last nonzero term, -1 for the zero module"""
        return len(self.faces) - 1

    def _member(self, f, h):
        return self.lattice.leq(f, h)

    def realize(self, j):
        """the module P_j"""
        if j not in self._terms:
            if 0 <= j < len(self.faces):
                self._terms[j] = projective_sum(self.lattice, self.faces[j],
                                                self.field)
            else:
                self._terms[j] = zero_module(self.lattice, self.field)
        return self._terms[j]

    def differential(self, j):
        """the morphism ``P_j -> P_{j-1}`` for j >= 1"""
        if not 1 <= j < len(self.faces):
            return ModuleMorphism.zero(self.realize(j), self.realize(j - 1))
        return _scalar_map(self.realize(j), self.realize(j - 1),
                           self.faces[j], self.faces[j - 1],
                           self.coefficients[j], self._member)

    def betti(self):
        """per position a dict face id -> multiplicity"""
        L = self.lattice
        out = []
        for faces in self.faces:
            counts = {}
            for f in faces:
                counts[L.id(f)] = counts.get(L.id(f), 0) + 1
            out.append(counts)
        return out

    def is_minimal(self):
        """no nonzero coefficient between summands of the same face"""
        for j in range(1, len(self.faces)):
            c = self.coefficients[j]
            for b, f in enumerate(self.faces[j - 1]):
                for k, g in enumerate(self.faces[j]):
                    if f == g and c[b, k] != 0:
                        return False
        return True

    def is_exact(self):
        """rank check of ``... -> P_0 -> M -> 0`` at every face"""
        L, field = self.lattice, self.field
        maps = [self.augmentation] + [self.differential(j)
                                      for j in range(1, len(self.faces))]
        for h in L:
            ranks = [field.rank(m.mats[h]) for m in maps] + [0]
            if ranks[0] != self.module.dims[h]:
                return False
            for j in range(len(self.faces)):
                if self.realize(j).dims[h] != ranks[j] + ranks[j + 1]:
                    return False
        return True


def _generators(N):
    """Standard vectors at each face completing the images from below."""
    L, field = N.lattice, N.field
    gens = []
    for f in L:
        d = N.dims[f]
        if not d:
            continue
        images = np.hstack([field.zeros(d, 0)] +
                           [N.maps[(g, f)] for g in L.lower_covers(f)])
        top = field.complement_basis(field.image_basis(images), d)
        gens.extend((f, top[:, [k]]) for k in range(top.shape[1]))
    return gens


def _cover_map(P, N, gens):
    L, field = N.lattice, N.field
    mats = []
    for h in L:
        cols = [field.mul(N.phi(h, f), v) for f, v in gens if L.leq(f, h)]
        mats.append(np.hstack([field.zeros(N.dims[h], 0)] + cols))
    return ModuleMorphism(P, N, mats)


def minimal_projective_resolution(M):
    """The minimal projective resolution of M.

    Each step covers the current module by ``sum J_F``, one summand for every
    basis vector of the top of the module at F, and continues with the
    kernel.

    Returns:
        ProjectiveResolution: the resolution, of length at most n

    Raises:
        ResolutionError: if the kernel is still nonzero after n steps
    """
    L, field = M.lattice, M.field
    faces, coefficients = [], [None]
    augmentation = None
    N, iota = M, None
    while not N.is_zero():
        if len(faces) > L.n:
            raise ResolutionError('resolution does not stop after {} steps'
                                  .format(L.n), witness=(len(faces),))
        gens = _generators(N)
        P = projective_sum(L, [f for f, _ in gens], field)
        pi = _cover_map(P, N, gens)
        if iota is None:
            augmentation = pi
        else:
            prev = faces[-1]
            c = field.zeros(len(prev), len(gens))
            for k, (f, v) in enumerate(gens):
                w = field.mul(iota.mats[f], v)
                rows = [b for b, g in enumerate(prev) if L.leq(g, f)]
                for r, b in enumerate(rows):
                    c[b, k] = w[r, 0]
            coefficients.append(c)
        faces.append([f for f, _ in gens])
        log.debug('resolution step %d: %d generators', len(faces) - 1,
                  len(gens))
        iota = kernel_embedding(pi)
        N = iota.source
    if augmentation is None:
        augmentation = ModuleMorphism.zero(zero_module(L, field), M)
    return ProjectiveResolution(M, faces, coefficients, augmentation)


def hom_projective_to_K(L, face, field=QQ):
    """Hom(J_F, K), k on the faces G with G v F the top face."""
    f = L.idx(face)
    return indicator_module(L, [g for g in L if L.join(g, f) == L.top],
                            field, name='Hom(J[{}],K)'.format(L.id(f)))


def ext_modules(M, resolution=None):
    """The modules ``Ext^j(M, K)`` for j = 0..n.

    Hom(-, K) turns ``sum J_F`` into a sum of ideals of k[Q] and the scalar
    differentials into their transposes.

    Args:
        M (SquarefreeModule): the module
        resolution (ProjectiveResolution): a projective resolution of M,
            computed if omitted

    Returns:
        list: SquarefreeModule for j = 0..n
    """
    L, field = M.lattice, M.field
    res = resolution or minimal_projective_resolution(M)
    top = L.top

    def member(f, h):
        return L.join(f, h) == top

    duals = [indicator_sum(L, faces, member, field, 'Hom(P,K)')
             for faces in res.faces]
    if not duals:
        return [zero_module(L, field) for _ in range(L.n + 1)]
    diffs = {}
    for j in range(len(duals) - 1):
        diffs[j] = _scalar_map(duals[j], duals[j + 1], res.faces[j],
                               res.faces[j + 1], res.coefficients[j + 1].T,
                               member)
    C = SquarefreeComplex(0, duals, diffs)
    ext = [C.cohomology(j) for j in range(L.n + 1)]
    for j, e in enumerate(ext):
        e.name = 'Ext^{}(M,K)'.format(j)
    log.debug('Ext dimensions %s', [e.total_dim for e in ext])
    return ext


def _omega(L, keep, field):
    """the complex of the k[F], F in keep, at positions 1 - dim F"""
    n, eps = L.n, L.incidence
    faces = [[f for f in L.faces_of_dim(1 - i) if f in keep]
             for i in range(-n + 1, 2)]
    terms = [injective_sum(L, fs, field) for fs in faces]

    def member(f, h):
        return L.leq(h, f)

    diffs = {}
    for k in range(len(terms) - 1):
        src, dst = faces[k], faces[k + 1]
        coeff = field.zeros(len(dst), len(src))
        for c, f in enumerate(src):
            for b, g in enumerate(dst):
                if g in L.lower_covers(f):
                    coeff[b, c] = field.convert(eps[(f, g)])
        diffs[-n + 1 + k] = _scalar_map(terms[k], terms[k + 1], src, dst,
                                        coeff, member)
    C = SquarefreeComplex(-n + 1, terms, diffs)
    C.check()
    return C


def dualizing_complex(L, field=QQ):
    """The dualizing complex of k[Q] in positions -n+1 .. 1.

    The term at position i is the sum of k[F] over faces of cone dimension
    ``1 - i``, the differential consists of the natural surjections
    ``k[F] -> k[G]`` for G < F scaled by the incidence signs.
    """
    return _omega(L, frozenset(L), field)


def dualizing_complex_of(ideal, field=QQ):
    """subcomplex of the dualizing complex on the faces of an order ideal"""
    return _omega(ideal.lattice, ideal.members, field)


def ext_via_dualizing(ideal, field=QQ):
    """Cohomology of the dualizing complex of k[Delta].

    Returns:
        list: index j holds the cohomology at position ``j - n + 1``, which is
        ``Ext^j(k[Delta], K)``, j = 0..n
    """
    L = ideal.lattice
    C = dualizing_complex_of(ideal, field)
    return [C.cohomology(j - L.n + 1) for j in range(L.n + 1)]


def canonical_module_of(ideal, field=QQ):
    """K_{k[Delta]} = Ext^{n-d-1}(k[Delta], K), d = dim Delta."""
    L = ideal.lattice
    if ideal.dim is None:
        return zero_module(L, field)
    return ext_modules(stanley_reisner(ideal, field))[L.n - ideal.dim - 1]


def global_duality_dims(M, ideal, ext=None):
    """Degree 0 dimensions of ``Ext^i(M, dualizing complex of Delta)``.

    For a k[Delta]-module M these are ``dim Ext^{i+n-1}(M, K)_0``, and for M
    vanishing at the bottom face they equal ``h^{-i}(B, M+)``.

    Args:
        M (SquarefreeModule): module supported on the faces of ideal
        ideal (OrderIdeal): Delta
        ext (list): precomputed ext_modules(M)

    Returns:
        list: pairs ``(i, dim)`` for i = -n+1..0

    Raises:
        ModuleError: if M lives outside Delta
    """
    L = M.lattice
    outside = [L.id(f) for f in M.support() if f not in ideal]
    if outside:
        raise ModuleError('module is not supported on the complex',
                          kind='support', witness=outside)
    ext = ext or ext_modules(M)
    return [(i, ext[i + L.n - 1].dims[L.bottom])
            for i in range(-L.n + 1, 1)]
