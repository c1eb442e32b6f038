"""Squarefree modules as representations of a face lattice.

A squarefree module M over k[Q] is stored intrinsically: a vector space
dimension ``dims[F]`` for every face F and a matrix ``phi_{G,F}`` of shape
``(dims[G], dims[F])`` for every cover F < G. Composite maps along longer
chains are products along the least saturated chain, which is independent
of the chain because every diamond commutes.

Usage::

    from sqfree.lattice import boolean_lattice, validate_order_ideal
    from sqfree.module import stanley_reisner, projective_J, kernel

    L = boolean_lattice(3)
    circle = validate_order_ideal(L, [f for f in L if f != L.top])
    M = stanley_reisner(circle)
    M.dims        # (1, 1, 1, 1, 1, 1, 1, 0)
"""

import logging

from .linalg import QQ
from .lattice import Face, positive_filter, ideal_from_facets
from .util import ModuleError, ComplexError

__all__ = ['SquarefreeModule', 'ModuleMorphism', 'indicator_module',
           'stanley_reisner', 'projective_J', 'injective_kF', 'canonical_K',
           'relative_ideal', 'indicator_sum', 'projective_sum',
           'injective_sum', 'truncate_filter', 'positive_part', 'direct_sum',
           'kernel', 'kernel_embedding', 'cokernel', 'cokernel_projection',
           'image', 'cohomology_module', 'dims_at', 'phi', 'hom_basis',
           'random_morphism', 'random_module', 'krull_dimension']

log = logging.getLogger(__name__)


def _block_diag(field, blocks):
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    m = field.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        m[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return m


class SquarefreeModule:
    """A squarefree module, given as a representation of the face lattice.

    Args:
        lattice (FaceLattice): the face lattice of the cone
        dims (sequence or dict): vector space dimension per face, indexed by
            face position, or a dict keyed by face id/position
        maps (dict): ``(lower, upper) -> matrix`` for covers, missing covers
            get zero maps
        field (Field): coefficient field
        name (str): optional name used in reports
        check (bool): verify shapes and diamond commutativity

    Raises:
        ModuleError: on bad shapes, maps on non-covers or non-commuting
            diamonds, with the offending faces as witness
    """

    def __init__(self, lattice, dims, maps=None, field=QQ, name=None,
                 check=True):
        self.lattice = L = lattice
        self.field = field
        self.name = name
        if isinstance(dims, dict):
            d = [0] * len(L)
            for f, v in dims.items():
                d[L.idx(f)] = v
            dims = d
        dims = tuple(int(x) for x in dims)
        if len(dims) != len(L) or any(x < 0 for x in dims):
            raise ModuleError('need a non-negative dimension for each of the '
                              '{} faces'.format(len(L)), kind='dims')
        self.dims = dims
        given = {}
        for (a, b), m in (maps or {}).items():
            a, b = L.idx(a), L.idx(b)
            if a not in L.lower_covers(b):
                raise ModuleError('{} < {} is not a cover'.format(
                    L.id(a), L.id(b)), kind='not-a-cover',
                    witness=(L.id(a), L.id(b)))
            given[(a, b)] = m
        self.maps = {}
        for a, b in L.covers():
            m = given.get((a, b))
            if m is None:
                m = field.zeros(dims[b], dims[a])
            elif m.shape != (dims[b], dims[a]):
                raise ModuleError('map {} -> {} has shape {}, expected {}'
                                  .format(L.id(a), L.id(b), m.shape,
                                          (dims[b], dims[a])), kind='shape',
                                  witness=(L.id(a), L.id(b)))
            self.maps[(a, b)] = m
        self._phi = {}
        if check:
            self.check()

    def __repr__(self):
        return 'SquarefreeModule({}dims={})'.format(
            '{!r}, '.format(self.name) if self.name else '', list(self.dims))

    def __eq__(self, other):
        """equal data: same lattice, dimensions and cover matrices"""
        if not isinstance(other, SquarefreeModule):
            return NotImplemented
        return (self.lattice == other.lattice and self.dims == other.dims and
                all(self.field.equal(m, other.maps[c])
                    for c, m in self.maps.items()))

    __hash__ = None

    def check(self):
        """verify diamond commutativity

        Raises:
            ModuleError: with witness ``(E, G)`` of a non-commuting diamond
        """
        L, mul = self.lattice, self.field.mul
        for e, g, (f1, f2) in L.diamonds():
            p1 = mul(self.maps[(f1, g)], self.maps[(e, f1)])
            p2 = mul(self.maps[(f2, g)], self.maps[(e, f2)])
            if not self.field.equal(p1, p2):
                raise ModuleError('diamond [{}, {}] does not commute'.format(
                    L.id(e), L.id(g)), kind='diamond',
                    witness=(L.id(e), L.id(g)))
        return True

    def dim(self, face):
        return self.dims[self.lattice.idx(face)]

    def map(self, lower, upper):
        """the structure map for a cover lower < upper"""
        L = self.lattice
        return self.maps[(L.idx(lower), L.idx(upper))]

    def phi(self, g, e):
        """the composite map M_e -> M_g for faces e <= g"""
        L = self.lattice
        g, e = L.idx(g), L.idx(e)
        key = (g, e)
        if key not in self._phi:
            if not L.leq(e, g):
                pair = (L.id(e), L.id(g))
                raise ModuleError('{} is not below {}'.format(*pair),
                                  kind='order', witness=pair)
            m = self.field.identity(self.dims[e])
            chain = L.saturated_chain(e, g)
            for a, b in zip(chain, chain[1:]):
                m = self.field.mul(self.maps[(a, b)], m)
            self._phi[key] = m
        return self._phi[key]

    def is_zero(self):
        return not any(self.dims)

    @property
    def total_dim(self):
        return sum(self.dims)

    def support(self):
        """faces F with M_F != 0"""
        return [f for f in self.lattice if self.dims[f]]

    def dims_by_id(self):
        L = self.lattice
        return {L.id(f): d for f, d in enumerate(self.dims)}


class ModuleMorphism:
    """A natural transformation between squarefree modules.

    Args:
        source (SquarefreeModule): domain
        target (SquarefreeModule): codomain, over the same lattice
        mats (sequence or dict): matrix ``f_F`` of shape
            ``(target.dims[F], source.dims[F])`` per face, missing faces get
            zero matrices
        check (bool): verify shapes and naturality

    Raises:
        ModuleError: on shape mismatch or if naturality fails on a cover
    """

    def __init__(self, source, target, mats=None, check=True):
        if source.lattice != target.lattice:
            raise ModuleError('morphism between modules over different '
                              'lattices', kind='lattice')
        self.source, self.target = source, target
        L, field = source.lattice, source.field
        self.field = field
        given = {}
        if isinstance(mats, dict):
            given = {L.idx(f): m for f, m in mats.items()}
        elif mats is not None:
            given = dict(enumerate(mats))
        self.mats = []
        for f in L:
            m = given.get(f)
            shape = (target.dims[f], source.dims[f])
            if m is None:
                m = field.zeros(*shape)
            elif m.shape != shape:
                raise ModuleError('component at {} has shape {}, expected {}'
                                  .format(L.id(f), m.shape, shape),
                                  kind='shape', witness=(L.id(f),))
            self.mats.append(m)
        if check:
            self.check()

    def __getitem__(self, face):
        return self.mats[self.source.lattice.idx(face)]

    def __repr__(self):
        return 'ModuleMorphism({!r} -> {!r})'.format(self.source, self.target)

    def check(self):
        """verify naturality on every cover

        Raises:
            ModuleError: with witness ``(F, G)`` of the failing cover
        """
        L, mul = self.source.lattice, self.field.mul
        for a, b in L.covers():
            left = mul(self.mats[b], self.source.maps[(a, b)])
            right = mul(self.target.maps[(a, b)], self.mats[a])
            if not self.field.equal(left, right):
                raise ModuleError('morphism is not natural on {} < {}'.format(
                    L.id(a), L.id(b)), kind='naturality',
                    witness=(L.id(a), L.id(b)))
        return True

    def compose(self, other):
        """the morphism ``self . other``"""
        if other.target.dims != self.source.dims:
            raise ModuleError('cannot compose, dimensions do not match',
                              kind='shape')
        return ModuleMorphism(other.source, self.target,
                              [self.field.mul(a, b)
                               for a, b in zip(self.mats, other.mats)],
                              check=False)

    def is_zero(self):
        return all(self.field.is_zero(m) for m in self.mats)

    @classmethod
    def identity(cls, module):
        return cls(module, module, [module.field.identity(d)
                                    for d in module.dims], check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, check=False)


def indicator_module(L, faces, field=QQ, name=None):
    """Module with k on every given face and identity maps between them.

    The face set must be the intersection of an order ideal and an order
    filter, otherwise some diamond does not commute.
    """
    members = frozenset(L.idx(f) for f in faces)
    one = field.identity(1)
    maps = {(a, b): one for a, b in L.covers()
            if a in members and b in members}
    return SquarefreeModule(L, [int(f in members) for f in L], maps,
                            field=field, name=name)


def stanley_reisner(ideal, field=QQ):
    """the Stanley-Reisner module k[Delta] of an order ideal"""
    return indicator_module(ideal.lattice, ideal.members, field,
                            name='k[Delta]')


def projective_J(L, face, field=QQ):
    """the indecomposable projective J_F, supported on faces containing F"""
    f = L.idx(face)
    return indicator_module(L, L.above(f), field,
                            name='J[{}]'.format(L.id(f)))


def injective_kF(L, face, field=QQ):
    """the indecomposable injective k[F], supported on faces of F"""
    f = L.idx(face)
    return indicator_module(L, L.below(f), field,
                            name='k[{}]'.format(L.id(f)))


def canonical_K(L, field=QQ):
    """the canonical module K of k[Q], k only at the top face"""
    return indicator_module(L, [L.top], field, name='K')


def relative_ideal(ideal, sub, field=QQ):
    """The relative ideal I_{Delta/Sigma} = I_Sigma / I_Delta.

    Args:
        ideal (OrderIdeal): Delta
        sub (OrderIdeal): Sigma, contained in Delta

    Raises:
        ModuleError: if Sigma is not a subset of Delta
    """
    if ideal.lattice != sub.lattice:
        raise ModuleError('ideals over different lattices', kind='lattice')
    if not sub.members <= ideal.members:
        extra = sorted(sub.members - ideal.members)
        raise ModuleError('subcomplex is not contained in the complex',
                          kind='not-subset',
                          witness=[ideal.lattice.id(f) for f in extra])
    return indicator_module(ideal.lattice, ideal.members - sub.members, field,
                            name='I[Delta/Sigma]')


def indicator_sum(L, faces, member, field=QQ, name=None):
    """Direct sum of indicator modules, one per listed face.

    Summand k of the sum is k on the faces h with ``member(faces[k], h)``,
    which must be convex in L. At each face the basis follows the list.
    """
    faces = [L.idx(f) for f in faces]
    dims = []
    support = []
    for h in L:
        idx = [k for k, f in enumerate(faces) if member(f, h)]
        support.append(idx)
        dims.append(len(idx))
    maps = {}
    for a, b in L.covers():
        m = field.zeros(dims[b], dims[a])
        for c, k in enumerate(support[a]):
            if k in support[b]:
                m[support[b].index(k), c] = field.convert(1)
        maps[(a, b)] = m
    return SquarefreeModule(L, dims, maps, field=field, name=name, check=False)


def projective_sum(L, faces, field=QQ):
    """Direct sum of J_F over a list of faces (repetitions allowed).

    At a face H the basis consists of the summands with F_k <= H, in the order
    of the list.
    """
    return indicator_sum(L, faces, lambda f, h: L.leq(f, h), field,
                         'projective')


def injective_sum(L, faces, field=QQ):
    """Direct sum of k[F] over a list of faces, ordered as the list."""
    return indicator_sum(L, faces, lambda f, h: L.leq(h, f), field,
                         'injective')


def truncate_filter(M, filt):
    """The submodule M_Psi of pieces on an order filter Psi."""
    keep = filt.members
    dims = [d if f in keep else 0 for f, d in enumerate(M.dims)]
    maps = {(a, b): m for (a, b), m in M.maps.items()
            if a in keep and b in keep}
    return SquarefreeModule(M.lattice, dims, maps, field=M.field,
                            name=M.name, check=False)


def positive_part(M):
    """M_{>0}, the pieces on all faces but the bottom one"""
    return truncate_filter(M, positive_filter(M.lattice))


def direct_sum(modules):
    """Direct sum of modules, summand bases concatenated in order.

    Raises:
        ModuleError: if the list is empty
    """
    modules = list(modules)
    if not modules:
        raise ModuleError('direct sum of no modules', kind='empty')
    L, field = modules[0].lattice, modules[0].field
    dims = [sum(m.dims[f] for m in modules) for f in L]
    maps = {c: _block_diag(field, [m.maps[c] for m in modules])
            for c in L.covers()}
    return SquarefreeModule(L, dims, maps, field=field, check=False)


def kernel_embedding(f):
    """The inclusion of ker f into the source of f."""
    M, field = f.source, f.field
    L = M.lattice
    bases = [field.kernel_basis(m) for m in f.mats]
    maps = {}
    for a, b in L.covers():
        maps[(a, b)] = field.solve(bases[b],
                                   field.mul(M.maps[(a, b)], bases[a]))
    K = SquarefreeModule(L, [k.shape[1] for k in bases], maps, field=field,
                         name='ker')
    return ModuleMorphism(K, M, bases, check=False)


def kernel(f):
    """ker f, facewise with induced maps"""
    return kernel_embedding(f).source


def cokernel_projection(f):
    """The projection of the target of f onto coker f.

    At each face the image is completed by standard vectors, the cokernel
    coordinates are the complement coordinates.
    """
    N, field = f.target, f.field
    L = N.lattice
    comps, quots = [], []
    for h in L:
        s = field.image_basis(f.mats[h])
        e = field.complement_basis(s, N.dims[h])
        full = field.solve(_hcat(field, s, e), field.identity(N.dims[h]))
        comps.append(e)
        quots.append(full[s.shape[1]:, :])
    maps = {}
    for a, b in L.covers():
        maps[(a, b)] = field.mul(quots[b], field.mul(N.maps[(a, b)], comps[a]))
    C = SquarefreeModule(L, [e.shape[1] for e in comps], maps, field=field,
                         name='coker')
    return ModuleMorphism(N, C, quots, check=False)


def cokernel(f):
    """coker f, facewise with induced maps"""
    return cokernel_projection(f).target


def image(f):
    """im f as a submodule of the target"""
    N, field = f.target, f.field
    L = N.lattice
    bases = [field.image_basis(m) for m in f.mats]
    maps = {}
    for a, b in L.covers():
        maps[(a, b)] = field.solve(bases[b],
                                   field.mul(N.maps[(a, b)], bases[a]))
    return SquarefreeModule(L, [b.shape[1] for b in bases], maps, field=field,
                            name='im')


def _hcat(field, a, b):
    m = field.zeros(a.shape[0], a.shape[1] + b.shape[1])
    m[:, :a.shape[1]] = a
    m[:, a.shape[1]:] = b
    return m


def cohomology_module(f, g):
    """Facewise cohomology ker g / im f of ``A -f-> B -g-> C``.

    Raises:
        ComplexError: if g.f is not zero
    """
    if not g.compose(f).is_zero():
        raise ComplexError('composition of module maps is not zero')
    field = f.field
    iota = kernel_embedding(g)
    lifted = [field.solve(z, m) for z, m in zip(iota.mats, f.mats)]
    return cokernel(ModuleMorphism(f.source, iota.source, lifted,
                                   check=False))


def phi(M, g, e):
    """composite structure map ``M_e -> M_g`` for e <= g"""
    return M.phi(g, e)


def dims_at(M, a):
    """Dimension of the graded piece M_a.

    Args:
        M (SquarefreeModule): the module
        a: a face (position, id or :class:`Face`), a pair
            ``(face, multiplicity)`` standing for a degree in the relative
            interior of face, or (boolean lattices only) an exponent vector.
            On boolean lattices a pair of integers is an exponent vector,
            so the face of a pair must be given by id there.

    Returns:
        int: dim M_a, 0 for degrees outside Q
    """
    L = M.lattice
    if isinstance(a, Face):
        return M.dims[L.idx(a)]
    if isinstance(a, tuple) and len(a) == 2 and (
            isinstance(a[0], str) or not L.is_boolean):
        face, mult = a
        if mult < 0:
            return 0
        return M.dims[L.bottom if mult == 0 else L.idx(face)]
    if isinstance(a, (list, tuple)):
        if not L.is_boolean:
            raise ModuleError('exponent vectors need a boolean lattice',
                              kind='degree')
        if len(a) != L.n:
            raise ModuleError('degree {} has wrong length'.format(a),
                              kind='degree')
        if any(x < 0 for x in a):
            return 0
        return M.dims[L.subset(i + 1 for i, x in enumerate(a) if x > 0)]
    return M.dims[L.idx(a)]


def hom_basis(M, N):
    """Basis of the space of morphisms M -> N.

    Solves the naturality equations ``f_G phi^M = phi^N f_F`` on all covers.

    Returns:
        list: ModuleMorphism objects forming a basis
    """
    L, field = M.lattice, M.field
    offset, n = [], 0
    for f in L:
        offset.append(n)
        n += N.dims[f] * M.dims[f]

    def var(f, r, c):
        return offset[f] + r * M.dims[f] + c

    rows = []
    for a, b in L.covers():
        pm, pn = M.maps[(a, b)], N.maps[(a, b)]
        for p in range(N.dims[b]):
            for q in range(M.dims[a]):
                row = [0] * n
                for k in range(M.dims[b]):
                    if pm[k, q]:
                        row[var(b, p, k)] += pm[k, q]
                for l in range(N.dims[a]):
                    if pn[p, l]:
                        row[var(a, l, q)] -= pn[p, l]
                rows.append(row)
    if rows:
        sol = field.kernel_basis(field.matrix(rows))
    else:
        sol = field.identity(n)
    basis = []
    for j in range(sol.shape[1]):
        mats = []
        for f in L:
            m = field.zeros(N.dims[f], M.dims[f])
            for r in range(N.dims[f]):
                for c in range(M.dims[f]):
                    m[r, c] = sol[var(f, r, c), j]
            mats.append(m)
        basis.append(ModuleMorphism(M, N, mats, check=False))
    log.debug('hom space of dimension %d', len(basis))
    return basis


def random_morphism(M, N, rng, coefficients=(-2, -1, 1, 2)):
    """random combination of a basis of Hom(M, N)

    Args:
        rng (random.Random): source of randomness
    """
    field = M.field
    mats = [field.zeros(N.dims[f], M.dims[f]) for f in M.lattice]
    for b in hom_basis(M, N):
        c = field.convert(rng.choice(coefficients))
        mats = [field.add(m, field.scale(c, x)) for m, x in zip(mats, b.mats)]
    return ModuleMorphism(M, N, mats, check=False)


def _random_block(L, rng, field):
    f = rng.randrange(len(L))
    kind = rng.choice(('J', 'k', 'sr'))
    if kind == 'J':
        return projective_J(L, f, field)
    if kind == 'k':
        return injective_kF(L, f, field)
    facets = rng.sample(range(len(L)), rng.randint(1, 3))
    return stanley_reisner(ideal_from_facets(L, facets), field)


def random_module(L, rng, field=QQ, blocks=3):
    """A random squarefree module for property tests.

    Direct sums of J_F, k[F] and k[Delta] are combined by kernels and
    cokernels of random morphisms, so the result is always valid.

    Args:
        L (FaceLattice): the lattice
        rng (random.Random): source of randomness
        blocks (int): maximal number of summands per side
    """
    def block_sum():
        return direct_sum(_random_block(L, rng, field)
                          for _ in range(rng.randint(1, blocks)))

    A, B = block_sum(), block_sum()
    how = rng.choice(('sum', 'ker', 'coker', 'im'))
    if how == 'sum':
        return A
    f = random_morphism(A, B, rng)
    return {'ker': kernel, 'coker': cokernel, 'im': image}[how](f)


def krull_dimension(M):
    """largest cone dimension of a face with M_F != 0, None for M = 0"""
    support = M.support()
    if not support:
        return None
    return max(M.lattice.dim(f) for f in support)

