"""Face lattices of cones, their order ideals and filters and incidence signs.

Faces are identified by string ids in input and output, and by their position
in :attr:`FaceLattice.faces` everywhere else. Faces are ordered by
(cone dimension, id), numbers embedded in ids compare numerically. The cell of
the transversal polytope belonging to a face has dimension ``dim - 1``.

Boolean lattices use ``'0'`` for the zero face and comma separated vertex lists
(``'1'``, ``'1,3'``) for all other faces.
"""

import logging
from collections import defaultdict, deque, namedtuple
from functools import cached_property
from itertools import combinations

from .util import LatticeError, IncidenceError, ClosureError, InputError, \
    natural_key

__all__ = ['Face', 'FaceLattice', 'OrderIdeal', 'OrderFilter',
           'IncidenceFunction', 'boolean_lattice', 'from_cover_list',
           'cone_over_square', 'compute_incidence', 'validate_order_ideal',
           'validate_order_filter', 'star_filter', 'positive_filter',
           'ideal_from_facets', 'order_ideals', 'join']

log = logging.getLogger(__name__)

Face = namedtuple('Face', 'id dim')


class FaceLattice:
    """The face poset L of a pointed cone of dimension n, validated.

    Args:
        n (int): dimension of the cone
        faces (iterable): ``(id, dim)`` pairs
        covers (iterable): ``(lower_id, upper_id)`` cover pairs
        name (str): optional name used in reports

    Raises:
        LatticeError: if there is no unique bottom or top, a cover skips a
            dimension, some pair has no unique join or some interval of
            length 2 is not a diamond. The offending faces are in ``witness``.
    """

    def __init__(self, n, faces, covers, name=None):
        self.n = int(n)
        self.name = name
        faces = [Face(str(i), int(d)) for i, d in faces]
        ids = [f.id for f in faces]
        if len(set(ids)) != len(ids):
            dup = sorted(i for i in set(ids) if ids.count(i) > 1)
            raise LatticeError('duplicate face ids', kind='duplicate',
                               witness=dup)
        self.faces = tuple(sorted(faces, key=lambda f: (f.dim,
                                                        natural_key(f.id))))
        self.index = {f.id: i for i, f in enumerate(self.faces)}
        lower = defaultdict(set)
        upper = defaultdict(set)
        for lo, up in covers:
            a, b = self.idx(str(lo)), self.idx(str(up))
            lower[b].add(a)
            upper[a].add(b)
        self._lower = tuple(tuple(sorted(lower[i])) for i in range(len(faces)))
        self._upper = tuple(tuple(sorted(upper[i])) for i in range(len(faces)))
        self._join = {}
        self._validate()

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(range(len(self.faces)))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FaceLattice) and self.n == other.n and
                self.faces == other.faces and
                set(self.cover_ids()) == set(other.cover_ids()))

    def __hash__(self):
        return hash((self.n, self.faces))

    def __repr__(self):
        return 'FaceLattice(n={}, faces={}{})'.format(
            self.n, len(self), ', name={!r}'.format(self.name)
            if self.name else '')

    def idx(self, face):
        """position of a face given by position, id or :class:`Face`

        Raises:
            LatticeError: if the face is unknown
        """
        if isinstance(face, Face):
            face = face.id
        if isinstance(face, int):
            if 0 <= face < len(self.faces):
                return face
        elif str(face) in self.index:
            return self.index[str(face)]
        raise LatticeError('unknown face {!r}'.format(face),
                           kind='unknown-face', witness=(face,))

    def id(self, i):
        return self.faces[i].id

    def dim(self, i):
        """cone dimension of face i"""
        return self.faces[i].dim

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.faces) - 1

    def lower_covers(self, i):
        """faces covered by i"""
        return self._lower[i]

    def upper_covers(self, i):
        """faces covering i"""
        return self._upper[i]

    def covers(self):
        """all cover pairs ``(lower, upper)`` in face order"""
        return [(a, b) for b in self for a in self._lower[b]]

    def cover_ids(self):
        return [(self.id(a), self.id(b)) for a, b in self.covers()]

    def faces_of_dim(self, d):
        return [i for i in self if self.faces[i].dim == d]

    def below(self, i):
        """all faces contained in i (including i)"""
        return self._down[i]

    def above(self, i):
        """all faces containing i (including i)"""
        return self._up[i]

    def leq(self, a, b):
        return a in self._down[b]

    def interval(self, a, b):
        """faces G with a <= G <= b, in face order"""
        return sorted(self._up[a] & self._down[b])

    def diamonds(self):
        """``(E, G, (F1, F2))`` for every interval of length 2"""
        return self._diamonds

    @cached_property
    def _diamonds(self):
        return [(e, g, tuple(f for f in self._lower[g] if e in self._lower[f]))
                for g in self
                for e in sorted({e for f in self._lower[g]
                                 for e in self._lower[f]})]

    def join(self, a, b):
        """the smallest face containing a and b"""
        if a > b:
            a, b = b, a
        return self._join[(a, b)]

    def saturated_chain(self, e, g):
        """lexicographically least saturated chain from e up to g

        Returns:
            list: faces e = F0 < F1 < ... < Fk = g
        """
        chain = [e]
        while chain[-1] != g:
            chain.append(next(x for x in self._upper[chain[-1]]
                              if x in self._down[g]))
        return chain

    @cached_property
    def incidence(self):
        """the :class:`IncidenceFunction` of this lattice, see
        :func:`compute_incidence`"""
        return compute_incidence(self)

    @cached_property
    def rays(self):
        return tuple(self.faces_of_dim(1))

    def vertices(self, i):
        """rays (as positions) contained in face i"""
        return self._vertices[i]

    @cached_property
    def is_boolean(self):
        """True if this is the face lattice of a simplicial cone"""
        return (len(self.rays) == self.n and len(self) == 2 ** self.n and
                all(len(self._vertices[i]) == self.dim(i) for i in self))

    def subset(self, vertices):
        """face of a boolean lattice spanned by the given vertex labels

        Args:
            vertices (iterable): vertex ids, e.g. ``(1, 3)``
        """
        vs = sorted((str(v) for v in vertices), key=natural_key)
        return self.idx(','.join(vs) if vs else '0')

    def as_dict(self):
        """the JSON lattice schema"""
        return {'n': self.n,
                'faces': [{'id': f.id, 'dim': f.dim} for f in self.faces],
                'covers': [list(c) for c in self.cover_ids()]}

    def _validate(self):
        faces, n = self.faces, self.n
        for f in faces:
            if not 0 <= f.dim <= n:
                raise LatticeError('face {} has dimension {} outside 0..{}'
                                   .format(f.id, f.dim, n), kind='dimension',
                                   witness=(f.id,))
        for d, what in ((0, 'bottom'), (n, 'top')):
            ext = [f.id for f in faces if f.dim == d]
            if len(ext) != 1:
                raise LatticeError('need exactly one face of dimension {}, '
                                   'found {}'.format(d, len(ext)), kind=what,
                                   witness=ext)
        for a, b in self.covers():
            if faces[b].dim != faces[a].dim + 1:
                raise LatticeError('cover {} < {} is not graded'.format(
                    faces[a].id, faces[b].id), kind='graded',
                    witness=(faces[a].id, faces[b].id))
        down = []
        for i in self:
            below = (down[j] for j in self._lower[i])
            down.append(frozenset({i}).union(*below))
        up = [set() for _ in self]
        for i in self:
            for j in down[i]:
                up[j].add(i)
        self._down = tuple(down)
        self._up = tuple(frozenset(u) for u in up)
        for i in self:
            if self.bottom not in down[i]:
                raise LatticeError('face {} is not above the bottom face'
                                   .format(faces[i].id), kind='bottom',
                                   witness=(faces[i].id,))
            if self.top not in self._up[i]:
                raise LatticeError('face {} is not below the top face'
                                   .format(faces[i].id), kind='top',
                                   witness=(faces[i].id,))
        for e, g, mids in self.diamonds():
            if len(mids) != 2:
                raise IncidenceError('interval [{}, {}] has {} '
                                     'intermediate faces'.format(
                                         faces[e].id, faces[g].id, len(mids)),
                                     kind='diamond',
                                     witness=(faces[e].id, faces[g].id))
        for a in self:
            for b in range(a, len(faces)):
                ub = self._up[a] & self._up[b]
                least = [m for m in ub if not (down[m] & ub) - {m}]
                if len(least) != 1:
                    raise LatticeError('faces {} and {} have no unique join'
                                       .format(faces[a].id, faces[b].id),
                                       kind='join',
                                       witness=(faces[a].id, faces[b].id))
                self._join[(a, b)] = least[0]
        rays = set(self.faces_of_dim(1))
        self._vertices = tuple(frozenset(d & rays) for d in down)


class _FaceSet:
    """common base of order ideals and filters"""

    def __init__(self, lattice, faces):
        self.lattice = lattice
        self.members = frozenset(lattice.idx(f) for f in faces)

    def __contains__(self, face):
        return face in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (type(self) is type(other) and self.lattice == other.lattice and
                self.members == other.members)

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self.ids())

    def ids(self):
        return [self.lattice.id(i) for i in self]


class OrderIdeal(_FaceSet):
    """A downward closed set of faces, the analogue of a simplicial complex.

    Use :func:`validate_order_ideal` to construct one from arbitrary faces.
    """

    @property
    def dim(self):
        """dimension of the cell complex, None for the empty ideal"""
        if not self.members:
            return None
        return max(self.lattice.dim(i) for i in self.members) - 1

    def facets(self):
        """maximal faces"""
        L = self.lattice
        return [i for i in self
                if not any(u in self.members for u in L.upper_covers(i))]

    def is_pure(self):
        dims = {self.lattice.dim(i) for i in self.facets()}
        return len(dims) <= 1


class OrderFilter(_FaceSet):
    """An upward closed set of faces."""


def validate_order_ideal(L, faces):
    """Check that faces form an order ideal of L.

    Args:
        L (FaceLattice): the lattice
        faces (iterable): faces as ids or positions

    Returns:
        OrderIdeal: the ideal

    Raises:
        ClosureError: with witness ``(F, G)``, G < F missing
    """
    ideal = OrderIdeal(L, faces)
    for f in ideal:
        for g in L.lower_covers(f):
            if g not in ideal.members:
                raise ClosureError('{} is in the ideal but {} is not'.format(
                    L.id(f), L.id(g)), witness=(L.id(f), L.id(g)))
    return ideal


def validate_order_filter(L, faces):
    """Check that faces form an order filter of L.

    Raises:
        ClosureError: with witness ``(F, G)``, G > F missing
    """
    filt = OrderFilter(L, faces)
    for f in filt:
        for g in L.upper_covers(f):
            if g not in filt.members:
                raise ClosureError('{} is in the filter but {} is not'.format(
                    L.id(f), L.id(g)), witness=(L.id(f), L.id(g)))
    return filt


def star_filter(L, face):
    """the filter of all faces containing face"""
    return OrderFilter(L, L.above(L.idx(face)))


def positive_filter(L):
    """all faces but the bottom one"""
    return OrderFilter(L, range(1, len(L)))


def ideal_from_facets(L, faces):
    """smallest order ideal containing the given faces"""
    return OrderIdeal(L, frozenset().union(*(L.below(L.idx(f))
                                             for f in faces)))


def order_ideals(L):
    """Iterate over all order ideals of L.

    Faces are decided in face order, a face may only join once all faces it
    covers did. Every ideal is produced exactly once.

    Yields:
        OrderIdeal: the ideals, starting with the empty one
    """
    count = len(L)
    chosen = set()

    def rec(k):
        if k == count:
            yield OrderIdeal(L, chosen)
            return
        yield from rec(k + 1)
        if all(j in chosen for j in L.lower_covers(k)):
            chosen.add(k)
            yield from rec(k + 1)
            chosen.discard(k)

    yield from rec(0)


def join(L, a, b):
    """the smallest face of L containing a and b"""
    return L.join(L.idx(a), L.idx(b))


class IncidenceFunction:
    """Signs on the cover pairs of a face lattice.

    Args:
        lattice (FaceLattice): the lattice
        signs (dict): ``(upper, lower) -> +1/-1``
    """

    def __init__(self, lattice, signs):
        self.lattice = lattice
        self.signs = dict(signs)

    def __getitem__(self, pair):
        return self.signs[pair]

    def __len__(self):
        return len(self.signs)

    def items(self):
        return sorted(self.signs.items())

    def check(self):
        """verify the diamond relation on every interval of length 2

        Raises:
            IncidenceError: on the first violated diamond
        """
        L, s = self.lattice, self.signs
        for e, g, (f1, f2) in L.diamonds():
            if s[(g, f1)] * s[(f1, e)] + s[(g, f2)] * s[(f2, e)] != 0:
                raise IncidenceError('diamond [{}, {}] violated'.format(
                    L.id(e), L.id(g)), witness=(L.id(e), L.id(g)))
        return True


def compute_incidence(L):
    """Compute an incidence function of the regular cell complex of L.

    Faces are treated in face order. The covers of a face are linked by the
    diamonds below it, each link fixes the product of two signs. The least
    cover of every unconstrained component gets +1, the others are propagated
    breadth first.

    Args:
        L (FaceLattice): the lattice

    Returns:
        IncidenceFunction: the signs

    Raises:
        IncidenceError: if the sign system is contradictory
    """
    eps = {}
    for g in L:
        lowers = L.lower_covers(g)
        if not lowers:
            continue
        links = defaultdict(list)
        for f1, f2 in combinations(lowers, 2):
            for e in set(L.lower_covers(f1)) & set(L.lower_covers(f2)):
                s = -eps[(f1, e)] * eps[(f2, e)]
                links[f1].append((f2, s))
                links[f2].append((f1, s))
        signs = {}
        for f in lowers:
            if f in signs:
                continue
            signs[f] = 1
            queue = deque([f])
            while queue:
                x = queue.popleft()
                for y, s in links[x]:
                    want = signs[x] * s
                    if y not in signs:
                        signs[y] = want
                        queue.append(y)
                    elif signs[y] != want:
                        raise IncidenceError(
                            'no consistent signs below {}'.format(L.id(g)),
                            witness=(L.id(g), L.id(x), L.id(y)))
        eps.update(((g, f), s) for f, s in signs.items())
    log.debug('incidence function with %d signs for %r', len(eps), L)
    return IncidenceFunction(L, eps)


def boolean_lattice(n):
    """The lattice of all subsets of [n], the faces of a simplicial cone.

    Args:
        n (int): number of rays, n >= 1

    Raises:
        LatticeError: if n < 1
    """
    if n < 1:
        raise LatticeError('boolean lattice needs n >= 1', kind='degenerate')

    def name(s):
        return ','.join(map(str, s)) if s else '0'

    subsets = [s for d in range(n + 1)
               for s in combinations(range(1, n + 1), d)]
    faces = [(name(s), len(s)) for s in subsets]
    covers = [(name(s[:k] + s[k + 1:]), name(s))
              for s in subsets for k in range(len(s))]
    return FaceLattice(n, faces, covers, name='boolean({})'.format(n))


def cone_over_square():
    """Face lattice of the cone over a square (n=3).

    This is the cone of the quadric ``k[a,b,c,d]/(ad-bc)``. Rays ``r1..r4``
    go around the square, ``f12, f23, f34, f14`` are the 2-faces.
    """
    faces = [('0', 0), ('top', 3)]
    covers = []
    for i in range(1, 5):
        j = i % 4 + 1
        a, b = min(i, j), max(i, j)
        faces.append(('r{}'.format(i), 1))
        faces.append(('f{}{}'.format(a, b), 2))
        covers.append(('0', 'r{}'.format(i)))
        covers.append(('r{}'.format(a), 'f{}{}'.format(a, b)))
        covers.append(('r{}'.format(b), 'f{}{}'.format(a, b)))
        covers.append(('f{}{}'.format(a, b), 'top'))
    return FaceLattice(3, faces, covers, name='cone-over-square')


def from_cover_list(data):
    """Build a lattice from the JSON lattice schema.

    Args:
        data (dict): ``{"n": int, "faces": [{"id": str, "dim": int}],
            "covers": [["lower", "upper"]]}``

    Raises:
        InputError: if keys are missing
        LatticeError: if the data is not a valid face lattice
    """
    try:
        n = int(data['n'])
        faces = [(f['id'], f['dim']) for f in data['faces']]
        covers = [tuple(c) for c in data['covers']]
    except (KeyError, TypeError, ValueError) as e:
        raise InputError('bad lattice data: {}'.format(e),
                         kind='schema') from e
    for c in covers:
        if len(c) != 2:
            raise InputError('cover {!r} is not a pair'.format(c),
                             kind='schema')
    return FaceLattice(n, faces, covers, name=data.get('name'))
