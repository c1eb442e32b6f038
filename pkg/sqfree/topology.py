"""Simplicial homology of order ideals of boolean lattices.

This is an independent check of the algebra: signs come from the vertex
order of each simplex, never from the incidence function of the lattice.
All functions require a boolean lattice and raise :class:`OracleError`
otherwise.
"""

import logging
from dataclasses import dataclass

import networkx as nx

from .linalg import QQ
from .lattice import OrderIdeal
from .util import OracleError, ClosureError

__all__ = ['SimplicialPair', 'ManifoldVerdict', 'reduced_homology',
           'relative_homology', 'local_homology', 'connected_components',
           'euler_characteristic', 'is_homology_manifold',
           'compact_support_oracle']

log = logging.getLogger(__name__)


def _require_boolean(ideal):
    if not ideal.lattice.is_boolean:
        raise OracleError('topology oracle needs a boolean lattice, got {!r}'
                          .format(ideal.lattice), kind='not-boolean')


def _simplex(L, f):
    return tuple(sorted(L.vertices(f)))


def _homology(L, faces, lo, hi, field):
    """Dimensions of the homology of the chains on faces, degrees lo..hi.

    Simplices are vertex tuples, degree = #vertices - 1. Boundary faces
    outside the chain set are dropped (relative chains).
    """
    chains = {j: [] for j in range(lo - 1, hi + 2)}
    for f in faces:
        s = _simplex(L, f)
        if lo <= len(s) - 1 <= hi:
            chains[len(s) - 1].append(s)
    index = {}
    for j in chains:
        chains[j].sort()
        index.update({s: k for k, s in enumerate(chains[j])})

    def rank_of_boundary(j):
        src, dst = chains[j], chains[j - 1]
        if not src or not dst:
            return 0
        d = field.zeros(len(dst), len(src))
        for c, s in enumerate(src):
            for k in range(len(s)):
                t = s[:k] + s[k + 1:]
                if t in index:
                    d[index[t], c] = field.convert((-1) ** k)
        return field.rank(d)

    ranks = {j: rank_of_boundary(j) for j in range(lo, hi + 2)}
    return [len(chains[j]) - ranks[j] - ranks[j + 1]
            for j in range(lo, hi + 1)]


@dataclass(frozen=True)
class SimplicialPair:
    """A simplicial complex Delta and a subcomplex Gamma."""

    ambient: OrderIdeal
    sub: OrderIdeal

    def __post_init__(self):
        if self.ambient.lattice != self.sub.lattice:
            raise OracleError('pair over different lattices', kind='lattice')
        if not self.sub.members <= self.ambient.members:
            L = self.ambient.lattice
            raise ClosureError('subcomplex is not contained in the complex',
                               witness=[L.id(f) for f in
                                        sorted(self.sub.members -
                                               self.ambient.members)])

    def difference(self):
        return sorted(self.ambient.members - self.sub.members)


def reduced_homology(ideal, field=QQ):
    """Reduced homology of Delta.

    Returns:
        list: dim of the i-th reduced homology for i = -1..dim Delta, empty
        for the void complex
    """
    _require_boolean(ideal)
    if ideal.dim is None:
        return []
    return _homology(ideal.lattice, ideal.members, -1, ideal.dim, field)


def relative_homology(pair, field=QQ):
    """Homology of ``(Delta, Gamma)`` in degrees 0..dim Delta.

    For empty Gamma this is the unreduced homology of Delta.
    """
    _require_boolean(pair.ambient)
    d = pair.ambient.dim
    if d is None or d < 0:
        return []
    return _homology(pair.ambient.lattice, pair.difference(), 0, d, field)


def local_homology(ideal, face, field=QQ):
    """``H_i(Delta, Delta - star(F))`` for i = 0..dim Delta.

    This is the homology of ``|Delta|`` at a point p in the relative
    interior of F, relative to ``|Delta| - p``.

    Raises:
        OracleError: if F is the bottom face or not in Delta
    """
    _require_boolean(ideal)
    L = ideal.lattice
    f = L.idx(face)
    if f == L.bottom or f not in ideal:
        raise OracleError('local homology needs a nonempty face of the '
                          'complex', kind='face', witness=(L.id(f),))
    rest = OrderIdeal(L, ideal.members - L.above(f))
    return relative_homology(SimplicialPair(ideal, rest), field)


def connected_components(ideal):
    """number of connected components of ``|Delta|``, 0 if it is empty"""
    L = ideal.lattice
    g = nx.Graph()
    g.add_nodes_from(f for f in ideal if L.dim(f) == 1)
    g.add_edges_from(tuple(L.vertices(f)) for f in ideal if L.dim(f) == 2)
    return nx.number_connected_components(g)


def euler_characteristic(ideal):
    """unreduced Euler characteristic, alternating count of nonempty faces"""
    L = ideal.lattice
    return sum((-1) ** (L.dim(f) - 1) for f in ideal if f != L.bottom)


@dataclass
class ManifoldVerdict:
    holds: bool
    witness: tuple = ()
    reason: str = ''

    def __bool__(self):
        return self.holds


def is_homology_manifold(ideal, with_boundary=False, field=QQ):
    """Decide whether Delta is a homology manifold over the field.

    Every nonempty face must look locally like an interior point of a
    d-manifold (local homology k in degree d only) or, if with_boundary, like
    a boundary point (vanishing local homology).

    Returns:
        ManifoldVerdict: verdict with the first failing face as witness
    """
    _require_boolean(ideal)
    L = ideal.lattice
    d = ideal.dim
    if d is None or d < 0:
        return ManifoldVerdict(True, reason='empty complex')
    for f in ideal.facets():
        if L.dim(f) - 1 != d:
            return ManifoldVerdict(False, (L.id(f),), 'not pure')
    sphere = [0] * d + [1]
    ball = [0] * (d + 1)
    for f in ideal:
        if f == L.bottom:
            continue
        h = local_homology(ideal, f, field)
        if h == sphere or (with_boundary and h == ball):
            continue
        log.debug('local homology %s at %s', h, L.id(f))
        return ManifoldVerdict(False, (L.id(f),),
                               'local homology {} at {}'.format(h, L.id(f)))
    return ManifoldVerdict(True, reason='all links are spheres' +
                           (' or balls' if with_boundary else ''))


def compact_support_oracle(ideal, sub, field=QQ):
    """Compactly supported cohomology of ``|Delta| - |Sigma|``, i = 0..d.

    Over a field its dimensions are those of ``H_i(Delta, Sigma)``.
    """
    return relative_homology(SimplicialPair(ideal, sub), field)
