"""built-in examples, runnable as ``demo:<name>`` from the command line"""

from dataclasses import dataclass

from .lattice import FaceLattice, OrderIdeal, boolean_lattice, \
    cone_over_square, ideal_from_facets
from .linalg import QQ
from .module import SquarefreeModule, stanley_reisner, relative_ideal
from .util import InputError

__all__ = ['Subject', 'DEMOS', 'RP2_FACETS', 'demo', 'simplicial_complex']

#: facets of the 6-vertex triangulation of the real projective plane
RP2_FACETS = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
              (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6))


@dataclass
class Subject:
    """What a command works on: k[Delta], I_{Delta/Sigma} or a module.

    Attributes:
        kind (str): ``'ideal'``, ``'relative'`` or ``'module'``
        lattice (FaceLattice): the face lattice
        ideal (OrderIdeal): Delta, for ideals and relative ideals
        sub (OrderIdeal): Sigma, for relative ideals
        given (SquarefreeModule): the module, for kind ``'module'``
        name (str): name used in reports
    """

    kind: str
    lattice: FaceLattice
    ideal: OrderIdeal = None
    sub: OrderIdeal = None
    given: SquarefreeModule = None
    name: str = ''

    def module(self, field=QQ):
        """the module to compute with"""
        if self.kind == 'module':
            return self.given
        if self.kind == 'relative':
            return relative_ideal(self.ideal, self.sub, field)
        return stanley_reisner(self.ideal, field)


def simplicial_complex(n, facets, name=''):
    """Subject k[Delta] for the complex on vertices 1..n with given facets.

    Raises:
        InputError: if a vertex is outside 1..n
    """
    L = boolean_lattice(n)
    for facet in facets:
        bad = [v for v in facet if not 1 <= int(v) <= n]
        if bad:
            raise InputError('vertex {} outside 1..{}'.format(bad[0], n),
                             kind='vertex', witness=bad)
    ideal = ideal_from_facets(L, [L.subset(f) for f in facets])
    return Subject('ideal', L, ideal, name=name)


def _tetra_sphere():
    return simplicial_complex(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)],
                              'tetra-sphere')


def _rp2():
    return simplicial_complex(6, RP2_FACETS, 'rp2-6')


def _cycle3():
    return simplicial_complex(3, [(1, 2), (1, 3), (2, 3)], 'cycle3')


def _full_simplex():
    return simplicial_complex(3, [(1, 2, 3)], 'full-simplex')


def _disjoint_edges():
    return simplicial_complex(4, [(1, 2), (3, 4)], 'disjoint-edges')


def _yz_ideal():
    L = boolean_lattice(3)
    full = OrderIdeal(L, L)
    sub = ideal_from_facets(L, [L.subset([1])])
    return Subject('relative', L, full, sub, name='yz-ideal')


def _quadric_cone():
    L = cone_over_square()
    return Subject('ideal', L, OrderIdeal(L, L), name='quadric-cone')


def _square_ideal():
    L = cone_over_square()
    return Subject('ideal', L, OrderIdeal(L, [f for f in L if f != L.top]),
                   name='square-ideal')


DEMOS = {
    'tetra-sphere': _tetra_sphere,
    'rp2-6': _rp2,
    'cycle3': _cycle3,
    'yz-ideal': _yz_ideal,
    'quadric-cone': _quadric_cone,
    'full-simplex': _full_simplex,
    'disjoint-edges': _disjoint_edges,
    'square-ideal': _square_ideal,
}


def demo(name):
    """Build a demo subject by name.

    Raises:
        InputError: for unknown names
    """
    if name not in DEMOS:
        raise InputError('unknown demo {!r}, choose from {}'.format(
            name, ', '.join(sorted(DEMOS))), kind='demo', witness=(name,))
    return DEMOS[name]()
