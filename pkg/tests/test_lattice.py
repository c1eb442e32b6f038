import random

import pytest
from sqfree.lattice import *
from sqfree.util import LatticeError, IncidenceError, ClosureError, \
    InputError


@pytest.fixture
def b3():
    return boolean_lattice(3)


@pytest.fixture
def square():
    return cone_over_square()


def test_boolean_lattice(b3):
    L = b3
    assert len(L) == 8
    assert L.id(L.bottom) == '0'
    assert L.id(L.top) == '1,2,3'
    assert L.is_boolean
    assert [L.id(f) for f in L.rays] == ['1', '2', '3']
    assert [L.id(f) for f in L.faces_of_dim(2)] == ['1,2', '1,3', '2,3']
    assert L.subset([3, 1]) == L.idx('1,3')
    assert L.subset([]) == L.bottom
    assert L.vertices(L.idx('1,3')) == {L.idx('1'), L.idx('3')}
    assert len(L.covers()) == 12
    assert len(L.diamonds()) == 6


def test_order_queries(b3):
    L = b3
    a, b = L.idx('1'), L.idx('1,2')
    assert L.leq(a, b) and not L.leq(b, a)
    assert join(L, '1', '2') == b
    assert join(L, '1', '1,2') == b
    assert L.interval(a, L.top) == sorted(L.idx(x) for x in
                                          ('1', '1,2', '1,3', '1,2,3'))
    assert [L.id(f) for f in L.saturated_chain(L.bottom, L.top)] == \
        ['0', '1', '1,2', '1,2,3']
    with pytest.raises(LatticeError) as e:
        L.idx('9')
    assert e.value.kind == 'unknown-face'


def test_cone_over_square(square):
    L = square
    assert L.n == 3
    assert len(L) == 10
    assert not L.is_boolean
    assert len(L.rays) == 4
    assert L.join(L.idx('r1'), L.idx('r3')) == L.top
    assert L.join(L.idx('r1'), L.idx('r2')) == L.idx('f12')
    assert L.join(L.idx('r1'), L.idx('r4')) == L.idx('f14')
    assert [L.id(f) for f in L.lower_covers(L.top)] == \
        ['f12', 'f14', 'f23', 'f34']


def test_join_laws(b3, square):
    rng = random.Random(17)
    for L in (b3, boolean_lattice(4), square):
        faces = list(L)
        for _ in range(150):
            a, b, c = (rng.choice(faces) for _ in range(3))
            assert L.join(a, a) == a
            assert L.join(a, b) == L.join(b, a)
            assert L.join(a, L.join(b, c)) == L.join(L.join(a, b), c)
            assert L.leq(a, L.join(a, b)) and L.leq(b, L.join(a, b))


def test_incidence(b3, square):
    for L in (b3, boolean_lattice(4), square):
        eps = L.incidence
        assert len(eps) == len(L.covers())
        assert eps.check()
        assert all(s in (1, -1) for _, s in eps.items())


def test_incidence_violation(b3):
    L = b3
    signs = dict(L.incidence.signs)
    key = (L.idx('1,2'), L.idx('1'))
    signs[key] = -signs[key]
    with pytest.raises(IncidenceError) as e:
        IncidenceFunction(L, signs).check()
    assert e.value.kind == 'invalid-cell-structure'


def test_lattice_errors():
    def kind(n, faces, covers):
        with pytest.raises(LatticeError) as e:
            FaceLattice(n, faces, covers)
        return e.value.kind

    assert kind(1, [('0', 0), ('0', 1)], []) == 'duplicate'
    assert kind(1, [('0', 0), ('a', 2)], [('0', 'a')]) == 'dimension'
    assert kind(1, [('0', 0), ('a', 1), ('b', 1)],
                [('0', 'a'), ('0', 'b')]) == 'top'
    assert kind(2, [('0', 0), ('a', 1), ('b', 1), ('t', 2)],
                [('0', 'a'), ('0', 'b'), ('a', 't'), ('b', 't'),
                 ('0', 't')]) == 'graded'
    assert kind(2, [('0', 0), ('a', 1), ('t', 2)],
                [('0', 'a'), ('a', 't')]) == 'diamond'
    with pytest.raises(IncidenceError) as e:
        FaceLattice(2, [('0', 0), ('a', 1), ('t', 2)],
                    [('0', 'a'), ('a', 't')])
    assert e.value.witness == ('0', 't')
    assert kind(3, [('0', 0), ('a', 1), ('b', 1), ('c', 2), ('d', 2),
                    ('t', 3)],
                [('0', 'a'), ('0', 'b'), ('a', 'c'), ('b', 'c'), ('a', 'd'),
                 ('b', 'd'), ('c', 't'), ('d', 't')]) == 'join'
    assert kind(1, [('0', 0), ('t', 1)], [('0', 'x')]) == 'unknown-face'
    with pytest.raises(LatticeError) as e:
        boolean_lattice(0)
    assert e.value.kind == 'degenerate'


def test_order_ideal(b3):
    L = b3
    circle = validate_order_ideal(L, [f for f in L if f != L.top])
    assert circle.dim == 1
    assert [L.id(f) for f in circle.facets()] == ['1,2', '1,3', '2,3']
    assert circle.is_pure()
    assert OrderIdeal(L, []).dim is None
    assert OrderIdeal(L, ['0']).dim == -1
    with pytest.raises(ClosureError) as e:
        validate_order_ideal(L, ['0', '1', '1,2'])
    assert e.value.witness == ('1,2', '2')


def test_order_filter(b3):
    L = b3
    assert star_filter(L, '1').ids() == ['1', '1,2', '1,3', '1,2,3']
    assert len(positive_filter(L)) == 7
    assert validate_order_filter(L, ['1,2', '1,2,3']).ids() == \
        ['1,2', '1,2,3']
    with pytest.raises(ClosureError) as e:
        validate_order_filter(L, ['1', '1,2,3'])
    assert e.value.witness == ('1', '1,2')


def test_ideal_from_facets(b3):
    L = b3
    d = ideal_from_facets(L, [L.subset([1, 2]), '3'])
    assert d.ids() == ['0', '1', '2', '3', '1,2']
    assert not d.is_pure()
    assert ideal_from_facets(L, []).ids() == []


def test_order_ideals():
    # Dedekind numbers
    for n, count in ((1, 3), (2, 6), (3, 20), (4, 168)):
        L = boolean_lattice(n)
        ideals = list(order_ideals(L))
        assert len(ideals) == count
        assert len({i.members for i in ideals}) == count
        for i in ideals:
            validate_order_ideal(L, i.members)
    assert len(list(order_ideals(cone_over_square()))) > 20


def test_cover_list_schema(square):
    L = square
    assert from_cover_list(L.as_dict()) == L
    with pytest.raises(InputError) as e:
        from_cover_list({'n': 2})
    assert e.value.kind == 'schema'
    with pytest.raises(InputError):
        from_cover_list({'n': 1, 'faces': [{'id': '0', 'dim': 0}],
                         'covers': [['0']]})
