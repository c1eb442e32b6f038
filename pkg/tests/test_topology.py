import pytest
from sqfree.topology import *
from sqfree.lattice import boolean_lattice, cone_over_square, \
    ideal_from_facets, OrderIdeal
from sqfree.library import demo
from sqfree.linalg import QQ, PrimeField
from sqfree.util import OracleError, ClosureError

F2 = PrimeField(2)


def ideal(name):
    return demo(name).ideal


def test_reduced_homology():
    assert reduced_homology(ideal('tetra-sphere')) == [0, 0, 0, 1]
    assert reduced_homology(ideal('cycle3')) == [0, 0, 1]
    assert reduced_homology(ideal('full-simplex')) == [0, 0, 0, 0]
    assert reduced_homology(ideal('disjoint-edges')) == [0, 1, 0]
    L = boolean_lattice(2)
    assert reduced_homology(OrderIdeal(L, ['0'])) == [1]
    assert reduced_homology(OrderIdeal(L, [])) == []


def test_rp2_homology():
    rp2 = ideal('rp2-6')
    assert reduced_homology(rp2, F2) == [0, 0, 1, 1]
    assert reduced_homology(rp2, QQ) == [0, 0, 0, 0]
    assert euler_characteristic(rp2) == 1
    assert connected_components(rp2) == 1


def test_local_homology():
    circle = ideal('cycle3')
    L = circle.lattice
    assert local_homology(circle, '1') == [0, 1]
    assert local_homology(circle, '1,2') == [0, 1]
    edges = ideal('disjoint-edges')
    assert local_homology(edges, '1') == [0, 0]
    with pytest.raises(OracleError) as e:
        local_homology(circle, L.bottom)
    assert e.value.kind == 'face'
    with pytest.raises(OracleError):
        local_homology(circle, '1,2,3')


def test_relative_homology():
    disk = ideal('full-simplex')
    L = disk.lattice
    boundary = OrderIdeal(L, [f for f in L if f != L.top])
    assert relative_homology(SimplicialPair(disk, boundary)) == [0, 0, 1]
    empty = OrderIdeal(L, [])
    assert relative_homology(SimplicialPair(disk, empty)) == [1, 0, 0]
    with pytest.raises(ClosureError):
        SimplicialPair(boundary, disk)


def test_components_and_euler():
    assert connected_components(ideal('disjoint-edges')) == 2
    assert connected_components(ideal('cycle3')) == 1
    L = boolean_lattice(3)
    assert connected_components(OrderIdeal(L, [])) == 0
    assert connected_components(OrderIdeal(L, ['0'])) == 0
    assert connected_components(ideal_from_facets(L, ['1', '2', '3'])) == 3
    assert euler_characteristic(ideal('tetra-sphere')) == 2
    assert euler_characteristic(ideal('cycle3')) == 0


def test_homology_manifolds():
    for name in ('cycle3', 'tetra-sphere', 'rp2-6'):
        assert is_homology_manifold(ideal(name))
        assert is_homology_manifold(ideal(name), field=F2)
    edges = ideal('disjoint-edges')
    v = is_homology_manifold(edges)
    assert not v
    assert v.witness == ('1',)
    assert is_homology_manifold(edges, with_boundary=True)
    assert is_homology_manifold(ideal('full-simplex'), with_boundary=True)
    L = boolean_lattice(4)
    mixed = ideal_from_facets(L, [L.subset([1, 2, 3]), L.subset([3, 4])])
    v = is_homology_manifold(mixed, with_boundary=True)
    assert not v and v.reason == 'not pure'


def test_pinched_triangles():
    L = boolean_lattice(5)
    bowtie = ideal_from_facets(L, [L.subset([1, 2, 3]), L.subset([3, 4, 5])])
    v = is_homology_manifold(bowtie, with_boundary=True)
    assert not v
    assert v.witness == ('3',)
    assert local_homology(bowtie, '3') == [0, 1, 0]


def test_compact_support_oracle():
    s = demo('yz-ideal')
    assert compact_support_oracle(s.ideal, s.sub) == [0, 0, 0]
    circle = ideal('cycle3')
    point = ideal_from_facets(circle.lattice, ['1'])
    assert compact_support_oracle(circle, point) == [0, 1]


def test_needs_boolean_lattice():
    L = cone_over_square()
    full = OrderIdeal(L, L)
    with pytest.raises(OracleError) as e:
        reduced_homology(full)
    assert e.value.kind == 'not-boolean'
    with pytest.raises(OracleError):
        is_homology_manifold(full)
    assert connected_components(full) == 1
