import random

import pytest
from sqfree.classify import *
from sqfree.cohomology import LocalCohomologyTable
from sqfree.lattice import boolean_lattice, cone_over_square, \
    ideal_from_facets, OrderIdeal, order_ideals
from sqfree.library import demo, simplicial_complex
from sqfree.linalg import QQ, PrimeField
from sqfree.module import stanley_reisner, SquarefreeModule, projective_J, \
    random_module, krull_dimension

F2 = PrimeField(2)


def classify_demo(name, field=QQ):
    s = demo(name)
    if s.kind == 'relative':
        return classify_relative(s.ideal, s.sub, field)
    return classify(s.module(field), s.ideal)


def test_yz_ideal_is_not_buchsbaum():
    r = classify_demo('yz-ideal')
    assert r.krull_dim == 3
    assert r.depth == 2
    assert not r.cohen_macaulay
    assert not r.buchsbaum
    assert r.buchsbaum.evidence[0] == (2, '1', 1)
    assert r.orientability is None


def test_rp2_over_f2():
    r = classify_demo('rp2-6', F2)
    assert r.krull_dim == 3
    assert not r.cohen_macaulay.holds
    assert r.buchsbaum.holds
    assert r.components == 1
    o = r.orientability
    assert o.applicable
    assert o.index == 1
    assert o.orientable


def test_rp2_over_rationals():
    r = classify_demo('rp2-6', QQ)
    assert r.cohen_macaulay.holds
    assert r.buchsbaum.holds
    assert r.orientability.index == 0
    assert not r.orientability.orientable


def test_quadric_cone_is_cohen_macaulay():
    r = classify_demo('quadric-cone')
    assert r.krull_dim == 3
    assert r.depth == 3
    assert r.cohen_macaulay.holds
    assert r.gorenstein_like is not None
    assert not r.orientability.applicable


def test_sphere():
    r = classify_demo('tetra-sphere')
    assert r.cohen_macaulay and r.buchsbaum
    assert r.gorenstein_like.holds
    assert r.orientability.index == 1 and r.orientability.orientable
    d = r.as_dict()
    assert d['cohen_macaulay']['holds'] is True
    assert d['orientability']['index'] == 1


def test_disjoint_edges():
    r = classify_demo('disjoint-edges')
    assert r.components == 2
    assert not r.cohen_macaulay
    assert r.buchsbaum
    assert r.cohen_macaulay.evidence == [(1, '0', 1)]
    assert not r.orientability.applicable
    assert r.orientability.reason == 'manifold with boundary'


def test_depth_and_dimension():
    L = boolean_lattice(3)
    assert depth(SquarefreeModule(L, [0] * 8)) is None
    assert depth(projective_J(L, '0')) == 3
    assert is_cohen_macaulay(SquarefreeModule(L, [0] * 8)).holds
    points = ideal_from_facets(L, ['1', '2'])
    v = is_cohen_macaulay(stanley_reisner(points), ideal=points)
    assert v.holds


def test_depth_against_dimension():
    rng = random.Random(37)
    for L in (boolean_lattice(3), cone_over_square()):
        for _ in range(8):
            M = random_module(L, rng)
            r = krull_dimension(M)
            if r is None:
                assert depth(M) is None
                continue
            table = LocalCohomologyTable(M)
            d = depth(M, table)
            assert d <= r
            assert (d == r) == is_cohen_macaulay(M, table).holds


def test_verdicts_ignore_vertex_names():
    rng = random.Random(31)
    n = 4
    for _ in range(15):
        facets = [rng.sample(range(1, n + 1), rng.randint(1, 3))
                  for _ in range(rng.randint(1, 4))]
        perm = rng.sample(range(1, n + 1), n)
        renamed = [[perm[v - 1] for v in f] for f in facets]
        verdicts = []
        for fs in (facets, renamed):
            M = simplicial_complex(n, fs).module()
            table = LocalCohomologyTable(M)
            verdicts.append((depth(M, table),
                             is_cohen_macaulay(M, table).holds,
                             is_buchsbaum(M, table).holds))
        assert verdicts[0] == verdicts[1], facets


def test_gorenstein_like():
    circle = demo('cycle3').module()
    assert gorenstein_like(circle).holds
    L = boolean_lattice(3)
    edge = ideal_from_facets(L, [L.subset([1, 2])])
    v = gorenstein_like(stanley_reisner(edge))
    # k[x,y] as a k[x,y,z]-module has canonical module (xy)
    assert not v.holds
    assert v.evidence == [('1', 0, 1)]


def test_not_buchsbaum_complexes():
    L = boolean_lattice(4)
    mixed = ideal_from_facets(L, [L.subset([1, 2, 3]), L.subset([3, 4])])
    assert not is_buchsbaum(stanley_reisner(mixed))
    v = poincare_duality_check(mixed)
    assert v.holds is None
    assert v.reason == 'k[Delta] is not Buchsbaum'
    assert not orientability_report(mixed).applicable


def test_poincare_duality():
    for name, field in (('tetra-sphere', QQ), ('cycle3', QQ),
                        ('rp2-6', F2)):
        v = poincare_duality_check(demo(name).ideal, field)
        assert v.holds, (name, v.evidence)
    v = poincare_duality_check(demo('tetra-sphere').ideal)
    assert v.evidence == [(1, 1, 1), (2, 0, 0), (3, 1, 1)]


def test_classify_relative_empty_subcomplex():
    s = demo('cycle3')
    r = classify_relative(s.ideal, OrderIdeal(s.lattice, []))
    assert r.cohen_macaulay.holds
    assert r.components == 1


def test_munkres_criterion():
    for n in (2, 3):
        for ideal in order_ideals(boolean_lattice(n)):
            r = munkres_criterion(ideal)
            assert r.agree, ideal
    r = munkres_criterion(demo('rp2-6').ideal, F2)
    assert not r.topological and not r.algebraic
    assert r.as_dict()['agree'] is True
