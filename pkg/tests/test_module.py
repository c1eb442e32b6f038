import random

import pytest
from sqfree.cohomology import LocalCohomologyTable
from sqfree.lattice import boolean_lattice, cone_over_square, \
    validate_order_ideal, ideal_from_facets, OrderIdeal, star_filter, \
    positive_filter
from sqfree.linalg import QQ, PrimeField
from sqfree.module import *
from sqfree.util import ModuleError, ComplexError


@pytest.fixture
def L():
    return boolean_lattice(3)


@pytest.fixture
def circle(L):
    return validate_order_ideal(L, [f for f in L if f != L.top])


def scalar_module(L2, a, b, c, d):
    """k everywhere on boolean(2), maps 0->1->12 are a, b and 0->2->12 c, d"""
    m = QQ.matrix
    return SquarefreeModule(L2, [1, 1, 1, 1], {
        ('0', '1'): m([[a]]), ('1', '1,2'): m([[b]]),
        ('0', '2'): m([[c]]), ('2', '1,2'): m([[d]])})


def test_stanley_reisner(L, circle):
    M = stanley_reisner(circle)
    assert M.dims == (1, 1, 1, 1, 1, 1, 1, 0)
    assert M.total_dim == 7
    assert [L.id(f) for f in M.support()] == circle.ids()
    assert M.dims_by_id()['1,2,3'] == 0
    assert M.check()
    assert krull_dimension(M) == 2


def test_indecomposables(L):
    assert [L.id(f) for f in projective_J(L, '1').support()] == \
        ['1', '1,2', '1,3', '1,2,3']
    assert [L.id(f) for f in injective_kF(L, '1,2').support()] == \
        ['0', '1', '2', '1,2']
    assert canonical_K(L).support() == [L.top]
    assert krull_dimension(projective_J(L, '0')) == 3
    assert krull_dimension(SquarefreeModule(L, [0] * 8)) is None


def test_relative_ideal(L):
    full = OrderIdeal(L, L)
    point = ideal_from_facets(L, ['1'])
    M = relative_ideal(full, point)
    assert M.dims_by_id() == {'0': 0, '1': 0, '2': 1, '3': 1, '1,2': 1,
                              '1,3': 1, '2,3': 1, '1,2,3': 1}
    assert relative_ideal(full, OrderIdeal(L, [])) == \
        stanley_reisner(full)
    with pytest.raises(ModuleError) as e:
        relative_ideal(point, full)
    assert e.value.kind == 'not-subset'


def test_module_errors(L):
    with pytest.raises(ModuleError) as e:
        SquarefreeModule(L, [1, 1])
    assert e.value.kind == 'dims'
    with pytest.raises(ModuleError) as e:
        SquarefreeModule(L, [1] * 8, {('0', '1,2'): QQ.identity(1)})
    assert e.value.kind == 'not-a-cover'
    assert e.value.witness == ('0', '1,2')
    with pytest.raises(ModuleError) as e:
        SquarefreeModule(L, [1] * 8, {('0', '1'): QQ.identity(2)})
    assert e.value.kind == 'shape'
    L2 = boolean_lattice(2)
    with pytest.raises(ModuleError) as e:
        scalar_module(L2, 1, 1, 1, 2)
    assert e.value.kind == 'diamond'
    assert e.value.witness == ('0', '1,2')


def test_phi():
    L2 = boolean_lattice(2)
    M = scalar_module(L2, 2, 3, 3, 2)
    assert phi(M, '1,2', '0').tolist() == [[6]]
    assert M.phi('1', '0').tolist() == [[2]]
    assert M.phi('1', '1').tolist() == [[1]]
    with pytest.raises(ModuleError) as e:
        M.phi('1', '2')
    assert e.value.kind == 'order'


def test_dims_at(L, circle):
    M = stanley_reisner(circle)
    assert dims_at(M, (2, 0, 1)) == 1
    assert dims_at(M, (1, 1, 1)) == 0
    assert dims_at(M, (-1, 0, 0)) == 0
    assert dims_at(M, (0, 0, 0)) == 1
    assert dims_at(M, ('1,2', 3)) == 1
    assert dims_at(M, ('1,2,3', 0)) == 1
    assert dims_at(M, '1,2,3') == 0
    with pytest.raises(ModuleError):
        dims_at(M, (1, 0))
    K = canonical_K(cone_over_square())
    with pytest.raises(ModuleError):
        dims_at(K, (1, 1, 1))
    assert dims_at(K, ('top', 2)) == 1
    Q = K.lattice
    assert dims_at(K, (Q.idx('top'), 2)) == 1
    assert dims_at(K, (Q.idx('r1'), 1)) == 0
    assert dims_at(K, (Q.idx('top'), 0)) == 0
    assert dims_at(K, Q.faces[Q.idx('top')]) == 1
    # on a boolean lattice an integer pair is an exponent vector
    J = stanley_reisner(OrderIdeal(boolean_lattice(2), boolean_lattice(2)))
    assert dims_at(J, (1, 0)) == dims_at(J, '1') == 1


def test_morphisms(L):
    M = stanley_reisner(OrderIdeal(L, L))
    ident = ModuleMorphism.identity(M)
    assert ident.check()
    assert not ident.is_zero()
    assert ModuleMorphism.zero(M, M).is_zero()
    assert ident.compose(ident).mats[0].tolist() == [[1]]
    L1 = boolean_lattice(1)
    N = stanley_reisner(OrderIdeal(L1, L1))
    with pytest.raises(ModuleError) as e:
        ModuleMorphism(N, N, [QQ.identity(1), QQ.scale(2, QQ.identity(1))])
    assert e.value.kind == 'naturality'
    with pytest.raises(ModuleError) as e:
        ModuleMorphism(N, N, [QQ.identity(2), QQ.identity(1)])
    assert e.value.kind == 'shape'


def test_kernel_cokernel_image(L):
    J = projective_J(L, '1')
    N = stanley_reisner(OrderIdeal(L, L))
    basis = hom_basis(J, N)
    assert len(basis) == 1
    f = basis[0]
    assert f.check()
    assert kernel(f).is_zero()
    assert image(f).dims == J.dims
    C = cokernel(f)
    assert C == stanley_reisner(ideal_from_facets(L, ['2,3']))
    p = cokernel_projection(f)
    assert p.check()
    assert p.compose(f).is_zero()
    assert hom_basis(N, J) == []


def test_cohomology_module(L):
    M = projective_J(L, '0')
    Z = SquarefreeModule(L, [0] * len(L))
    H = cohomology_module(ModuleMorphism.zero(Z, M),
                          ModuleMorphism.zero(M, Z))
    assert H.dims == M.dims
    ident = ModuleMorphism.identity(M)
    assert cohomology_module(ModuleMorphism.zero(Z, M), ident).is_zero()
    with pytest.raises(ComplexError):
        cohomology_module(ident, ident)


def test_sums_and_truncations(L, circle):
    M = stanley_reisner(circle)
    S = direct_sum([M, projective_J(L, '1')])
    assert S.dims == tuple(a + b for a, b in
                           zip(M.dims, projective_J(L, '1').dims))
    assert S.check()
    with pytest.raises(ModuleError):
        direct_sum([])
    P = positive_part(M)
    assert P.dims == (0,) + M.dims[1:]
    P = projective_sum(L, ['1', '1', '2'])
    assert P.dims[L.idx('1,2')] == 3
    assert P.dims[L.idx('1,3')] == 2
    assert P.check()
    I = injective_sum(L, ['1,2', '3'])
    assert I.dims[L.bottom] == 2
    assert I.dims[L.idx('1')] == 1
    assert I.check()


def test_truncation_to_a_star():
    for L in (boolean_lattice(3), cone_over_square()):
        kQ = stanley_reisner(OrderIdeal(L, L))
        for f in L:
            star = star_filter(L, f)
            T = truncate_filter(kQ, star)
            assert T == projective_J(L, f)
            assert truncate_filter(T, star) == T


def test_truncation_is_idempotent():
    rng = random.Random(19)
    for L in (boolean_lattice(3), cone_over_square()):
        filters = [positive_filter(L)] + [star_filter(L, f) for f in L]
        for _ in range(4):
            M = random_module(L, rng)
            filt = rng.choice(filters)
            T = truncate_filter(M, filt)
            assert T.check()
            assert truncate_filter(T, filt) == T


def test_euler_characteristic_is_additive():
    # 0 -> ker f -> M -> im f -> 0 and 0 -> im f -> N -> coker f -> 0
    rng = random.Random(29)
    for L in (boolean_lattice(3), cone_over_square()):
        for _ in range(4):
            M, N = random_module(L, rng), random_module(L, rng)
            f = random_morphism(M, N, rng)
            K, I, C = kernel(f), image(f), cokernel(f)
            chi = {name: LocalCohomologyTable(X) for name, X in
                   (('M', M), ('N', N), ('K', K), ('I', I), ('C', C))}
            for face in L:
                e = {name: t.euler_characteristic(face)
                     for name, t in chi.items()}
                assert e['M'] == e['K'] + e['I']
                assert e['N'] == e['I'] + e['C']


def test_hom_from_projectives_and_to_injectives():
    # Hom(J_F, M) = M_F and Hom(M, k[F]) = dual of M_F
    rng = random.Random(3)
    for L in (boolean_lattice(2), boolean_lattice(3), cone_over_square()):
        for _ in range(6):
            M = random_module(L, rng)
            assert M.check()
            for f in L:
                assert len(hom_basis(projective_J(L, f), M)) == M.dims[f]
                assert len(hom_basis(M, injective_kF(L, f))) == M.dims[f]


def test_random_module_over_prime_field():
    rng = random.Random(11)
    F3 = PrimeField(3)
    L = boolean_lattice(3)
    for _ in range(10):
        M = random_module(L, rng, F3)
        assert M.field == F3
        assert M.check()
        f = random_morphism(M, M, rng)
        assert f.check()
