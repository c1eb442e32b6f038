import random

import pytest
from sqfree.cohomology import *
from sqfree.lattice import boolean_lattice, cone_over_square, \
    validate_order_ideal, OrderIdeal
from sqfree.library import demo
from sqfree.linalg import QQ, PrimeField
from sqfree.module import stanley_reisner, projective_J, random_module
from sqfree.util import ComplexError, ModuleError


@pytest.fixture
def circle():
    L = boolean_lattice(3)
    return stanley_reisner(validate_order_ideal(L, [f for f in L
                                                    if f != L.top]))


def test_vector_space_complex():
    m = QQ.matrix
    C = VectorSpaceComplex(0, [1, 2, 1], {0: m([[1], [1]]), 1: m([[1, -1]])})
    assert C.check()
    assert [C.cohomology(i) for i in range(-1, 4)] == [0, 0, 0, 0, 0]
    assert C.euler_characteristic() == 0
    C = VectorSpaceComplex(2, [1, 1])
    assert C.cohomology(2) == 1 and C.cohomology(3) == 1
    assert C.diff(5).shape == (0, 0)
    with pytest.raises(ComplexError) as e:
        VectorSpaceComplex(0, [1, 2], {0: m([[1]])})
    assert e.value.kind == 'shape'
    bad = VectorSpaceComplex(0, [1, 1, 1], {0: m([[1]]), 1: m([[1]])})
    with pytest.raises(ComplexError) as e:
        bad.check()
    assert e.value.witness == (0,)


def test_cech_complex(circle):
    L = circle.lattice
    C = cech_complex(circle, L.bottom)
    assert (C.lo, C.hi) == (0, 3)
    assert [C.dim(i) for i in range(4)] == [1, 3, 3, 0]
    assert C.euler_characteristic() == 1
    C = cech_complex(circle, '1')
    assert (C.lo, C.hi) == (1, 3)
    assert [C.dim(i) for i in range(1, 4)] == [1, 2, 0]


def test_circle_table(circle):
    L = circle.lattice
    table = local_cohomology_table(circle)
    for f in L:
        want = 1 if f != L.top else 0
        assert table.column(f) == (0, 0, want, 0)
    assert len(table.nonzero()) == 7
    assert all(i == 2 for i, _, _ in table.nonzero())
    assert table.finite_length(0) and table.finite_length(1)
    assert not table.finite_length(2)
    assert table.entry(-1, '0') == 0 and table.entry(4, '0') == 0
    rows = table.rows()
    assert len(rows) == 4 * 8
    assert rows[0] == (0, '0', 0, 0)
    assert (2, '1,2', 2, 1) in rows


def test_full_simplex_and_quadric_cone():
    # the semigroup ring itself: only H^n, only at the top face
    for L in (boolean_lattice(3), boolean_lattice(4), cone_over_square()):
        table = local_cohomology_table(stanley_reisner(OrderIdeal(L, L)))
        assert table.nonzero() == [(L.n, L.top, 1)]


def test_yz_ideal():
    M = demo('yz-ideal').module()
    table = local_cohomology_table(M)
    assert table.entry(2, '1') == 1
    assert table.nonzero()[0] == (2, M.lattice.idx('1'), 1)


def test_parallel_columns():
    M = demo('tetra-sphere').module()
    serial = LocalCohomologyTable(M).compute_all(1).rows()
    assert LocalCohomologyTable(M).compute_all(4).rows() == serial


def test_euler_characteristic_of_columns():
    rng = random.Random(5)
    L = boolean_lattice(3)
    for _ in range(10):
        M = random_module(L, rng)
        table = LocalCohomologyTable(M)
        for f in L:
            assert table.euler_characteristic(f) == \
                cech_complex(M, f).euler_characteristic()


def test_sheaf_cohomology():
    for name, h in (('tetra-sphere', [1, 0, 1, 0]), ('cycle3', [1, 1, 0]),
                    ('disjoint-edges', [2, 0, 0, 0])):
        assert sheaf_cohomology_dims(demo(name).module()) == h


def test_compact_support(circle):
    L = circle.lattice
    assert compact_support_dims(circle, '1') == [0, 1, 0]
    assert compact_support_dims(circle, '1,2,3') == [0, 0, 0]
    with pytest.raises(ModuleError) as e:
        compact_support_dims(circle, L.bottom)
    assert e.value.kind == 'bottom-face'


def test_rp2_depends_on_characteristic():
    s = demo('rp2-6')
    L = s.lattice
    over_f2 = local_cohomology_table(s.module(PrimeField(2)))
    over_q = local_cohomology_table(s.module(QQ))
    assert over_f2.entry(2, L.bottom) == 1
    assert over_f2.entry(3, L.bottom) == 1
    assert over_q.entry(2, L.bottom) == 0
    assert over_q.entry(3, L.bottom) == 0
