from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizx.scalars import Q
from leibnizx.linalg import (Echelon, LinearMap, Subspace, rref,
                             vec_add_scaled, vec_sub, zero_subspace)


def sv(*pairs):
    return {k: Q(c) for k, c in pairs}


def test_vec_helpers():
    v = sv((0, 1), (2, 3))
    vec_add_scaled(v, sv((0, -1), (1, 5)), Q(1))
    assert v == sv((1, 5), (2, 3))
    assert vec_sub(v, v) == {}


def test_echelon_insert_and_reduce():
    ech = Echelon()
    assert ech.insert(sv((0, 2), (1, 4))) == 0
    # dependent vector is rejected
    assert ech.insert(sv((0, 1), (1, 2))) is None
    assert ech.insert(sv((1, 1))) == 1
    assert len(ech) == 2
    assert ech.reduce(sv((0, 7), (1, 9))) == {}
    assert ech.contains(sv((0, 3), (1, 6)))
    # rows are pivot-normalized
    assert ech.rows[0][0] == 1


def test_echelon_canonical_rows_back_substitute():
    ech = Echelon()
    ech.insert(sv((0, 1), (1, 1)))
    ech.insert(sv((1, 1), (2, 1)))
    rows = ech.canonical_rows()
    assert rows == [sv((0, 1), (2, -1)), sv((1, 1), (2, 1))]


def test_subspace_canonical_equality():
    a = Subspace.from_vectors(3, [sv((0, 1), (1, 1)), sv((1, 2))])
    b = Subspace.from_vectors(3, [sv((1, 1)), sv((0, 5))])
    assert a == b
    assert a.dim == 2
    assert a.contains_vec(sv((0, 1), (1, 7)))
    assert not a.contains_vec(sv((2, 1)))


def test_subspace_coords_roundtrip_and_rejection():
    s = Subspace.from_vectors(3, [sv((0, 1), (2, 1)), sv((1, 1))])
    v = sv((0, 2), (1, -3), (2, 2))
    c = s.coords(v)
    rebuilt = {}
    for x, row in zip(c, s.rows):
        vec_add_scaled(rebuilt, row, x)
    assert rebuilt == v
    try:
        s.coords(sv((2, 1)))
        assert False, "coords outside the subspace must raise"
    except ValueError:
        pass


def test_subspace_sum_intersect():
    a = Subspace.from_vectors(3, [sv((0, 1))])
    b = Subspace.from_vectors(3, [sv((0, 1), (1, 1))])
    assert a.sum(b).dim == 2
    assert a.intersect(b) == zero_subspace(3)
    c = Subspace.from_vectors(3, [sv((0, 1)), sv((1, 1))])
    assert c.intersect(b) == b


def test_quotient_basis_projection():
    s = Subspace.from_vectors(3, [sv((0, 1), (2, 1))])
    comp, proj = s.quotient_basis()
    assert comp == (1, 2)
    # e0 == -e2 mod s, so both project to the same vector
    assert proj.apply(sv((0, 1))) == proj.apply(sv((2, -1)))
    for r in s.rows:
        assert proj.apply(r) == {}


def test_linear_map_basics():
    f = LinearMap.from_cols(2, [sv((0, 1), (1, 1)), sv((1, 2))])
    assert f.col(0) == sv((0, 1), (1, 1))
    assert f.apply(sv((0, 1), (1, 1))) == sv((0, 1), (1, 3))
    assert (f @ LinearMap.identity(2)) == f
    assert f.transpose().transpose() == f
    assert f.rank() == 2
    assert f.kernel() == zero_subspace(2)


def test_kernel_image():
    # rank-1 map: (x, y) -> (x + y, 2x + 2y)
    f = LinearMap(2, 2, [[1, 1], [2, 2]])
    assert f.rank() == 1
    k = f.kernel()
    assert k.dim == 1
    assert f.apply(k.rows[0]) == {}
    assert f.image() == Subspace.from_vectors(2, [sv((0, 1), (1, 2))])


def test_preimage_restrict():
    f = LinearMap(2, 3, [[1, 0, 1], [0, 1, 0]])
    line = Subspace.from_vectors(2, [sv((0, 1))])
    pre = f.preimage(line)
    assert pre.dim == 2
    for r in pre.rows:
        assert line.contains_vec(f.apply(r))
    g = f.restrict(pre)
    assert g.cols == 2


def test_rref_plain():
    rows, pivots = rref([[2, 4], [1, 2], [0, 1]])
    assert pivots == (0, 1)
    assert rows == [(Q(1), Q(0)), (Q(0), Q(1))]
    assert rref([[0, 0]]) == ([], ())


coeffs = st.integers(min_value=-4, max_value=4)


@settings(deadline=None, max_examples=60)
@given(st.lists(st.lists(coeffs, min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_rank_nullity(mat):
    f = LinearMap(len(mat), 3, mat)
    assert f.rank() + f.kernel().dim == 3
    for r in f.kernel().rows:
        assert f.apply(r) == {}


@settings(deadline=None, max_examples=40)
@given(st.lists(st.lists(coeffs, min_size=4, max_size=4),
                min_size=1, max_size=3),
       st.lists(st.lists(coeffs, min_size=4, max_size=4),
                min_size=1, max_size=3))
def test_intersection_modular_law(rows_a, rows_b):
    def sub(rows):
        return Subspace.from_vectors(
            4, [{i: Q(c) for i, c in enumerate(r) if c} for r in rows])

    a, b = sub(rows_a), sub(rows_b)
    inter, total = a.intersect(b), a.sum(b)
    assert inter.dim + total.dim == a.dim + b.dim
    assert a.contains(inter) and b.contains(inter)
    assert total.contains(a) and total.contains(b)
