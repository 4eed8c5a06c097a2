from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizx.scalars import Q
from leibnizx.linalg import LinearMap, Subspace, vec_add_scaled
from leibnizx.leibniz import (LeibnizAlgebra, LeibnizRep, abelian,
                              adjoint_action, basis_vec, check_action,
                              check_rep, liezation, quotient_algebra,
                              rep_to_abelian_extension, semidirect,
                              subalgebra_ideal_closure, zero_action,
                              zero_rep)


def test_corpus_algebras(a1, l2, r2):
    for alg in (a1, l2, r2):
        assert not alg.check_leibniz()
    assert a1.is_lie() and r2.is_lie()
    assert not l2.is_lie()  # [a,a] = b is a nonzero square


def test_square_bracket_fails():
    bad = LeibnizAlgebra("bad", ("e",), [[[1]]])
    viol = bad.check_leibniz()
    assert viol and viol[0][:3] == (0, 0, 0)


def test_bracket_bilinear(l2):
    x = {0: Q(2), 1: Q(-1)}
    y = {0: Q(1)}
    lhs = l2.bracket(x, y)
    rhs = {}
    for i, ci in x.items():
        vec_add_scaled(rhs, l2.bracket(basis_vec(i), y), ci)
    assert lhs == rhs


vecs2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(
    lambda t: {i: Q(c) for i, c in enumerate(t) if c})


@settings(deadline=None, max_examples=50)
@given(vecs2, vecs2, vecs2)
def test_leibniz_identity_on_vectors(x, y, z):
    # the identity extends from basis triples to all vectors
    alg = LeibnizAlgebra("R2", ("x", "y"),
                         [[[0, 0], [1, 0]], [[-1, 0], [0, 0]]])
    lhs = alg.bracket(alg.bracket(x, y), z)
    rhs = alg.bracket(x, alg.bracket(y, z))
    vec_add_scaled(rhs, alg.bracket(alg.bracket(x, z), y), Q(1))
    assert lhs == rhs


def test_squares_span(l2, r2):
    assert l2.squares_span() == Subspace.from_vectors(2, [{1: Q(1)}])
    # R2 is Lie: no squares
    assert r2.squares_span().dim == 0


def test_adjoint_action_and_semidirect(l2):
    act = adjoint_action(l2)
    assert not check_action(act)
    sd = semidirect(act)
    assert sd.dim == 4
    assert not sd.check_leibniz()
    # the p-part multiplies like p
    assert sd.bracket_basis(2, 2) == {3: Q(1)}


def test_zero_action_semidirect_is_direct_sum(a1, l2):
    sd = semidirect(zero_action(l2, a1))
    assert not sd.check_leibniz()
    assert sd.bracket_basis(0, 1) == {}


def test_broken_action_detected(l2):
    # "action" by the identity on an abelian carrier violates the mixed
    # identities for L2 because [a,a] = b acts nontrivially
    q = abelian("M", ("m",))
    act_tensor = [[[1]], [[1]]]
    from leibnizx.leibniz import LeibnizAction
    act = LeibnizAction(l2, q, act_tensor, [[[1], [1]]])
    assert check_action(act)


def test_check_rep_corpus(load):
    for name in ("rep-a1-r.json", "rep-adj-l2.json", "rep-adj-r2.json",
                 "rep-zero-l2.json", "rep-zero-r2.json"):
        assert not check_rep(load(name)), name
    bad = load("bad-rep-a1.json")
    assert [v[0] for v in check_rep(bad)] == ["axiom3"]


def test_rep_as_abelian_extension(load):
    good = rep_to_abelian_extension(load("rep-adj-l2.json"))
    assert not good.check_leibniz()
    bad = rep_to_abelian_extension(load("bad-rep-a1.json"))
    assert bad.check_leibniz()


def test_zero_rep(r2):
    assert not check_rep(zero_rep(r2, 3))


def test_ideal_closure(l2):
    closure = subalgebra_ideal_closure(l2, [{0: Q(1)}])
    # a generates b = [a,a], so the closure is everything
    assert closure.dim == 2
    only_b = subalgebra_ideal_closure(l2, [{1: Q(1)}])
    assert only_b.dim == 1


def test_quotient_algebra_rejects_non_ideal(r2):
    line = Subspace.from_vectors(2, [{1: Q(1)}])  # [x,y]=x leaves span{y}
    try:
        quotient_algebra(r2, line)
        assert False, "span{y} is not an ideal of R2"
    except ValueError:
        pass


def test_liezation(l2, r2, a1):
    lie, proj = liezation(l2)
    assert lie.dim == 1 and lie.is_lie()
    assert proj.apply({1: Q(1)}) == {}
    for alg in (a1, r2):  # already Lie: liezation is an isomorphism
        lie, proj = liezation(alg)
        assert lie.dim == alg.dim
        assert proj.rank() == alg.dim
