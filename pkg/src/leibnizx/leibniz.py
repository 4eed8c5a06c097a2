"""Finite-dimensional Leibniz algebras over Q: identity checking, actions,
semidirect products, representations, and the universal Lie quotient.

Elements are sparse coordinate vectors; structure constants are dense
nested tuples c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.
"""

from dataclasses import dataclass, field

from .scalars import Q, ZERO
from .linalg import Echelon, LinearMap, Subspace, vec_add_scaled


def _tensor(dim_i, dim_j, dim_k, entries):
    out = []
    for i in range(dim_i):
        row = []
        for j in range(dim_j):
            cell = tuple(Q(entries[i][j][k]) for k in range(dim_k))
            row.append(cell)
        out.append(tuple(row))
    return tuple(out)


def _bilinear(tensor, x, y):
    """Evaluate a structure-constant tensor on sparse vectors."""
    out = {}
    for i, ci in x.items():
        ti = tensor[i]
        for j, cj in y.items():
            c = ci * cj
            for k, v in enumerate(ti[j]):
                if v != 0:
                    w = out.get(k, ZERO) + c * v
                    if w == 0:
                        out.pop(k, None)
                    else:
                        out[k] = w
    return out


def basis_vec(i):
    return {i: Q(1)}


@dataclass(frozen=True)
class LeibnizAlgebra:
    """Leibniz algebra given by structure constants; Lie algebras are the
    antisymmetric special case."""

    name: str
    basis: tuple
    bracket_tensor: tuple

    def __post_init__(self):
        n = len(self.basis)
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "bracket_tensor",
                           _tensor(n, n, n, self.bracket_tensor))

    @property
    def dim(self):
        return len(self.basis)

    def bracket(self, x, y):
        return _bilinear(self.bracket_tensor, x, y)

    def bracket_basis(self, i, j):
        return {k: v for k, v in enumerate(self.bracket_tensor[i][j]) if v != 0}

    def check_leibniz(self):
        """Exhaustive Leibniz identity check; returns violating triples."""
        bad = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                bij = self.bracket_basis(i, j)
                for k in range(n):
                    lhs = self.bracket(bij, basis_vec(k))
                    rhs = self.bracket(basis_vec(i),
                                       self.bracket_basis(j, k))
                    vec_add_scaled(rhs, self.bracket(
                        self.bracket_basis(i, k), basis_vec(j)), Q(1))
                    if lhs != rhs:
                        bad.append((i, j, k, lhs, rhs))
        return bad

    def is_lie(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                s = dict(self.bracket_basis(i, j))
                vec_add_scaled(s, self.bracket_basis(j, i), Q(1))
                if s:
                    return False
        return True

    def squares_span(self):
        """span{[x,x]} = span{[e_i,e_j]+[e_j,e_i]} over Q (polarization)."""
        vecs = []
        for i in range(self.dim):
            for j in range(i, self.dim):
                s = dict(self.bracket_basis(i, j))
                vec_add_scaled(s, self.bracket_basis(j, i), Q(1))
                if s:
                    vecs.append(s)
        return Subspace.from_vectors(self.dim, vecs)


def zero_algebra(name="0"):
    return LeibnizAlgebra(name, (), ())


def abelian(name, basis):
    n = len(basis)
    z = [[[0] * n for _ in range(n)] for _ in range(n)]
    return LeibnizAlgebra(name, tuple(basis), z)


@dataclass(frozen=True)
class LeibnizAction:
    """Action of p on q: tensors for [p_i, q_j] and [q_j, p_i]."""

    actor: LeibnizAlgebra
    target: LeibnizAlgebra
    left_tensor: tuple   # [p_i, q_j] = sum_k left[i][j][k] q_k
    right_tensor: tuple  # [q_j, p_i] = sum_k right[j][i][k] q_k

    def __post_init__(self):
        np_, nq = self.actor.dim, self.target.dim
        object.__setattr__(self, "left_tensor",
                           _tensor(np_, nq, nq, self.left_tensor))
        object.__setattr__(self, "right_tensor",
                           _tensor(nq, np_, nq, self.right_tensor))

    def left(self, p, q):
        return _bilinear(self.left_tensor, p, q)

    def right(self, q, p):
        return _bilinear(self.right_tensor, q, p)


def zero_action(p, q):
    z_left = [[[0] * q.dim for _ in range(q.dim)] for _ in range(p.dim)]
    z_right = [[[0] * q.dim for _ in range(p.dim)] for _ in range(q.dim)]
    return LeibnizAction(p, q, z_left, z_right)


def adjoint_action(p):
    """p acting on itself by its own bracket."""
    t = p.bracket_tensor
    return LeibnizAction(p, p, t, t)


def check_action(act):
    """The six mixed Leibniz identities, one per placement pattern of the
    q-entries in [[x,y],z] = [x,[y,z]] + [[x,z],y]."""
    p, q = act.actor, act.target

    def br(kx, x, ky, y):
        if kx == "p" and ky == "p":
            return "p", p.bracket(x, y)
        if kx == "p" and ky == "q":
            return "q", act.left(x, y)
        if kx == "q" and ky == "p":
            return "q", act.right(x, y)
        return "q", q.bracket(x, y)

    def identity_holds(kinds, xs):
        (k1, x1), (k2, x2), (k3, x3) = zip(kinds, xs)
        ka, lhs_in = br(k1, x1, k2, x2)
        _, lhs = br(ka, lhs_in, k3, x3)
        kb, t1_in = br(k2, x2, k3, x3)
        _, t1 = br(k1, x1, kb, t1_in)
        kc, t2_in = br(k1, x1, k3, x3)
        _, t2 = br(kc, t2_in, k2, x2)
        rhs = dict(t1)
        vec_add_scaled(rhs, t2, Q(1))
        return lhs == rhs

    patterns = [("q", "p", "p"), ("p", "q", "p"), ("p", "p", "q"),
                ("q", "q", "p"), ("q", "p", "q"), ("p", "q", "q")]
    bad = []
    for pat in patterns:
        dims = [q.dim if k == "q" else p.dim for k in pat]
        for i in range(dims[0]):
            for j in range(dims[1]):
                for k in range(dims[2]):
                    xs = (basis_vec(i), basis_vec(j), basis_vec(k))
                    if not identity_holds(pat, xs):
                        bad.append((pat, (i, j, k)))
    return bad


def semidirect(act):
    """Leibniz structure on q ⊕ p:
    [(q1,p1),(q2,p2)] = ([q1,q2]+[p1,q2]+[q1,p2], [p1,p2])."""
    p, q = act.actor, act.target
    nq, np_ = q.dim, p.dim
    n = nq + np_

    def bracket_basis(i, j):
        out = {}
        if i < nq and j < nq:
            out.update(q.bracket_basis(i, j))
        elif i < nq:
            out.update(act.right(basis_vec(i), basis_vec(j - nq)))
        elif j < nq:
            out.update(act.left(basis_vec(i - nq), basis_vec(j)))
        else:
            out = {nq + k: v
                   for k, v in p.bracket_basis(i - nq, j - nq).items()}
        return out

    tensor = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, v in bracket_basis(i, j).items():
                tensor[i][j][k] = v
    names = tuple("q.%s" % b for b in q.basis) + \
        tuple("p.%s" % b for b in p.basis)
    return LeibnizAlgebra("%s⋊%s" % (q.name, p.name), names, tensor)


@dataclass(frozen=True)
class LeibnizRep:
    """Representation of p on a module M: matrices for [p_i, m] (left) and
    [m, p_i] (right)."""

    algebra: LeibnizAlgebra
    module_dim: int
    left_mats: tuple   # left_mats[i] : LinearMap M -> M, m -> [p_i, m]
    right_mats: tuple

    def left(self, pvec):
        out = LinearMap.zero(self.module_dim, self.module_dim)
        for i, c in pvec.items():
            out = out.add(self.left_mats[i].scale(c))
        return out

    def right(self, pvec):
        out = LinearMap.zero(self.module_dim, self.module_dim)
        for i, c in pvec.items():
            out = out.add(self.right_mats[i].scale(c))
        return out


def zero_rep(p, module_dim):
    z = tuple(LinearMap.zero(module_dim, module_dim) for _ in range(p.dim))
    return LeibnizRep(p, module_dim, z, z)


def check_rep(rep):
    """The three representation axioms as matrix identities on basis pairs."""
    p = rep.algebra
    bad = []
    for i in range(p.dim):
        for j in range(p.dim):
            Rbr = rep.right(p.bracket_basis(i, j))
            Lbr = rep.left(p.bracket_basis(i, j))
            Ri, Rj = rep.right_mats[i], rep.right_mats[j]
            Li, Lj = rep.left_mats[i], rep.left_mats[j]
            # [m,[p_i,p_j]] = [[m,p_i],p_j] - [[m,p_j],p_i]
            if Rbr != Rj.compose(Ri).add(Ri.compose(Rj).scale(-1)):
                bad.append(("axiom1", i, j))
            # [p_i,[m,p_j]] = [[p_i,m],p_j] - [[p_i,p_j],m]
            if Li.compose(Rj) != Rj.compose(Li).add(Lbr.scale(-1)):
                bad.append(("axiom2", i, j))
            # [p_i,[p_j,m]] = [[p_i,p_j],m] - [[p_i,m],p_j]
            if Li.compose(Lj) != Lbr.add(Rj.compose(Li).scale(-1)):
                bad.append(("axiom3", i, j))
    return bad


def rep_to_abelian_extension(rep):
    """The Leibniz algebra M ⊕ p with M an abelian ideal; passes the
    Leibniz check iff the representation axioms hold."""
    p = rep.algebra
    m = rep.module_dim
    M = abelian("M", tuple("m%d" % i for i in range(m)))
    left = [[[rep.left_mats[i].entries[k][j] for k in range(m)]
             for j in range(m)] for i in range(p.dim)]
    right = [[[rep.right_mats[i].entries[k][j] for k in range(m)]
              for i in range(p.dim)] for j in range(m)]
    act = LeibnizAction(p, M, left, right)
    return semidirect(act)


def subalgebra_ideal_closure(alg, seed, also_maps=()):
    """Smallest subspace containing seed and closed under bracketing with
    the whole algebra on both sides (and under extra linear maps)."""
    ech = Echelon()
    work = []
    for v in seed:
        piv = ech.insert(dict(v))
        if piv is not None:
            work.append(ech.rows[piv])
    while work:
        v = work.pop()
        candidates = []
        for i in range(alg.dim):
            candidates.append(alg.bracket(basis_vec(i), v))
            candidates.append(alg.bracket(v, basis_vec(i)))
        for f in also_maps:
            candidates.append(f(v))
        for c in candidates:
            piv = ech.insert(c)
            if piv is not None:
                work.append(ech.rows[piv])
    return Subspace.from_vectors(alg.dim, ech.canonical_rows())


def quotient_algebra(alg, ideal_sub, name=None):
    """Quotient by a two-sided ideal subspace; returns (algebra, projection).

    Well-definedness ([I, alg] + [alg, I] ⊆ I) is verified exactly.
    """
    for r in ideal_sub.rows:
        for i in range(alg.dim):
            if not ideal_sub.contains_vec(alg.bracket(basis_vec(i), r)):
                raise ValueError("subspace is not a left ideal")
            if not ideal_sub.contains_vec(alg.bracket(r, basis_vec(i))):
                raise ValueError("subspace is not a right ideal")
    comp, proj = ideal_sub.quotient_basis()
    names = tuple(alg.basis[c] + "~" for c in comp)
    nq = len(comp)
    tensor = [[[ZERO] * nq for _ in range(nq)] for _ in range(nq)]
    for a in range(nq):
        for b in range(nq):
            br = proj.apply(alg.bracket(basis_vec(comp[a]),
                                        basis_vec(comp[b])))
            for k, v in br.items():
                tensor[a][b][k] = v
    qname = name or ("%s/~" % alg.name)
    return LeibnizAlgebra(qname, names, tensor), proj


def liezation(alg):
    """Universal Lie quotient: divide by the ideal closure of the squares.

    Returns (lie algebra, projection).  The output is checked to be Lie.
    """
    sq = alg.squares_span()
    ideal = subalgebra_ideal_closure(alg, list(sq.rows))
    lie, proj = quotient_algebra(alg, ideal, name="Liez(%s)" % alg.name)
    assert lie.is_lie() and not lie.check_leibniz()
    return lie, proj
