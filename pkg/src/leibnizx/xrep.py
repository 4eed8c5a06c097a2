"""Representations of Leibniz crossed modules and left modules over the
truncated enveloping crossed module.

A representation of (q, p, eta) is an abelian crossed module (N, M, mu)
with p-actions on N and M and bilinear maps xi1: q x M -> N and
xi2: M x q -> N subject to fourteen identities; a left module over the
enveloping crossed module is a morphism into the endomorphism crossed
module (Hom(M,N), End(N,M,mu), Gamma).  The two are exchanged by
evaluating the word action

    Phi(q,p)_l(n,m) = ([q,n] + [p,n] + xi1(q,m), [p,m])
    Phi(q,p)_r(n,m) = ([n,q] + [n,p] + xi2(m,q), [m,p])

on kernel classes (words leftmost-factor-first, as in envelope).
"""

from dataclasses import dataclass

from .scalars import Q, ZERO
from .linalg import LinearMap, Subspace
from .leibniz import LeibnizRep, basis_vec
from .assoc import AssocAlgebra, AssocAction
from .xmod import AssocXMod
from .envelope import ULModule, check_module, ul_relations
from .xul import TruncAssocXMod, _b_coords


# ---------------------------------------------------------------------------
# endomorphism crossed module


def _hom_index(i, j, w):
    """Coordinate of the elementary map E_ij (j-th source basis vector to
    i-th target basis vector) in a Hom(K^w, K^v) space."""
    return i * w + j


def hom_to_map(vec, v, w):
    """Hom-space coordinate vector -> LinearMap K^w -> K^v."""
    entries = [[ZERO] * w for _ in range(v)]
    for idx, c in vec.items():
        entries[idx // w][idx % w] = c
    return LinearMap(v, w, entries)


def map_to_hom(f):
    return {_hom_index(i, j, f.cols): f.entries[i][j]
            for i in range(f.rows) for j in range(f.cols)
            if f.entries[i][j] != 0}


def endo_pairs_subspace(delta):
    """Pairs (alpha: V->V, beta: W->W) with beta delta = delta alpha, as a
    Subspace of K^(V²+W²) (alpha coordinates first)."""
    v, w = delta.cols, delta.rows
    n = v * v + w * w
    # kernel of (alpha, beta) -> beta delta - delta alpha
    cols = []
    for a in range(v):
        for b in range(v):
            alpha = LinearMap.from_cols(v, [basis_vec(a) if j == b else {}
                                            for j in range(v)])
            cols.append(map_to_hom(delta.compose(alpha).scale(-1)))
    for a in range(w):
        for b in range(w):
            beta = LinearMap.from_cols(w, [basis_vec(a) if j == b else {}
                                           for j in range(w)])
            cols.append(map_to_hom(beta.compose(delta)))
    return LinearMap.from_cols(w * v, cols).kernel()


def pair_maps(vec, v, w):
    """Split a (V²+W²)-coordinate vector into (alpha, beta) LinearMaps."""
    alpha = {k: c for k, c in vec.items() if k < v * v}
    beta = {k - v * v: c for k, c in vec.items() if k >= v * v}
    return hom_to_map(alpha, v, v), hom_to_map(beta, w, w)


def endo_xmod(delta):
    """(Hom(W,V), End(V,W,delta), Gamma) for delta: V -> W, as a concrete
    associative crossed module.

    Bottom product d d' = d∘delta∘d'; top product is componentwise
    composition; Gamma(d) = (d∘delta, delta∘d); actions (a,b)·d = a∘d and
    d·(a,b) = d∘b.
    """
    v, w = delta.cols, delta.rows
    pairs = endo_pairs_subspace(delta)
    k = pairs.dim
    nb = v * w

    def pair_of(i):
        return pair_maps(pairs.rows[i], v, w)

    def to_pair_coords(alpha, beta):
        vec = dict(map_to_hom(alpha))
        for key, c in map_to_hom(beta).items():
            vec[v * v + key] = c
        return {i: c for i, c in enumerate(pairs.coords(vec)) if c != 0}

    def hom_basis(idx):
        return hom_to_map({idx: Q(1)}, v, w)

    b_tensor = [[[0] * nb for _ in range(nb)] for _ in range(nb)]
    for a in range(nb):
        da = hom_basis(a)
        for b in range(nb):
            prod = da.compose(delta).compose(hom_basis(b))
            for key, c in map_to_hom(prod).items():
                b_tensor[a][b][key] = c
    B = AssocAlgebra("Hom", tuple("d%d" % i for i in range(nb)), b_tensor)

    a_tensor = [[[0] * k for _ in range(k)] for _ in range(k)]
    for a in range(k):
        aa, ab = pair_of(a)
        for b in range(k):
            ba, bb = pair_of(b)
            comp = to_pair_coords(aa.compose(ba), ab.compose(bb))
            for key, c in comp.items():
                a_tensor[a][b][key] = c
    A = AssocAlgebra("End", tuple("e%d" % i for i in range(k)), a_tensor)

    rho = LinearMap.from_cols(
        k, [to_pair_coords(hom_basis(i).compose(delta),
                           delta.compose(hom_basis(i))) for i in range(nb)])

    left = [[[0] * nb for _ in range(nb)] for _ in range(k)]
    right = [[[0] * nb for _ in range(k)] for _ in range(nb)]
    for i in range(k):
        alpha, beta = pair_of(i)
        for a in range(nb):
            d = hom_basis(a)
            for key, c in map_to_hom(alpha.compose(d)).items():
                left[i][a][key] = c
            for key, c in map_to_hom(d.compose(beta)).items():
                right[a][i][key] = c
    return AssocXMod(B, A, rho, AssocAction(A, B, left, right))


# ---------------------------------------------------------------------------
# crossed-module representations


@dataclass(frozen=True)
class LeibnizXModRep:
    """(N, M, mu) with p-actions (as plain representations) and the two
    bilinear bridge maps; xi1[j]: M -> N is xi1(q_j, ·), xi2[j] is
    xi2(·, q_j)."""

    xmod: object            # LeibnizXMod
    mu: LinearMap           # N -> M
    rep_n: LeibnizRep
    rep_m: LeibnizRep
    xi1: tuple              # per q-basis LinearMap M -> N
    xi2: tuple

    @property
    def n_dim(self):
        return self.rep_n.module_dim

    @property
    def m_dim(self):
        return self.rep_m.module_dim

    def xi1_of(self, qvec):
        out = LinearMap.zero(self.n_dim, self.m_dim)
        for j, c in qvec.items():
            out = out.add(self.xi1[j].scale(c))
        return out

    def xi2_of(self, qvec):
        out = LinearMap.zero(self.n_dim, self.m_dim)
        for j, c in qvec.items():
            out = out.add(self.xi2[j].scale(c))
        return out


def zero_xmod_rep(x, n_dim, m_dim):
    from .leibniz import zero_rep
    z = tuple(LinearMap.zero(n_dim, m_dim) for _ in range(x.q.dim))
    return LeibnizXModRep(x, LinearMap.zero(m_dim, n_dim),
                          zero_rep(x.p, n_dim), zero_rep(x.p, m_dim), z, z)


def check_xmod_rep(r):
    """All fourteen identities (two equivariance, twelve bridge identities)
    as exact matrix equations over basis elements."""
    from .leibniz import check_rep
    bad = []
    bad += [("rep_n",) + v for v in check_rep(r.rep_n)]
    bad += [("rep_m",) + v for v in check_rep(r.rep_m)]
    x = r.xmod
    q, p, eta, act = x.q, x.p, x.eta, x.action
    mu = r.mu
    LN, RN = r.rep_n.left_mats, r.rep_n.right_mats
    LM, RM = r.rep_m.left_mats, r.rep_m.right_mats

    def ln(pv):
        return r.rep_n.left(pv)

    def rn(pv):
        return r.rep_n.right(pv)

    def lm(pv):
        return r.rep_m.left(pv)

    def rm(pv):
        return r.rep_m.right(pv)

    for i in range(p.dim):
        if mu.compose(LN[i]) != LM[i].compose(mu):
            bad.append(("LbEQ1", i))
        if mu.compose(RN[i]) != RM[i].compose(mu):
            bad.append(("LbEQ2", i))
    for j in range(q.dim):
        etaj = eta.col(j)
        if mu.compose(r.xi2[j]) != rm(etaj):
            bad.append(("LbM1a", j))
        if mu.compose(r.xi1[j]) != lm(etaj):
            bad.append(("LbM1b", j))
        if r.xi2[j].compose(mu) != rn(etaj):
            bad.append(("LbM2a", j))
        if r.xi1[j].compose(mu) != ln(etaj):
            bad.append(("LbM2b", j))
    for i in range(p.dim):
        for j in range(q.dim):
            pq = act.left(basis_vec(i), basis_vec(j))
            qp = act.right(basis_vec(j), basis_vec(i))
            if r.xi2_of(pq) != r.xi2[j].compose(RM[i]).add(
                    RN[i].compose(r.xi2[j]).scale(-1)):
                bad.append(("LbM3a", (i, j)))
            if r.xi1_of(pq) != r.xi2[j].compose(LM[i]).add(
                    LN[i].compose(r.xi2[j]).scale(-1)):
                bad.append(("LbM3b", (i, j)))
            if r.xi2_of(qp) != RN[i].compose(r.xi2[j]).add(
                    r.xi2[j].compose(RM[i]).scale(-1)):
                bad.append(("LbM3c", (i, j)))
            if r.xi1_of(qp) != RN[i].compose(r.xi1[j]).add(
                    r.xi1[j].compose(RM[i]).scale(-1)):
                bad.append(("LbM3d", (i, j)))
            if r.xi1[j].compose(LM[i]) != r.xi1[j].compose(RM[i]).scale(-1):
                bad.append(("LbM5a", (i, j)))
            if LN[i].compose(r.xi1[j]) != LN[i].compose(r.xi2[j]).scale(-1):
                bad.append(("LbM5b", (i, j)))
    for j in range(q.dim):
        for j2 in range(q.dim):
            qq = q.bracket_basis(j, j2)
            eta_j, eta_j2 = eta.col(j), eta.col(j2)
            if r.xi2_of(qq) != rn(eta_j2).compose(r.xi2[j]).add(
                    rn(eta_j).compose(r.xi2[j2]).scale(-1)):
                bad.append(("LbM4a", (j, j2)))
            if r.xi1_of(qq) != rn(eta_j2).compose(r.xi1[j]).add(
                    ln(eta_j).compose(r.xi2[j2]).scale(-1)):
                bad.append(("LbM4b", (j, j2)))
    return bad


# ---------------------------------------------------------------------------
# left modules over the truncated enveloping crossed module


@dataclass(frozen=True)
class XModLeftModule:
    """A module over a truncated enveloping crossed module: psi = a pair of
    UL(p)-modules on N and M, phi = one Hom(M,N) value per kernel-basis
    row of B."""

    tx: TruncAssocXMod
    mu: LinearMap
    psi_n: ULModule
    psi_m: ULModule
    phi_cols: tuple  # LinearMap M -> N per row of tx.B

    @property
    def n_dim(self):
        return self.psi_n.dim

    @property
    def m_dim(self):
        return self.psi_m.dim

    def phi(self, b_coords):
        out = LinearMap.zero(self.n_dim, self.m_dim)
        for i, c in b_coords.items():
            out = out.add(self.phi_cols[i].scale(c))
        return out


def phi_word_evaluator(tx, rep):
    """Memoized leftmost-first evaluation of T(Phi) on words of the
    ambient free algebra, as block matrices on N ⊕ M."""
    x = tx.x
    nq, np_ = x.q.dim, x.p.dim
    n_sd = nq + np_
    n, m = rep.n_dim, rep.m_dim
    size = n + m

    def block(tl, tr, br):
        entries = [[ZERO] * size for _ in range(size)]
        for i in range(n):
            for j in range(n):
                entries[i][j] = tl.entries[i][j]
            for j in range(m):
                entries[i][n + j] = tr.entries[i][j]
        for i in range(m):
            for j in range(m):
                entries[n + i][n + j] = br.entries[i][j]
        return LinearMap(size, size, entries)

    gens = []
    for g in range(2 * n_sd):
        r_copy = g >= n_sd
        idx = g - n_sd if r_copy else g
        if idx < nq:
            etaq = x.eta.col(idx)
            if r_copy:
                gens.append(block(rep.rep_n.right(etaq), rep.xi2[idx],
                                  LinearMap.zero(m, m)))
            else:
                gens.append(block(rep.rep_n.left(etaq), rep.xi1[idx],
                                  LinearMap.zero(m, m)))
        else:
            i = idx - nq
            if r_copy:
                gens.append(block(rep.rep_n.right_mats[i],
                                  LinearMap.zero(n, m),
                                  rep.rep_m.right_mats[i]))
            else:
                gens.append(block(rep.rep_n.left_mats[i],
                                  LinearMap.zero(n, m),
                                  rep.rep_m.left_mats[i]))

    memo = {(): LinearMap.identity(size)}

    def word_mat(w):
        out = memo.get(w)
        if out is None:
            out = gens[w[-1]].compose(word_mat(w[:-1]))
            memo[w] = out
        return out

    def eval_vec(vec):
        out = LinearMap.zero(size, size)
        for w, c in vec.items():
            out = out.add(word_mat(w).scale(c))
        return out

    return eval_vec


def _m_column_blocks(mat, n, m):
    """(N <- M block, M <- M block) of a map on N ⊕ M."""
    top = LinearMap(n, m, [[mat.entries[i][n + j] for j in range(m)]
                           for i in range(n)])
    bot = LinearMap(m, m, [[mat.entries[n + i][n + j] for j in range(m)]
                           for i in range(m)])
    return top, bot


def rep_to_xmodule(r, tx):
    """Build the module: psi from the p-actions, phi by evaluating Phi on
    the kernel basis.  Well-definedness on the ambient ideal is verified
    exactly; a violated row raises with its leading word."""
    if r.xmod is not tx.x and r.xmod != tx.x:
        raise ValueError("representation and envelope have different inputs")
    bad = check_xmod_rep(r)
    if bad:
        raise ValueError("not a representation: %r" % bad[:3])
    psi_n = ULModule(tx.ul_p, r.n_dim,
                     tuple(r.rep_n.left_mats) + tuple(r.rep_n.right_mats))
    psi_m = ULModule(tx.ul_p, r.m_dim,
                     tuple(r.rep_m.left_mats) + tuple(r.rep_m.right_mats))
    for mod in (psi_n, psi_m):
        bad = check_module(mod)
        if bad:
            raise ValueError("p-actions do not define UL(p)-modules: "
                             "relations %r" % bad[:3])
    ev = phi_word_evaluator(tx, r)
    n, m = r.n_dim, r.m_dim
    from .freealg import word_key
    for row in tx.ambient.ideal.rows:
        top, bot = _m_column_blocks(ev(row), n, m)
        if not top.is_zero() or not bot.is_zero():
            raise ValueError(
                "Phi does not vanish on the ideal; leading word %s"
                % (min(row, key=word_key),))
    cols = []
    for brow in tx.B.rows:
        vec = tx.ambient.from_coords(brow)
        top, bot = _m_column_blocks(ev(vec), n, m)
        if not bot.is_zero():
            raise ValueError("kernel class does not map into Hom(M, N)")
        cols.append(top)
    return XModLeftModule(tx, r.mu, psi_n, psi_m, tuple(cols))


def xmodule_to_rep(mod):
    """Read the representation data back off the degree-1 classes."""
    tx = mod.tx
    x = tx.x
    nq, np_ = x.q.dim, x.p.dim
    n_sd = nq + np_
    n_gen = tx.ul_p.p.dim
    rep_n = LeibnizRep(x.p, mod.n_dim,
                       tuple(mod.psi_n.gen_mats[:n_gen]),
                       tuple(mod.psi_n.gen_mats[n_gen:]))
    rep_m = LeibnizRep(x.p, mod.m_dim,
                       tuple(mod.psi_m.gen_mats[:n_gen]),
                       tuple(mod.psi_m.gen_mats[n_gen:]))

    def phi_of_word(g):
        v = tx.ambient.to_coords(tx.ambient.reduce_word((g,)))
        return mod.phi(_b_coords(tx, v))

    xi1 = tuple(phi_of_word(j) for j in range(nq))
    xi2 = tuple(phi_of_word(n_sd + j) for j in range(nq))
    return LeibnizXModRep(x, mod.mu, rep_n, rep_m, xi1, xi2)


def check_xmodule(mod):
    """Crossed-module-morphism conditions for (phi, psi) at the report
    degree: psi∘rho = Gamma∘phi on the kernel filtration basis, and the
    two bimodule equations against embedded UL(p) classes."""
    tx = mod.tx
    d = tx.report_degree
    bar, up = tx.ambient, tx.ul_p.quot
    bad = []
    rows = tx.b_filtration(d)
    for deg, v in rows:
        c = bar.to_coords(v)
        bc = _b_coords(tx, c)
        rho_b = tx.rho.apply(bc)
        alpha = mod.psi_n.class_mat(up.from_coords(rho_b))
        beta = mod.psi_m.class_mat(up.from_coords(rho_b))
        pb = mod.phi(bc)
        if alpha != pb.compose(mod.mu):
            bad.append(("gamma_alpha", deg))
        if beta != mod.mu.compose(pb):
            bad.append(("gamma_beta", deg))
        for i, w in enumerate(up.class_words):
            du = len(w)
            if w == () or deg + du > d:
                continue
            uvec = {i: Q(1)}
            ucls = up.from_coords(uvec)
            a = tx.embed.apply(uvec)
            ab = bar.mult(bar.from_coords(a), v, d)
            ba = bar.mult(v, bar.from_coords(a), d)
            phi_ab = mod.phi(_b_coords(tx, bar.to_coords(ab)))
            phi_ba = mod.phi(_b_coords(tx, bar.to_coords(ba)))
            if phi_ab != pb.compose(mod.psi_m.class_mat(ucls)):
                bad.append(("phi_ab", (du, deg)))
            if phi_ba != mod.psi_n.class_mat(ucls).compose(pb):
                bad.append(("phi_ba", (du, deg)))
    return bad


def check_xmodule_morphism(mod1, mod2, f_n, f_m):
    """Morphism of modules over the same enveloping crossed module: a pair
    of maps commuting with mu, psi and phi."""
    bad = []
    if mod1.tx is not mod2.tx and mod1.tx.x != mod2.tx.x:
        raise ValueError("modules over different enveloping crossed modules")
    if mod2.mu.compose(f_n) != f_m.compose(mod1.mu):
        bad.append(("mu_square", None))
    for g in range(len(mod1.psi_n.gen_mats)):
        if f_n.compose(mod1.psi_n.gen_mats[g]) != \
                mod2.psi_n.gen_mats[g].compose(f_n):
            bad.append(("psi_n", g))
        if f_m.compose(mod1.psi_m.gen_mats[g]) != \
                mod2.psi_m.gen_mats[g].compose(f_m):
            bad.append(("psi_m", g))
    for i in range(len(mod1.phi_cols)):
        if f_n.compose(mod1.phi_cols[i]) != mod2.phi_cols[i].compose(f_m):
            bad.append(("phi", i))
    return bad
