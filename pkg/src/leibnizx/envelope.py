"""Universal enveloping algebra of a Leibniz algebra, truncated at a
working degree, and the equivalence between representations and left
modules over it.

For a Leibniz algebra p with basis e_0..e_{n-1}, the envelope is generated
by two copies of p — generator i is (e_i)_l and generator n+i is (e_i)_r —
subject to, for all x, y in p:

    x_r y_r - y_r x_r = [x,y]_r
    x_l y_r - y_r x_l = [x,y]_l
    (y_r + y_l) x_l   = 0

A word acts on a module with its *leftmost* factor applied first (so the
action is an algebra map into the opposite of the endomorphism algebra);
this is the convention under which x_l.m = [x,m], x_r.m = [m,x] turns the
three representation axioms into exactly the relations above.
"""

from dataclasses import dataclass

from .scalars import Q
from .linalg import LinearMap
from .freealg import (FreeAlgebra, NCPoly, TruncQuotAlgebra, ideal_span,
                      induced_map, quotient)
from .leibniz import LeibnizAlgebra, LeibnizRep


def ul_relations(p):
    """Defining relations on basis generators; l-block indices 0..n-1,
    r-block indices n..2n-1."""
    n = p.dim
    rels = []
    for i in range(n):
        for j in range(n):
            br = p.bracket_basis(i, j)
            br_r = NCPoly({(n + k,): v for k, v in br.items()})
            br_l = NCPoly({(k,): v for k, v in br.items()})
            xi_r, xj_r = NCPoly.word((n + i,)), NCPoly.word((n + j,))
            xi_l, xj_l = NCPoly.word((i,)), NCPoly.word((j,))
            rels.append(xi_r * xj_r - xj_r * xi_r - br_r)
            rels.append(xi_l * xj_r - xj_r * xi_l - br_l)
            rels.append((xj_r + xj_l) * xi_l)
    return rels


@dataclass(frozen=True)
class ULAlgebra:
    """Truncated enveloping algebra: a presented quotient plus bookkeeping
    for the two generator blocks."""

    p: LeibnizAlgebra
    quot: TruncQuotAlgebra

    @property
    def degree(self):
        return self.quot.degree

    @property
    def dim(self):
        return self.quot.dim

    @property
    def stabilized(self):
        return self.quot.ideal.stabilized

    def dim_upto(self, d):
        return self.quot.dim_upto(d)

    def gen_l(self, i):
        return self.quot.gen_class(i)

    def gen_r(self, i):
        return self.quot.gen_class(self.p.dim + i)

    def left_class(self, pvec):
        """Class of x_l for x given in p-coordinates."""
        out = {}
        for i, c in pvec.items():
            for w, v in self.gen_l(i).items():
                y = out.get(w, Q(0)) + c * v
                if y == 0:
                    out.pop(w, None)
                else:
                    out[w] = y
        return out

    def right_class(self, pvec):
        out = {}
        for i, c in pvec.items():
            for w, v in self.gen_r(i).items():
                y = out.get(w, Q(0)) + c * v
                if y == 0:
                    out.pop(w, None)
                else:
                    out[w] = y
        return out


def ul(p, degree, slack=2, stability_check=True):
    """The degree-<=degree piece of the enveloping algebra of p."""
    gens = tuple("%s_l" % b for b in p.basis) + \
        tuple("%s_r" % b for b in p.basis)
    free = FreeAlgebra(gens, degree)
    ideal = ideal_span(free, ul_relations(p), slack=slack,
                       stability_check=stability_check)
    return ULAlgebra(p, quotient(free, ideal))


def ul_map(src, dst, f):
    """Functoriality: a Leibniz homomorphism f: src.p -> dst.p (as a
    LinearMap) induces an algebra map on the truncated envelopes.

    Raises HomomorphismError if the generator images do not kill src's
    relation ideal (e.g. if f is not a homomorphism).
    """
    n = src.p.dim
    images = []
    for i in range(n):
        images.append(dst.left_class(f.col(i)))
    for i in range(n):
        images.append(dst.right_class(f.col(i)))
    return induced_map(src.quot, dst.quot, images)


# ---------------------------------------------------------------------------
# left modules


@dataclass(frozen=True)
class ULModule:
    """Left module over a truncated envelope: one matrix per generator.

    Words act leftmost-factor-first; the defining relations must act as
    zero, which makes the action of any ideal element vanish identically.
    """

    ul: ULAlgebra
    dim: int
    gen_mats: tuple  # one LinearMap per free generator (l-block then r-block)

    def word_mat(self, w):
        out = LinearMap.identity(self.dim)
        for g in w:
            out = self.gen_mats[g].compose(out)
        return out

    def poly_mat(self, poly):
        out = LinearMap.zero(self.dim, self.dim)
        for w, c in poly.terms.items():
            out = out.add(self.word_mat(w).scale(c))
        return out

    def class_mat(self, cv):
        out = LinearMap.zero(self.dim, self.dim)
        for w, c in cv.items():
            out = out.add(self.word_mat(w).scale(c))
        return out

    def act(self, cv, v):
        return self.class_mat(cv).apply(v)


def check_module(mod):
    """Indices of defining relations that fail to act as zero."""
    bad = []
    for k, rel in enumerate(ul_relations(mod.ul.p)):
        if not mod.poly_mat(rel).is_zero():
            bad.append(k)
    return bad


def rep_to_module(ulalg, rep):
    """x_l acts by m -> [x,m], x_r by m -> [m,x]."""
    if rep.algebra is not ulalg.p and rep.algebra != ulalg.p:
        raise ValueError("representation is over a different algebra")
    mats = tuple(rep.left_mats) + tuple(rep.right_mats)
    return ULModule(ulalg, rep.module_dim, mats)


def module_to_rep(mod):
    """Restrict the generator action back to the two copies of p."""
    n = mod.ul.p.dim
    return LeibnizRep(mod.ul.p, mod.dim,
                      tuple(mod.gen_mats[:n]), tuple(mod.gen_mats[n:]))
