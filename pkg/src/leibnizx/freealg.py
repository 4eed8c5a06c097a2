"""Truncated tensor algebras, noncommutative polynomials, degree-bounded
two-sided ideals with stabilization, and presented quotient algebras.

Words are tuples of generator indices, enumerated length-first then
lexicographically; this fixes canonical coordinates for every construction
built on top (enveloping algebras, kernel ideals, quotients).

Ideals of inhomogeneous relations are never fully visible at a finite
degree: the span at degree <= D is taken from products computed up to
degree D + S (slack), and a stabilization flag records whether raising the
slack by one changes the answer.
"""

import itertools

from .scalars import Q, ZERO
from .linalg import Echelon, LinearMap, Subspace, vec_add_scaled


def word_key(w):
    """Elimination order: longer words first, lex-smaller first within a
    degree.  Pivots under this order are top-degree words of their rows,
    which keeps quotient coordinates aligned with the filtration."""
    return (-len(w), w)


class NCPoly:
    """Noncommutative polynomial: finite map word -> rational."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for w, c in terms.items():
                c = Q(c)
                if c != 0:
                    t[tuple(w)] = c
        self.terms = t

    @classmethod
    def word(cls, w, coeff=1):
        return cls({tuple(w): coeff})

    @classmethod
    def unit(cls):
        return cls({(): Q(1)})

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other):
        t = dict(self.terms)
        vec_add_scaled(t, other.terms, Q(1))
        return NCPoly(t)

    def __sub__(self, other):
        t = dict(self.terms)
        vec_add_scaled(t, other.terms, Q(-1))
        return NCPoly(t)

    def __rmul__(self, c):
        return NCPoly({w: Q(c) * x for w, x in self.terms.items()})

    def __neg__(self):
        return Q(-1) * self

    def __mul__(self, other):
        """Bilinear extension of word concatenation."""
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                y = out.get(w, ZERO) + c1 * c2
                if y == 0:
                    out.pop(w, None)
                else:
                    out[w] = y
        return NCPoly(out)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = []
        for w in sorted(self.terms, key=word_key, reverse=True):
            bits.append("%s*%s" % (self.terms[w], ".".join(map(str, w)) or "1"))
        return "NCPoly(%s)" % " + ".join(bits)


class FreeAlgebra:
    """Free associative unital algebra on named generators, truncated at a
    working degree; fixes the canonical word enumeration."""

    def __init__(self, gens, degree, unital=True):
        self.gens = tuple(gens)
        self.degree = degree
        self.unital = unital
        g = len(self.gens)
        words = []
        lo = 0 if unital else 1
        for d in range(lo, degree + 1):
            words.extend(itertools.product(range(g), repeat=d))
        self.words = tuple(words)
        self.index = {w: i for i, w in enumerate(words)}

    @property
    def ngens(self):
        return len(self.gens)

    @property
    def dim(self):
        return len(self.words)

    def dim_upto(self, d):
        g = self.ngens
        lo = 0 if self.unital else 1
        return sum(g ** k for k in range(lo, min(d, self.degree) + 1))

    def gen(self, i):
        return NCPoly.word((i,))

    def poly_to_vec(self, p):
        """Sparse word-keyed vector (identity on the term dict, validated)."""
        for w in p.terms:
            if len(w) > self.degree:
                raise ValueError("word exceeds truncation degree")
            if any(c >= self.ngens for c in w):
                raise ValueError("generator index out of range")
        return dict(p.terms)

    def vec_to_coords(self, v):
        return {self.index[w]: c for w, c in v.items()}

    def coords_to_vec(self, v):
        return {self.words[i]: c for i, c in v.items()}


class TruncIdeal:
    """Degree-truncated two-sided ideal span with a stabilization flag.

    ``rows`` is the canonical reduced echelon basis (elimination order
    :func:`word_key`) of span{w1 * r * w2 : top degree <= D+S} intersected
    with the degree-<=D coordinate space.
    """

    def __init__(self, algebra, relations, slack, rows, stabilized):
        self.algebra = algebra
        self.relations = tuple(relations)
        self.slack = slack
        self.rows = tuple(rows)
        self.pivots = frozenset(min(r, key=word_key) for r in self.rows)
        self._rowbypiv = {min(r, key=word_key): r for r in self.rows}
        self.stabilized = stabilized

    @property
    def dim(self):
        return len(self.rows)

    def reduce_vec(self, v):
        """Residue of a word-keyed vector modulo the ideal span."""
        v = dict(v)
        # rows are fully inter-reduced, one elimination per pivot hit
        while True:
            hit = None
            hitk = None
            for w in v:
                if w in self.pivots:
                    k = word_key(w)
                    if hitk is None or k < hitk:
                        hit, hitk = w, k
            if hit is None:
                return v
            vec_add_scaled(v, self._rowbypiv[hit], -v[hit])

    def span_subspace(self):
        """The span as a canonical ascending-RREF Subspace in the parent's
        length-lex coordinates."""
        alg = self.algebra
        return Subspace.from_vectors(
            alg.dim, [alg.vec_to_coords(r) for r in self.rows])


def _insert_products(ech, algebra, relations, lo_total, hi_total):
    """Insert all w1*r*w2 with lo_total < top degree <= hi_total."""
    g = algebra.ngens
    for r in relations:
        dr = r.degree()
        terms = list(r.terms.items())
        for a in range(0, hi_total - dr + 1):
            for w1 in itertools.product(range(g), repeat=a):
                left = [(w1 + w, c) for w, c in terms]
                bmax = hi_total - dr - a
                for b in range(0, bmax + 1):
                    if a + dr + b <= lo_total:
                        continue
                    for w2 in itertools.product(range(g), repeat=b):
                        ech.insert({u + w2: c for u, c in left})


def _extract_upto(ech, D):
    """Canonical elimination-order RREF of (span) ∩ (degree <= D)."""
    out = Echelon(word_key)
    for piv, row in sorted(ech.rows.items(), key=lambda kv: word_key(kv[0])):
        if len(piv) <= D:
            out.insert(dict(row))
    return out.canonical_rows()


def ideal_span(algebra, relations, slack=2, stability_check=True):
    """Truncated two-sided ideal of the given relation polynomials.

    The span is generated at top degree algebra.degree + slack and cut back
    to the working degree; the stabilization flag compares against slack+1.
    With stability_check=False the comparison is skipped (stabilized=None) —
    used by callers that run their own certificate protocol and do not need
    the extra top-degree pass.
    """
    D = algebra.degree
    relations = [r for r in relations if not r.is_zero()]
    for r in relations:
        if r.degree() > D:
            raise ValueError("relation degree exceeds working degree")
    ech = Echelon(word_key)
    _insert_products(ech, algebra, relations, -1, D + slack)
    rows = _extract_upto(ech, D)
    if not stability_check:
        return TruncIdeal(algebra, relations, slack, rows, None)
    _insert_products(ech, algebra, relations, D + slack, D + slack + 1)
    rows_next = _extract_upto(ech, D)
    stabilized = rows == rows_next
    return TruncIdeal(algebra, relations, slack, rows, stabilized)


class HomomorphismError(ValueError):
    """Raised when generator images fail to preserve the defining ideal."""


class TruncQuotAlgebra:
    """Quotient of a truncated free algebra by a truncated ideal, with
    canonical class coordinates aligned to the filtration.

    Class coordinates are the non-pivot words of the ideal's elimination
    echelon; the filtration layer F_d is spanned exactly by the class words
    of length <= d, so fdeg of a class vector is the top length in its
    support.
    """

    def __init__(self, parent, ideal):
        self.parent = parent
        self.ideal = ideal
        self.class_words = tuple(w for w in parent.words
                                 if w not in ideal.pivots)
        self.class_index = {w: i for i, w in enumerate(self.class_words)}
        self._reduce_memo = {}

    @property
    def dim(self):
        return len(self.class_words)

    @property
    def degree(self):
        return self.parent.degree

    def dim_upto(self, d):
        return sum(1 for w in self.class_words if len(w) <= d)

    def unit(self):
        if not self.parent.unital:
            raise ValueError("non-unital algebra has no unit")
        return {(): Q(1)}

    def reduce_word(self, w):
        if w in self.class_index:
            return {w: Q(1)}
        r = self._reduce_memo.get(w)
        if r is None:
            r = self.ideal.reduce_vec({w: Q(1)})
            self._reduce_memo[w] = r
        return dict(r)

    def reduce(self, vec):
        """Word-keyed parent vector -> canonical class vector."""
        out = {}
        for w, c in vec.items():
            vec_add_scaled(out, self.reduce_word(w), c)
        return out

    def reduce_poly(self, p):
        return self.reduce(self.parent.poly_to_vec(p))

    def fdeg(self, cv):
        return max((len(w) for w in cv), default=0)

    def mult(self, a, b, bound=None):
        """Class multiplication; defined when fdeg(a)+fdeg(b) <= degree."""
        bound = self.degree if bound is None else bound
        da, db = self.fdeg(a), self.fdeg(b)
        if da + db > bound:
            raise ValueError("product degree %d exceeds bound %d"
                             % (da + db, bound))
        out = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                vec_add_scaled(out, self.reduce_word(wa + wb), ca * cb)
        return out

    def gen_class(self, i):
        return self.reduce_word((i,))

    # -- coordinates -------------------------------------------------------

    def to_coords(self, cv):
        return {self.class_index[w]: c for w, c in cv.items()}

    def from_coords(self, v):
        return {self.class_words[i]: c for i, c in v.items()}

    def filtration_subspace(self, d):
        return Subspace.from_vectors(
            self.dim, [{i: Q(1)} for i, w in enumerate(self.class_words)
                       if len(w) <= d])

    def reduce_map(self):
        """LinearMap from parent length-lex coordinates to class coords."""
        cols = [self.to_coords(self.reduce_word(w)) for w in self.parent.words]
        return LinearMap.from_cols(self.dim, cols)

    def extend_by(self, extra_class_vectors):
        """Quotient by the two-sided ideal generated by the current ideal
        plus extra elements (given as class vectors), closed under
        generator multiplication within the truncation degree."""
        g = self.parent.ngens
        D = self.degree
        ech = Echelon(word_key)
        work = []
        for row in self.ideal.rows:
            piv = ech.insert(dict(row))
            if piv is not None:
                work.append(piv)
        for cv in extra_class_vectors:
            piv = ech.insert(dict(cv))
            if piv is not None:
                work.append(piv)
        while work:
            piv = work.pop()
            row = ech.rows.get(piv)
            if row is None:
                continue
            row = dict(row)
            if len(piv) >= D:
                continue  # any product would leave the truncation window
            for i in range(g):
                for prod in ({(i,) + w: c for w, c in row.items()},
                             {w + (i,): c for w, c in row.items()}):
                    if max(len(w) for w in prod) <= D:
                        p2 = ech.insert(prod)
                        if p2 is not None:
                            work.append(p2)
        rows = Echelon(word_key)
        for r in ech.canonical_rows():
            rows.insert(r)
        new_ideal = TruncIdeal(self.parent, self.ideal.relations,
                               self.ideal.slack, rows.canonical_rows(),
                               self.ideal.stabilized)
        return TruncQuotAlgebra(self.parent, new_ideal)


def quotient(algebra, ideal):
    """The truncated quotient algebra T_{<=D} / ideal span."""
    if ideal.algebra is not algebra:
        raise ValueError("ideal was not computed over this algebra")
    return TruncQuotAlgebra(algebra, ideal)


def induced_map(src, dst, gen_images):
    """Algebra map src -> dst from degree-<=1 generator images.

    Verifies that the word-wise extension kills src's ideal span; raises
    HomomorphismError naming a violated relation row otherwise.  Returns a
    LinearMap on class coordinates.
    """
    if len(gen_images) != src.parent.ngens:
        raise ValueError("need one image per generator")
    for img in gen_images:
        if dst.fdeg(img) > 1:
            raise ValueError("generator image must have fdeg <= 1")
    memo = {(): dst.unit() if dst.parent.unital else {}}

    def image(w):
        cv = memo.get(w)
        if cv is None:
            cv = dst.mult(image(w[:-1]), gen_images[w[-1]])
            memo[w] = cv
        return cv

    for row in src.ideal.rows:
        out = {}
        for w, c in row.items():
            vec_add_scaled(out, image(w), c)
        if out:
            raise HomomorphismError(
                "generator images do not preserve the ideal; violated row "
                "with leading word %s" % (min(row, key=word_key),))
    cols = [dst.to_coords(image(w)) for w in src.class_words]
    return LinearMap.from_cols(dst.dim, cols)


def filtration_basis(quot, vectors):
    """Echelonize class vectors in elimination order; returns a list of
    (fdeg, class vector) with fdeg = pivot length, sorted by fdeg.

    Rows with fdeg <= d span (span of vectors) ∩ F_d.
    """
    ech = Echelon(word_key)
    for v in vectors:
        ech.insert(dict(v))
    rows = ech.canonical_rows()
    out = [(len(min(r, key=word_key)), r) for r in rows]
    out.sort(key=lambda t: (t[0], word_key(min(t[1], key=word_key))))
    return out


def subspace_vectors(quot, sub):
    """Class vectors of a Subspace given in quot's class coordinates."""
    return [quot.from_coords(r) for r in sub.rows]


def subspace_product(a_sub, b_sub, quot, bound=None):
    """Span of products a*b over filtration bases of two subspaces of the
    class space, with fdeg(a)+fdeg(b) bounded by the truncation degree.

    Returns (Subspace in class coordinates, boundary_degree); the result is
    certified complete only up to boundary_degree = degree - 1.
    """
    bound = quot.degree if bound is None else bound
    fa = filtration_basis(quot, subspace_vectors(quot, a_sub))
    fb = filtration_basis(quot, subspace_vectors(quot, b_sub))
    prods = []
    for da, va in fa:
        for db, vb in fb:
            if da + db <= bound:
                prods.append(quot.to_coords(quot.mult(va, vb, bound)))
    return Subspace.from_vectors(quot.dim, prods), bound - 1
