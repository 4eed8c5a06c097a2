"""Exact rational linear algebra: sparse echelon forms, canonical subspaces
and dense linear maps.

Every verification in the library bottoms out here, so everything is exact
(no floats anywhere) and canonical: two subspaces are equal iff their
reduced-echelon bases are identical.

Vectors are sparse ``dict[coord, Q]`` with no zero entries stored.  The
coordinate type is anything hashable; an elimination order is supplied as a
key function (identity for plain integer coordinates).
"""

from .scalars import Q, ZERO

# ---------------------------------------------------------------------------
# sparse vector helpers


def vec_scale(v, c):
    c = Q(c)
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_add_scaled(dst, src, c):
    """dst += c*src in place, dropping zeros."""
    for k, x in src.items():
        y = dst.get(k, ZERO) + c * x
        if y == 0:
            dst.pop(k, None)
        else:
            dst[k] = y
    return dst


def vec_sub(a, b):
    out = dict(a)
    return vec_add_scaled(out, b, Q(-1))


def vec_eq(a, b):
    return a == b


# ---------------------------------------------------------------------------
# echelon forms


class Echelon:
    """Forward-reduced echelon basis of a growing span of sparse vectors.

    ``keyf`` orders the coordinates; the pivot of each row is its minimal
    coordinate under ``keyf`` and rows are normalized to pivot coefficient 1.
    Rows are reduced against the pivots known at insertion time only;
    ``canonical_rows`` back-substitutes to full RREF.
    """

    def __init__(self, keyf=None):
        self.keyf = keyf if keyf is not None else (lambda c: c)
        self.rows = {}  # pivot coord -> row dict

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        """Return v reduced modulo the current span (fresh dict)."""
        v = dict(v)
        keyf = self.keyf
        rows = self.rows
        while True:
            hit = None
            hitk = None
            for c in v:
                if c in rows:
                    k = keyf(c)
                    if hitk is None or k < hitk:
                        hit, hitk = c, k
            if hit is None:
                return v
            vec_add_scaled(v, rows[hit], -v[hit])

    def insert(self, v):
        """Reduce v and adjoin it if independent.  Returns the new pivot
        coordinate, or None if v was already in the span."""
        v = self.reduce(v)
        if not v:
            return None
        keyf = self.keyf
        piv = min(v, key=keyf)
        c = v[piv]
        if c != 1:
            inv = 1 / c
            v = {k: inv * x for k, x in v.items()}
        self.rows[piv] = v
        return piv

    def contains(self, v):
        return not self.reduce(v)

    def canonical_rows(self):
        """Fully back-substituted rows, sorted by pivot order."""
        keyf = self.keyf
        pivots = sorted(self.rows, key=keyf, reverse=True)
        done = {}
        for piv in pivots:
            row = dict(self.rows[piv])
            while True:
                hit = None
                hitk = None
                for c in row:
                    if c != piv and c in done:
                        k = keyf(c)
                        if hitk is None or k < hitk:
                            hit, hitk = c, k
                if hit is None:
                    break
                vec_add_scaled(row, done[hit], -row[hit])
            done[piv] = row
        return [done[p] for p in sorted(done, key=keyf)]


# ---------------------------------------------------------------------------
# canonical subspaces of K^n


class Subspace:
    """Row space of a reduced-echelon matrix over Q, ambient dimension fixed.

    The basis is canonical (ascending pivots, fully reduced), so equality of
    subspaces is literal equality of bases.
    """

    def __init__(self, ambient_dim, rows=()):
        self.ambient_dim = ambient_dim
        self.rows = tuple(rows)  # tuple of sparse dicts, canonical RREF
        self.pivots = tuple(min(r) for r in self.rows)
        self._rowbypiv = dict(zip(self.pivots, self.rows))

    @classmethod
    def from_vectors(cls, ambient_dim, vectors):
        ech = Echelon()
        for v in vectors:
            if max(v, default=-1) >= ambient_dim:
                raise ValueError("coordinate out of ambient range")
            ech.insert(v)
        return cls(ambient_dim, ech.canonical_rows())

    @classmethod
    def full(cls, n):
        return cls(n, [{i: Q(1)} for i in range(n)])

    @property
    def dim(self):
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient_dim,
                     tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self):
        return "Subspace(dim %d in K^%d)" % (self.dim, self.ambient_dim)

    def reduce_vec(self, v):
        """Residue of v modulo this subspace."""
        v = dict(v)
        while True:
            hit = min((c for c in v if c in self._rowbypiv), default=None)
            if hit is None:
                return v
            vec_add_scaled(v, self._rowbypiv[hit], -v[hit])

    def contains_vec(self, v):
        return not self.reduce_vec(v)

    def contains(self, other):
        self._check_ambient(other)
        return all(self.contains_vec(r) for r in other.rows)

    def coords(self, v):
        """Coordinates of v in the canonical basis; raises if v not inside.

        With an RREF basis the coordinate along each row is just the entry
        of v at that row's pivot.
        """
        out = [v.get(p, ZERO) for p in self.pivots]
        w = {}
        for c, r in zip(out, self.rows):
            if c != 0:
                vec_add_scaled(w, r, c)
        if w != {k: x for k, x in v.items() if x != 0}:
            raise ValueError("vector not in subspace")
        return tuple(out)

    def sum(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(self.ambient_dim,
                                     list(self.rows) + list(other.rows))

    def intersect(self, other):
        """Zassenhaus: echelonize [a|a] and [b|0]; rows with zero left half
        carry the intersection in their right half."""
        self._check_ambient(other)
        n = self.ambient_dim
        ech = Echelon()
        for a in self.rows:
            v = dict(a)
            for k, x in a.items():
                v[n + k] = x
            ech.insert(v)
        for b in other.rows:
            ech.insert(dict(b))
        out = []
        for row in ech.canonical_rows():
            if min(row) >= n:
                out.append({k - n: x for k, x in row.items()})
        return Subspace.from_vectors(n, out)

    def complement_pivots(self):
        """Indices of the canonical complement coordinates."""
        pivset = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in pivset)

    def quotient_basis(self):
        """Complement basis and the projection-to-quotient-coordinates map.

        Returns (complement coordinate indices, LinearMap ambient -> K^c)
        with projection(v) = coordinates of v mod this subspace.
        """
        comp = self.complement_pivots()
        pos = {c: i for i, c in enumerate(comp)}
        cols = []
        for j in range(self.ambient_dim):
            res = self.reduce_vec({j: Q(1)})
            cols.append([res.get(c, ZERO) for c in comp])
        entries = tuple(tuple(cols[j][i] for j in range(self.ambient_dim))
                        for i in range(len(comp)))
        return comp, LinearMap(len(comp), self.ambient_dim, entries)

    def _check_ambient(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch: %d vs %d"
                             % (self.ambient_dim, other.ambient_dim))


def zero_subspace(n):
    return Subspace(n, ())


# ---------------------------------------------------------------------------
# dense linear maps


class LinearMap:
    """Dense matrix over Q; column j is the image of the j-th basis vector."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = rows
        self.cols = cols
        entries = tuple(tuple(Q(x) for x in r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("entry shape does not match (%d, %d)" % (rows, cols))
        self.entries = entries

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[Q(1) if i == j else ZERO for j in range(n)]
                          for i in range(n)])

    @classmethod
    def from_cols(cls, rows, cols_vectors):
        """Build from a list of image columns given as sparse dicts."""
        cols = len(cols_vectors)
        entries = [[ZERO] * cols for _ in range(rows)]
        for j, v in enumerate(cols_vectors):
            for i, x in v.items():
                entries[i][j] = x
        return cls(rows, cols, entries)

    def col(self, j):
        return {i: self.entries[i][j] for i in range(self.rows)
                if self.entries[i][j] != 0}

    def apply(self, v):
        """Apply to a sparse vector, returning a sparse vector."""
        out = {}
        for j, c in v.items():
            if c == 0:
                continue
            for i in range(self.rows):
                e = self.entries[i][j]
                if e != 0:
                    y = out.get(i, ZERO) + c * e
                    if y == 0:
                        out.pop(i, None)
                    else:
                        out[i] = y
        return out

    def apply_dense(self, v):
        return tuple(sum((self.entries[i][j] * v[j] for j in range(self.cols)),
                         ZERO) for i in range(self.rows))

    def compose(self, other):
        """self o other."""
        if self.cols != other.rows:
            raise ValueError("composition dimension mismatch")
        ocols = [other.col(j) for j in range(other.cols)]
        return LinearMap.from_cols(self.rows, [self.apply(c) for c in ocols])

    def __matmul__(self, other):
        return self.compose(other)

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return LinearMap(self.rows, self.cols,
                         [[a + b for a, b in zip(ra, rb)]
                          for ra, rb in zip(self.entries, other.entries)])

    def scale(self, c):
        c = Q(c)
        return LinearMap(self.rows, self.cols,
                         [[c * x for x in r] for r in self.entries])

    def __eq__(self, other):
        return (isinstance(other, LinearMap) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "LinearMap(%d x %d)" % (self.rows, self.cols)

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def kernel(self):
        """Kernel as a canonical Subspace of the source."""
        ech = Echelon()
        n = self.cols
        for j in range(n):
            # vector (column image | unit tracking part); coords n.. track j
            v = {}
            for i, x in self.col(j).items():
                v[i] = x
            v = {k: x for k, x in v.items()}
            w = dict(v)
            w[self.rows + j] = Q(1)
            ech.insert(w)
        out = []
        for row in ech.canonical_rows():
            if min(row) >= self.rows:
                out.append({k - self.rows: x for k, x in row.items()})
        return Subspace.from_vectors(n, out)

    def image(self):
        return Subspace.from_vectors(self.rows,
                                     [self.col(j) for j in range(self.cols)])

    def rank(self):
        return self.image().dim

    def preimage(self, sub):
        """{v : f(v) in sub} as a Subspace of the source."""
        if sub.ambient_dim != self.rows:
            raise ValueError("subspace not in target space")
        _, proj = sub.quotient_basis()
        return proj.compose(self).kernel()

    def restrict(self, sub):
        """Restriction to a subspace of the source, in its canonical
        coordinates: columns are images of the subspace basis rows."""
        if sub.ambient_dim != self.cols:
            raise ValueError("subspace not in source space")
        return LinearMap.from_cols(self.rows, [self.apply(r) for r in sub.rows])

    def transpose(self):
        return LinearMap(self.cols, self.rows,
                         [[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])


def rref(matrix):
    """Reduced row echelon form of a dense matrix given as rows of rationals.

    Returns (rows of the RREF as tuples, pivot column indices).  Zero rows
    are dropped, so the zero matrix maps to ([], ()).
    """
    ncols = len(matrix[0]) if matrix else 0
    ech = Echelon()
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        ech.insert({j: Q(x) for j, x in enumerate(row) if Q(x) != 0})
    rows = ech.canonical_rows()
    dense = [tuple(r.get(j, ZERO) for j in range(ncols)) for r in rows]
    return dense, tuple(min(r) for r in rows)
