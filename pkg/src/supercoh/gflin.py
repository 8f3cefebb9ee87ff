"""Exact linear algebra over a prime field GF(p), p an odd prime.

Matrices are stored sparsely as ``{(row, col): value}`` with all stored
values nonzero and reduced mod p.  Gaussian elimination keeps each working
row as a sparse dict until its fill-in crosses a threshold, then switches
that row to a dense numpy vector.  The reduced row echelon form of a row
space is unique, so every routine that derives its output from an RREF is
deterministic by construction.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError

# A row is converted from dict to dense storage once it is this full.
FILL_LIMIT = 0.25


def is_odd_prime(p):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_modulus(p):
    if not is_odd_prime(p):
        raise UsageError(f"modulus must be an odd prime >= 3, got {p!r}")
    return p


def inv_mod(a, p):
    a %= p
    if a == 0:
        raise UsageError("zero is not invertible")
    return pow(a, -1, p)


# ---------------------------------------------------------------------------
# rows: dict {col: val} or 1-d int64 ndarray, switched on fill-in
# ---------------------------------------------------------------------------

def _densify(row, cols):
    arr = np.zeros(cols, dtype=np.int64)
    for j, v in row.items():
        arr[j] = v
    return arr


def _row_lead(row):
    if isinstance(row, dict):
        return min(row) if row else None
    nz = np.nonzero(row)[0]
    return int(nz[0]) if nz.size else None


def _row_get(row, j):
    if isinstance(row, dict):
        return row.get(j, 0)
    return int(row[j])


def _row_submul(a, c, b, p, cols):
    """Return a - c*b mod p without mutating the inputs."""
    if isinstance(a, dict) and isinstance(b, dict):
        out = dict(a)
        for j, v in b.items():
            w = (out.get(j, 0) - c * v) % p
            if w:
                out[j] = w
            else:
                out.pop(j, None)
        if len(out) > FILL_LIMIT * cols:
            return _densify(out, cols)
        return out
    if isinstance(a, dict):
        a = _densify(a, cols)
    if isinstance(b, dict):
        out = a.copy()
        for j, v in b.items():
            out[j] = (out[j] - c * v) % p
        return out
    return (a - c * b) % p


def _row_scale(row, c, p):
    if isinstance(row, dict):
        return {j: (c * v) % p for j, v in row.items()}
    return (row * c) % p


def _row_dense_tuple(row, cols):
    if isinstance(row, dict):
        return tuple(row.get(j, 0) for j in range(cols))
    return tuple(int(v) for v in row)


class Eliminator:
    """Incremental reduced-row-echelon accumulator over GF(p).

    Rows are fed one at a time; the stored pivot rows always form an RREF
    of the row space seen so far.  Pivoting is by leading column, so the
    result is the canonical RREF regardless of insertion order.
    """

    def __init__(self, cols, p):
        self.cols = cols
        self.p = check_modulus(p)
        self.rows = {}  # pivot column -> row

    def reduce(self, row):
        """Eliminate every pivot-column entry of a row; returns the residue.

        Stored pivot rows are fully reduced against each other, so one pass
        over the row's pivot-column support suffices; the loop re-checks in
        case the row was handed in unreduced.
        """
        p, cols = self.p, self.cols
        if isinstance(row, dict):
            row = dict(row)
        else:
            row = np.asarray(row, dtype=np.int64) % p
            if row.shape != (cols,):
                raise UsageError("row length mismatch")
        while True:
            if isinstance(row, dict):
                hits = sorted(j for j in row if j in self.rows)
            else:
                hits = [int(j) for j in np.nonzero(row)[0] if int(j) in self.rows]
            if not hits:
                return row
            for j in hits:
                c = _row_get(row, j)
                if c:
                    row = _row_submul(row, c, self.rows[j], p, cols)

    def add(self, row):
        """Insert a row; returns its pivot column or None if dependent."""
        p, cols = self.p, self.cols
        row = self.reduce(row)
        lead = _row_lead(row)
        if lead is None:
            return None
        row = _row_scale(row, inv_mod(_row_get(row, lead), p), p)
        for pc in list(self.rows):
            c = _row_get(self.rows[pc], lead)
            if c:
                self.rows[pc] = _row_submul(self.rows[pc], c, row, p, cols)
        self.rows[lead] = row
        return lead

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def dense_rows(self):
        """RREF rows as dense tuples, ordered by pivot column."""
        return [_row_dense_tuple(self.rows[pc], self.cols) for pc in sorted(self.rows)]


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class MatGF:
    """A rows x cols matrix over GF(p), stored as {(i, j): nonzero value}."""

    __slots__ = ("rows", "cols", "p", "entries")

    def __init__(self, rows, cols, p, entries=None):
        check_modulus(p)
        if rows < 0 or cols < 0:
            raise UsageError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        self.p = p
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise UsageError(f"entry ({i},{j}) out of bounds for {rows}x{cols}")
            v = int(v) % p
            if v:
                clean[(int(i), int(j))] = v
        self.entries = clean

    # construction -----------------------------------------------------

    @classmethod
    def zeros(cls, rows, cols, p):
        return cls(rows, cols, p)

    @classmethod
    def identity(cls, n, p):
        return cls(n, n, p, {(i, i): 1 for i in range(n)})

    @classmethod
    def from_dense(cls, array, p):
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise UsageError("expected a 2-d array")
        arr = arr % p
        ent = {(int(i), int(j)): int(arr[i, j])
               for i, j in zip(*np.nonzero(arr))}
        return cls(arr.shape[0], arr.shape[1], p, ent)

    @classmethod
    def from_rows(cls, row_dicts, cols, p):
        ent = {}
        for i, row in enumerate(row_dicts):
            for j, v in row.items():
                v = int(v) % p
                if v:
                    ent[(i, j)] = v
        return cls(len(row_dicts), cols, p, ent)

    # views --------------------------------------------------------------

    def to_dense(self):
        arr = np.zeros((self.rows, self.cols), dtype=np.int64)
        for (i, j), v in self.entries.items():
            arr[i, j] = v
        return arr

    def row_dicts(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def col_dicts(self):
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    @property
    def nnz(self):
        return len(self.entries)

    def __eq__(self, other):
        return (isinstance(other, MatGF) and self.rows == other.rows
                and self.cols == other.cols and self.p == other.p
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.p, frozenset(self.entries.items())))

    def __repr__(self):
        return f"MatGF({self.rows}x{self.cols} mod {self.p}, nnz={self.nnz})"

    def is_zero(self):
        return not self.entries

    # arithmetic -----------------------------------------------------------

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise UsageError("vector length mismatch")
        out = [0] * self.rows
        for (i, j), v in self.entries.items():
            c = vec[j]
            if c:
                out[i] = (out[i] + v * c) % self.p
        return tuple(out)

    def matmul(self, other):
        if not isinstance(other, MatGF):
            raise UsageError("matmul expects a MatGF")
        if self.p != other.p:
            raise UsageError("mixing moduli is rejected")
        if self.cols != other.rows:
            raise UsageError("inner dimension mismatch")
        brows = other.row_dicts()
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in brows[k].items():
                key = (i, j)
                acc[key] = (acc.get(key, 0) + a * b) % self.p
        return MatGF(self.rows, other.cols, self.p, acc)

    def scaled(self, c):
        c %= self.p
        return MatGF(self.rows, self.cols, self.p,
                     {k: (c * v) % self.p for k, v in self.entries.items()})

    def add(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols) or self.p != other.p:
            raise UsageError("shape or modulus mismatch")
        acc = dict(self.entries)
        for k, v in other.entries.items():
            acc[k] = (acc.get(k, 0) + v) % self.p
        return MatGF(self.rows, self.cols, self.p, acc)

    def sub(self, other):
        return self.add(other.scaled(-1))


# ---------------------------------------------------------------------------
# echelon subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of GF(p)^n held by its canonical RREF basis rows."""

    __slots__ = ("ambient_dim", "p", "basis_rows", "pivots")

    def __init__(self, ambient_dim, p, basis_rows, pivots):
        self.ambient_dim = ambient_dim
        self.p = p
        self.basis_rows = tuple(tuple(int(x) for x in r) for r in basis_rows)
        self.pivots = tuple(int(x) for x in pivots)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim, p):
        elim = Eliminator(ambient_dim, p)
        for v in vectors:
            if isinstance(v, dict):
                elim.add(v)
            else:
                if len(v) != ambient_dim:
                    raise UsageError("vector length mismatch")
                elim.add(np.asarray(v, dtype=np.int64))
        return cls(ambient_dim, p, elim.dense_rows(), elim.pivots())

    @classmethod
    def zero(cls, ambient_dim, p):
        check_modulus(p)
        return cls(ambient_dim, p, (), ())

    @classmethod
    def full(cls, ambient_dim, p):
        check_modulus(p)
        rows = []
        for i in range(ambient_dim):
            row = [0] * ambient_dim
            row[i] = 1
            rows.append(row)
        return cls(ambient_dim, p, rows, range(ambient_dim))

    @property
    def dim(self):
        return len(self.basis_rows)

    def basis_matrix(self):
        return MatGF.from_rows([{j: v for j, v in enumerate(r) if v} for r in self.basis_rows],
                               self.ambient_dim, self.p)

    def reduce(self, vec):
        """Residue of vec after eliminating this subspace's pivot coordinates."""
        if len(vec) != self.ambient_dim:
            raise UsageError("vector length mismatch")
        out = [int(x) % self.p for x in vec]
        for row, piv in zip(self.basis_rows, self.pivots):
            c = out[piv]
            if c:
                for j, v in enumerate(row):
                    if v:
                        out[j] = (out[j] - c * v) % self.p
        return tuple(out)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def coords(self, vec):
        """Coordinates of vec in the echelon basis, or None if outside."""
        if len(vec) != self.ambient_dim:
            raise UsageError("vector length mismatch")
        out = [int(x) % self.p for x in vec]
        cs = []
        for row, piv in zip(self.basis_rows, self.pivots):
            c = out[piv]
            cs.append(c)
            if c:
                for j, v in enumerate(row):
                    if v:
                        out[j] = (out[j] - c * v) % self.p
        if any(out):
            return None
        return tuple(cs)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.p == other.p and self.basis_rows == other.basis_rows)

    def __hash__(self):
        return hash((self.ambient_dim, self.p, self.basis_rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim} of GF({self.p})^{self.ambient_dim})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def rref(m):
    """RREF of m; returns (matrix, rank, pivot columns).

    The returned matrix has the echelon rows on top and zero rows below,
    so it is row-equivalent to m and has m's shape.
    """
    elim = Eliminator(m.cols, m.p)
    for row in m.row_dicts():
        elim.add(row)
    ent = {}
    for i, row in enumerate(elim.dense_rows()):
        for j, v in enumerate(row):
            if v:
                ent[(i, j)] = v
    return MatGF(m.rows, m.cols, m.p, ent), elim.rank, elim.pivots()


def nullspace(m):
    """Kernel {x : m x = 0} as a Subspace of GF(p)^cols."""
    elim = Eliminator(m.cols, m.p)
    for row in m.row_dicts():
        elim.add(row)
    pivset = set(elim.rows)
    free = [j for j in range(m.cols) if j not in pivset]
    vectors = []
    for j in free:
        vec = {j: 1}
        for pc, prow in elim.rows.items():
            v = _row_get(prow, j)
            if v:
                vec[pc] = (-v) % m.p
        vectors.append(vec)
    return Subspace.from_vectors(vectors, m.cols, m.p)


def image(m):
    """Column space of m as a Subspace of GF(p)^rows."""
    return Subspace.from_vectors(m.col_dicts(), m.rows, m.p)


def solve(m, rhs):
    """Some x with m x = rhs, or None when rhs is outside the image.

    Free variables are set to zero, which picks the lexicographically
    first echelon solution; downstream code relies on that determinism.
    """
    if len(rhs) != m.rows:
        raise UsageError("rhs length mismatch")
    aug = m.cols
    elim = Eliminator(m.cols + 1, m.p)
    rows = m.row_dicts()
    for i, row in enumerate(rows):
        r = dict(row)
        v = int(rhs[i]) % m.p
        if v:
            r[aug] = v
        elim.add(r)
    if aug in elim.rows:
        return None
    x = [0] * m.cols
    for pc, prow in elim.rows.items():
        x[pc] = _row_get(prow, aug) % m.p
    return tuple(x)


def subspace_sum(a, b):
    _check_pair(a, b)
    return Subspace.from_vectors(list(a.basis_rows) + list(b.basis_rows),
                                 a.ambient_dim, a.p)


def subspace_intersect(a, b):
    """Intersection, via the kernel of the stacked-basis relation matrix."""
    _check_pair(a, b)
    ra, rb = a.dim, b.dim
    if ra == 0 or rb == 0:
        return Subspace.zero(a.ambient_dim, a.p)
    # columns: coefficients (u | v) with u*A = v*B; rows: ambient coordinates
    ent = {}
    for k, row in enumerate(a.basis_rows):
        for j, v in enumerate(row):
            if v:
                ent[(j, k)] = v
    for k, row in enumerate(b.basis_rows):
        for j, v in enumerate(row):
            if v:
                ent[(j, ra + k)] = (-v) % a.p
    rel = MatGF(a.ambient_dim, ra + rb, a.p, ent)
    vecs = []
    for comb in nullspace(rel).basis_rows:
        u = comb[:ra]
        vec = [0] * a.ambient_dim
        for k, c in enumerate(u):
            if c:
                for j, v in enumerate(a.basis_rows[k]):
                    if v:
                        vec[j] = (vec[j] + c * v) % a.p
        vecs.append(vec)
    return Subspace.from_vectors(vecs, a.ambient_dim, a.p)


def contains(a, vec):
    return a.contains(vec)


def equals(a, b):
    _check_pair(a, b)
    return a == b


def _check_pair(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise UsageError("ambient dimension mismatch")
    if a.p != b.p:
        raise UsageError("mixing moduli is rejected")


def quotient_representatives(Z, B):
    """Canonical representatives of Z/B, for B a subspace of Z.

    Each representative is a Z-vector with every B-pivot coordinate
    eliminated; together they are in RREF, so the choice is deterministic.
    Returns a list of dense tuples.
    """
    _check_pair(Z, B)
    elim = Eliminator(Z.ambient_dim, Z.p)
    for row in Z.basis_rows:
        red = B.reduce(row)
        if any(red):
            elim.add(np.asarray(red, dtype=np.int64))
    reps = elim.dense_rows()
    if len(reps) != Z.dim - B.dim:
        raise UsageError("B is not contained in Z")
    return reps
