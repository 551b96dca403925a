"""Exact linear algebra over Q and prime fields.

Everything downstream (Hom spaces, resolutions, Ext/Tor) reduces to ranks,
kernels and exact solves of the matrices built here.  No floating point:
Q entries are `fractions.Fraction`, F_p entries are ints in [0, p).
"""

from fractions import Fraction

from .config import dimension_cap
from .errors import DimensionCapExceeded, DimensionMismatch, InconsistentSystem


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Field:
    """The ground field: rationals ('Q') or a prime field ('Fp', p prime).

    Elements are raw Fractions / ints; the Field object supplies the
    arithmetic, canonicalization and string form.
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == "Q":
            self.p = None
        elif kind == "Fp":
            if p is None or not _is_prime(p):
                raise ValueError(f"PrimeField needs a prime, got {p!r}")
            self.p = p
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind

    @classmethod
    def rationals(cls):
        return _QQ

    @classmethod
    def prime(cls, p):
        return cls("Fp", p)

    @classmethod
    def parse_spec(cls, text):
        """'Q' or 'F<p>', e.g. 'F7'."""
        text = text.strip()
        if text in ("Q", "QQ", "rationals"):
            return _QQ
        if text.startswith("F"):
            return cls("Fp", int(text[1:]))
        raise ValueError(f"cannot parse field spec {text!r}")

    def spec_string(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"

    @property
    def characteristic(self):
        return 0 if self.kind == "Q" else self.p

    @property
    def zero(self):
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == "Q" else 1

    def of(self, n):
        """Canonical element from an int / Fraction / string."""
        if self.kind == "Q":
            if isinstance(n, Fraction):
                return n
            if isinstance(n, int):
                return Fraction(n)
            if isinstance(n, str):
                return Fraction(n)
            raise TypeError(f"cannot coerce {n!r} into Q")
        if isinstance(n, str):
            if "/" in n:
                num, den = n.split("/")
                return int(num) * pow(int(den), self.p - 2, self.p) % self.p
            n = int(n)
        if isinstance(n, Fraction):
            if n.denominator % self.p == 0:
                raise ZeroDivisionError(f"{n} has no image in F_{self.p}")
            return n.numerator * pow(n.denominator, self.p - 2, self.p) % self.p
        return n % self.p

    def add(self, a, b):
        return a + b if self.kind == "Q" else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.kind == "Q" else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.kind == "Q" else (a * b) % self.p

    def neg(self, a):
        return -a if self.kind == "Q" else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.kind == "Q" else pow(a, self.p - 2, self.p)

    def render(self, a):
        if self.kind == "Q":
            return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return self.spec_string()


_QQ = Field("Q")

QQ = _QQ


def GF(p):
    return Field.prime(p)


def _check_cap(rows, cols):
    cap = dimension_cap()
    if rows > cap or cols > cap:
        raise DimensionCapExceeded(f"matrix {rows}x{cols} exceeds dimension cap {cap}")


class Matrix:
    """Immutable dense matrix over a Field.  Rows are tuples of raw elements."""

    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        rows = [tuple(r) for r in rows]
        self.nrows = len(rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix with zero rows")
            ncols = len(rows[0])
        self.ncols = ncols
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        _check_cap(self.nrows, self.ncols)
        self.rows = tuple(rows)
        self._rref = None

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        conv = field.of
        return cls(field, [[conv(x) for x in r] for r in rows], ncols)

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [tuple(o if i == j else z for j in range(n)) for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, cols, nrows):
        z = field.zero
        rows = [[z] * len(cols) for _ in range(nrows)]
        for j, c in enumerate(cols):
            if len(c) != nrows:
                raise DimensionMismatch("column length mismatch")
            for i, x in enumerate(c):
                rows[i][j] = x
        return cls(field, rows, len(cols))

    # -- basic structure ----------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.render(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def entry(self, i, j):
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def is_zero(self):
        return all(not x for r in self.rows for x in r)

    def is_identity(self):
        if self.nrows != self.ncols:
            return False
        o = self.field.one
        return all(
            (x == o if i == j else not x) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    # -- arithmetic ----------------------------------------------------

    def _same_shape(self, other):
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatch(
                f"shape mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}"
            )

    def __add__(self, other):
        self._same_shape(other)
        add = self.field.add
        return Matrix(
            self.field,
            [tuple(add(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __sub__(self, other):
        self._same_shape(other)
        sub = self.field.sub
        return Matrix(
            self.field,
            [tuple(sub(a, b) for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)],
            self.ncols,
        )

    def __neg__(self):
        neg = self.field.neg
        return Matrix(self.field, [tuple(neg(a) for a in r) for r in self.rows], self.ncols)

    def scale(self, c):
        mul = self.field.mul
        return Matrix(self.field, [tuple(mul(c, a) for a in r) for r in self.rows], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        field = self.field
        z = field.zero
        brows = other.rows
        p = other.ncols
        out = []
        if field.kind == "Q":
            for arow in self.rows:
                acc = [z] * p
                for k, a in enumerate(arow):
                    if a:
                        brow = brows[k]
                        for j, b in enumerate(brow):
                            if b:
                                acc[j] += a * b
                out.append(tuple(acc))
        else:
            q = field.p
            for arow in self.rows:
                acc = [0] * p
                for k, a in enumerate(arow):
                    if a:
                        brow = brows[k]
                        for j, b in enumerate(brow):
                            if b:
                                acc[j] = (acc[j] + a * b) % q
                out.append(tuple(acc))
        return Matrix(field, out, p)

    def apply(self, vec):
        """Matrix times a plain vector (list/tuple), returns a list."""
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector length mismatch")
        field = self.field
        out = []
        if field.kind == "Q":
            for row in self.rows:
                s = field.zero
                for a, v in zip(row, vec):
                    if a and v:
                        s += a * v
                out.append(s)
        else:
            q = field.p
            for row in self.rows:
                s = 0
                for a, v in zip(row, vec):
                    if a and v:
                        s = (s + a * v) % q
                out.append(s)
        return out

    def transpose(self):
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of non-square matrix")
        field = self.field
        s = field.zero
        for i in range(self.nrows):
            s = field.add(s, self.rows[i][i])
        return s

    def hstack(self, other):
        if self.nrows != other.nrows or self.field != other.field:
            raise DimensionMismatch("hstack mismatch")
        return Matrix(
            self.field,
            [r1 + r2 for r1, r2 in zip(self.rows, other.rows)],
            self.ncols + other.ncols,
        )

    def vstack(self, other):
        if self.ncols != other.ncols or self.field != other.field:
            raise DimensionMismatch("vstack mismatch")
        return Matrix(self.field, list(self.rows) + list(other.rows), self.ncols)

    @classmethod
    def block_diag(cls, field, blocks):
        nrows = sum(b.nrows for b in blocks)
        ncols = sum(b.ncols for b in blocks)
        z = field.zero
        rows = [[z] * ncols for _ in range(nrows)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.rows):
                for j, x in enumerate(row):
                    if x:
                        rows[r0 + i][c0 + j] = x
            r0 += b.nrows
            c0 += b.ncols
        return cls(field, rows, ncols)

    def kronecker(self, other):
        if self.field != other.field:
            raise DimensionMismatch("field mismatch")
        mul = self.field.mul
        z = self.field.zero
        rows = []
        for r1 in self.rows:
            for r2 in other.rows:
                row = []
                for a in r1:
                    if a:
                        row.extend(mul(a, b) if b else z for b in r2)
                    else:
                        row.extend([z] * other.ncols)
                rows.append(tuple(row))
        return Matrix(self.field, rows, self.ncols * other.ncols)

    def submatrix(self, row_idx, col_idx):
        return Matrix(
            self.field,
            [tuple(self.rows[i][j] for j in col_idx) for i in row_idx],
            len(col_idx),
        )

    # -- elimination ----------------------------------------------------

    def _compute_rref(self):
        if self._rref is not None:
            return self._rref
        rows = [list(r) for r in self.rows]
        if self.field.kind == "Q":
            pivots = _rref_qq(rows, self.ncols)
        else:
            pivots = _rref_fp(rows, self.ncols, self.field.p)
        R = Matrix(self.field, rows, self.ncols)
        R._rref = (R, tuple(pivots))
        self._rref = (R, tuple(pivots))
        return self._rref

    def rref(self):
        return self._compute_rref()[0]

    def pivot_columns(self):
        return self._compute_rref()[1]

    def rank(self):
        return len(self._compute_rref()[1])

    def kernel_matrix(self):
        """Columns form a basis of the right kernel (echelon-style, deterministic)."""
        R, pivots = self._compute_rref()
        field = self.field
        z, o = field.zero, field.one
        neg = field.neg
        pivset = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivset]
        cols = []
        for f in free:
            v = [z] * self.ncols
            v[f] = o
            for r, pc in enumerate(pivots):
                x = R.rows[r][f]
                if x:
                    v[pc] = neg(x)
            cols.append(v)
        return Matrix.from_columns(field, cols, self.ncols)

    def column_space_matrix(self):
        """Columns = the pivot columns of self (a basis of the column space)."""
        return self.submatrix(range(self.nrows), list(self.pivot_columns()))

    def inverse(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("inverse of non-square matrix")
        aug = self.hstack(Matrix.identity(self.field, self.nrows))
        R = aug.rref()
        if R.pivot_columns()[: self.nrows] != tuple(range(self.nrows)):
            raise InconsistentSystem("matrix not invertible")
        return R.submatrix(range(self.nrows), range(self.nrows, 2 * self.nrows))


def _rref_qq(rows, ncols):
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = 1 / pv
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    irow = rows[i]
                    for j in range(c, ncols):
                        pj = prow[j]
                        if pj:
                            irow[j] = irow[j] - f * pj
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _rref_fp(rows, ncols, p):
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = pow(pv, p - 2, p)
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    irow = rows[i]
                    for j in range(c, ncols):
                        pj = prow[j]
                        if pj:
                            irow[j] = (irow[j] - f * pj) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Eliminator:
    """Reusable exact solver for A x = b with a fixed A.

    Row-reduces [A | I] once; solve() then costs one row transform per call.
    Used wherever many systems share a coefficient matrix (coordinate
    solvers for stored bases, induced actions on subquotients, ...).
    """

    def __init__(self, A):
        self.A = A
        self.field = A.field
        aug = A.hstack(Matrix.identity(A.field, A.nrows)) if A.nrows else A
        R = aug.rref() if A.nrows else A
        pivots = [c for c in (R.pivot_columns() if A.nrows else ()) if c < A.ncols]
        self.rank = len(pivots)
        self.pivots = pivots
        self.R = R.submatrix(range(A.nrows), range(A.ncols)) if A.nrows else A
        self.E = (
            R.submatrix(range(A.nrows), range(A.ncols, A.ncols + A.nrows))
            if A.nrows
            else Matrix(A.field, [], 0)
        )

    def solve(self, b):
        """A particular solution of A x = b, or None if inconsistent."""
        if len(b) != self.A.nrows:
            raise DimensionMismatch("rhs length mismatch")
        if self.A.nrows == 0:
            return [self.field.zero] * self.A.ncols
        t = self.E.apply(b)
        for r in range(self.rank, self.A.nrows):
            if t[r]:
                return None
        x = [self.field.zero] * self.A.ncols
        for r, c in enumerate(self.pivots):
            x[c] = t[r]
        return x

    def solve_matrix(self, B):
        """X with A X = B, or None if some column is inconsistent."""
        cols = []
        for j in range(B.ncols):
            x = self.solve(list(B.column(j)))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_columns(self.field, cols, self.A.ncols)

    def in_column_space(self, b):
        return self.solve(b) is not None


class SpanAccumulator:
    """Incremental row-echelon span of vectors of a fixed length.

    Lets large families of vectors be reduced as they arrive, so no wide
    scratch matrix is ever materialized.  Rows are kept fully reduced with
    pivot 1, ordered by pivot position (deterministic basis).
    """

    def __init__(self, field, length):
        self.field = field
        self.length = length
        self.rows = []     # reduced rows
        self.pivots = []   # pivot column per row, increasing

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        field = self.field
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                for j in range(p, self.length):
                    x = row[j]
                    if x:
                        v[j] = field.sub(v[j], field.mul(f, x))
        return v

    def contains(self, vec):
        return not any(self.reduce(vec))

    def add(self, vec):
        """Add a vector to the span; returns True if the span grew."""
        field = self.field
        v = self.reduce(vec)
        p = next((j for j, x in enumerate(v) if x), None)
        if p is None:
            return False
        inv = field.inv(v[p])
        if inv != field.one:
            v = [field.mul(inv, x) for x in v]
        # back-eliminate the new pivot from existing rows
        for row, q in zip(self.rows, self.pivots):
            f = row[p]
            if f:
                for j in range(p, self.length):
                    x = v[j]
                    if x:
                        row[j] = field.sub(row[j], field.mul(f, x))
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < p:
            idx += 1
        self.rows.insert(idx, v)
        self.pivots.insert(idx, p)
        return True

    def add_columns(self, matrix):
        for j in range(matrix.ncols):
            self.add(matrix.column(j))

    def basis_columns_matrix(self):
        """Basis vectors as columns (echelon rows transposed)."""
        return Matrix.from_columns(self.field, [list(r) for r in self.rows], self.length)

    def row_matrix(self):
        return Matrix(self.field, [tuple(r) for r in self.rows], self.length)


def kernel_intersection(field, dim, matrices):
    """Basis (columns) of the common kernel of a family of matrices,
    intersecting one kernel at a time."""
    K = Matrix.identity(field, dim)
    for M in matrices:
        if K.ncols == 0:
            break
        K = K * (M * K).kernel_matrix()
    return K


class ToolkitResult:
    __slots__ = ("rank", "kernel_basis", "particular_solution", "rref")

    def __init__(self, rank, kernel_basis, particular_solution, rref):
        self.rank = rank
        self.kernel_basis = kernel_basis
        self.particular_solution = particular_solution
        self.rref = rref


def linear_toolkit(m, rhs=None):
    """Rank / kernel basis / particular solution / RREF of one matrix.

    rhs, when given, must be a single-column Matrix over the same field with
    matching row count.  Inconsistency raises InconsistentSystem; shape or
    field problems raise DimensionMismatch.
    """
    sol = None
    if rhs is not None:
        if rhs.field != m.field:
            raise DimensionMismatch("field of rhs differs")
        if rhs.nrows != m.nrows or rhs.ncols != 1:
            raise DimensionMismatch("rhs must be a column of matching height")
        sol = Eliminator(m).solve(list(rhs.column(0)))
        if sol is None:
            raise InconsistentSystem("no exact solution")
        sol = tuple(sol)
    K = m.kernel_matrix()
    return ToolkitResult(
        rank=m.rank(),
        kernel_basis=[K.column(j) for j in range(K.ncols)],
        particular_solution=sol,
        rref=m.rref(),
    )
