"""Exact linear algebra over the rationals and prime fields.

Scalars are plain ``fractions.Fraction`` values (rationals) or ints in
``[0, p)`` (prime fields); a :class:`Field` object supplies the arithmetic.
The single canonical form used everywhere is the reduced row echelon form
(RREF), so equality of row spaces, subspaces and ideals is a literal matrix
comparison.  No floating point appears anywhere.

Everything in this module is immutable after construction and all
operations are pure, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction

DEFAULT_ENUM_BOUND = 256


class EnumerationBound(Exception):
    """A brute-force enumeration would exceed the configured cap."""


def enum_bound(override=None):
    """Enumeration cap on the number of field vectors (p**ambient_dim)."""
    if override is not None:
        return int(override)
    return int(os.environ.get("HOPFACT_ENUM_BOUND", DEFAULT_ENUM_BOUND))


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Exact scalar arithmetic for Q ('rationals') or F_p ('prime-field').

    Rationals are ``Fraction`` instances (always lowest terms, positive
    denominator); prime-field elements are ints reduced mod p.
    """

    __slots__ = ("kind", "p", "zero", "one")

    def __init__(self, kind, p=None):
        if kind == "prime-field":
            if p is None or not _is_prime(p):
                raise ValueError(f"prime-field modulus must be prime, got {p!r}")
            self.p = int(p)
            self.zero, self.one = 0, 1
        elif kind == "rationals":
            self.p = None
            self.zero, self.one = Fraction(0), Fraction(1)
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind

    def characteristic(self):
        return 0 if self.p is None else self.p

    def from_int(self, n):
        return n % self.p if self.p is not None else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is not None:
            if a % self.p == 0:
                raise ZeroDivisionError("inverse of 0 in F_p")
            return pow(a, self.p - 2, self.p)
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return (a % self.p == 0) if self.p is not None else a == 0

    def parse(self, text):
        """Parse a JSON scalar (int or 'a/b' string); native scalars pass through."""
        if isinstance(text, bool):
            raise ValueError(f"not a scalar: {text!r}")
        if isinstance(text, Fraction):
            if self.p is not None:
                if text.denominator != 1:
                    raise ValueError(f"non-integral scalar {text} over F_{self.p}")
                return text.numerator % self.p
            return text
        if isinstance(text, int):
            return self.from_int(text)
        if isinstance(text, str):
            if self.p is not None:
                return int(text) % self.p
            return Fraction(text)
        raise ValueError(f"cannot parse scalar {text!r}")

    def render(self, a):
        """Serialize a scalar: decimal residue (F_p) or 'a/b' lowest terms (Q)."""
        return str(a)

    def to_json(self):
        if self.p is not None:
            return {"kind": "prime-field", "p": self.p}
        return {"kind": "rationals"}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["kind"], obj.get("p"))

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field("rationals")


def GF(p):
    return Field("prime-field", p)


class Matrix:
    """Dense matrix over one Field; rows are lists of scalars."""

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field, nrows, ncols, data):
        if len(data) != nrows or any(len(r) != ncols for r in data):
            raise ValueError("matrix data does not match shape")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.data = [list(r) for r in data]

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for empty matrix")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, nrows, ncols, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.data[i][i] = field.one
        return m

    def copy(self):
        return Matrix(self.field, self.nrows, self.ncols, self.data)

    def transpose(self):
        return Matrix(self.field, self.ncols, self.nrows,
                      [[self.data[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def mat_mul(self, other):
        if self.ncols != other.nrows or self.field != other.field:
            raise ValueError("matrix product shape/field mismatch")
        F = self.field
        out = Matrix.zeros(F, self.nrows, other.ncols)
        for i in range(self.nrows):
            row = self.data[i]
            orow = out.data[i]
            for k in range(self.ncols):
                a = row[k]
                if F.is_zero(a):
                    continue
                brow = other.data[k]
                for j in range(other.ncols):
                    b = brow[j]
                    if not F.is_zero(b):
                        orow[j] = F.add(orow[j], F.mul(a, b))
        return out

    def vec_mul(self, v):
        """Matrix times coordinate column vector (a list)."""
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        F = self.field
        out = [F.zero] * self.nrows
        for j, a in enumerate(v):
            if F.is_zero(a):
                continue
            for i in range(self.nrows):
                b = self.data[i][j]
                if not F.is_zero(b):
                    out[i] = F.add(out[i], F.mul(a, b))
        return out

    def vstack(self, other):
        if self.ncols != other.ncols or self.field != other.field:
            raise ValueError("vstack shape/field mismatch")
        return Matrix(self.field, self.nrows + other.nrows, self.ncols,
                      self.data + other.data)

    def to_lists(self):
        return [list(r) for r in self.data]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.nrows == other.nrows and self.ncols == other.ncols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.data!r})"


def _rref_data(field, data, ncols):
    """In-place style RREF on a copy; returns (rows, pivot_columns)."""
    F = field
    rows = [list(r) for r in data]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if not F.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        if inv != F.one:
            rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(rows[i][c]):
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [F.sub(ri[j], F.mul(f, rr[j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form; same shape, zero rows at the bottom."""
    rows, _ = _rref_data(m.field, m.data, m.ncols)
    return Matrix(m.field, m.nrows, m.ncols, rows)


class Subspace:
    """A subspace of field**ambient_dim in canonical RREF basis form.

    Two subspaces are equal iff their basis matrices are identical, which
    holds iff they are the same subspace.
    """

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field, ambient_dim, rows, pivots, _canonical=False):
        if not _canonical:
            raise ValueError("use Subspace.from_vectors")
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows          # tuple of tuples, RREF, no zero rows
        self.pivots = pivots      # tuple of pivot column indices

    @classmethod
    def from_vectors(cls, field, ambient_dim, vectors):
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if not vecs:
            return cls(field, ambient_dim, (), (), _canonical=True)
        rows, pivots = _rref_data(field, vecs, ambient_dim)
        rows = tuple(tuple(r) for r in rows[: len(pivots)])
        return cls(field, ambient_dim, rows, tuple(pivots), _canonical=True)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), (), _canonical=True)

    @classmethod
    def full(cls, field, ambient_dim):
        rows = tuple(tuple(field.one if i == j else field.zero
                           for j in range(ambient_dim)) for i in range(ambient_dim))
        return cls(field, ambient_dim, rows, tuple(range(ambient_dim)), _canonical=True)

    @property
    def dim(self):
        return len(self.rows)

    def basis_vectors(self):
        return [list(r) for r in self.rows]

    def to_matrix(self):
        return Matrix.from_rows(self.field, self.basis_vectors() or [], self.ambient_dim)

    def reduce(self, v):
        """Residual of v after elimination against the RREF basis."""
        F = self.field
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = w[pc]
            if not F.is_zero(c):
                w = [F.sub(w[j], F.mul(c, row[j])) for j in range(self.ambient_dim)]
        return w

    def contains(self, v):
        F = self.field
        return all(F.is_zero(x) for x in self.reduce(v))

    def coords_in_basis(self, v):
        """Coordinates of v in the RREF basis, or None if v is outside."""
        F = self.field
        w = list(v)
        coords = []
        for row, pc in zip(self.rows, self.pivots):
            c = w[pc]
            coords.append(c)
            if not F.is_zero(c):
                w = [F.sub(w[j], F.mul(c, row[j])) for j in range(self.ambient_dim)]
        if any(not F.is_zero(x) for x in w):
            return None
        return coords

    def residual_coords(self, v):
        """Coordinates of v mod this subspace: residual at non-pivot columns."""
        w = self.reduce(v)
        piv = set(self.pivots)
        return [w[j] for j in range(self.ambient_dim) if j not in piv]

    def nonpivot_columns(self):
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def le(self, other):
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.field != v.field or u.ambient_dim != v.ambient_dim:
        raise ValueError("subspace sum: ambient mismatch")
    return Subspace.from_vectors(u.field, u.ambient_dim,
                                 list(u.rows) + list(v.rows))


def annihilator(u: Subspace) -> Subspace:
    """Vectors killed by every basis functional row of u (dot pairing)."""
    if u.dim == 0:
        return Subspace.full(u.field, u.ambient_dim)
    return kernel(u.to_matrix())


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked annihilator system."""
    if u.field != v.field or u.ambient_dim != v.ambient_dim:
        raise ValueError("subspace intersect: ambient mismatch")
    au, av = annihilator(u), annihilator(v)
    rows = list(au.rows) + list(av.rows)
    if not rows:
        return Subspace.full(u.field, u.ambient_dim)
    return kernel(Matrix.from_rows(u.field, rows, u.ambient_dim))


def contains(u: Subspace, w) -> bool:
    return u.contains(w)


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0} as a canonical subspace; dim = ncols - rank."""
    F = m.field
    rows, pivots = _rref_data(F, m.data, m.ncols)
    pivset = set(pivots)
    basis = []
    for j in range(m.ncols):
        if j in pivset:
            continue
        v = [F.zero] * m.ncols
        v[j] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(rows[r][j])
        basis.append(v)
    return Subspace.from_vectors(F, m.ncols, basis)


def solve(m: Matrix, b) -> list | None:
    """Some solution x of m x = b, or None when inconsistent."""
    if len(b) != m.nrows:
        raise ValueError("rhs length mismatch")
    F = m.field
    aug = [list(r) + [b[i]] for i, r in enumerate(m.data)]
    rows, pivots = _rref_data(F, aug, m.ncols + 1)
    if m.ncols in pivots:
        return None
    x = [F.zero] * m.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.ncols]
    return x


def gaussian_binomial(n, k, p):
    """Number of k-dimensional subspaces of F_p**n."""
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (k - i) - 1
    return num // den


def subspace_count(p, n):
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def enumerate_subspaces(field: Field, ambient_dim: int, bound=None):
    """Every subspace of field**ambient_dim exactly once, canonical form.

    Deterministic order: dimension ascending, pivot columns lexicographic,
    free entries odometer (last position fastest).  Restricted to prime
    fields with p**ambient_dim within the enumeration cap.
    """
    p = field.characteristic()
    if p == 0:
        raise EnumerationBound("subspace enumeration requires a prime field")
    cap = enum_bound(bound)
    if p ** ambient_dim > cap:
        raise EnumerationBound(
            f"{p}**{ambient_dim} exceeds enumeration bound {cap}")
    n = ambient_dim
    values = [field.from_int(i) for i in range(p)]
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n)
                    if j not in pivots]
            for assign in itertools.product(range(p), repeat=len(free)):
                rows = [[field.zero] * n for _ in range(k)]
                for i in range(k):
                    rows[i][pivots[i]] = field.one
                for (pos, val) in zip(free, assign):
                    rows[pos[0]][pos[1]] = values[val]
                yield Subspace(field, n, tuple(tuple(r) for r in rows),
                               tuple(pivots), _canonical=True)


# -- GF(2) bitmask fast path -------------------------------------------------
#
# The exhaustive scans over all subspaces of an F_2 ambient space (stability
# scan, H-ideal enumeration) are the only hot loops in the workbench.  Rows
# are packed into ints (bit j = coordinate j) so that operator application
# and membership reduction are a handful of XORs.

def gf2_column_masks(matrix: Matrix):
    """Per-column image masks of an F_2 operator: mask[j] = M e_j."""
    masks = []
    for j in range(matrix.ncols):
        m = 0
        for i in range(matrix.nrows):
            if matrix.data[i][j] % 2:
                m |= 1 << i
        masks.append(m)
    return masks


def gf2_apply(col_masks, vec_mask):
    out = 0
    v = vec_mask
    while v:
        low = v & -v
        out ^= col_masks[low.bit_length() - 1]
        v ^= low
    return out


def gf2_member(rows_desc, vec_mask):
    """Reduce vec against RREF rows (each with distinct leading bit)."""
    v = vec_mask
    for r in rows_desc:
        if v & (r & -r):
            v ^= r
    return v == 0


def _gf2_enumerate_rowsets(n):
    """Yield (rows, pivots) of every RREF basis over F_2, masks packed."""
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivset = set(pivots)
            free = [(i, j) for i in range(k) for j in range(pivots[i] + 1, n)
                    if j not in pivset]
            base = [1 << pivots[i] for i in range(k)]
            for assign in itertools.product((0, 1), repeat=len(free)):
                rows = list(base)
                for (pos, bit) in zip(free, assign):
                    if bit:
                        rows[pos[0]] |= 1 << pos[1]
                yield rows, pivots


def gf2_stable_subspaces(n, operator_masks, bound=None):
    """All subspaces of F_2**n closed under every operator.

    ``operator_masks`` is a list of per-column mask tables (see
    :func:`gf2_column_masks`).  Returns canonical Subspace objects over GF(2).
    """
    cap = enum_bound(bound)
    if 2 ** n > cap:
        raise EnumerationBound(f"2**{n} exceeds enumeration bound {cap}")
    field = GF(2)
    found = []
    for rows, pivots in _gf2_enumerate_rowsets(n):
        ok = True
        for masks in operator_masks:
            for r in rows:
                if not gf2_member(rows, gf2_apply(masks, r)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            tuples = tuple(tuple((r >> j) & 1 for j in range(n)) for r in rows)
            found.append(Subspace(field, n, tuples, tuple(pivots), _canonical=True))
    return found


def stable_subspaces(field: Field, n, operators, bound=None):
    """All subspaces of field**n closed under each operator matrix."""
    if field.characteristic() == 2:
        return gf2_stable_subspaces(n, [gf2_column_masks(m) for m in operators],
                                    bound)
    found = []
    for sub in enumerate_subspaces(field, n, bound):
        ok = True
        for op in operators:
            for row in sub.rows:
                if not sub.contains(op.vec_mul(list(row))):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(sub)
    return found

