"""Exact linear algebra: rationals, prime fields, and integer Smith normal form.

Scalars are `fractions.Fraction` over the rationals and plain ints in
[0, p) over a prime field.  Subspaces are kept in reduced row echelon
form, which makes equality and membership canonical.  Prime-field row
reduction is vectorized with numpy int64; rational row reduction works
on Python lists (the rational spaces in this package stay small).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

Scalar = "Fraction | int"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (kind='q') or a prime field (kind='fp', char p)."""

    kind: str
    p: int | None = None

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec("q")

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        if not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        return FieldSpec("fp", p)

    @staticmethod
    def parse(text: str) -> "FieldSpec":
        # accepted spellings: "q", "f2", "f3", "f<p>"
        if text == "q":
            return FieldSpec.rationals()
        if text.startswith("f") and text[1:].isdigit():
            return FieldSpec.prime(int(text[1:]))
        raise ValueError(f"unknown field spec {text!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "fp"

    def zero(self):
        return 0 if self.is_prime_field else Fraction(0)

    def one(self):
        return 1 if self.is_prime_field else Fraction(1)

    def coerce(self, x):
        if self.is_prime_field:
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime_field else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime_field else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.is_prime_field else a * b

    def neg(self, a):
        return (-a) % self.p if self.is_prime_field else -a

    def inv(self, a):
        if self.is_prime_field:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def label(self) -> str:
        return "q" if self.kind == "q" else f"f{self.p}"


# ---------------------------------------------------------------------------
# row echelon kernels


def _rref_fraction(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; returns nonzero rows."""
    rows = [list(r) for r in rows]
    out: list[list[Fraction]] = []
    pivots: list[int] = []
    for row in rows:
        for prow, pcol in zip(out, pivots):
            c = row[pcol]
            if c:
                for j in range(pcol, len(row)):
                    row[j] -= c * prow[j]
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            continue
        inv = Fraction(1) / row[lead]
        row = [v * inv for v in row]
        # back-substitute into existing rows
        for k, (prow, pcol) in enumerate(zip(out, pivots)):
            c = prow[lead]
            if c:
                out[k] = [pv - c * rv for pv, rv in zip(prow, row)]
        pos = next((i for i, pc in enumerate(pivots) if pc > lead), len(pivots))
        out.insert(pos, row)
        pivots.insert(pos, lead)
    return out


def _rref_modp(rows: np.ndarray, p: int) -> np.ndarray:
    """Reduced row echelon form over F_p on an int64 array; nonzero rows."""
    a = np.array(rows, dtype=np.int64) % p
    if a.size == 0:
        return a.reshape(0, a.shape[1] if a.ndim == 2 else 0)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        r += 1
    return a[:r]


def _rows_to_tuples(field: FieldSpec, rows) -> tuple:
    if field.is_prime_field:
        return tuple(tuple(int(v) for v in row) for row in rows)
    return tuple(tuple(row) for row in rows)


def rref(field: FieldSpec, rows) -> tuple:
    """Canonical reduced row echelon basis (tuple of row tuples)."""
    vecs = [list(r) for r in rows]
    if not vecs:
        return ()
    if field.is_prime_field:
        ints = [[int(v) % field.p for v in r] for r in vecs]
        return _rows_to_tuples(field, _rref_modp(np.array(ints, dtype=np.int64), field.p))
    return _rows_to_tuples(field, _rref_fraction([[Fraction(v) for v in r] for r in vecs]))


def _pivots_of(rows) -> list[int]:
    out = []
    for row in rows:
        out.append(next(j for j, v in enumerate(row) if v))
    return out


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient_dim with a canonical RREF basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple  # tuple of row tuples, reduced echelon, sorted by pivot

    @staticmethod
    def from_vectors(field: FieldSpec, ambient_dim: int, vectors) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        return Subspace(field, ambient_dim, rref(field, vecs))

    @staticmethod
    def zero(field: FieldSpec, ambient_dim: int) -> "Subspace":
        return Subspace(field, ambient_dim, ())

    @staticmethod
    def full(field: FieldSpec, ambient_dim: int) -> "Subspace":
        one, zero = field.one(), field.zero()
        basis = tuple(
            tuple(one if i == j else zero for j in range(ambient_dim))
            for i in range(ambient_dim)
        )
        return Subspace(field, ambient_dim, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def pivots(self) -> list[int]:
        return _pivots_of(self.basis)

    def reduce(self, vector):
        """Eliminate this subspace from `vector`; result depends only on the coset."""
        f = self.field
        v = [f.coerce(x) for x in vector]
        for row, pcol in zip(self.basis, self.pivots()):
            c = v[pcol]
            if c:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vector) -> bool:
        return not any(self.reduce(vector))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def add(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce [[A A],[B 0]]; intersection rows have zero left block."""
        self._check_compatible(other)
        f, n = self.field, self.ambient_dim
        zero = f.zero()
        stacked = [list(r) + list(r) for r in self.basis]
        stacked += [list(r) + [zero] * n for r in other.basis]
        reduced = rref(f, stacked)
        inter = [row[n:] for row in reduced if not any(row[:n])]
        return Subspace.from_vectors(f, n, inter)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ValueError("subspace mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.basis))


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix; field=None means integer entries (for SNF work)."""

    field: FieldSpec | None
    nrows: int
    ncols: int
    entries: tuple  # entries[r][c]

    @staticmethod
    def from_rows(field: FieldSpec | None, rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
        if field is None:
            ent = tuple(tuple(int(v) for v in r) for r in rows)
        else:
            ent = tuple(tuple(field.coerce(v) for v in r) for r in rows)
        return ExactMatrix(field, nrows, ncols, ent)

    @staticmethod
    def zeros(field: FieldSpec | None, nrows: int, ncols: int) -> "ExactMatrix":
        z = 0 if field is None else field.zero()
        return ExactMatrix(field, nrows, ncols, tuple(tuple(z for _ in range(ncols)) for _ in range(nrows)))

    def row(self, i: int):
        return self.entries[i]

    def column(self, j: int):
        return tuple(self.entries[i][j] for i in range(self.nrows))

    def transpose(self) -> "ExactMatrix":
        ent = tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return ExactMatrix(self.field, self.ncols, self.nrows, ent)

    def apply(self, vector):
        """Matrix times column vector (length ncols) -> length nrows."""
        f = self.field
        if f is None:
            return [sum(r[j] * vector[j] for j in range(self.ncols)) for r in self.entries]
        out = []
        for r in self.entries:
            acc = f.zero()
            for j in range(self.ncols):
                v = vector[j]
                if v:
                    acc = f.add(acc, f.mul(r[j], v))
            out.append(acc)
        return out

    def mul(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        f = self.field
        cols = [other.column(j) for j in range(other.ncols)]
        rows = []
        for r in self.entries:
            row = []
            for col in cols:
                if f is None:
                    row.append(sum(a * b for a, b in zip(r, col)))
                else:
                    acc = f.zero()
                    for a, b in zip(r, col):
                        if a and b:
                            acc = f.add(acc, f.mul(a, b))
                    row.append(acc)
            rows.append(row)
        return ExactMatrix.from_rows(f, rows)


def image_and_rank(m: ExactMatrix) -> tuple[Subspace, int]:
    """Column space of `m` as a canonical subspace of field^nrows, plus rank."""
    if m.field is None:
        raise ValueError("image_and_rank needs a field")
    cols = [m.column(j) for j in range(m.ncols)]
    img = Subspace.from_vectors(m.field, m.nrows, cols)
    return img, img.dim


def nullspace(m: ExactMatrix) -> Subspace:
    """Kernel {v : m v = 0} as a canonical subspace of field^ncols."""
    f = m.field
    if f is None:
        raise ValueError("nullspace needs a field")
    reduced = rref(f, [list(r) for r in m.entries])
    piv = _pivots_of(reduced)
    free = [j for j in range(m.ncols) if j not in piv]
    basis = []
    one, zero = f.one(), f.zero()
    for j in free:
        v = [zero] * m.ncols
        v[j] = one
        for row, pc in zip(reduced, piv):
            v[pc] = f.neg(row[j])
        basis.append(v)
    space = Subspace.from_vectors(f, m.ncols, basis)
    # rank + nullity must always tie out
    assert len(reduced) + space.dim == m.ncols
    return space


def rank(m: ExactMatrix) -> int:
    if m.field is None:
        raise ValueError("rank over a field; use smith_normal_form for integers")
    return len(rref(m.field, [list(r) for r in m.entries]))


# ---------------------------------------------------------------------------
# integer Smith normal form


def smith_normal_form(matrix) -> tuple[int, list[int]]:
    """Return (rank, divisors) with d1 | d2 | ... | dr, all positive.

    Accepts an ExactMatrix with field=None or a plain list of rows.
    Pivot selection always takes a smallest-magnitude nonzero entry, which
    keeps coefficient growth tame on the sparse boundary matrices this
    package produces.
    """
    if isinstance(matrix, ExactMatrix):
        if matrix.field is not None:
            raise ValueError("smith_normal_form expects integer entries")
        a = [list(r) for r in matrix.entries]
    else:
        a = [[int(v) for v in r] for r in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    divisors: list[int] = []
    t = 0
    while t < min(m, n):
        # smallest |entry| in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            a[bi], a[t] = a[t], a[bi]
        if bj != t:
            for row in a:
                row[bj], row[t] = row[t], row[bj]
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[i], a[t] = a[t], a[i]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[j], row[t] = row[t], row[j]
                        dirty = True
                        break
            if dirty:
                continue
            # pivot must divide the remaining block for the divisor chain
            piv = a[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % piv:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, n):
                a[t][j] += a[offender][j]
        divisors.append(abs(a[t][t]))
        t += 1
    for d1, d2 in zip(divisors, divisors[1:]):
        assert d2 % d1 == 0, "divisor chain broken"
    return len(divisors), divisors


# ---------------------------------------------------------------------------
# quotients


class QuotientSpace:
    """field^ambient_dim modulo a subspace; canonical coset coordinates.

    The quotient basis is the image of the standard basis vectors at the
    subspace's non-pivot columns.
    """

    def __init__(self, subspace: Subspace):
        self.field = subspace.field
        self.ambient_dim = subspace.ambient_dim
        self.subspace = subspace
        piv = set(subspace.pivots())
        self.rep_indices = [j for j in range(self.ambient_dim) if j not in piv]

    @property
    def dim(self) -> int:
        return len(self.rep_indices)

    def coords(self, vector) -> list:
        reduced = self.subspace.reduce(vector)
        return [reduced[j] for j in self.rep_indices]

    def rep_vector(self, i: int) -> list:
        v = [self.field.zero()] * self.ambient_dim
        v[self.rep_indices[i]] = self.field.one()
        return v


class SubquotientBasis:
    """Basis data for V/W with W <= V <= field^ambient, both in RREF."""

    def __init__(self, v: Subspace, w: Subspace):
        if v.field != w.field or v.ambient_dim != w.ambient_dim:
            raise ValueError("subquotient mismatch")
        if not v.contains_space(w):
            raise ValueError("W not contained in V")
        self.field = v.field
        self.ambient_dim = v.ambient_dim
        self.v = v
        self.w = w
        wpiv = set(w.pivots())
        self.rep_rows = [row for row, p in zip(v.basis, v.pivots()) if p not in wpiv]
        self.rep_pivots = [p for p in v.pivots() if p not in wpiv]

    @property
    def dim(self) -> int:
        return len(self.rep_rows)

    def rep_vector(self, i: int) -> list:
        return list(self.rep_rows[i])

    def coords(self, vector) -> list:
        """Coset coordinates of a vector of V; raises if vector not in V."""
        f = self.field
        u = [f.coerce(x) for x in vector]
        out = [f.zero()] * self.dim
        rep_pos = {p: k for k, p in enumerate(self.rep_pivots)}
        for row, p in zip(self.v.basis, self.v.pivots()):
            c = u[p]
            if c:
                u = [f.sub(a, f.mul(c, b)) for a, b in zip(u, row)]
            if p in rep_pos:
                out[rep_pos[p]] = c
        if any(u):
            raise ValueError("vector not in the subspace V")
        return out


def induced_matrix(
    apply_map,
    src: "QuotientSpace | SubquotientBasis",
    dst: "QuotientSpace | SubquotientBasis",
    check_kernel: Subspace | None = None,
) -> ExactMatrix:
    """Matrix of the map induced on quotients by `apply_map` (vector -> vector).

    When check_kernel is given, verifies apply_map sends it into the
    denominator of `dst` (well-definedness on cosets).
    """
    if check_kernel is not None:
        dst_den = dst.subspace if isinstance(dst, QuotientSpace) else dst.w
        for row in check_kernel.basis:
            img = apply_map(list(row))
            if not dst_den.contains(img):
                raise ValueError("map is not well-defined on cosets")
    cols = []
    for i in range(src.dim):
        cols.append(dst.coords(apply_map(src.rep_vector(i))))
    field = dst.field
    rows = [[cols[j][i] for j in range(src.dim)] for i in range(dst.dim)]
    ent = tuple(tuple(field.coerce(v) for v in r) for r in rows)
    return ExactMatrix(field, dst.dim, src.dim, ent)
