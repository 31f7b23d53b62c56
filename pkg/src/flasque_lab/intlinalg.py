"""Exact linear algebra over the integers.

Normal forms, kernels, cokernel structure and integer solving; everything
downstream reduces to this module.  All arithmetic is exact: matrices hold
numpy arrays of dtype int64 while every entry is small and are promoted to
dtype object (Python ints) before any operation could overflow, so results
are always exact arbitrary-precision integers.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

# int64 values are kept below _LIMIT; operations that could exceed it run on
# object arrays instead.
_LIMIT = 1 << 62
# arrays whose max entry drops below _DEMOTE are converted back to int64
_DEMOTE = 1 << 31


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(np.abs(a).max())


def _to_object(a: np.ndarray) -> np.ndarray:
    return a if a.dtype == object else a.astype(object)


def _normalize_dtype(a: np.ndarray) -> np.ndarray:
    if a.dtype == object and a.size and _max_abs(a) < _DEMOTE:
        return a.astype(np.int64)
    return a


class IntMatrix:
    """Immutable exact integer matrix.

    The backing array is frozen; operations return new matrices.
    """

    __slots__ = ("a", "_mx")

    def __init__(self, data):
        if isinstance(data, IntMatrix):
            a = data.a
        elif isinstance(data, np.ndarray):
            a = data
            if a.ndim != 2:
                raise InputError(f"expected a 2-d array, got shape {a.shape}")
            if a.dtype == object:
                if a.size:
                    bad = [x for x in a.flat if not isinstance(x, int) or isinstance(x, bool)]
                    if bad:
                        raise InputError(f"non-integer entry {bad[0]!r}")
            elif np.issubdtype(a.dtype, np.integer):
                a = a.astype(np.int64)
            else:
                raise InputError(f"refusing non-integer dtype {a.dtype}")
        else:
            rows = []
            for row in data:
                out = []
                for x in row:
                    if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                        raise InputError(f"non-integer entry {x!r}")
                    out.append(int(x))
                rows.append(out)
            ncols = len(rows[0]) if rows else 0
            if any(len(r) != ncols for r in rows):
                raise InputError("ragged rows in matrix data")
            a = np.array(rows, dtype=object).reshape(len(rows), ncols)
        a = _normalize_dtype(a)
        a = a.copy()
        a.flags.writeable = False
        self.a = a
        self._mx = _max_abs(a)

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def column(cls, entries: Sequence[int]) -> "IntMatrix":
        return cls([[int(x)] for x in entries])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int | None = None) -> "IntMatrix":
        cols = [list(c) for c in columns]
        if not cols:
            if rows is None:
                raise InputError("from_columns with no columns needs an explicit row count")
            return cls.zeros(rows, 0)
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    # -- shape and access --------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __getitem__(self, ij) -> int:
        return int(self.a[ij])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a[i, :])

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.a[:, j])

    def columns(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def to_lists(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.a]

    # -- arithmetic --------------------------------------------------------

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.a, other.a
        bound = self._mx * other._mx * max(self.cols, 1)
        if a.dtype == object or b.dtype == object or bound >= _LIMIT:
            a, b = _to_object(a), _to_object(b)
        return IntMatrix(np.dot(a, b))

    def _binary(self, other: "IntMatrix", op) -> "IntMatrix":
        if self.a.shape != other.a.shape:
            raise InputError("shape mismatch")
        a, b = self.a, other.a
        if self._mx + other._mx >= _LIMIT or a.dtype == object or b.dtype == object:
            a, b = _to_object(a), _to_object(b)
        return IntMatrix(op(a, b))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return self._binary(other, np.add)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self._binary(other, np.subtract)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(-self.a if self.a.dtype == object else -self.a.astype(np.int64))

    def scaled(self, k: int) -> "IntMatrix":
        k = int(k)
        a = self.a
        if a.dtype == object or abs(k) * self._mx >= _LIMIT:
            a = _to_object(a)
        return IntMatrix(a * k)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.a.T)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    # -- predicates ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.a.shape == other.a.shape and bool(np.array_equal(self.a, other.a))

    def __hash__(self):
        return hash((self.a.shape, self.a.tobytes() if self.a.dtype != object else tuple(self.a.flat)))

    def is_zero(self) -> bool:
        return self.a.size == 0 or not self.a.any()

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == IntMatrix.identity(self.rows)

    def is_permutation_matrix(self) -> bool:
        if self.rows != self.cols:
            return False
        a = self.a
        for i in range(self.rows):
            nz = np.nonzero(a[i, :])[0]
            if len(nz) != 1 or int(a[i, nz[0]]) != 1:
                return False
        return all(len(np.nonzero(a[:, j])[0]) == 1 for j in range(self.cols))

    def __repr__(self):
        return f"IntMatrix({self.to_lists()!r})"


def hstack(mats: Sequence[IntMatrix]) -> IntMatrix:
    mats = list(mats)
    if not mats:
        raise InputError("hstack of nothing")
    arrays = [m.a for m in mats]
    if any(a.dtype == object for a in arrays):
        arrays = [_to_object(a) for a in arrays]
    return IntMatrix(np.hstack(arrays))


def vstack(mats: Sequence[IntMatrix]) -> IntMatrix:
    mats = list(mats)
    if not mats:
        raise InputError("vstack of nothing")
    arrays = [m.a for m in mats]
    if any(a.dtype == object for a in arrays):
        arrays = [_to_object(a) for a in arrays]
    return IntMatrix(np.vstack(arrays))


def block_diag(mats: Sequence[IntMatrix]) -> IntMatrix:
    mats = list(mats)
    r = sum(m.rows for m in mats)
    c = sum(m.cols for m in mats)
    dtype = object if any(m.a.dtype == object for m in mats) else np.int64
    out = np.zeros((r, c), dtype=dtype)
    i = j = 0
    for m in mats:
        out[i : i + m.rows, j : j + m.cols] = m.a if dtype == np.int64 else _to_object(m.a)
        i += m.rows
        j += m.cols
    return IntMatrix(out)


# ---------------------------------------------------------------------------
# row-echelon engine
# ---------------------------------------------------------------------------


class _Rows:
    """Incremental integer row-echelon (Hermite) accumulator.

    Rows are inserted one at a time; each insertion reduces the row against
    the current pivot rows with exact Euclidean combinations.  Optionally a
    transform row is carried along, and rows that reduce to zero hand their
    transform to `zero_transforms` (these span the left kernel).
    """

    __slots__ = ("width", "pivots", "zero_transforms", "track")

    def __init__(self, width: int, track: bool = False):
        self.width = width
        self.pivots: dict[int, list] = {}  # col -> [row, trow]
        self.zero_transforms: list[np.ndarray] = []
        self.track = track

    @staticmethod
    def _sub_scaled(r, q, pr):
        # r - q*pr, promoting to object before any possible overflow
        if r is None:
            return None
        if r.dtype != object and pr.dtype != object:
            bound = _max_abs(r) + abs(q) * _max_abs(pr)
            if bound < _LIMIT:
                return r - q * pr
        r = _to_object(r)
        pr = _to_object(pr)
        return _normalize_dtype(r - int(q) * pr)

    @staticmethod
    def _neg(r):
        return None if r is None else -r

    def insert(self, row: np.ndarray, trow: np.ndarray | None = None):
        r, tr = row, trow
        while True:
            nz = np.nonzero(r)[0]
            if len(nz) == 0:
                if self.track and tr is not None:
                    self.zero_transforms.append(tr)
                return
            c = int(nz[0])
            v = int(r[c])
            entry = self.pivots.get(c)
            if entry is None:
                if v < 0:
                    r, tr = -r, self._neg(tr)
                self.pivots[c] = [r, tr]
                return
            while True:
                pr, ptr = entry
                a = int(pr[c])
                q = v // a
                if q:
                    r = self._sub_scaled(r, q, pr)
                    tr = self._sub_scaled(tr, q, ptr)
                v = int(r[c])
                if v == 0:
                    break
                # 0 < v < a: the new row becomes the pivot, keep reducing the old one
                entry[0], entry[1] = r, tr
                r, tr, v = pr, ptr, a

    def insert_matrix(self, M: IntMatrix, transform: bool = False):
        a = M.a
        for i in range(a.shape[0]):
            tr = None
            if transform:
                tr = np.zeros(a.shape[0], dtype=np.int64)
                tr[i] = 1
            self.insert(a[i, :].copy(), tr)

    def normalized(self) -> list[tuple[int, np.ndarray, np.ndarray | None]]:
        """Pivot rows in column order, fully reduced above each pivot."""
        items = sorted(self.pivots.items())
        out = [[c, r, tr] for c, (r, tr) in items]
        # reduce entries of earlier rows at later pivot columns into [0, pivot)
        for k in range(len(out)):
            c, r, tr = out[k]
            a = int(r[c])
            for j in range(k):
                rj = out[j][1]
                q = int(rj[c]) // a
                if q:
                    out[j][1] = self._sub_scaled(rj, q, r)
                    if out[j][2] is not None and tr is not None:
                        out[j][2] = self._sub_scaled(out[j][2], q, tr)
        return [(c, r, tr) for c, r, tr in out]


def _echelon_rows(M: IntMatrix) -> list[np.ndarray]:
    acc = _Rows(M.cols)
    acc.insert_matrix(M)
    return [r for _, r, _ in acc.normalized()]


def row_echelon(M: IntMatrix) -> IntMatrix:
    """Canonical row Hermite form of the row span (zero rows dropped)."""
    rows = _echelon_rows(M)
    if not rows:
        return IntMatrix.zeros(0, M.cols)
    arrays = [_to_object(r) for r in rows] if any(r.dtype == object for r in rows) else rows
    return IntMatrix(np.vstack(arrays))


def row_echelon_with_transform(M: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """(E, T) with T @ M = E, T unimodular, E the full (padded) Hermite form."""
    acc = _Rows(M.cols, track=True)
    acc.insert_matrix(M, transform=True)
    items = acc.normalized()
    rows = [r for _, r, _ in items] + [np.zeros(M.cols, dtype=np.int64) for _ in acc.zero_transforms]
    trows = [tr for _, _, tr in items] + acc.zero_transforms
    if not trows:
        return IntMatrix.zeros(0, M.cols), IntMatrix.identity(0)
    if any(r.dtype == object for r in rows):
        rows = [_to_object(r) for r in rows]
    if any(t.dtype == object for t in trows):
        trows = [_to_object(t) for t in trows]
    return IntMatrix(np.vstack(rows)), IntMatrix(np.vstack(trows))


def column_hermite(M: IntMatrix) -> IntMatrix:
    """Canonical basis of the column span (columns of the result)."""
    return row_echelon(M.T).T


def rank(M: IntMatrix) -> int:
    return len(_echelon_rows(M))


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Basis of the integer null space, as columns; the basis is saturated."""
    rows = _echelon_rows(M)
    n = M.cols
    if not rows:
        return IntMatrix.identity(n)
    compact = IntMatrix(np.vstack([_to_object(r) for r in rows]) if any(r.dtype == object for r in rows) else np.vstack(rows))
    acc = _Rows(compact.rows, track=True)
    acc.insert_matrix(compact.T, transform=True)
    vectors = acc.zero_transforms
    if not vectors:
        return IntMatrix.zeros(n, 0)
    if any(v.dtype == object for v in vectors):
        vectors = [_to_object(v) for v in vectors]
    # canonicalize for determinism
    return row_echelon(IntMatrix(np.vstack(vectors))).T


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Isomorphism class of a finitely generated abelian group.

    `invariant_factors` is the ascending divisibility chain of factors > 1.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        if any(d < 2 for d in facs):
            raise InputError("invariant factors must be >= 2")
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise InputError(f"invariant factors must form a divisibility chain, got {facs}")
        if self.free_rank < 0:
            raise InputError("negative free rank")

    @classmethod
    def trivial(cls) -> "AbelianGroupStructure":
        return cls((), 0)

    @classmethod
    def free(cls, rank: int) -> "AbelianGroupStructure":
        return cls((), rank)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"


def _snf_diagonal(M: IntMatrix) -> list[int]:
    """Non-negative diagonal of the Smith form (no transforms)."""
    a = _to_object(M.a).copy()
    m, n = a.shape
    k = min(m, n)
    for i in range(k):
        while True:
            sub = a[i:, i:]
            nz = np.nonzero(sub)
            if len(nz[0]) == 0:
                break
            # smallest-magnitude pivot, earliest position on ties
            cand = min(zip(nz[0], nz[1]), key=lambda t: (abs(int(sub[t[0], t[1]])), int(t[0]), int(t[1])))
            pi, pj = int(cand[0]) + i, int(cand[1]) + i
            if pi != i:
                a[[i, pi], :] = a[[pi, i], :]
            if pj != i:
                a[:, [i, pj]] = a[:, [pj, i]]
            p = int(a[i, i])
            done = True
            for r in range(i + 1, m):
                q = int(a[r, i]) // p
                if q:
                    a[r, :] = a[r, :] - q * a[i, :]
                if a[r, i] != 0:
                    done = False
            for c in range(i + 1, n):
                q = int(a[i, c]) // p
                if q:
                    a[:, c] = a[:, c] - q * a[:, i]
                if a[i, c] != 0:
                    done = False
            if done:
                break
    diag = [abs(int(a[i, i])) for i in range(k)]
    # enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm)
    import math

    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                if diag[i] and diag[j] and diag[j] % diag[i]:
                    g = math.gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
                elif diag[i] == 0 and diag[j] != 0:
                    diag[i], diag[j] = diag[j], 0
                    changed = True
    nonzero = [d for d in diag if d]
    return nonzero + [0] * (k - len(nonzero))


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V = S with U, V unimodular and S in Smith normal form."""

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(self.s[i, i]) for i in range(min(self.s.rows, self.s.cols)))


def snf(M: IntMatrix) -> SmithDecomposition:
    """Full Smith decomposition with unimodular transforms.

    Deterministic: smallest-magnitude pivots, earliest position on ties.
    """
    a = _to_object(M.a).copy()
    m, n = a.shape
    u = _to_object(np.eye(m, dtype=np.int64))
    v = _to_object(np.eye(n, dtype=np.int64))
    k = min(m, n)

    def eliminate(i: int):
        while True:
            sub = a[i:, i:]
            nz = np.nonzero(sub)
            if len(nz[0]) == 0:
                return
            cand = min(zip(nz[0], nz[1]), key=lambda t: (abs(int(sub[t[0], t[1]])), int(t[0]), int(t[1])))
            pi, pj = int(cand[0]) + i, int(cand[1]) + i
            if pi != i:
                a[[i, pi], :] = a[[pi, i], :]
                u[[i, pi], :] = u[[pi, i], :]
            if pj != i:
                a[:, [i, pj]] = a[:, [pj, i]]
                v[:, [i, pj]] = v[:, [pj, i]]
            p = int(a[i, i])
            done = True
            for r in range(i + 1, m):
                q = int(a[r, i]) // p
                if q:
                    a[r, :] -= q * a[i, :]
                    u[r, :] -= q * u[i, :]
                if a[r, i] != 0:
                    done = False
            for c in range(i + 1, n):
                q = int(a[i, c]) // p
                if q:
                    a[:, c] -= q * a[:, i]
                    v[:, c] -= q * v[:, i]
                if a[i, c] != 0:
                    done = False
            if done:
                if p < 0:
                    a[i, :] = -a[i, :]
                    u[i, :] = -u[i, :]
                return

    i = 0
    while i < k:
        eliminate(i)
        # repair the divisibility chain before moving on
        d = int(a[i, i])
        if i > 0:
            prev = int(a[i - 1, i - 1])
            if d and prev and d % prev:
                a[i - 1, :] += a[i, :]
                u[i - 1, :] += u[i, :]
                i -= 1
                continue
        if d == 0 and np.count_nonzero(a[i:, i:]):  # pragma: no cover - defensive
            continue
        i += 1
    return SmithDecomposition(IntMatrix(a), IntMatrix(u), IntMatrix(v))


def cokernel_structure(M: IntMatrix) -> AbelianGroupStructure:
    """Isomorphism class of Z^rows / column-span(M)."""
    span = column_hermite(M)  # rows x rank, compact
    diag = _snf_diagonal(span)
    nonzero = [d for d in diag if d]
    return AbelianGroupStructure(tuple(d for d in nonzero if d > 1), M.rows - len(nonzero))


class _ColumnSolver:
    """Factor M once, then solve M @ x = b for many right-hand sides."""

    def __init__(self, M: IntMatrix):
        self.m, self.n = M.rows, M.cols
        e, t = row_echelon_with_transform(M.T)
        self.C = e.T  # m x n column echelon: M @ T.T = C
        self.Tt = t.T
        self.pivots = []  # (row, col) with C[row, col] the pivot
        for j in range(self.C.cols):
            nz = np.nonzero(self.C.a[:, j])[0]
            if len(nz):
                self.pivots.append((int(nz[0]), j))

    def solve(self, b: Sequence[int]) -> list[int] | None:
        if len(b) != self.m:
            raise InputError(f"right-hand side has length {len(b)}, expected {self.m}")
        resid = np.array([int(x) for x in b], dtype=object)
        y = [0] * self.C.cols
        for i, j in self.pivots:
            p = int(self.C.a[i, j])
            r = int(resid[i])
            if r % p:
                return None
            q = r // p
            if q:
                y[j] = q
                resid = resid - q * _to_object(self.C.a[:, j])
        if resid.any():
            return None
        x = self.Tt @ IntMatrix.column(y)
        return [int(v) for v in x.a[:, 0]]


def solve_integer(M: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """Solve M @ x = b over the integers; None if no integral solution."""
    return _ColumnSolver(M).solve(b)


def solve_many(M: IntMatrix, B: IntMatrix) -> IntMatrix | None:
    """Solve M @ X = B columnwise; None if any column has no solution."""
    if M.rows != B.rows:
        raise InputError("dimension mismatch in solve_many")
    solver = _ColumnSolver(M)
    cols = []
    for j in range(B.cols):
        x = solver.solve(B.col(j))
        if x is None:
            return None
        cols.append(x)
    return IntMatrix.from_columns(cols, rows=M.cols)


def member_of_span(M: IntMatrix, v: Sequence[int]) -> bool:
    return solve_integer(M, v) is not None


def saturate(B: IntMatrix) -> IntMatrix:
    """Saturation of the column span: the smallest pure sublattice containing it.

    Columns must be linearly independent.
    """
    if rank(B) != B.cols:
        raise InputError("saturate: columns are linearly dependent")
    if B.cols == B.rows:
        return IntMatrix.identity(B.rows)
    K = kernel_basis(B.T)  # columns orthogonal to span(B)
    return kernel_basis(K.T)


def lattice_span_equal(A: IntMatrix, B: IntMatrix) -> bool:
    """Do the columns of A and B span the same sublattice?"""
    if A.rows != B.rows:
        return False
    return column_hermite(A) == column_hermite(B)


def inverse_unimodular(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix."""
    if M.rows != M.cols:
        raise InputError("inverse of a non-square matrix")
    e, t = row_echelon_with_transform(M)
    if not e.is_identity():
        raise InputError("matrix is not unimodular")
    return t
