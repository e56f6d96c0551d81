"""Exact integer matrices, characteristic polynomials and a Jacobi eigensolver.

Integer work is done on Python ``int`` so nothing overflows.  The floating
eigensolver is a cyclic Jacobi method using the round-robin ordering, so each
step applies ``m // 2`` disjoint plane rotations at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


class MatrixDomainError(ValueError):
    """Raised for shape or symmetry violations."""


class IntMatrix:
    """Immutable dense matrix of Python integers, stored row-major."""

    __slots__ = ("_rows", "shape")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise MatrixDomainError("ragged rows")
        self._rows = rows
        self.shape = (len(rows), ncols)

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "IntMatrix":
        return cls([[0] * (r if c is None else c) for _ in range(r)])

    @classmethod
    def identity(cls, m: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(m)] for i in range(m)])

    @classmethod
    def from_array(cls, a) -> "IntMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise MatrixDomainError("expected a 2-d array")
        return cls(a.tolist())

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self._rows for x in r)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self.shape == other.shape and self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash((self.shape, self._rows))

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self._rows]})"

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape[1] != other.shape[0]:
            raise MatrixDomainError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._rows)) if other._rows else [()] * other.shape[1]
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise MatrixDomainError("shape mismatch")
        return IntMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    @property
    def T(self) -> "IntMatrix":
        if not self._rows:
            return IntMatrix.zeros(self.shape[1], 0) if self.shape[1] else self
        return IntMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.T

    def trace(self) -> int:
        return sum(self._rows[i][i] for i in range(min(self.shape)))

    def to_array(self, dtype=float) -> np.ndarray:
        return np.array(self._rows, dtype=dtype).reshape(self.shape)

    def inf_norm(self) -> int:
        return max((sum(abs(x) for x in r) for r in self._rows), default=0)


def _square(m: IntMatrix):
    if not m.is_square:
        raise MatrixDomainError(f"matrix is not square: shape {m.shape}")


class Poly:
    """Exact integer polynomial with coefficients in descending degree order.

    ``Poly((1, 0, -4))`` is ``x**2 - 4``.  Leading zeros are stripped; the
    zero polynomial is ``Poly(())``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        c = [int(x) for x in coeffs]
        i = 0
        while i < len(c) and c[i] == 0:
            i += 1
        self.coeffs = tuple(c[i:])

    @classmethod
    def x(cls, k: int = 1) -> "Poly":
        return cls((1,) + (0,) * k)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def c(self, k: int) -> int:
        """Coefficient ``c_k`` of ``x**(degree-k)``."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0 * x
        for a in self.coeffs:
            acc = acc * x + a
        return acc

    def _aligned(self, other):
        a, b = self.coeffs, other.coeffs
        w = max(len(a), len(b))
        return (0,) * (w - len(a)) + a, (0,) * (w - len(b)) + b

    def __add__(self, other):
        a, b = self._aligned(_as_poly(other))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.coeffs == _as_poly(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        d = self.degree
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            k = d - i
            mag = abs(a)
            body = "" if (mag == 1 and k) else str(mag)
            if k:
                body += "x" if k == 1 else f"x^{k}"
            terms.append(("-" if a < 0 else "+", body))
        s = "".join(f" {sg} {b}" for sg, b in terms).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, int):
        return Poly((p,))
    raise TypeError(f"cannot use {type(p).__name__} as Poly")


CharPoly = Poly


def char_poly_exact(m: IntMatrix) -> Poly:
    """``det(xI - M)`` by Berkowitz's division-free algorithm.

    Each step borders the leading ``r x r`` block by row ``r`` and column
    ``r`` and multiplies the running coefficient vector by the lower
    triangular Toeplitz matrix of ``(1, -a_rr, -R C, -R A C, ...)``.
    """
    _square(m)
    a = m.rows
    size = m.shape[0]
    if size == 0:
        return Poly((1,))
    poly = [1, -a[0][0]]
    for r in range(1, size):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        q = [1, -a[r][r]]
        v = col
        for _ in range(r):
            q.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][k] * v[k] for k in range(r)) for i in range(r)]
        poly = [sum(q[i - j] * poly[j] for j in range(min(i, r) + 1)) for i in range(r + 2)]
    return Poly(poly)


def _bareiss_det(rows: list[list[int]]) -> int:
    a = [list(r) for r in rows]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]) // prev
        prev = piv
    return sign * a[-1][-1]


def det_exact(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination; ``det`` of a
    ``0 x 0`` matrix is 1."""
    _square(m)
    return _bareiss_det([list(r) for r in m.rows])


def power(m: IntMatrix, k: int) -> IntMatrix:
    """``M**k`` by repeated squaring."""
    _square(m)
    if k < 0:
        raise MatrixDomainError("negative exponent")
    result = IntMatrix.identity(m.shape[0])
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def minor(m: IntMatrix, i: int, j: int) -> IntMatrix:
    """``M[i|j]``: delete row ``i`` and column ``j``."""
    r, c = m.shape
    if not (0 <= i < r and 0 <= j < c):
        raise MatrixDomainError(f"index ({i}, {j}) out of range for shape {m.shape}")
    return IntMatrix([[x for jj, x in enumerate(row) if jj != j]
                      for ii, row in enumerate(m.rows) if ii != i])


def minor_char_poly(m: IntMatrix, i: int, j: int) -> Poly:
    """``det((xI - M)[i|j])`` as an exact polynomial in ``x``.

    For ``i == j`` this is the characteristic polynomial of ``M[i]``.  Off
    the diagonal the deleted row and column carry different ``x`` entries,
    so the determinant is sampled at integer points and interpolated
    exactly (degree is at most ``dim - 2``).
    """
    _square(m)
    size = m.shape[0]
    if not (0 <= i < size and 0 <= j < size):
        raise MatrixDomainError(f"index ({i}, {j}) out of range for dim {size}")
    if i == j:
        return char_poly_exact(minor(m, i, i))
    xs = list(range(size))
    ys = []
    for x in xs:
        rows = [[(x if r == c else 0) - m[r, c] for c in range(size) if c != j]
                for r in range(size) if r != i]
        ys.append(_bareiss_det(rows))
    return _interpolate(xs, ys)


def _interpolate(xs: list[int], ys: list[int]) -> Poly:
    # Newton divided differences in exact rationals.
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for level in range(1, n):
        for k in range(n - 1, level - 1, -1):
            coef[k] = (coef[k] - coef[k - 1]) / (xs[k] - xs[k - level])
    acc = [Fraction(0)]
    for k in range(n - 1, -1, -1):
        # acc = acc * (x - xs[k]) + coef[k], ascending order
        nxt = [Fraction(0)] * (len(acc) + 1)
        for d, a in enumerate(acc):
            nxt[d + 1] += a
            nxt[d] -= a * xs[k]
        nxt[0] += coef[k]
        acc = nxt
    if any(a.denominator != 1 for a in acc):
        raise ArithmeticError("interpolated determinant is not integral")
    return Poly([int(a) for a in reversed(acc)])


@dataclass(frozen=True)
class EigenResult:
    """Eigenpairs sorted by descending eigenvalue; ``vectors[:, i]`` pairs
    with ``values[i]``."""

    values: np.ndarray
    vectors: np.ndarray
    tol: float
    sweeps: int = 0


def _round_robin(m: int) -> list[list[tuple[int, int]]]:
    # Circle method: m even, m - 1 rounds of m/2 disjoint pairs covering all pairs.
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append([(min(players[k], players[m - 1 - k]), max(players[k], players[m - 1 - k]))
                       for k in range(m // 2)])
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def symmetric_eigen(m, tol: float = 1e-10, max_sweeps: int = 100) -> EigenResult:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi.

    Sweeps continue until the off-diagonal Frobenius mass is at most
    ``tol * (1 + ||M||_F)``.

    Parameters
    ----------
    m : IntMatrix or array_like
        Symmetric input.
    tol : float
        Relative stopping threshold on the off-diagonal mass.
    """
    if isinstance(m, IntMatrix):
        if not m.is_symmetric():
            raise MatrixDomainError("matrix is not symmetric")
        a = m.to_array(float)
    else:
        a = np.array(m, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise MatrixDomainError(f"matrix is not square: shape {a.shape}")
        if not np.allclose(a, a.T, rtol=0, atol=1e-12 * (1 + np.abs(a).max(initial=0))):
            raise MatrixDomainError("matrix is not symmetric")
        a = (a + a.T) / 2
    size = a.shape[0]
    if size == 0:
        return EigenResult(np.zeros(0), np.zeros((0, 0)), tol)
    padded = size + (size % 2)
    work = np.zeros((padded, padded))
    work[:size, :size] = a
    vecs = np.eye(padded)
    scale = 1.0 + np.linalg.norm(a)
    rounds = _round_robin(padded) if padded > 1 else []
    sweeps = 0
    off_mask = ~np.eye(padded, dtype=bool)
    while np.sqrt(np.sum(work[off_mask] ** 2)) > tol * scale:
        if sweeps >= max_sweeps:
            raise ArithmeticError("Jacobi iteration did not converge")
        sweeps += 1
        for pairs in rounds:
            p = np.array([pq[0] for pq in pairs])
            q = np.array([pq[1] for pq in pairs])
            apq = work[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (work[q, q] - work[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(padded)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            work = rot.T @ work @ rot
            vecs = vecs @ rot
    # The padding index never couples, so its row and column stay trivial.
    vals = np.diag(work)[:size]
    vecs = vecs[:size, :size]
    order = np.argsort(-vals, kind="stable")
    return EigenResult(vals[order], vecs[:, order], tol, sweeps)


def cluster(values: Sequence[float], rel: float = 1e-6) -> list[tuple[float, int]]:
    """Group descending eigenvalues whose neighbours differ by at most
    ``rel * (1 + |lambda|)``; returns ``(mean, multiplicity)`` pairs."""
    out: list[list[float]] = []
    for v in sorted(values, reverse=True):
        if out and abs(out[-1][-1] - v) <= rel * (1 + abs(v)):
            out[-1].append(v)
        else:
            out.append([v])
    return [(float(np.mean(g)), len(g)) for g in out]
