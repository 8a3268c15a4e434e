"""
Exact dense linear algebra over the prime field F_p.

Matrices are plain numpy int64 arrays with entries in [0, p). Every product is
reduced mod p right away, and p < 2^20 keeps all intermediate sums inside int64.
Elimination is deterministic: leftmost pivot column, topmost nonzero row.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from taulab.exceptions import ConfigError, InvalidShape


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
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_prime(self.p) or self.p >= 2 ** 20:
            raise ConfigError(f"field characteristic must be a prime below 2^20, got {self.p}")

    # ---- construction ----

    def mat(self, data, rows: int | None = None, cols: int | None = None) -> np.ndarray:
        """Coerce nested lists / arrays to a reduced int64 matrix of the given shape."""
        arr = np.asarray(data, dtype=np.int64)
        if rows is not None and cols is not None:
            if arr.size == 0:
                arr = np.zeros((rows, cols), dtype=np.int64)
            arr = arr.reshape(rows, cols)
        elif arr.ndim != 2:
            raise InvalidShape(f"expected a 2-dimensional matrix, got shape {arr.shape}")
        return arr % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def random_matrix(self, rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
        return rng.integers(0, self.p, size=(rows, cols), dtype=np.int64)

    # ---- arithmetic ----

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse mod p")
        return pow(a, self.p - 2, self.p)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise InvalidShape(f"cannot multiply {a.shape} by {b.shape}")
        return (a @ b) % self.p

    def chain(self, mats: Sequence[np.ndarray], n: int) -> np.ndarray:
        """Product mats[-1] @ ... @ mats[0]; identity of size n for an empty chain."""
        out = self.identity(n)
        for m in mats:
            out = self.matmul(m, out)
        return out

    def power(self, m: np.ndarray, k: int) -> np.ndarray:
        self._require_square(m)
        result = self.identity(m.shape[0])
        base = m % self.p
        while k > 0:
            if k & 1:
                result = self.matmul(result, base)
            base = self.matmul(base, base)
            k >>= 1
        return result

    # ---- elimination ----

    def rref(self, m: np.ndarray) -> tuple[np.ndarray, tuple[int, ...], int]:
        """Reduced row echelon form, pivot columns (strictly increasing) and rank."""
        p = self.p
        a = np.array(m, dtype=np.int64) % p
        if a.ndim != 2:
            raise InvalidShape(f"expected a 2-dimensional matrix, got shape {a.shape}")
        rows, cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            nz = np.flatnonzero(a[r:, c])
            if nz.size == 0:
                continue
            k = r + int(nz[0])
            if k != r:
                a[[r, k]] = a[[k, r]]
            a[r] = (a[r] * self.inv(a[r, c])) % p
            factors = a[:, c].copy()
            factors[r] = 0
            hit = np.flatnonzero(factors)
            if hit.size:
                a[hit] = (a[hit] - np.outer(factors[hit], a[r])) % p
            pivots.append(c)
            r += 1
        return a, tuple(pivots), r

    def rank(self, m: np.ndarray) -> int:
        if m.size == 0:
            return 0
        return self.rref(m)[2]

    def kernel_basis(self, m: np.ndarray) -> np.ndarray:
        """Columns spanning the right null space of m."""
        cols = m.shape[1]
        reduced, pivots, _ = self.rref(m)
        pivot_set = set(pivots)
        free = [c for c in range(cols) if c not in pivot_set]
        basis = self.zeros(cols, len(free))
        for j, f in enumerate(free):
            basis[f, j] = 1
            for i, pc in enumerate(pivots):
                basis[pc, j] = (-reduced[i, f]) % self.p
        return basis

    def column_space(self, m: np.ndarray) -> np.ndarray:
        """Independent columns of m spanning its image."""
        if m.shape[1] == 0:
            return self.zeros(m.shape[0], 0)
        _, pivots, _ = self.rref(m)
        return m[:, list(pivots)] % self.p

    def complement(self, basis: np.ndarray) -> np.ndarray:
        """Standard unit vectors completing the columns of `basis` to a basis of F_p^n."""
        n, k = basis.shape
        _, pivots, _ = self.rref(np.hstack([basis, self.identity(n)]))
        chosen = [c - k for c in pivots if c >= k]
        return self.identity(n)[:, chosen]

    def solve_right(self, m: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """Some x with m @ x = b, or None when the system is inconsistent."""
        if m.shape[0] != b.shape[0]:
            raise InvalidShape(f"row mismatch: {m.shape} against {b.shape}")
        cols = m.shape[1]
        reduced, pivots, _ = self.rref(np.hstack([m, b]))
        if pivots and pivots[-1] >= cols:
            return None
        x = self.zeros(cols, b.shape[1])
        for i, pc in enumerate(pivots):
            x[pc] = reduced[i, cols:]
        return x

    def is_invertible(self, m: np.ndarray) -> bool:
        self._require_square(m)
        return self.rank(m) == m.shape[0]

    def inverse(self, m: np.ndarray) -> np.ndarray:
        self._require_square(m)
        n = m.shape[0]
        x = self.solve_right(m, self.identity(n))
        if x is None or self.rank(m) < n:
            raise InvalidShape("matrix is singular")
        return x

    # ---- polynomials ----

    def charpoly(self, m: np.ndarray) -> list[int]:
        """Characteristic polynomial det(xI - m), coefficients from degree 0 upwards."""
        self._require_square(m)
        p = self.p
        n = m.shape[0]
        h = np.array(m, dtype=np.int64) % p
        # similarity transform to upper Hessenberg form
        for j in range(n - 2):
            nz = np.flatnonzero(h[j + 1:, j])
            if nz.size == 0:
                continue
            i = j + 1 + int(nz[0])
            if i != j + 1:
                h[[i, j + 1]] = h[[j + 1, i]]
                h[:, [i, j + 1]] = h[:, [j + 1, i]]
            t = self.inv(h[j + 1, j])
            for i in range(j + 2, n):
                u = int(h[i, j]) * t % p
                if u == 0:
                    continue
                h[i, :] = (h[i, :] - u * h[j + 1, :]) % p
                h[:, j + 1] = (h[:, j + 1] + u * h[:, i]) % p
        hh = h.tolist()
        polys: list[list[int]] = [[1]]
        for k in range(1, n + 1):
            cur = [0] * (k + 1)
            diag = hh[k - 1][k - 1]
            for d, c in enumerate(polys[k - 1]):
                cur[d + 1] += c
                cur[d] -= diag * c
            t = 1
            for i in range(1, k):
                t = t * hh[k - i][k - i - 1] % p
                coef = hh[k - i - 1][k - 1] * t % p
                if coef:
                    for d, c in enumerate(polys[k - i - 1]):
                        cur[d] -= coef * c
            polys.append([c % p for c in cur])
        return polys[n]

    def roots(self, poly: Sequence[int]) -> list[int]:
        """All roots in F_p, found by evaluating the polynomial at every field element."""
        xs = np.arange(self.p, dtype=np.int64)
        acc = np.zeros(self.p, dtype=np.int64)
        for c in reversed(list(poly)):
            acc = (acc * xs + int(c)) % self.p
        return [int(r) for r in np.flatnonzero(acc == 0)]

    def _require_square(self, m: np.ndarray) -> None:
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InvalidShape(f"square matrix required, got shape {m.shape}")


def default_field() -> PrimeField:
    from taulab.config import get_settings

    return PrimeField(get_settings().field_prime)
