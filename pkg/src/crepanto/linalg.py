"""Exact linear algebra over Q and Z.

Everything here is exact: Python integers for the fraction-free kernels,
fractions.Fraction elsewhere.  No floating point is used anywhere in the
package.  Matrices are lists of row lists.
"""

from fractions import Fraction
from math import gcd, lcm

Row = list
Matrix = list


def det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Bareiss one-step elimination keeps every intermediate entry an exact
    integer and bounds its size by a minor of the input, which is what makes
    determinant-heavy workloads (multiplicities, volumes) cheap.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _clear_denominators(row) -> tuple[list[int], int]:
    fracs = [Fraction(x) for x in row]
    d = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * d) for f in fracs], d


def det(rows) -> Fraction:
    """Exact determinant of a square matrix with rational entries."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    scaled = []
    denom = 1
    for row in rows:
        ints, d = _clear_denominators(row)
        scaled.append(ints)
        denom *= d
    return Fraction(det_int(scaled), denom)


def solve(a, b):
    """One exact solution of a.x = b, or None when the system is inconsistent.

    For square nonsingular a this is the unique solution; for underdetermined
    consistent systems the free variables are set to zero.
    """
    m = len(a)
    if len(b) != m:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    n = len(a[0]) if m else 0
    if any(len(r) != n for r in a):
        raise ValueError("ragged matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        x[col] = aug[r][n]
    return x


def hnf(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form with transform: returns (h, u) with u.m = h.

    Convention used throughout the package: pivots positive, entries above a
    pivot reduced into [0, pivot), zero rows collected at the bottom, u
    unimodular.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    h = [[int(x) for x in row] for row in rows]
    if any(len(r) != n for r in h):
        raise ValueError("ragged matrix")
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    row = 0
    for col in range(n):
        # Euclidean elimination below the working row.
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][col]))
            h[row], h[piv] = h[piv], h[row]
            u[row], u[piv] = u[piv], u[row]
            if h[row][col] < 0:
                h[row] = [-x for x in h[row]]
                u[row] = [-x for x in u[row]]
            done = True
            for i in range(row + 1, m):
                if h[i][col] != 0:
                    q = h[i][col] // h[row][col]
                    h[i] = [x - q * y for x, y in zip(h[i], h[row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[row])]
                    if h[i][col] != 0:
                        done = False
            if done:
                break
        if row < m and h[row][col] != 0:
            for i in range(row):
                q = h[i][col] // h[row][col]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[row])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[row])]
            row += 1
            if row == m:
                break
    return h, u


def kernel_int(rows: list[list[int]], n: int | None = None) -> list[list[int]]:
    """Basis of the saturated integer kernel {x in Z^n : rows . x = 0}."""
    if n is None:
        if not rows:
            raise ValueError("ambient dimension is ambiguous for an empty matrix")
        n = len(rows[0])
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(n)]
    h, u = hnf(transpose)
    return [u[i] for i in range(n) if all(x == 0 for x in h[i])]


def saturation(rows: list[list[int]]) -> list[list[int]]:
    """Basis of (Q-span of rows) intersected with Z^n."""
    if not rows:
        return []
    n = len(rows[0])
    return kernel_int(kernel_int(rows, n), n)


def rank_int(rows: list[list[int]]) -> int:
    h, _ = hnf(rows)
    return sum(1 for r in h if any(x != 0 for x in r))


def lattice_membership(v, basis_rows) -> bool:
    """True iff v is an integer combination of the rows of basis_rows.

    The rows must span a full-rank lattice; entries may be rational.
    """
    n = len(v)
    scaled_rows = []
    d = 1
    for row in basis_rows:
        ints, rd = _clear_denominators(row)
        d = lcm(d, rd)
        scaled_rows.append((ints, rd))
    mat = [[x * (d // rd) for x in ints] for ints, rd in scaled_rows]
    h, _ = hnf(mat)
    h = [r for r in h if any(x != 0 for x in r)]
    if len(h) < n:
        raise ValueError("rank-deficient lattice basis")
    target = [Fraction(x) * d for x in v]
    if any(t.denominator != 1 for t in target):
        return False
    t = [int(x) for x in target]
    for row in h:
        col = next(j for j, x in enumerate(row) if x != 0)
        if t[col] % row[col] != 0:
            return False
        q = t[col] // row[col]
        t = [a - q * b for a, b in zip(t, row)]
    return all(x == 0 for x in t)


def content(nums: list[int]) -> int:
    g = 0
    for x in nums:
        g = gcd(g, x)
    return g
