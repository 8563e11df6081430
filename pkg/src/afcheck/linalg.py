"""Small exact linear algebra over the rationals (matrices as row lists)."""

from fractions import Fraction


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def trace(a):
    return sum(a[i][i] for i in range(len(a)))


def det(a):
    """Determinant by exact Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        result *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return result


def charpoly(a):
    """Characteristic polynomial det(xI - A), low-degree-first, monic.

    Faddeev-LeVerrier recursion; exact over Fraction entries.
    """
    n = len(a)
    coeffs = [Fraction(1)]  # c_0 = 1 for x^n
    m = [[Fraction(x) for x in row] for row in a]
    mk = identity(n)
    for k in range(1, n + 1):
        mk = mat_mul(m, mk)
        ck = -trace(mk) / k
        coeffs.append(ck)
        if k < n:
            for i in range(n):
                mk[i][i] += ck
    return list(reversed(coeffs))
