"""Polynomial engine against sympy oracles: factorization, Sturm, resultants."""

import random
from fractions import Fraction

import sympy

from afcheck.polynomials import (count_real_roots, fp_factor, interval_eval,
                                 isolate_real_roots, peval, pgcd, pmul,
                                 poly_disc, pxgcd, resultant, zx_factor,
                                 zx_is_irreducible)

X = sympy.symbols("x")


def to_sympy(coeffs):
    return sympy.Poly(sum(int(c) * X ** i for i, c in enumerate(coeffs)), X)


BATTERY = [
    [1, 0, 0, 0, 1],              # x^4 + 1: irreducible over Q, splits mod every p
    [-4, 0, 0, 0, 1],             # x^4 - 4 = (x^2-2)(x^2+2)
    [-1, 0, 0, 0, 0, 0, 1],       # x^6 - 1
    [1, 0, 0, 1, 0, 0, 1],        # x^6 + x^3 + 1: cyclotomic, irreducible
    [-2, 2, -3, 1],               # random cubic
    [2, 0, -4, 0, 1],             # x^4 - 4x^2 + 2: Eisenstein at 2
    [-1, -1, 1],                  # golden ratio minimal polynomial
    [4, 4, 1],                    # (x + 2)^2
    [0, 0, 0, 1],                 # x^3
]


class TestZxFactor:
    def test_battery_against_sympy(self):
        for coeffs in BATTERY:
            mine = zx_factor(coeffs)
            _, theirs = to_sympy(coeffs).factor_list()
            their_set = sorted(
                (tuple(int(c) for c in reversed(f.all_coeffs())), m)
                for f, m in theirs)
            mine_set = sorted((tuple(f), m) for f, m in mine)
            assert mine_set == their_set, coeffs

    def test_random_products_recombine(self):
        rng = random.Random(3)
        for _ in range(30):
            f = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]
            g = [rng.randint(-4, 4) for _ in range(rng.randint(1, 3))] + [1]
            prod = pmul(f, g)
            total = 1
            for fac, mult in zx_factor([int(c) for c in prod]):
                for _ in range(mult):
                    total = pmul(total if total != 1 else [1], fac)
            assert [int(c) for c in total] == [int(c) for c in prod]

    def test_irreducibility_flags(self):
        assert zx_is_irreducible([1, 0, 0, 0, 1])
        assert not zx_is_irreducible([-4, 0, 0, 0, 1])
        assert zx_is_irreducible([-2, 0, 1])


class TestFpFactor:
    def test_against_sympy(self):
        rng = random.Random(5)
        for p in (2, 3, 5, 7, 23):
            for _ in range(15):
                coeffs = [rng.randrange(p) for _ in range(rng.randint(1, 6))] + [1]
                mine = fp_factor(coeffs, p)
                poly = sympy.Poly(sum(c * X ** i for i, c in enumerate(coeffs)),
                                  X, modulus=p, symmetric=False)
                _, theirs = poly.factor_list()
                their_set = sorted(
                    (tuple(int(c) % p for c in reversed(f.all_coeffs())), m)
                    for f, m in theirs)
                assert sorted((tuple(f), m) for f, m in mine) == their_set, (coeffs, p)

    def test_inert_cubic_mod_two(self):
        # x^3 + x^2 + 1 over F_2 has no roots, hence is irreducible
        assert fp_factor([1, 0, 1, 1], 2) == [([1, 0, 1, 1], 1)]


class TestSturm:
    def test_root_counts_match_sympy(self):
        for coeffs in BATTERY:
            poly = to_sympy(coeffs)
            sqf = poly.quo(poly.gcd(poly.diff(X)))
            mine = count_real_roots(
                [Fraction(int(c)) for c in reversed(sqf.all_coeffs())])
            assert mine == len(sqf.real_roots())

    def test_isolation_intervals(self):
        coeffs = [2, 0, -4, 0, 1]  # four real roots
        intervals = isolate_real_roots([Fraction(c) for c in coeffs])
        assert len(intervals) == 4
        roots = sorted(float(r) for r in to_sympy(coeffs).real_roots())
        for (lo, hi), root in zip(intervals, roots):
            assert float(lo) < root < float(hi)
        for (_, hi), (lo, _) in zip(intervals, intervals[1:]):
            assert hi <= lo

    def test_interval_eval_encloses(self):
        rng = random.Random(8)
        for _ in range(50):
            poly = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
            lo = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
            hi = lo + Fraction(rng.randint(0, 5), rng.randint(1, 3))
            vlo, vhi = interval_eval(poly, lo, hi)
            for k in range(5):
                point = lo + (hi - lo) * Fraction(k, 4)
                assert vlo <= peval(poly, point) <= vhi


def sylvester_det(f, g):
    """Canonical Sylvester determinant via sympy matrices (oracle).

    Note sympy.resultant itself is symmetric in its arguments and loses the
    (-1)^(deg f * deg g) orientation; the explicit matrix does not.
    """
    m, n = len(f) - 1, len(g) - 1
    rows = []
    fr, gr = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (m - 1 - i))
    return int(sympy.Matrix(rows).det())


class TestResultant:
    def test_against_sylvester_determinant(self):
        rng = random.Random(13)
        for _ in range(25):
            f = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 3)]
            g = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 3)]
            assert resultant(f, g) == sylvester_det(f, g)

    def test_antisymmetry(self):
        f, g = [0, 3], [2, 3, 4, 3]
        assert resultant(f, g) == -resultant(g, f)  # odd degree product

    def test_disc_against_sympy(self):
        for coeffs in ([-2, 0, 1], [1, 0, -1, 1], [1, 3, 0, 0, 1], [7, 1]):
            assert poly_disc(coeffs) == int(sympy.discriminant(
                to_sympy(coeffs).as_expr(), X))


class TestGcd:
    def test_bezout_identity(self):
        rng = random.Random(21)
        for _ in range(40):
            a = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))]
            b = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))]
            if not any(a) or not any(b):
                continue
            g, s, t = pxgcd(a, b)
            from afcheck.polynomials import padd
            assert padd(pmul(s, a), pmul(t, b)) == g
            if g:
                assert g[-1] == 1  # monic
            assert pgcd(a, b) == g
