"""Exact univariate polynomial machinery over Q, Z and F_p.

Polynomials are dense coefficient lists, lowest degree first, with no
trailing zeros; [] is the zero polynomial.  Rational polynomials hold
Fraction coefficients, modular ones plain ints in [0, p).  Everything here
is exact; no floating point enters any decision.
"""

from fractions import Fraction
from math import isqrt

__all__ = [
    "strip", "degree", "padd", "psub", "pneg", "pmul", "pscale", "pdivmod",
    "peval", "pderiv", "pmonic", "pgcd", "pxgcd", "sign",
    "sturm_chain", "count_real_roots", "count_roots_between",
    "isolate_real_roots", "refine_interval", "interval_eval", "cauchy_bound",
    "fp_factor", "fp_gcd", "fp_mul", "fp_divmod", "fp_pow_mod",
    "zx_factor", "zx_is_irreducible", "resultant", "poly_disc",
]


# ---------------------------------------------------------------- basics

def strip(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def degree(p):
    return len(p) - 1


def padd(a, b):
    n = max(len(a), len(b))
    return strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def pneg(a):
    return [-c for c in a]


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return strip(out)


def pscale(a, c):
    if c == 0:
        return []
    return [x * c for x in a]


def pdivmod(a, b):
    """Euclidean division over a field (Fraction coefficients)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / Fraction(b[-1])
    while len(a) >= len(b) and strip(a):
        a = strip(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        coef = a[-1] * inv
        q[k] = coef
        for i, cb in enumerate(b):
            a[i + k] -= coef * Fraction(cb)
        a = a[:-1]
    return strip(q), strip(a)


def peval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def pderiv(p):
    return strip([i * c for i, c in enumerate(p)][1:])


def pmonic(p):
    if not p:
        return p
    inv = Fraction(1) / Fraction(p[-1])
    return [Fraction(c) * inv for c in p]


def pgcd(a, b):
    """Monic gcd over Q."""
    a, b = [Fraction(c) for c in a], [Fraction(c) for c in b]
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def pxgcd(a, b):
    """Extended gcd over Q: returns (g, s, t) monic with s*a + t*b = g."""
    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return [], s0, t0
    lead = Fraction(1) / r0[-1]
    return pscale(r0, lead), pscale(s0, lead), pscale(t0, lead)


def sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------- Sturm and isolation

def sturm_chain(p):
    """Sturm sequence of a squarefree polynomial."""
    chain = [list(p), pderiv(p)]
    while chain[-1]:
        rem = pdivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(pneg(rem))
    return [c for c in chain if c]


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at(chain, x):
    return _variations([sign(peval(p, x)) for p in chain])


def _variations_at_inf(chain, direction):
    sgs = []
    for p in chain:
        s = sign(p[-1])
        if direction < 0 and (len(p) - 1) % 2 == 1:
            s = -s
        sgs.append(s)
    return _variations(sgs)


def count_real_roots(p):
    chain = sturm_chain(p)
    return _variations_at_inf(chain, -1) - _variations_at_inf(chain, +1)


def count_roots_between(chain, lo, hi):
    """Number of real roots in (lo, hi]."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def cauchy_bound(p):
    """Rational B with every real root of p inside (-B, B)."""
    lead = abs(Fraction(p[-1]))
    m = max((abs(Fraction(c)) for c in p[:-1]), default=Fraction(0))
    return Fraction(1) + m / lead


def isolate_real_roots(p):
    """Isolating intervals for the real roots of a squarefree polynomial.

    Returns [(lo, hi)] sorted; a degree-one input yields the exact point
    (r, r).  For degree >= 2 the input must have no rational roots (true for
    irreducible defining polynomials), so interval endpoints never collide
    with a root and each open interval holds exactly one simple root with a
    sign change between its endpoints.
    """
    if degree(p) <= 0:
        return []
    if degree(p) == 1:
        r = -Fraction(p[0]) / Fraction(p[1])
        return [(r, r)]
    chain = sturm_chain(p)
    b = cauchy_bound(p)
    out = []
    work = [(-b, b, count_roots_between(chain, -b, b))]
    while work:
        lo, hi, cnt = work.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            if sign(peval(p, lo)) * sign(peval(p, hi)) >= 0:
                raise ArithmeticError("isolation endpoint touched a root")
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        cl = count_roots_between(chain, lo, mid)
        work.append((lo, mid, cl))
        work.append((mid, hi, cnt - cl))
    out.sort()
    return out


def refine_interval(p, lo, hi):
    """One bisection step on an isolating interval with a sign change."""
    if lo == hi:
        return lo, hi
    mid = (lo + hi) / 2
    if sign(peval(p, lo)) * sign(peval(p, mid)) < 0:
        return lo, mid
    return mid, hi


def interval_eval(p, lo, hi):
    """Bounds on p over [lo, hi] by interval Horner; exact rational endpoints."""
    a = b = Fraction(p[-1]) if p else Fraction(0)
    for c in reversed(p[:-1]):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


# ----------------------------------------------------------- F_p machinery

def fp_norm(p, q):
    return strip([c % q for c in p])


def fp_mul(a, b, q):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % q
    return strip(out)


def fp_divmod(a, b, q):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], q - 2, q)
    quo = [0] * max(0, len(a) - len(b) + 1)
    while len(strip(a)) >= len(b):
        a = strip(a)
        k = len(a) - len(b)
        coef = a[-1] * inv % q
        quo[k] = coef
        for i, cb in enumerate(b):
            a[i + k] = (a[i + k] - coef * cb) % q
        a = a[:-1]
    return strip(quo), strip(a)


def fp_monic(a, q):
    if not a:
        return a
    inv = pow(a[-1], q - 2, q)
    return [c * inv % q for c in a]


def fp_gcd(a, b, q):
    a, b = fp_norm(a, q), fp_norm(b, q)
    while b:
        a, b = b, fp_divmod(a, b, q)[1]
    return fp_monic(a, q)


def fp_pow_mod(base, e, mod, q):
    result, acc = [1], fp_divmod(base, mod, q)[1]
    while e:
        if e & 1:
            result = fp_divmod(fp_mul(result, acc, q), mod, q)[1]
        acc = fp_divmod(fp_mul(acc, acc, q), mod, q)[1]
        e >>= 1
    return result


def _fp_deriv(p, q):
    return strip([i * c % q for i, c in enumerate(p)][1:])


def _fp_sqf(f, q):
    """Squarefree decomposition over F_q, q prime: list of (factor, mult)."""
    out = []
    d = _fp_deriv(f, q)
    if not d:
        # f = g(x^q) = g(x)^q since Frobenius fixes F_q
        g = [f[i] for i in range(0, len(f), q)]
        return [(fac, m * q) for fac, m in _fp_sqf(strip(g), q)]
    c = fp_gcd(f, d, q)
    w = fp_divmod(f, c, q)[0]
    i = 1
    while degree(w) > 0:
        y = fp_gcd(w, c, q)
        z = fp_divmod(w, y, q)[0]
        if degree(z) > 0:
            out.append((fp_monic(z, q), i))
        w, c = y, fp_divmod(c, y, q)[0]
        i += 1
    if degree(c) > 0:
        g = strip([c[j] for j in range(0, len(c), q)])
        out.extend((fac, m * q) for fac, m in _fp_sqf(g, q))
    return out


def _fp_ddf(f, q):
    """Distinct-degree split of monic squarefree f: list of (product, d)."""
    out = []
    h = [0, 1]
    d = 0
    while degree(f) > 0 and 2 * (d + 1) <= degree(f):
        d += 1
        h = fp_pow_mod(h, q, f, q)
        g = fp_gcd(psub_mod(h, [0, 1], q), f, q)
        if degree(g) > 0:
            out.append((g, d))
            f = fp_divmod(f, g, q)[0]
            h = fp_divmod(h, f, q)[1]
    if degree(f) > 0:
        out.append((f, degree(f)))
    return out


def psub_mod(a, b, q):
    n = max(len(a), len(b))
    return strip([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % q
                  for i in range(n)])


def _candidate_polys(deg_lim, q):
    """Deterministic finite stream of nonconstant polys of degree < deg_lim
    over F_q (digits of k in base q)."""
    for k in range(q, q ** deg_lim):
        digits, m = [], k
        while m:
            digits.append(m % q)
            m //= q
        if len(digits) >= 2:
            yield strip(digits)


def _fp_edf(f, d, q):
    """Equal-degree split: f monic squarefree, all factors of degree d."""
    n = degree(f)
    if n == d:
        return [f]
    for h in _candidate_polys(n, q):
        g = fp_gcd(h, f, q)
        if 0 < degree(g) < n:
            return _fp_edf(g, d, q) + _fp_edf(fp_divmod(f, g, q)[0], d, q)
        if q == 2:
            t, acc = h, h
            for _ in range(d - 1):
                t = fp_pow_mod(t, 2, f, 2)
                acc = padd(acc, t)
                acc = fp_norm(acc, 2)
            w = fp_divmod(acc, f, 2)[1]
        else:
            w = psub_mod(fp_pow_mod(h, (q ** d - 1) // 2, f, q), [1], q)
        g = fp_gcd(w, f, q)
        if 0 < degree(g) < n:
            return _fp_edf(g, d, q) + _fp_edf(fp_divmod(f, g, q)[0], d, q)
    raise AssertionError("unreachable: split candidates exhausted")


def fp_factor(f, q):
    """Factor f over F_q into monic irreducibles: list of (poly, mult), sorted."""
    f = fp_norm(f, q)
    if degree(f) < 1:
        return []
    out = []
    for part, mult in _fp_sqf(fp_monic(f, q), q):
        for prod, d in _fp_ddf(part, q):
            for irr in _fp_edf(prod, d, q):
                out.append((irr, mult))
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return out


# -------------------------------------------------- factorization over Z

def _add_scaled(a, b, m):
    """a + m*b over Z."""
    n = max(len(a), len(b))
    return strip([(a[i] if i < len(a) else 0) + m * (b[i] if i < len(b) else 0)
                  for i in range(n)])


def _hensel_pair(f, g, h, p, pk):
    """Lift f = g*h (mod p) with gcd(g,h)=1 mod p to mod pk; all monic.

    Linear lift: at modulus m, e := (f - g*h)/m mod p and the correction
    dg*h + dh*g = e (mod p) is solved through the Bezout pair of (g, h).
    """
    _gcd1, _s, t = _fp_xgcd(fp_norm(g, p), fp_norm(h, p), p)
    g, h = list(g), list(h)
    m = p
    while m < pk:
        diff = psub(f, pmul(g, h))
        e = fp_norm([(c // m) % p for c in diff], p)
        if e:
            gp, hp = fp_norm(g, p), fp_norm(h, p)
            dg = fp_divmod(fp_mul(t, e, p), gp, p)[1]
            dh, rem = fp_divmod(psub_mod(e, fp_mul(dg, hp, p), p), gp, p)
            if rem:
                raise AssertionError("hensel correction not divisible")
            g = _add_scaled(g, dg, m)
            h = _add_scaled(h, dh, m)
        m *= p
        g = [c % m for c in g[:-1]] + [g[-1]]
        h = [c % m for c in h[:-1]] + [h[-1]]
    return strip([c % pk for c in g[:-1]] + [g[-1]]), \
        strip([c % pk for c in h[:-1]] + [h[-1]])


def _fp_xgcd(a, b, q):
    r0, r1 = fp_norm(a, q), fp_norm(b, q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, rem = fp_divmod(r0, r1, q)
        r0, r1 = r1, rem
        s0, s1 = s1, psub_mod(s0, fp_mul(quo, s1, q), q)
        t0, t1 = t1, psub_mod(t0, fp_mul(quo, t1, q), q)
    inv = pow(r0[-1], q - 2, q)
    return ([c * inv % q for c in r0], [c * inv % q for c in s0],
            [c * inv % q for c in t0])


def _hensel_list(f, facs, p, pk):
    """Lift a list of pairwise-coprime monic factors of f mod p to mod pk."""
    if len(facs) == 1:
        return [strip([c % pk for c in f])]
    g0 = facs[0]
    h0 = [1]
    for fac in facs[1:]:
        h0 = fp_mul(h0, fac, p)
    g, h = _hensel_pair(f, g0, h0, p, pk)
    return [g] + _hensel_list(h, facs[1:], p, pk)


def _center(c, pk):
    c %= pk
    return c - pk if c > pk // 2 else c


def _zx_divides(cand, f):
    q, r = pdivmod([Fraction(c) for c in f], [Fraction(c) for c in cand])
    if r:
        return None
    if any(c.denominator != 1 for c in q):
        return None
    return [int(c) for c in q]


_FACTOR_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                  59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109)


def _zx_factor_squarefree(f):
    """Zassenhaus: factor a monic squarefree integer polynomial."""
    n = degree(f)
    if n <= 1:
        return [f]
    p = None
    for cand in _FACTOR_PRIMES:
        fb = fp_norm(f, cand)
        if degree(fb) == n and degree(fp_gcd(fb, _fp_deriv(fb, cand), cand)) == 0:
            p = cand
            break
    if p is None:
        raise ArithmeticError("no good reduction prime found")
    modular = [g for g, _ in fp_factor(f, p)]
    if len(modular) == 1:
        return [f]
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 ** (n + 1) * norm2
    pk = p
    while pk <= 2 * bound:
        pk *= p
    lifted = _hensel_list(f, modular, p, pk)
    factors = []
    remaining = list(range(len(lifted)))
    current = list(f)
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in _subsets(remaining, size):
            prod = [1]
            for i in subset:
                prod = pmul(prod, lifted[i])
            cand = strip([_center(c % pk, pk) for c in prod])
            if not cand or cand[-1] != 1:
                continue
            quo = _zx_divides(cand, current)
            if quo is not None:
                factors.append(cand)
                current = quo
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if degree(current) > 0:
        factors.append(current)
    return factors


def _subsets(items, size):
    from itertools import combinations
    return combinations(items, size)


def _yun_squarefree(f):
    """Yun decomposition over Q of monic f: list of (monic part, multiplicity)."""
    f = pmonic(f)
    d = pderiv(f)
    g = pgcd(f, d)
    if degree(g) == 0:
        return [(f, 1)]
    out = []
    w = pdivmod(f, g)[0]
    y = pdivmod(d, g)[0]
    z = psub(y, pderiv(w))
    i = 1
    while degree(w) > 0:
        g_i = pgcd(w, z)
        if degree(g_i) > 0:
            out.append((g_i, i))
        w = pdivmod(w, g_i)[0]
        y = pdivmod(z, g_i)[0]
        z = psub(y, pderiv(w))
        i += 1
    return out


def zx_factor(f):
    """Factor a monic integer polynomial into monic irreducibles.

    Returns a list of (factor, multiplicity), sorted by (degree, coefficients).
    """
    f = strip(list(f))
    if not f or f[-1] != 1:
        raise ValueError("zx_factor expects a monic integer polynomial")
    if degree(f) == 0:
        return []
    out = []
    for part, mult in _yun_squarefree(f):
        ipart = [int(c) for c in part]
        if any(Fraction(c).denominator != 1 for c in part):
            raise AssertionError("squarefree part of an integer poly not integral")
        for irr in _zx_factor_squarefree(ipart):
            out.append((irr, mult))
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return out


def zx_is_irreducible(f):
    facs = zx_factor(f)
    return len(facs) == 1 and facs[0][1] == 1


# ------------------------------------------------------------- resultants

def resultant(f, g):
    """Resultant of integer polynomials via Bareiss on the Sylvester matrix."""
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    rows = []
    fr = list(reversed(f))
    gr = list(reversed(g))
    for i in range(n):
        rows.append([0] * i + fr + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gr + [0] * (size - n - 1 - i))
    # Bareiss fraction-free elimination
    sign_acc = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign_acc = -sign_acc
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign_acc * rows[size - 1][size - 1]


def poly_disc(f):
    """Discriminant of a monic integer polynomial."""
    n = degree(f)
    if n <= 0:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(f, [int(c) for c in pderiv(f)])
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * res
