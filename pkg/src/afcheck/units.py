"""Unit groups, class data and solution normalization.

Fundamental units of real quadratic fields come from the continued fraction
of sqrt(d) (with the half-integer refinement for d = 1 mod 4); totally real
cubic fields get a bounded-height coordinate search whose output pairs are
certified multiplicatively independent through exact rational log intervals.
Class numbers of quadratic fields are counted through reduced binary forms;
principality questions are settled by a generator search that is complete
within a proven, unit-scaled coordinate bound.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, isqrt

from .errors import (MissingUserClassNumber, NotTotallyReal, SearchExhausted,
                     Unsupported, ZeroElement)
from .integerfactor import factorint, squarefree_part
from .numberfield import (FieldElement, NumberField, embedding_interval,
                          embedding_sign)
from .prime_ideals import PrimeIdeal, factor_rational_prime, valuation

# give-up cap on coordinate magnitude in unit searches; searches stop at the
# first certified pair, so this only bounds the hopeless case
DEFAULT_UNIT_HEIGHT_BOUND = 10 ** 6


# --------------------------------------------------------------- containers

@dataclass
class UnitGroup:
    rank: int
    fundamental_units: list
    torsion_order: int
    torsion_gen: FieldElement
    completeness: tuple

    def generators(self):
        return [self.torsion_gen] + list(self.fundamental_units)

    def to_dict(self):
        return {"rank": self.rank,
                "fundamental_units": [list(map(str, u.coords)) for u in self.fundamental_units],
                "torsion_order": self.torsion_order,
                "completeness": list(self.completeness)}


@dataclass
class ClassData:
    h: int
    h_plus: int
    reps_H: list
    completeness: tuple
    notes: list = dc_field(default_factory=list)

    def to_dict(self):
        return {"h": self.h, "h_plus": self.h_plus,
                "reps_H": [p.to_dict() for p in self.reps_H],
                "completeness": list(self.completeness), "notes": self.notes}


# --------------------------------------------------- quadratic field data

def _quad_data(field: NumberField):
    """(d, m, b) with sqrt(d) = (2*theta + b)/m, d the squarefree core."""
    c0, b, _ = field.coeffs
    d0 = b * b - 4 * c0
    d = squarefree_part(d0)
    m = isqrt(d0 // d)
    return d, m, b


def sqrt_core_element(field: NumberField) -> FieldElement:
    """The element sqrt(d) for the squarefree core d of the discriminant."""
    d, m, b = _quad_data(field)
    return field.element([Fraction(b, m), Fraction(2, m)])


def _quad_element(field, x, y, den):
    """(x + y*sqrt(d))/den as a FieldElement."""
    s = sqrt_core_element(field)
    return (field.from_rational(x) + s * y) / den


def _icbrt(n: int) -> int:
    """Exact floor cube root, integer-only (Pell solutions overflow floats)."""
    if n < 0:
        return -_icbrt(-n)
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // 3 + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * mid * mid <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _pell_fundamental(d: int):
    """Fundamental solution of x^2 - d y^2 = +-1 via the CF of sqrt(d)."""
    a0 = isqrt(d)
    p_prev, q_prev = 1, 0
    p, q = a0, 1
    big_p, big_q = a0, d - a0 * a0
    while p * p - d * q * q not in (1, -1):
        a_k = (a0 + big_p) // big_q
        p, p_prev = a_k * p + p_prev, p
        q, q_prev = a_k * q + q_prev, q
        big_p_next = a_k * big_q - big_p
        big_q = (d - big_p_next * big_p_next) // big_q
        big_p = big_p_next
    return p, q


def _quad_fundamental_unit(d: int):
    """(x, y, den, norm) with (x + y sqrt d)/den the fundamental unit of O_K."""
    x1, y1 = _pell_fundamental(d)
    if d % 4 == 1:
        # the maximal order may contain a smaller half-integer unit
        bound = 2 * _icbrt(x1 + y1 * (isqrt(d) + 1)) + 2
        for y in range(1, bound + 1, 2):
            for sgn in (-4, 4):
                t = d * y * y + sgn
                if t <= 0:
                    continue
                x = isqrt(t)
                if x * x == t and x % 2 == 1:
                    return x, y, 2, sgn // 4
    return x1, y1, 1, x1 * x1 - d * y1 * y1


def _quad_torsion(field, d):
    if d == -1:
        return 4, sqrt_core_element(field)
    if d == -3:
        return 6, (1 + sqrt_core_element(field)) / 2
    return 2, field.from_rational(-1)


# ------------------------------------------------ exact logarithm intervals

_LN2_CACHE = {}


def _atanh_bounds(t: Fraction, terms: int):
    s = Fraction(0)
    power = t
    t2 = t * t
    for i in range(terms):
        s += power / (2 * i + 1)
        power *= t2
    tail = power / ((2 * terms + 1) * (1 - t2))
    return s, s + tail


def _ln2_bounds(terms: int):
    if terms not in _LN2_CACHE:
        lo, hi = _atanh_bounds(Fraction(1, 3), terms)
        _LN2_CACHE[terms] = (2 * lo, 2 * hi)
    return _LN2_CACHE[terms]


def _ln_bounds(x: Fraction, terms: int):
    """Rational (lo, hi) with lo <= ln(x) <= hi, for rational x > 0."""
    if x <= 0:
        raise ValueError("ln of nonpositive value")
    k = 0
    while x >= 2:
        x /= 2
        k += 1
    while x < 1:
        x *= 2
        k -= 1
    alo, ahi = _atanh_bounds((x - 1) / (x + 1), terms)
    l2lo, l2hi = _ln2_bounds(terms)
    if k >= 0:
        return k * l2lo + 2 * alo, k * l2hi + 2 * ahi
    return k * l2hi + 2 * alo, k * l2lo + 2 * ahi


def _abs_embedding_bounds(x: FieldElement, idx: int, width: Fraction):
    lo, hi = embedding_interval(x, idx, width)
    if lo > 0:
        return lo, hi
    if hi < 0:
        return -hi, -lo
    # interval straddles zero: split by exact sign, then shrink further
    sgn = embedding_sign(x, idx)
    w = width
    while lo <= 0 <= hi:
        w /= 4
        lo, hi = embedding_interval(x, idx, w)
    return (lo, hi) if sgn > 0 else (-hi, -lo)


def _iv_mul(a, b):
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(prods), max(prods)


def _iv_sub(a, b):
    return a[0] - b[1], a[1] - b[0]


def _certified_independent(u: FieldElement, v: FieldElement, max_rounds=12):
    """True when the log-embedding vectors of u, v are provably non-parallel."""
    width = Fraction(1, 16)
    terms = 8
    for _ in range(max_rounds):
        rows = []
        for elem in (u, v):
            row = []
            for idx in (0, 1):
                lo, hi = _abs_embedding_bounds(elem, idx, width)
                row.append((_ln_bounds(lo, terms)[0], _ln_bounds(hi, terms)[1]))
            rows.append(row)
        det = _iv_sub(_iv_mul(rows[0][0], rows[1][1]),
                      _iv_mul(rows[0][1], rows[1][0]))
        if det[0] > 0 or det[1] < 0:
            return True
        width /= 16
        terms += 8
    return False


def _small_relation(u: FieldElement, v: FieldElement, box=6):
    """Exact scan for u^m * v^k in {1, -1} with 0 < max(|m|,|k|) <= box."""
    for m in range(-box, box + 1):
        for k in range(-box, box + 1):
            if m == 0 and k == 0:
                continue
            w = (u ** m) * (v ** k)
            if w == 1 or w == -1:
                return True
    return False


# ----------------------------------------------------------- fundamental units

def _shell(dim, h):
    """Coordinate tuples with max coordinate magnitude exactly h, sorted."""
    rng = range(-h, h + 1)
    out = []
    if dim == 2:
        for a in rng:
            for b in rng:
                if max(abs(a), abs(b)) == h:
                    out.append((a, b))
    else:
        for a in rng:
            for b in rng:
                for c in rng:
                    if max(abs(a), abs(b), abs(c)) == h:
                        out.append((a, b, c))
    out.sort()
    return out


def _cubic_fundamental_pair(field: NumberField, height_bound: int):
    found = []
    h = 1
    while h <= height_bound:
        for coords in _shell(3, h):
            x = field.element(coords)
            if x.is_rational():
                continue
            if abs(x.norm()) != 1:
                continue
            found.append(x)
            for prev in found[:-1]:
                if _small_relation(prev, x):
                    continue
                if _certified_independent(prev, x):
                    return [prev, x], h
        h += 1
    raise SearchExhausted(
        f"no independent unit pair within coordinate height {height_bound}")


def unit_generators(field: NumberField,
                    height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND) -> UnitGroup:
    """Unit group generators for degree <= 3 (plus imaginary quadratic torsion).

    Internal superset of fundamental_units: imaginary quadratic fields return
    their torsion; mixed-signature cubics are unsupported.
    """
    n = field.degree
    if n == 1:
        return UnitGroup(0, [], 2, field.from_rational(-1), ("proven",))
    if n == 2:
        d, _, _ = _quad_data(field)
        if d < 0:
            order, gen = _quad_torsion(field, d)
            return UnitGroup(0, [], order, gen, ("proven",))
        x, y, den, _norm = _quad_fundamental_unit(d)
        unit = _quad_element(field, x, y, den)
        return UnitGroup(1, [unit], 2, field.from_rational(-1), ("proven",))
    if n == 3 and field.is_totally_real:
        units, used = _cubic_fundamental_pair(field, height_bound)
        return UnitGroup(2, units, 2, field.from_rational(-1),
                         ("bounded-search", used))
    raise Unsupported(f"unit group for degree {n}, signature {field.signature}")


def fundamental_units(field: NumberField,
                      height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND) -> UnitGroup:
    """Unit group of a totally real field of degree <= 3."""
    if not field.is_totally_real:
        raise NotTotallyReal("fundamental_units requires a totally real field")
    if field.degree > 3:
        raise Unsupported(f"degree {field.degree} > 3")
    group = unit_generators(field, height_bound)
    for u in group.fundamental_units:
        if abs(u.norm()) != 1:
            raise ArithmeticError("unit candidate with |norm| != 1")
    return group


# ------------------------------------------------------- form class numbers

def _fundamental_discriminant(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


def _definite_class_number(D: int) -> int:
    """Count of reduced primitive positive definite forms of discriminant D < 0.

    Reduced: |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
    """
    count = 0
    amax = isqrt(-D // 3)
    for a in range(1, amax + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a:
                continue
            if b < 0 and (abs(b) == a or a == c):
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            count += 1
    return count


def _reduced_indefinite_forms(D: int):
    s = isqrt(D)
    forms = []
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        n4 = b * b - D
        if n4 >= 0:
            continue
        prod = -n4 // 4
        for a_abs in range(1, (s + b) // 2 + 2):
            if prod % a_abs:
                continue
            # reduced: sqrt(D) - b < 2|a| < sqrt(D) + b, exact comparisons
            if D >= (2 * a_abs + b) ** 2:
                continue
            if 2 * a_abs > b and (2 * a_abs - b) ** 2 >= D:
                continue
            c_abs = prod // a_abs
            for a in (a_abs, -a_abs):
                c = -prod // a
                if gcd(gcd(abs(a), b), abs(c)) == 1:
                    forms.append((a, b, c))
    return forms


def _rho(form, D, s):
    a, b, c = form
    ac = abs(c)
    # r = -b mod 2|c|, shifted into (s - 2|c|, s]
    r = (-b) % (2 * ac)
    while r > s:
        r -= 2 * ac
    while r <= s - 2 * ac:
        r += 2 * ac
    return (c, r, (r * r - D) // (4 * c))


def _indefinite_cycle_count(D: int) -> int:
    forms = set(_reduced_indefinite_forms(D))
    s = isqrt(D)
    cycles = 0
    remaining = set(forms)
    while remaining:
        start = min(remaining)
        cycles += 1
        current = start
        while True:
            remaining.discard(current)
            current = _rho(current, D, s)
            if current == start:
                break
            if current not in forms:
                raise ArithmeticError("rho left the reduced set")
    return cycles


# ------------------------------------------------------ principality search

def _eps_ceiling(field) -> int:
    d, _, _ = _quad_data(field)
    if d < 0:
        return 1
    x, y, den, _ = _quad_fundamental_unit(d)
    return (x + y * (isqrt(d) + 1)) // den + 1


def principal_generator(field: NumberField, profile: dict):
    """Generator of the integral ideal with the given prime valuation profile,
    or None (certified, within a proven unit-scaled bound) for quadratic fields.
    """
    d, _, _ = _quad_data(field)
    target = 1
    for prime, k in profile.items():
        target *= prime.norm() ** k
    eps = _eps_ceiling(field)
    ybound = 2 * isqrt(target * eps // abs(d)) + 2
    candidates = []
    for y in range(0, ybound + 1):
        for sgn in (-4, 4):
            t = d * y * y + sgn * target
            if t < 0:
                continue
            x = isqrt(t)
            if x * x != t:
                continue
            if (x * x - d * y * y) % 4:
                continue
            for xs in ((x,) if x == 0 else (x, -x)):
                for ys in ((y,) if y == 0 else (y, -y)):
                    alpha = _quad_element(field, xs, ys, 2)
                    if alpha.is_zero():
                        continue
                    if not alpha.is_algebraic_integer():
                        continue
                    if all(valuation(alpha, p) >= k for p, k in profile.items()):
                        candidates.append(alpha)
        if candidates:
            break
    if not candidates:
        return None
    candidates = [_canonical_sign(a) for a in candidates]
    candidates.sort(key=lambda a: (a.height(), a.coords))
    return candidates[0]


def _canonical_sign(x: FieldElement):
    """Fix the sign so the first nonzero coordinate is positive."""
    for c in x.coords:
        if c != 0:
            return -x if c < 0 else x
    return x


def _ideal_class_equal(field, p1: PrimeIdeal, p2: PrimeIdeal) -> bool:
    """[p1] == [p2] in the class group, via principality of p1 * conj(p2)."""
    if p1 == p2:
        return True
    conj = _conjugate_prime(field, p2)
    profile = {p1: 1}
    profile[conj] = profile.get(conj, 0) + 1
    return principal_generator(field, profile) is not None


def _conjugate_prime(field, p: PrimeIdeal) -> PrimeIdeal:
    others = [q for q in factor_rational_prime(field, p.q) if q != p]
    return others[0] if others else p


# ----------------------------------------------------------------- class data

def class_data(field: NumberField, *, enum_bound: int = 100,
               user_class_number: int | None = None,
               height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND) -> ClassData:
    """Class number, narrow class number and odd-prime class representatives."""
    n = field.degree
    if n == 1:
        rep = factor_rational_prime(field, 3)[0]
        return ClassData(1, 1, [rep], ("proven",))
    if n == 2:
        return _quadratic_class_data(field, enum_bound)
    if n == 3:
        if user_class_number is None:
            raise MissingUserClassNumber(
                "cubic class numbers are accepted from configuration only")
        h = user_class_number
        h_plus = _h_plus_from_unit_signs(field, h, height_bound)
        reps, notes = ([], ["reps_H omitted: h > 1 unsupported for cubics"])
        if h == 1:
            reps, notes = _collect_reps(field, 1, enum_bound, trivial_only=True)
        return ClassData(h, h_plus, reps, ("user-supplied",), notes)
    raise Unsupported(f"class data for degree {n}")


def _quadratic_class_data(field, enum_bound):
    d, _, _ = _quad_data(field)
    D = _fundamental_discriminant(d)
    if d < 0:
        h = _definite_class_number(D)
        h_plus = h
    else:
        h_plus = _indefinite_cycle_count(D)
        _, _, _, unit_norm = _quad_fundamental_unit(d)
        h = h_plus if unit_norm == -1 else h_plus // 2
    reps, notes = _collect_reps(field, h, enum_bound, trivial_only=(h == 1))
    return ClassData(h, h_plus, reps, ("proven",), notes)


def _odd_prime_ideals_by_norm(field, enum_bound):
    from .integerfactor import SMALL_PRIMES
    from .errors import IndexDivisor
    out = []
    skipped = []
    for q in SMALL_PRIMES:
        if q == 2 or q > enum_bound:
            continue
        try:
            out.extend(factor_rational_prime(field, q))
        except IndexDivisor:
            skipped.append(q)
    out.sort(key=lambda p: (p.norm(),
                            p.residue_root() if p.residue_root() is not None else -1,
                            p.q, p.sort_key()))
    return out, skipped


def _collect_reps(field, h, enum_bound, trivial_only=False):
    primes, skipped = _odd_prime_ideals_by_norm(field, enum_bound)
    notes = [f"index-divisor primes skipped in enumeration: {skipped}"] if skipped else []
    if trivial_only:
        if not primes:
            raise SearchExhausted("no odd prime ideal within enumeration bound")
        return [primes[0]], notes
    reps = []
    for p in primes:
        if len(reps) == h:
            break
        if any(_ideal_class_equal(field, p, r) for r in reps):
            continue
        reps.append(p)
    if len(reps) < h:
        notes.append(f"only {len(reps)} of {h} classes represented "
                     f"within q <= {enum_bound}")
    return reps, notes


def _h_plus_from_unit_signs(field, h, height_bound):
    group = unit_generators(field, height_bound)
    r1 = field.signature[0]
    vectors = []
    for u in group.generators():
        vec = tuple((1 - embedding_sign(u, i)) // 2 for i in range(r1))
        vectors.append(vec)
    rank = _f2_rank(vectors)
    return h * (2 ** r1) // (2 ** rank)


def _f2_rank(vectors):
    rows = [list(v) for v in vectors if any(v)]
    rank = 0
    cols = len(rows[0]) if rows else 0
    used = [False] * len(rows)
    for c in range(cols):
        pivot = next((i for i in range(len(rows))
                      if not used[i] and rows[i][c]), None)
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        for i in range(len(rows)):
            if i != pivot and rows[i][c]:
                rows[i] = [(a + b) % 2 for a, b in zip(rows[i], rows[pivot])]
    return rank


# ------------------------------------------------------- normalization (H)

@dataclass
class NormalizedSolution:
    a: FieldElement
    b: FieldElement
    c: FieldElement
    rep: PrimeIdeal | None
    xi: FieldElement


def normalize_solution(field: NumberField, a, b, c, *,
                       class_info: ClassData | None = None,
                       gen_bound: int = 64,
                       allow_trivial_ideal: bool = False) -> NormalizedSolution:
    """Scale (a, b, c) by xi so the gcd ideal becomes the class representative.

    Only class number one is supported; the representative is the smallest
    odd prime ideal unless allow_trivial_ideal selects the unit ideal.
    """
    triple = [x if isinstance(x, FieldElement) else field.from_rational(x)
              for x in (a, b, c)]
    nonzero = [x for x in triple if not x.is_zero()]
    if not nonzero:
        raise ZeroElement("normalization of the zero triple")
    info = class_info if class_info is not None else class_data(field)
    if info.h != 1:
        raise Unsupported(f"normalization requires class number 1, got {info.h}")
    support = _gcd_ideal_profile(field, nonzero)
    rep = None if allow_trivial_ideal else info.reps_H[0]
    target = {p: -v for p, v in support.items()}
    if rep is not None:
        target[rep] = target.get(rep, 0) + 1
    target = {p: v for p, v in target.items() if v != 0}
    denom = 1
    for q in {p.q for p in target}:
        shift = 0
        for p, v in target.items():
            if p.q == q and v < 0:
                shift = max(shift, (-v + p.e - 1) // p.e)
        denom *= q ** shift
    profile = {}
    for q in {p.q for p in target} | {q for q in _int_primes(denom)}:
        for p in factor_rational_prime(field, q):
            v = target.get(p, 0) + p.e * _val_int(denom, q)
            if v:
                profile[p] = v
    eta = _find_generator(field, profile, gen_bound)
    xi = eta / denom
    out = [xi * t for t in triple]
    return NormalizedSolution(out[0], out[1], out[2], rep, xi)


def _int_primes(n):
    return set(factorint(n))


def _val_int(n, q):
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def _gcd_ideal_profile(field, elements):
    """Valuation vector of the ideal generated by the elements."""
    qs = set()
    for x in elements:
        den = x.denominator_lcm()
        qs |= _int_primes(den)
        num = (x * den).norm()
        qs |= _int_primes(num.numerator)
    profile = {}
    for q in sorted(qs):
        for p in factor_rational_prime(field, q):
            v = min(valuation(x, p) for x in elements)
            if v:
                profile[p] = v
    return profile


def _find_generator(field, profile, gen_bound):
    from .errors import GeneratorNotFound
    target = 1
    for p, v in profile.items():
        target *= p.norm() ** v
    if field.degree == 1:
        return field.from_rational(target)
    for h in range(0, gen_bound + 1):
        shell = [(0,) * field.degree] if h == 0 else _shell(field.degree, h)
        for coords in shell:
            x = field.element(coords)
            if x.is_zero():
                continue
            if abs(x.norm()) != target:
                continue
            if all(valuation(x, p) >= v for p, v in profile.items()):
                return x
    raise GeneratorNotFound(gen_bound)
