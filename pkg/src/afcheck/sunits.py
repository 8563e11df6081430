"""S-unit equation solutions, 2-Selmer square classes, quadratic extensions.

solve_sunit enumerates lambda over a bounded exponent box on the S-unit
generators and tests mu = 1 - lambda for S-unit membership by factoring its
norm support; rejections on incomplete factorizations are logged, never
silently accepted, so the search has false negatives only.  Completeness is
always reported as a bounded-search caveat, never claimed.
"""

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import (BasisUnavailable, FactorizationIncomplete, IndexDivisor,
                     IsSquare, MissingUserClassNumber, SearchExhausted,
                     Unsupported, WorkExceeded, ZeroElement)
from .integerfactor import factorint
from .linalg import charpoly
from .numberfield import FieldElement, NumberField, make_field
from .polynomials import zx_is_irreducible
from .prime_ideals import factor_rational_prime, valuation
from .units import (DEFAULT_UNIT_HEIGHT_BOUND, ClassData, class_data,
                    principal_generator, unit_generators, _find_generator)

log = logging.getLogger("afcheck")


# ------------------------------------------------------------------ basis

@dataclass
class SUnitBasis:
    field: NumberField
    S: list
    torsion_gen: FieldElement
    torsion_order: int
    free_generators: list   # fundamental units then one pi_P per P in S
    pi_orders: dict          # P -> order of [P] in the class group
    exponent_bound: int


def build_sunit_basis(field: NumberField, S, bound: int, *,
                      user_class_number=None,
                      height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND,
                      gen_bound: int = 64) -> SUnitBasis:
    """Torsion, fundamental units and P-power generators for the S-units."""
    try:
        units = unit_generators(field, height_bound)
    except (Unsupported, SearchExhausted) as exc:
        raise BasisUnavailable(f"unit group unavailable: {exc}") from exc
    pis = []
    orders = {}
    if S:
        try:
            info = class_data(field, user_class_number=user_class_number,
                              height_bound=height_bound)
        except (MissingUserClassNumber, Unsupported) as exc:
            raise BasisUnavailable(f"class data unavailable: {exc}") from exc
        for P in S:
            o, pi = _prime_power_generator(field, P, info, gen_bound)
            orders[P] = o
            pis.append(pi)
        for P, pi in zip(S, pis):
            if valuation(pi, P) != orders[P]:
                raise ArithmeticError("pi generator has wrong valuation")
            for Q in S:
                if Q != P and valuation(pi, Q) != 0:
                    raise ArithmeticError("pi generator meets another prime of S")
    return SUnitBasis(field, list(S), units.torsion_gen, units.torsion_order,
                      list(units.fundamental_units) + pis, orders, bound)


def _prime_power_generator(field, P, info: ClassData, gen_bound):
    if field.degree == 1:
        return 1, field.from_rational(P.q)
    divisors = [k for k in range(1, info.h + 1) if info.h % k == 0]
    for k in divisors:
        if field.degree == 2:
            gen = principal_generator(field, {P: k})
        else:
            from .errors import GeneratorNotFound
            try:
                gen = _find_generator(field, {P: k}, gen_bound)
            except GeneratorNotFound:
                gen = None
        if gen is not None:
            return k, gen
    raise BasisUnavailable(f"no power of {P} found principal up to h={info.h}")


# -------------------------------------------------------------- solutions

@dataclass
class SUnitSolution:
    lam: FieldElement
    mu: FieldElement
    val_profile: dict        # P -> (v_P(lambda), v_P(mu))
    from_box: bool
    partner_key: tuple = None

    def key(self):
        return _coords_key(self.lam)

    def t_max(self):
        return {P: max(abs(v[0]), abs(v[1])) for P, v in self.val_profile.items()}

    def to_dict(self):
        return {"lambda": [str(c) for c in self.lam.coords],
                "mu": [str(c) for c in self.mu.coords],
                "val_profile": {P.key(): list(v) for P, v in self.val_profile.items()},
                "t_max": {P.key(): t for P, t in self.t_max().items()},
                "from_box": self.from_box}


@dataclass
class SUnitSearch:
    field: NumberField
    S: list
    bound: int
    solutions: list
    warnings: list = dc_field(default_factory=list)

    @property
    def completeness(self):
        return ("bounded-search", self.bound)

    def to_dict(self):
        return {"bound": self.bound,
                "solutions": [s.to_dict() for s in self.solutions],
                "completeness": list(self.completeness),
                "warnings": self.warnings}


def _coords_key(x: FieldElement):
    return tuple((c.numerator, c.denominator) for c in x.coords)


def solve_sunit(field: NumberField, S, bound: int, *,
                max_candidates: int = 500_000,
                user_class_number=None,
                height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND) -> SUnitSearch:
    """All solutions of lambda + mu = 1 in S-units found inside the exponent box.

    The box covers lambda = zeta^j * prod g_i^{e_i} with |e_i| <= bound; the
    solution set is closed under the (lambda, mu) swap before returning, and
    every emitted pair is re-verified exactly.
    """
    if bound <= 0:
        # degenerate empty box: a vacuous search, reported as such
        return SUnitSearch(field, list(S), bound, [])
    basis = build_sunit_basis(field, S, bound,
                              user_class_number=user_class_number,
                              height_bound=height_bound)
    gens = basis.free_generators
    n_boxes = basis.torsion_order * (2 * bound + 1) ** len(gens)
    if n_boxes > max_candidates:
        raise WorkExceeded(f"{n_boxes} candidates exceed limit {max_candidates}")
    warnings = []
    gen_valuations = [{P: valuation(g, P) for P in S} for g in gens]
    powers = []
    for g in gens:
        table = {0: field.one()}
        for e in range(1, bound + 1):
            table[e] = table[e - 1] * g
        inv = g.inverse()
        for e in range(1, bound + 1):
            table[-e] = table[-(e - 1)] * inv
        powers.append(table)
    torsion_powers = [field.one()]
    for _ in range(1, basis.torsion_order):
        torsion_powers.append(torsion_powers[-1] * basis.torsion_gen)

    found = {}
    for tors in range(basis.torsion_order):
        base = torsion_powers[tors]
        for exps in product(range(-bound, bound + 1), repeat=len(gens)):
            lam = base
            for g_idx, e in enumerate(exps):
                if e:
                    lam = lam * powers[g_idx][e]
            if lam == 1:
                continue
            key = _coords_key(lam)
            if key in found:
                continue
            mu = 1 - lam
            mu_profile = _s_unit_valuations(field, mu, S, warnings)
            if mu_profile is None:
                continue
            lam_profile = {P: sum(e * gen_valuations[i][P]
                                  for i, e in enumerate(exps))
                           for P in S}
            profile = {P: (lam_profile[P], mu_profile[P]) for P in S}
            found[key] = SUnitSolution(lam, mu, profile, True)

    for key in sorted(found):
        sol = found[key]
        mu_key = _coords_key(sol.mu)
        if mu_key not in found:
            swapped = {P: (v[1], v[0]) for P, v in sol.val_profile.items()}
            found[mu_key] = SUnitSolution(sol.mu, sol.lam, swapped, False)

    solutions = [found[k] for k in sorted(found)]
    for sol in solutions:
        sol.partner_key = _coords_key(sol.mu)
        _verify_solution(sol)
    return SUnitSearch(field, list(S), bound, solutions, warnings)


def _verify_solution(sol: SUnitSolution):
    if not (sol.lam + sol.mu == 1) or sol.lam.is_zero() or sol.mu.is_zero():
        raise ArithmeticError("emitted pair fails lambda + mu = 1")
    for P, (vl, vm) in sol.val_profile.items():
        t = max(abs(vl), abs(vm))
        if t > 0:
            vlm = vl + vm
            if vlm not in (-2 * t, t):
                raise ArithmeticError(
                    f"case analysis violated at {P}: v(lambda*mu)={vlm}, t={t}")


def _s_unit_valuations(field, x: FieldElement, S, warnings):
    """{P: v_P(x)} over S when x is an S-unit, else None.  Sound rejections:
    factorization failures reject the candidate with a logged warning."""
    den = x.denominator_lcm()
    num = x * den
    nrm = num.norm()
    try:
        qs = set(factorint(den)) | set(factorint(int(nrm)))
    except FactorizationIncomplete as exc:
        msg = f"candidate rejected: incomplete factorization ({exc.leftover})"
        log.warning(msg)
        warnings.append(msg)
        return None
    s_primes = {P for P in S}
    profile = {P: 0 for P in S}
    for q in sorted(qs):
        try:
            primes = factor_rational_prime(field, q)
        except IndexDivisor:
            msg = f"candidate rejected: index divisor at {q} blocks valuation"
            log.warning(msg)
            warnings.append(msg)
            return None
        for P in primes:
            v = valuation(x, P)
            if P in s_primes:
                profile[P] = v
            elif v != 0:
                return None
    return profile


# ----------------------------------------------------------- square classes

def _sqrt_fraction(r: Fraction):
    if r < 0:
        return None
    a, b = r.numerator, r.denominator
    sa, sb = isqrt(a), isqrt(b)
    if sa * sa == a and sb * sb == b:
        return Fraction(sa, sb)
    return None


def is_square(x: FieldElement):
    """Exact square test in K; returns (bool, witness-or-None).

    Quadratic fields get an explicit square root; cubic fields decide through
    the factorization of minpoly(x)(t^2) (an odd-degree factor certifies a
    root in the field), rationals reduce to perfect-square checks.
    """
    field = x.field
    if x.is_zero():
        return True, field.zero()
    if x.is_rational() and field.degree != 2:
        r = _sqrt_fraction(x.as_fraction())
        if r is not None:
            return True, field.from_rational(r)
        if field.degree == 1:
            return False, None
        # a cubic field has no quadratic subfield, so rational non-squares stay non-squares
        return False, None
    if field.degree == 1:
        r = _sqrt_fraction(x.as_fraction())
        return (True, field.from_rational(r)) if r is not None else (False, None)
    if field.degree == 2:
        return _is_square_quadratic(x)
    return _is_square_cubic(x)


def _is_square_quadratic(x: FieldElement):
    from .units import sqrt_core_element, _quad_data
    field = x.field
    d, m, b = _quad_data(field)
    c0, c1 = x.coords
    s = c0 - c1 * Fraction(b, 2)
    t = c1 * Fraction(m, 2)
    root = sqrt_core_element(field)
    if t == 0:
        r = _sqrt_fraction(s)
        if r is not None:
            return True, field.from_rational(r)
        r = _sqrt_fraction(s / d)
        if r is not None:
            return True, root * r
        return False, None
    w = _sqrt_fraction(s * s - d * t * t)
    if w is None:
        return False, None
    for g2 in ((s + w) / 2, (s - w) / 2):
        g = _sqrt_fraction(g2)
        if g is None or g == 0:
            continue
        h = t / (2 * g)
        y = field.from_rational(g) + root * h
        if y * y == x:
            return True, y
    return False, None


def _is_square_cubic(x: FieldElement):
    den = x.denominator_lcm()
    z = x * (den * den)
    mp = z.min_poly()
    if any(c.denominator != 1 for c in mp):
        raise ArithmeticError("integralized element with non-integral minpoly")
    doubled = []
    for i, c in enumerate(mp):
        doubled.extend([int(c)] + ([0] if i < len(mp) - 1 else []))
    from .polynomials import zx_factor
    for fac, _ in zx_factor(doubled):
        if (len(fac) - 1) % 2 == 1:
            return True, None
    return False, None


@dataclass
class SelmerGroup:
    field: NumberField
    S: list
    m: int
    basis: list
    representatives: list

    @property
    def basis_size(self):
        return len(self.basis)

    def to_dict(self):
        return {"m": self.m,
                "basis": [[str(c) for c in g.coords] for g in self.basis],
                "basis_size": self.basis_size,
                "representatives": [[str(c) for c in r.coords]
                                    for r in self.representatives]}


def selmer_group(field: NumberField, S, m: int = 2, *,
                 user_class_number=None,
                 height_bound: int = DEFAULT_UNIT_HEIGHT_BOUND) -> SelmerGroup:
    """K(S, 2): square classes with even valuation outside S.

    Generated by the torsion generator, the fundamental units and the pi_P;
    the generating set is reduced to an independent basis by exact square
    testing of all subset products.
    """
    if m != 2:
        raise Unsupported(f"Selmer modulus {m} != 2")
    basis_data = build_sunit_basis(field, S, 1,
                                   user_class_number=user_class_number,
                                   height_bound=height_bound)
    gens = []
    if basis_data.torsion_order > 1:
        gens.append(basis_data.torsion_gen)
    units = basis_data.free_generators[:len(basis_data.free_generators) - len(S)]
    pis = basis_data.free_generators[len(units):]
    gens.extend(sorted(units, key=lambda u: (u.height(), u.coords)))
    gens.extend(sorted(pis, key=lambda p: (abs(p.norm()), p.coords)))
    independent = []
    for g in gens:
        reducible = False
        for mask in range(1 << len(independent)):
            prod_elem = g
            for i in range(len(independent)):
                if mask >> i & 1:
                    prod_elem = prod_elem * independent[i]
            if is_square(prod_elem)[0]:
                reducible = True
                break
        if not reducible:
            independent.append(g)
    reps = []
    for mask in range(1 << len(independent)):
        r = field.one()
        for i in range(len(independent)):
            if mask >> i & 1:
                r = r * independent[i]
        reps.append(r)
    return SelmerGroup(field, list(S), 2, independent, reps)


# ------------------------------------------------------ quadratic extensions

_GENERATOR_SHIFTS = (0, 1, -1, 2, -2, 3, -3, 4, -4)


def quadratic_extension(base: NumberField, a: FieldElement) -> NumberField:
    """K(sqrt(a)) as an absolute field, ready for prime factorization.

    a is scaled by a rational square to be integral (same extension); the
    defining polynomial is the characteristic polynomial of sqrt(a) + t*theta
    for the first shift t making it irreducible of degree 2n.  t = 0 is the
    resultant of the defining polynomial with x^2 - a.
    """
    if a.is_zero():
        raise ZeroElement("cannot adjoin sqrt(0)")
    sq, _ = is_square(a)
    if sq:
        raise IsSquare("element is already a square in the base field")
    n = base.degree
    if 2 * n > 6:
        raise Unsupported(f"extension degree {2 * n} > 6")
    den = a.denominator_lcm()
    a_int = a * (den * den)
    theta = base.theta()
    for t in _GENERATOR_SHIFTS:
        mat = _gamma_matrix(base, a_int, t)
        poly = charpoly(mat)
        if any(c.denominator != 1 for c in poly):
            raise ArithmeticError("characteristic polynomial not integral")
        ipoly = [int(c) for c in poly]
        if zx_is_irreducible(ipoly):
            return make_field(ipoly)
    raise ArithmeticError("no primitive generator among the shift candidates")


def _gamma_matrix(base: NumberField, a_int: FieldElement, t: int):
    """Multiplication matrix of gamma = z + t*theta on K[z]/(z^2 - a_int)."""
    n = base.degree
    theta = base.theta()
    cols = []
    for j in (0, 1):
        for i in range(n):
            e = base.theta() ** i
            u = e if j == 0 else base.zero()
            v = base.zero() if j == 0 else e
            # gamma * (u + v z) = (t*theta*u + a*v) + (u + t*theta*v) z
            ru = theta * t * u + a_int * v
            rv = u + theta * t * v
            cols.append(list(ru.coords) + list(rv.coords))
    return [[cols[j][i] for j in range(2 * n)] for i in range(2 * n)]
