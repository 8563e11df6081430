"""Frey-curve invariants and reduction reports, symbolic in the exponent.

Two curve families are supported, keyed by the equation they encode:
  "2r"  : Y^2 = X(X - a^p)(X + b^p)        for a^p + b^p = 2^r c^p
  "pp2" : Y^2 = X^3 + 4c X^2 + 4 a^p X     for a^p + b^p = c^2

Valuations of Delta, c4 and j at a prime are affine forms alpha + beta*p in
the symbolic exponent; every report carries the smallest p for which its
sign and divisibility conclusions are valid.  Inertia-image statements are
represented exclusively through their valuation criteria (negative j with
p not dividing v(j); potentially good with 3 not dividing v(Delta)).
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import (DegenerateLambda, InconsistentDivisibility,
                     RelationViolated, UnsupportedCase)
from .numberfield import FieldElement, NumberField
from .prime_ideals import PrimeIdeal, factor_rational_prime, s_k, valuation

FAMILY_TWO_POWER = "2r"
FAMILY_SQUARE = "pp2"


# ----------------------------------------------------------- symbolic forms

@dataclass(frozen=True)
class ValuationForm:
    """The affine form alpha + beta*p in the symbolic prime exponent p."""
    alpha: int
    beta: int

    def evaluate(self, p: int) -> int:
        return self.alpha + self.beta * p

    @property
    def threshold(self) -> Fraction:
        """Sign and p-divisibility conclusions hold for primes p > threshold."""
        return Fraction(abs(self.alpha), max(1, abs(self.beta)))

    def p_divides_symbolically(self) -> bool:
        """Whether p | (alpha + beta p), valid for p > |alpha|."""
        return self.alpha == 0

    def sign_for_large_p(self) -> int:
        ref = self.beta if self.beta else self.alpha
        return (ref > 0) - (ref < 0)

    def __add__(self, other):
        return ValuationForm(self.alpha + other.alpha, self.beta + other.beta)

    def scaled(self, k: int):
        return ValuationForm(self.alpha * k, self.beta * k)

    def to_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "threshold": self.threshold}


# ------------------------------------------------------------------- specs

@dataclass
class FreySpec:
    family: str
    a: FieldElement
    b: FieldElement
    c: FieldElement
    r: int = None
    p: int = None  # None means symbolic

    def __post_init__(self):
        if self.family not in (FAMILY_TWO_POWER, FAMILY_SQUARE):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == FAMILY_TWO_POWER and (self.r is None or self.r < 1):
            raise ValueError("family '2r' needs a positive twist exponent r")
        if self.p is not None:
            self.validate()

    @property
    def field(self) -> NumberField:
        return self.a.field

    def validate(self):
        """Exact check of the defining relation for a concrete exponent."""
        p = self.p
        if (self.a * self.b * self.c).is_zero():
            raise RelationViolated("triple with abc = 0 gives a singular curve")
        if self.family == FAMILY_TWO_POWER:
            lhs = self.a ** p + self.b ** p
            rhs = self.c ** p * (2 ** self.r)
            if lhs != rhs:
                raise RelationViolated(
                    f"a^{p} + b^{p} != 2^{self.r} * c^{p} for the given triple")
        else:
            if self.a ** p + self.b ** p != self.c * self.c:
                raise RelationViolated(f"a^{p} + b^{p} != c^2 for the given triple")


# -------------------------------------------------------------- invariants

@dataclass
class FreyInvariants:
    delta: FieldElement
    c4: FieldElement
    j: FieldElement
    j_alt: FieldElement = None
    c4_alt: FieldElement = None

    @property
    def forms_agree(self):
        ok = True
        if self.j_alt is not None:
            ok = ok and self.j == self.j_alt
        if self.c4_alt is not None:
            ok = ok and self.c4 == self.c4_alt
        return ok


@dataclass
class SymbolicInvariants:
    family: str
    delta_formula: str
    c4_formula: str
    j_formula: str

    def to_dict(self):
        return {"family": self.family, "delta": self.delta_formula,
                "c4": self.c4_formula, "j": self.j_formula}


def invariants(spec: FreySpec):
    """Closed-form Delta, c4, j; exact values for a concrete exponent.

    Both published shapes of the single redundant invariant (j for "2r",
    c4 for "pp2") are evaluated; agreement is exposed, never assumed.
    """
    if spec.p is None:
        return _symbolic_invariants(spec)
    spec.validate()
    p = spec.p
    a, b, c = spec.a, spec.b, spec.c
    if spec.family == FAMILY_TWO_POWER:
        r = spec.r
        core = (a * b * c) ** (2 * p)
        inner = a ** (2 * p) + b ** p * c ** p * (2 ** r)
        inner_alt = a ** (2 * p) + b ** (2 * p) + a ** p * b ** p
        scale = Fraction(2) ** (8 - 2 * r)
        delta = core * (2 ** (4 + 2 * r))
        c4 = inner * 16
        j = inner ** 3 * scale / core
        j_alt = inner_alt ** 3 * scale / core
        return FreyInvariants(delta, c4, j, j_alt=j_alt)
    core = (a * a * b) ** p
    delta = core * (2 ** 12)
    c4 = (c * c * 4 - a ** p * 3) * 64
    c4_alt = (b ** p * 4 + a ** p) * 64
    j = (a ** p + b ** p * 4) ** 3 * 64 / core
    return FreyInvariants(delta, c4, j, c4_alt=c4_alt)


def _symbolic_invariants(spec):
    if spec.family == FAMILY_TWO_POWER:
        r = spec.r
        return SymbolicInvariants(
            spec.family,
            f"2^{4 + 2 * r} * (a*b*c)^(2p)",
            f"2^4 * (a^(2p) + 2^{r} * b^p * c^p)",
            f"2^{8 - 2 * r} * (a^(2p) + 2^{r} * b^p * c^p)^3 / (a*b*c)^(2p)")
    return SymbolicInvariants(
        spec.family,
        "2^12 * (a^2*b)^p",
        "2^6 * (4*b^p + a^p)",
        "2^6 * (a^p + 4*b^p)^3 / (a^2*b)^p")


def weierstrass_invariants(spec: FreySpec):
    """Independent route: the literal model evaluated by the b2/b4/b6 formulas.

    Returns (delta, c4, c6, j) and verifies c4^3 - c6^2 = 1728*Delta exactly.
    """
    if spec.p is None:
        raise ValueError("cross-check needs a concrete exponent")
    spec.validate()
    p = spec.p
    field = spec.field
    zero = field.zero()
    if spec.family == FAMILY_TWO_POWER:
        a1, a2, a3 = zero, spec.b ** p - spec.a ** p, zero
        a4, a6 = -(spec.a ** p * spec.b ** p), zero
    else:
        a1, a2, a3 = zero, spec.c * 4, zero
        a4, a6 = spec.a ** p * 4, zero
    b2 = a1 * a1 + a2 * 4
    b4 = a4 * 2 + a1 * a3
    b6 = a3 * a3 + a6 * 4
    b8 = (a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4
          + a2 * a3 * a3 - a4 * a4)
    delta = -(b2 * b2 * b8) - b4 ** 3 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9
    c4 = b2 * b2 - b4 * 24
    c6 = -(b2 ** 3) + b2 * b4 * 36 - b6 * 216
    if c4 ** 3 - c6 * c6 != delta * 1728:
        raise ArithmeticError("c4^3 - c6^2 != 1728*Delta on the literal model")
    if delta.is_zero():
        raise RelationViolated("singular model")
    return delta, c4, c6, c4 ** 3 / delta


def concrete_cross_check(spec: FreySpec) -> bool:
    """Closed forms against the literal Weierstrass computation; exact."""
    inv = invariants(spec)
    delta, c4, _c6, j = weierstrass_invariants(spec)
    return (inv.forms_agree and inv.delta == delta
            and inv.c4 == c4 and inv.j == j)


# ------------------------------------------------------- reduction reports

@dataclass
class ReductionReport:
    prime: PrimeIdeal
    family: str
    v_delta: ValuationForm
    v_c4: ValuationForm
    v_j: ValuationForm
    reduction_type: str
    flag_p_in_inertia: bool
    flag_3_in_inertia: bool
    p_threshold: int
    notes: list = dc_field(default_factory=list)

    def to_dict(self):
        return {"prime": self.prime.to_dict(), "family": self.family,
                "v_delta": self.v_delta.to_dict(), "v_c4": self.v_c4.to_dict(),
                "v_j": self.v_j.to_dict(), "type": self.reduction_type,
                "flag_p_in_inertia": self.flag_p_in_inertia,
                "flag_3_in_inertia": self.flag_3_in_inertia,
                "p_threshold": self.p_threshold, "notes": self.notes}


def valuation_profile(spec: FreySpec, prime: PrimeIdeal,
                      v_a: int, v_b: int, v_c: int) -> ReductionReport:
    """Symbolic reduction data at a prime under a declared divisibility pattern.

    The pattern gives v_P(a), v_P(b), v_P(c) >= 0; normalized solutions admit
    at most one positive entry (two positives contradict the gcd ideal being
    an odd prime), so anything else is rejected.
    """
    if min(v_a, v_b, v_c) < 0:
        raise ValueError("valuations must be non-negative")
    if spec.family == FAMILY_TWO_POWER:
        relevant = [v_a, v_b, v_c]
    else:
        relevant = [v_a, v_b]
    if sum(1 for v in relevant if v > 0) > 1:
        raise InconsistentDivisibility(
            "more than one of the declared entries is divisible by the prime; "
            "normalized triples admit at most one")
    if prime.q == 2:
        return _profile_above_two(spec, prime, v_a, v_b, v_c)
    return _profile_odd(spec, prime, v_a, v_b, v_c)


def _profile_above_two(spec, prime, v_a, v_b, v_c):
    v2 = prime.e
    if spec.family == FAMILY_TWO_POWER:
        r = spec.r
        v = v_a + v_b + v_c
        if v > 0:
            v_delta = ValuationForm((4 + 2 * r) * v2, 2 * v)
            v_c4 = ValuationForm(4 * v2, 0)
            v_j = ValuationForm((8 - 2 * r) * v2, -2 * v)
            threshold = max(abs((4 - r) * v2), 5)
            return ReductionReport(
                prime, spec.family, v_delta, v_c4, v_j,
                "potentially-multiplicative",
                flag_p_in_inertia=(4 - r) * v2 != 0,
                flag_3_in_inertia=False, p_threshold=threshold)
        if r not in (2, 3):
            raise UnsupportedCase(
                f"good-reduction branch above 2 is stated for r in (2, 3), got r={r}")
        v_delta = ValuationForm((4 + 2 * r) * v2, 0)
        v_c4 = ValuationForm(4 * v2, 0)
        v_j = ValuationForm((8 - 2 * r) * v2, 0)
        return ReductionReport(
            prime, spec.family, v_delta, v_c4, v_j, "potentially-good",
            flag_p_in_inertia=False,
            flag_3_in_inertia=v_delta.alpha % 3 != 0, p_threshold=2)
    # family pp2
    if v_a > 0:
        v_delta = ValuationForm(12 * v2, 2 * v_a)
        v_c4 = ValuationForm(8 * v2, 0)
        v_j = ValuationForm(12 * v2, -2 * v_a)
    elif v_b > 0:
        v_delta = ValuationForm(12 * v2, v_b)
        v_c4 = ValuationForm(6 * v2, 0)
        v_j = ValuationForm(6 * v2, -v_b)
    else:
        v_delta = ValuationForm(12 * v2, 0)
        v_c4 = ValuationForm(6 * v2, 0)
        v_j = ValuationForm(6 * v2, 0)
        return ReductionReport(
            prime, spec.family, v_delta, v_c4, v_j, "potentially-good",
            flag_p_in_inertia=False,
            flag_3_in_inertia=v_delta.alpha % 3 != 0, p_threshold=2,
            notes=["prime above 2 divides neither a nor b"])
    return ReductionReport(
        prime, spec.family, v_delta, v_c4, v_j, "potentially-multiplicative",
        flag_p_in_inertia=v_j.alpha != 0, flag_3_in_inertia=False,
        p_threshold=max(6 * v2, 5))


def _profile_odd(spec, prime, v_a, v_b, v_c):
    if spec.family == FAMILY_TWO_POWER:
        v = v_a + v_b + v_c
        beta = 2 * v
    else:
        v = v_a + v_b
        beta = 2 * v_a + v_b
    if v == 0:
        zero = ValuationForm(0, 0)
        return ReductionReport(prime, spec.family, zero, zero, zero, "good",
                               flag_p_in_inertia=False, flag_3_in_inertia=False,
                               p_threshold=2)
    v_delta = ValuationForm(0, beta)
    v_j = ValuationForm(0, -beta)
    return ReductionReport(
        prime, spec.family, v_delta, ValuationForm(0, 0), v_j, "multiplicative",
        flag_p_in_inertia=False,  # p divides v(j), so the image criterion fails
        flag_3_in_inertia=False, p_threshold=5)


# ---------------------------------------------------------------- conductor

@dataclass
class ConductorFactor:
    prime: PrimeIdeal
    exponent: tuple  # (lo, hi) range or (k, k) exact

    def to_dict(self):
        lo, hi = self.exponent
        return {"prime": self.prime.to_dict(),
                "exponent": lo if lo == hi else {"min": lo, "max": hi}}


@dataclass
class ConductorShape:
    conductor: list
    level_lowered: list
    deleted: list

    def to_dict(self):
        return {"conductor": [f.to_dict() for f in self.conductor],
                "level_lowered": [f.to_dict() for f in self.level_lowered],
                "deleted": [p.to_dict() for p in self.deleted]}


def conductor_shape(field: NumberField, family: str,
                    class_rep: PrimeIdeal | None,
                    odd_multiplicative: list) -> ConductorShape:
    """Formal conductor with exponent ranges, and the level-lowered part.

    Primes above 2 carry the bound 2 + 6*v_P(2); the class representative
    carries 2 + 3*v_m(3); odd multiplicative primes appear with exponent 1
    and are the ones deleted in the level-lowered ideal.
    """
    factors = []
    for P in s_k(field):
        factors.append(ConductorFactor(P, (0, 2 + 6 * P.e)))
    if class_rep is not None:
        if family == FAMILY_SQUARE:
            raise ValueError("the pp2 family carries no class-representative prime")
        v3 = class_rep.e if class_rep.q == 3 else 0
        factors.append(ConductorFactor(class_rep, (0, 2 + 3 * v3)))
    lowered = list(factors)
    mult = [ConductorFactor(P, (1, 1)) for P in odd_multiplicative]
    return ConductorShape(factors + mult, lowered, list(odd_multiplicative))


def odd_multiplicative_primes(spec: FreySpec):
    """Odd primes where the concrete triple forces multiplicative reduction."""
    from .integerfactor import factorint
    elems = [spec.a, spec.b, spec.c] if spec.family == FAMILY_TWO_POWER \
        else [spec.a, spec.b]
    field = spec.field
    qs = set()
    for x in elems:
        if x.is_zero():
            continue
        den = x.denominator_lcm()
        qs |= set(factorint(den))
        qs |= set(factorint(int((x * den).norm())))
    out = []
    for q in sorted(qs):
        if q == 2:
            continue
        for P in factor_rational_prime(field, q):
            v = sum(valuation(x, P) for x in elems if not x.is_zero())
            if v > 0:
                out.append(P)
    return out


# ----------------------------------------------------- Legendre lambda maps

def legendre_j(lam: FieldElement) -> FieldElement:
    """j-invariant of the Legendre curve with parameter lambda."""
    if lam.is_zero() or lam == 1:
        raise DegenerateLambda("lambda in {0, 1}")
    num = (lam * lam - lam + 1) ** 3
    den = (lam * (1 - lam)) ** 2
    return num * 256 / den


def lambda_orbit(lam: FieldElement):
    """The six-element orbit of lambda under the anharmonic group."""
    if lam.is_zero() or lam == 1:
        raise DegenerateLambda("lambda in {0, 1}")
    one = lam.field.one()
    return [lam, one / lam, one - lam, one / (one - lam),
            lam / (lam - one), (lam - one) / lam]


def j_from_lambda_mu(lam: FieldElement, mu: FieldElement) -> FieldElement:
    """The same j expressed through lambda*mu for lambda + mu = 1."""
    if lam + mu != 1:
        raise RelationViolated("lambda + mu != 1")
    prod = lam * mu
    if prod.is_zero():
        raise DegenerateLambda("lambda*mu = 0")
    return (1 - prod) ** 3 * 256 / (prod * prod)


# ------------------------------------------------------- fixture predicates

def is_trivial_2r(a: FieldElement, b: FieldElement, c: FieldElement) -> bool:
    return (a * b * c).is_zero() or a == b or a == -b


def is_trivial_pp2(a: FieldElement, b: FieldElement, c: FieldElement) -> bool:
    if (a * b * c).is_zero():
        return True
    return a == 1 and b == 1 and c * c == 2


def in_w_k(field: NumberField, a, b, c) -> bool:
    """Every prime over 2 divides a*b*c."""
    prod = a * b * c
    if prod.is_zero():
        return True
    return all(valuation(prod, P) >= 1 for P in s_k(field))


def in_w_k_prime(field: NumberField, a, b) -> bool:
    """Every prime over 2 divides a*b."""
    prod = a * b
    if prod.is_zero():
        return True
    return all(valuation(prod, P) >= 1 for P in s_k(field))


def at_most_one_divisible(primes, triple) -> bool:
    """No prime in the list divides two distinct entries of the triple."""
    for P in primes:
        hits = sum(1 for t in triple if not t.is_zero() and valuation(t, P) >= 1)
        if hits > 1:
            return False
    return True
