"""Prime ideal factorization, splitting classification and valuations.

Rational primes are factored through the reduction of the defining
polynomial, guarded by the Dedekind index criterion: a prime dividing the
index of Z[theta] in the maximal order raises IndexDivisor rather than
producing silently wrong data.  Valuations are computed by repeated
multiplication with a cached anti-uniformizer.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import IndexDivisor, ZeroElement
from .numberfield import FieldElement, NumberField
from .polynomials import (degree, fp_factor, fp_gcd, fp_mul, fp_norm,
                          psub, strip)


class PrimeIdeal:
    """A prime of O_K over q, as the two-element ideal (q, g(theta))."""

    def __init__(self, field: NumberField, q: int, e: int, f: int, gen_coeffs):
        self.field = field
        self.q = q
        self.e = e
        self.f = f
        self.gen_coeffs = tuple(int(c) % q for c in gen_coeffs)
        self._beta = None  # anti-uniformizer, cached on first valuation

    def norm(self):
        return self.q ** self.f

    def residue_root(self):
        """Root of a degree-one generator polynomial in F_q, else None."""
        if self.f == 1 and len(self.gen_coeffs) == 2:
            return (-self.gen_coeffs[0]) % self.q
        return None

    def generator_element(self):
        return self.field.element(list(self.gen_coeffs))

    def sort_key(self):
        root = self.residue_root()
        tail = (root,) if root is not None else self.gen_coeffs
        return (-self.e, self.f, tail)

    def __eq__(self, other):
        return (isinstance(other, PrimeIdeal)
                and self.field == other.field and self.q == other.q
                and self.gen_coeffs == other.gen_coeffs
                and (self.e, self.f) == (other.e, other.f))

    def __hash__(self):
        return hash((self.field.coeffs, self.q, self.e, self.f, self.gen_coeffs))

    def __repr__(self):
        return f"PrimeIdeal(q={self.q}, e={self.e}, f={self.f}, g={list(self.gen_coeffs)})"

    def to_dict(self):
        return {"q": self.q, "e": self.e, "f": self.f,
                "gen_poly": list(self.gen_coeffs)}

    def key(self):
        gens = ",".join(str(c) for c in self.gen_coeffs)
        return f"{self.q}|e{self.e}f{self.f}|[{gens}]"

    # -- valuations ----------------------------------------------------

    def anti_uniformizer(self):
        """beta in P^(-1) \\ O_K with beta*P integral; cached."""
        if self._beta is None:
            self._beta = _build_anti_uniformizer(self)
        return self._beta

    def valuation(self, x: FieldElement) -> int:
        return valuation(x, self)

    def divides(self, x: FieldElement) -> bool:
        if x.is_zero():
            return True
        return valuation(x, self) >= 1


@dataclass(frozen=True)
class SplittingType:
    """Shape of q*O_K with the three named predicates of interest.

    For degree-one fields all predicates hold simultaneously and the kind
    reported is "totally-split".
    """
    pattern: tuple
    kind: str
    inert: bool
    totally_ramified: bool
    totally_split: bool

    def to_dict(self):
        return {"pattern": [list(p) for p in self.pattern], "kind": self.kind,
                "inert": self.inert, "totally_ramified": self.totally_ramified,
                "totally_split": self.totally_split}


_factor_cache: dict = {}


def factor_rational_prime(field: NumberField, q: int):
    """Primes of O_K above q via Dedekind factorization, canonically sorted.

    Runs the index criterion at q first; failure raises IndexDivisor(q).
    """
    cache_key = (field.coeffs, q)
    if cache_key in _factor_cache:
        return list(_factor_cache[cache_key])
    fbar = fp_norm(list(field.coeffs), q)
    if degree(fbar) != field.degree:
        raise ArithmeticError("monic polynomial degenerated mod q")
    factors = fp_factor(fbar, q)
    _dedekind_gate(field, q, factors)
    primes = [PrimeIdeal(field, q, e, degree(g), g) for g, e in factors]
    primes.sort(key=PrimeIdeal.sort_key)
    _factor_cache[cache_key] = tuple(primes)
    return list(primes)


def _dedekind_gate(field, q, factors):
    g_rad = [1]
    h_cof = [1]
    for gbar, e in factors:
        g_rad = fp_mul(g_rad, gbar, q)
        for _ in range(e - 1):
            h_cof = fp_mul(h_cof, gbar, q)
    g_lift = [c % q for c in g_rad]
    h_lift = [c % q for c in h_cof]
    prod = _zmul(g_lift, h_lift)
    diff = psub(prod, list(field.coeffs))
    if any(c % q for c in diff):
        raise ArithmeticError("lift product not congruent to f")
    t_bar = fp_norm([c // q for c in diff], q)
    common = fp_gcd(fp_gcd(t_bar if t_bar else [], g_rad, q), h_cof, q)
    if degree(common) > 0:
        raise IndexDivisor(q)


def _zmul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return strip(out)


def splitting_type(field: NumberField, q: int) -> SplittingType:
    primes = factor_rational_prime(field, q)
    n = field.degree
    pattern = tuple((p.e, p.f) for p in primes)
    inert = len(primes) == 1 and primes[0].f == n
    ram = len(primes) == 1 and primes[0].e == n
    split = len(primes) == n and all(p.e == 1 and p.f == 1 for p in primes)
    if split:
        kind = "totally-split"
    elif inert:
        kind = "inert"
    elif ram:
        kind = "totally-ramified"
    else:
        kind = "mixed"
    return SplittingType(pattern, kind, inert, ram, split)


def verified_field_disc(field: NumberField):
    """The field discriminant, when the power basis certifies it; else None.

    The index [O_K : Z[theta]] squares into poly_disc, so a Dedekind pass at
    every prime whose square divides poly_disc proves index 1 and
    field_disc = poly_disc.  A gate failure leaves the true discriminant
    undetermined here (reported as None, never guessed)."""
    if field.field_disc is not None:
        return field.field_disc
    from .errors import FactorizationIncomplete
    from .integerfactor import factorint
    try:
        factors = factorint(field.poly_disc)
    except FactorizationIncomplete:
        return None
    for q, e in factors.items():
        if e >= 2:
            try:
                factor_rational_prime(field, q)
            except IndexDivisor:
                return None
    field.field_disc = field.poly_disc
    return field.field_disc


def s_k(field: NumberField):
    """All primes of O_K above 2."""
    return factor_rational_prime(field, 2)


def u_k(field: NumberField):
    """Primes P above 2 with gcd(3, v_P(2)) = 1."""
    return [p for p in s_k(field) if gcd(3, p.e) == 1]


# ------------------------------------------------------------- valuations

def _is_q_integral(x: FieldElement, q: int) -> bool:
    """Denominators coprime to q; equals local integrality at primes over q
    whenever the power basis is q-maximal (guaranteed by the Dedekind gate)."""
    return all(c.denominator % q != 0 for c in x.coords)


def _build_anti_uniformizer(prime: PrimeIdeal):
    field, q = prime.field, prime.q
    fbar = fp_norm(list(field.coeffs), q)
    quot, rem = _fp_div(fbar, prime.gen_coeffs, q)
    if rem:
        raise ArithmeticError("generator does not divide f mod q")
    candidates = [quot]
    # lift tweaks of the cofactor, in case the canonical lift lands in O_K
    for k in range(field.degree):
        tweak = [0] * k + [1]
        candidates.append(fp_norm(_zmul(quot, [c for c in _addp(prime.gen_coeffs, tweak, q)]), q))
    for cof in candidates:
        beta = field.element([Fraction(c, q) for c in cof])
        if _is_q_integral(beta, q):
            continue
        shifted = beta * prime.generator_element()
        if _is_q_integral(shifted, q):
            return beta
    raise ArithmeticError(
        f"anti-uniformizer search failed at q={q} (unexpected after index gate)")


def _addp(a, b, q):
    n = max(len(a), len(b))
    return [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % q
            for i in range(n)]


def _fp_div(a, b, q):
    from .polynomials import fp_divmod
    return fp_divmod(list(a), list(b), q)


def _int_q_valuation(n: int, q: int) -> int:
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


def valuation(x: FieldElement, prime: PrimeIdeal) -> int:
    """v_P(x) for nonzero x, as a fractional-ideal valuation."""
    if x.is_zero():
        raise ZeroElement("valuation of zero is undefined")
    q = prime.q
    d = x.denominator_lcm()
    y = x * d
    beta = prime.anti_uniformizer()
    v = 0
    z = y * beta
    while _is_q_integral(z, q):
        v += 1
        z = z * beta
    return v - prime.e * _int_q_valuation(d, q)
