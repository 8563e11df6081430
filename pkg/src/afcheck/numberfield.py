"""Exact arithmetic in a number field K = Q[x]/(f).

A field is presented by a monic irreducible integer polynomial; elements are
coordinate vectors of rationals in the power basis 1, theta, ..., theta^(n-1).
All arithmetic is exact, every embedding question is decided through Sturm
isolation and rational interval refinement.
"""

from fractions import Fraction

from . import linalg
from .errors import (DegreeZero, DivisionByZero, NotMonic, NotTotallyReal,
                     Reducible, Unsupported, ZeroElement)
from .parsing import parse_poly
from .polynomials import (interval_eval, isolate_real_roots, pdivmod, pmul,
                          pxgcd, poly_disc, refine_interval, strip, zx_factor)

MAX_DEGREE = 6


class NumberField:
    """Q[x]/(f) for a monic irreducible integer polynomial f of degree <= 6."""

    def __init__(self, coeffs, poly_disc_value, real_roots):
        self.coeffs = tuple(int(c) for c in coeffs)
        self.degree = len(self.coeffs) - 1
        self.poly_disc = poly_disc_value
        self.real_roots = tuple(real_roots)
        r1 = len(real_roots)
        self.signature = (r1, (self.degree - r1) // 2)
        self.field_disc = None  # set once the index is verified at all squares
        self._frac_coeffs = [Fraction(c) for c in self.coeffs]

    # -- basic properties ---------------------------------------------

    @property
    def is_totally_real(self):
        return self.signature[1] == 0

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"NumberField({_poly_str(self.coeffs)})"

    # -- element constructors -----------------------------------------

    def element(self, coords):
        coords = [Fraction(c) for c in coords]
        if len(coords) > self.degree:
            _, rem = pdivmod(coords, self._frac_coeffs)
            coords = rem
        coords = list(coords) + [Fraction(0)] * (self.degree - len(coords))
        return FieldElement(self, coords[:self.degree])

    def from_rational(self, value):
        return self.element([Fraction(value)])

    def zero(self):
        return self.from_rational(0)

    def one(self):
        return self.from_rational(1)

    def theta(self):
        if self.degree == 1:
            return self.from_rational(-self.coeffs[0])
        return self.element([0, 1])

    def element_from_str(self, text):
        return self.element(parse_poly(text))


class FieldElement:
    """An element of a NumberField in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(coords)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def in_power_order(self):
        """True when all coordinates are integers (membership in Z[theta])."""
        return all(c.denominator == 1 for c in self.coords)

    def is_algebraic_integer(self):
        return all(c.denominator == 1 for c in self.min_poly())

    def denominator_lcm(self):
        d = 1
        for c in self.coords:
            d = d * c.denominator // _gcd(d, c.denominator)
        return d

    def height(self):
        return max(max(abs(c.numerator), c.denominator) for c in self.coords)

    # -- arithmetic ----------------------------------------------------

    def _wrap(self, coords):
        return self.field.element(coords)

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field,
                            [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.field,
                            [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __mul__(self, other):
        other = self._coerce(other)
        return self._wrap(pmul(list(self.coords), list(other.coords)))

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __radd__(self, other):
        return self.__add__(other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("division by zero field element")
        g, s, _t = pxgcd(list(self.coords), self.field._frac_coeffs)
        if len(g) != 1:
            raise ArithmeticError("defining polynomial not irreducible?")
        return self._wrap([c / g[0] for c in s])

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.from_rational(other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.coords == other.coords)

    def __hash__(self):
        return hash((self.field.coeffs, self.coords))

    def __repr__(self):
        return _poly_str(self.coords)

    # -- invariants ----------------------------------------------------

    def mult_matrix(self):
        """Matrix of multiplication by self in the power basis (column j is
        the image of theta^j)."""
        n = self.field.degree
        cols = []
        power = self.field.one()
        for _ in range(n):
            cols.append((self * power).coords)
            power = power * self.field.theta()
        return [[cols[j][i] for j in range(n)] for i in range(n)]

    def norm(self):
        return linalg.det(self.mult_matrix())

    def trace(self):
        return sum(self.mult_matrix()[i][i] for i in range(self.field.degree))

    def char_poly(self):
        return linalg.charpoly(self.mult_matrix())

    def min_poly(self):
        """Monic minimal polynomial over Q (squarefree part of char_poly)."""
        from .polynomials import pgcd, pderiv, pmonic
        ch = self.char_poly()
        g = pgcd(ch, pderiv(ch))
        if len(g) == 1:
            return pmonic(ch)
        return pmonic(pdivmod(ch, g)[0])


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _poly_str(coords):
    parts = []
    for i, c in enumerate(coords):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            var = "x" if i == 1 else f"x^{i}"
            if c == 1:
                parts.append(var)
            elif c == -1:
                parts.append(f"-{var}")
            else:
                parts.append(f"{c}*{var}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# ---------------------------------------------------------------- factory

def make_field(spec):
    """Build a NumberField from a polynomial string or coefficient list.

    Verifies monicity, irreducibility over Q (bounded Hensel factor search),
    and computes the exact discriminant and the signature by Sturm isolation.
    """
    if isinstance(spec, str):
        coeffs = parse_poly(spec)
    else:
        coeffs = strip([Fraction(c) for c in spec])
    if any(c.denominator != 1 for c in coeffs):
        raise NotMonic("defining polynomial must have integer coefficients")
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) <= 1:
        raise DegreeZero("defining polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise NotMonic(f"leading coefficient {coeffs[-1]} != 1")
    n = len(coeffs) - 1
    if n > MAX_DEGREE:
        raise Unsupported(f"degree {n} > {MAX_DEGREE} not supported")
    factors = zx_factor(coeffs)
    if len(factors) != 1 or factors[0][1] != 1:
        witness = min((f for f, _ in factors), key=len)
        raise Reducible(f"polynomial factors; witness {_poly_str(witness)}",
                        factor=witness)
    disc = poly_disc(coeffs)
    roots = isolate_real_roots([Fraction(c) for c in coeffs])
    field = NumberField(coeffs, disc, roots)
    if field.degree == 1:
        field.field_disc = 1
    return field


# ----------------------------------------------------- spec-level helpers

def norm_trace(x: FieldElement):
    """(Norm, Trace) of x, exact rationals."""
    m = x.mult_matrix()
    return linalg.det(m), sum(m[i][i] for i in range(len(m)))


def embedding_sign(x: FieldElement, root_index: int) -> int:
    """Sign of x under the real embedding sending theta to the given root."""
    if x.is_zero():
        raise ZeroElement("sign of zero is undefined")
    field = x.field
    lo, hi = field.real_roots[root_index]
    g = list(x.coords)
    f = field._frac_coeffs
    while True:
        vlo, vhi = interval_eval(g, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        if lo == hi:
            raise ZeroElement("element vanishes at a rational root")
        lo, hi = refine_interval(f, lo, hi)


def embedding_signs(x: FieldElement):
    return [embedding_sign(x, i) for i in range(len(x.field.real_roots))]


def embedding_interval(x: FieldElement, root_index: int, max_width: Fraction):
    """Rational interval around the real embedding of x, width <= max_width."""
    field = x.field
    lo, hi = field.real_roots[root_index]
    g = list(x.coords)
    f = field._frac_coeffs
    vlo, vhi = interval_eval(g, lo, hi)
    while vhi - vlo > max_width:
        lo, hi = refine_interval(f, lo, hi)
        vlo, vhi = interval_eval(g, lo, hi)
    return vlo, vhi


def is_totally_positive(x: FieldElement) -> bool:
    """True iff every real embedding of x is positive (totally real fields)."""
    if not x.field.is_totally_real:
        raise NotTotallyReal("field has complex embeddings")
    if x.is_zero():
        raise ZeroElement("zero is neither positive nor negative")
    return all(s > 0 for s in embedding_signs(x))
