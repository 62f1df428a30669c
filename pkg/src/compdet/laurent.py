"""Sparse Laurent polynomials over the rationals, with half-integer exponents.

Coefficients are exact: Python ints where possible, fractions.Fraction
otherwise (the two mix freely; equal values compare and hash equal, so a
term dict never cares which representation a coefficient uses).

Exponents are stored in half-units: the stored integer is twice the
mathematical exponent, so x^(1/2) has stored exponent 1 and x^3 has stored
exponent 6.  This keeps square-root powers exact without ever touching
floating point.  All public APIs that take or return exponent vectors speak
stored half-units and say so.

Internally a monomial is packed into a single Python int: one 32-bit field
per variable, biased by 2**16 so moderately negative exponents pack as
non-negative fields, with variable 1 in the most significant field.  Packing
this way makes monomial multiplication a single integer addition and makes
integer comparison of keys agree with lexicographic comparison of exponent
vectors (x1 before x2 before ...), which is what leading-term extraction
needs.  The term-merging inner loops live in compdet._backend (compiled
kernel when available, pure Python otherwise).
"""

from fractions import Fraction
from math import isqrt

from ._backend import add_terms, mul_terms, muladd_terms
from .errors import DomainError, InexactDivisionError, UsageError

FIELD_BITS = 32
FIELD_MASK = (1 << FIELD_BITS) - 1
EXP_BIAS = 1 << 16

_UNIT_CACHE: dict[int, int] = {}


def unit_key(num_vars):
    """Packed key of the constant monomial (all exponents zero)."""
    u = _UNIT_CACHE.get(num_vars)
    if u is None:
        u = 0
        for _ in range(num_vars):
            u = (u << FIELD_BITS) | EXP_BIAS
        _UNIT_CACHE[num_vars] = u
    return u


def pack_exponents(exps2):
    """Pack a sequence of stored half-unit exponents into a monomial key."""
    key = 0
    for e in exps2:
        if not -EXP_BIAS <= e < (1 << FIELD_BITS) - EXP_BIAS:
            raise DomainError(f"stored exponent {e} out of packable range")
        key = (key << FIELD_BITS) | (e + EXP_BIAS)
    return key


def unpack_key(key, num_vars):
    """Inverse of pack_exponents; returns a tuple of stored half-units."""
    out = [0] * num_vars
    for i in range(num_vars - 1, -1, -1):
        out[i] = (key & FIELD_MASK) - EXP_BIAS
        key >>= FIELD_BITS
    return tuple(out)


def sqrt_fraction(x):
    """Exact square root of a non-negative perfect-square rational."""
    x = Fraction(x)
    if x < 0:
        raise DomainError("square root of a negative rational")
    rn, rd = isqrt(x.numerator), isqrt(x.denominator)
    if rn * rn != x.numerator or rd * rd != x.denominator:
        raise DomainError(f"{x} is not a perfect square")
    return Fraction(rn, rd)


def pow_stored(x, e2):
    """x raised to the stored half-unit exponent e2, i.e. x**(e2/2), exactly.

    Odd e2 requires x to be a non-negative perfect square (the positive
    root is taken); negative e2 requires x to be nonzero.
    """
    if e2 == 0:
        return Fraction(1)
    x = Fraction(x)
    if x == 0:
        if e2 < 0:
            raise DomainError("zero raised to a negative power")
        return Fraction(0)
    if e2 % 2 == 0:
        return x ** (e2 // 2)
    return sqrt_fraction(x) ** e2


def _coeff_div(a, b):
    """Exact coefficient quotient a/b, as int when integral."""
    if isinstance(a, int) and isinstance(b, int):
        q = Fraction(a, b)
    else:
        q = Fraction(a) / Fraction(b)
    return q.numerator if q.denominator == 1 else q


def _as_coeff(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise UsageError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial.

    Do not mutate the term dict of a poly you did not just build; all
    arithmetic returns fresh objects.
    """

    __slots__ = ("num_vars", "_terms")

    def __init__(self, num_vars, packed_terms=None):
        self.num_vars = num_vars
        self._terms = packed_terms if packed_terms is not None else {}

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, num_vars):
        return cls(num_vars)

    @classmethod
    def const(cls, num_vars, c):
        c = _as_coeff(Fraction(c) if not isinstance(c, (int, Fraction)) else c)
        if not c:
            return cls(num_vars)
        return cls(num_vars, {unit_key(num_vars): c})

    @classmethod
    def monomial(cls, num_vars, coeff, exps2):
        """coeff * x^(exps2/2) with exps2 a stored half-unit vector."""
        exps2 = tuple(exps2)
        if len(exps2) != num_vars:
            raise UsageError("exponent vector length != num_vars")
        c = _as_coeff(coeff)
        if not c:
            return cls(num_vars)
        return cls(num_vars, {pack_exponents(exps2): c})

    @classmethod
    def variable(cls, num_vars, i, exp2=2):
        """x_i^(exp2/2) for the 1-based variable index i (default x_i itself)."""
        if not 1 <= i <= num_vars:
            raise UsageError(f"variable index {i} outside 1..{num_vars}")
        exps = [0] * num_vars
        exps[i - 1] = exp2
        return cls.monomial(num_vars, 1, exps)

    @classmethod
    def from_terms(cls, num_vars, mapping):
        """Build from {stored-exponent tuple: coefficient}."""
        terms = {}
        for exps2, c in mapping.items():
            exps2 = tuple(exps2)
            if len(exps2) != num_vars:
                raise UsageError("exponent vector length != num_vars")
            c = _as_coeff(c)
            if c:
                k = pack_exponents(exps2)
                v = terms.get(k, 0) + c
                if v:
                    terms[k] = v
                else:
                    terms.pop(k, None)
        return cls(num_vars, terms)

    # -- basic queries ----------------------------------------------------

    def is_zero(self):
        return not self._terms

    def num_terms(self):
        return len(self._terms)

    def terms(self):
        """Yield (stored-exponent tuple, coeff), leading term first."""
        n = self.num_vars
        for k in sorted(self._terms, reverse=True):
            yield unpack_key(k, n), self._terms[k]

    def leading_term(self):
        """(stored-exponent tuple, coeff) maximal in lex order, x1 heaviest."""
        if not self._terms:
            raise DomainError("zero polynomial has no leading term")
        k = max(self._terms)
        return unpack_key(k, self.num_vars), self._terms[k]

    def constant_term(self):
        return self._terms.get(unit_key(self.num_vars), 0)

    def coefficient(self, exps2):
        return self._terms.get(pack_exponents(tuple(exps2)), 0)

    def is_integral_exponents(self):
        """True when every stored exponent is even (no genuine half powers)."""
        n = self.num_vars
        return all(all(e % 2 == 0 for e in m) for m, _ in self.terms())

    # -- ring operations ---------------------------------------------------

    def _check_ring(self, other):
        if self.num_vars != other.num_vars:
            raise UsageError(
                f"mixed rings: {self.num_vars} vs {other.num_vars} variables"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.num_vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self._terms)
        add_terms(acc, other._terms, 1)
        return LaurentPoly(self.num_vars, acc)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.num_vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_ring(other)
        acc = dict(self._terms)
        add_terms(acc, other._terms, -1)
        return LaurentPoly(self.num_vars, acc)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentPoly(self.num_vars, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_coeff(other)
            if not c:
                return LaurentPoly(self.num_vars)
            return LaurentPoly(
                self.num_vars, {k: v * c for k, v in self._terms.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_ring(other)
        return LaurentPoly(
            self.num_vars,
            mul_terms(self._terms, other._terms, unit_key(self.num_vars)),
        )

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise UsageError("polynomial powers must be non-negative integers")
        result = LaurentPoly.const(self.num_vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base_needed = e > 1
            e >>= 1
            if base_needed and e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.num_vars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    __hash__ = None  # term dicts are conventionally mutable during builds

    # -- evaluation ---------------------------------------------------------

    def eval(self, point):
        """Exact value at a rational point (sequence of length num_vars).

        Odd stored exponents need the corresponding coordinate to be a
        non-negative perfect square; negative exponents need it nonzero.
        """
        point = [Fraction(v) for v in point]
        if len(point) != self.num_vars:
            raise UsageError("point length != num_vars")
        total = Fraction(0)
        for exps2, c in self.terms():
            val = Fraction(c)
            for x, e2 in zip(point, exps2):
                if e2:
                    val *= pow_stored(x, e2)
            total += val
        return total

    # -- exact division ------------------------------------------------------

    def exquo(self, divisor):
        """Exact quotient self / divisor; raises InexactDivisionError else.

        Both operands may be genuinely Laurent: each is first normalized by
        its per-variable minimum exponent (a monomial, hence a unit), after
        which ordinary lexicographic long division by the single divisor
        either terminates with remainder zero or provably detects that the
        division is not exact.
        """
        if not isinstance(divisor, LaurentPoly):
            raise UsageError("divisor must be a LaurentPoly")
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly(self.num_vars)
        n = self.num_vars
        unit = unit_key(n)

        def raw_min_offset(terms):
            mins = None
            for k in terms:
                exps = unpack_key(k, n)
                if mins is None:
                    mins = list(exps)
                else:
                    for i, e in enumerate(exps):
                        if e < mins[i]:
                            mins[i] = e
            # unbiased shift-accumulate; subtracting this from a packed key
            # shifts every field by the per-variable minimum
            off = 0
            for e in mins or []:
                off = (off << FIELD_BITS) + e
            return off

        off_r = raw_min_offset(self._terms)
        off_d = raw_min_offset(divisor._terms)
        r = {k - off_r: c for k, c in self._terms.items()}
        d = {k - off_d: c for k, c in divisor._terms.items()}
        kd = max(d)
        cd = d[kd]
        ed = unpack_key(kd, n)
        quotient = {}
        while r:
            kr = max(r)
            er = unpack_key(kr, n)
            eq = tuple(a - b for a, b in zip(er, ed))
            if any(e < 0 for e in eq):
                raise InexactDivisionError("division left a remainder")
            cq = _coeff_div(r[kr], cd)
            kq = pack_exponents(eq)
            quotient[kq] = cq
            muladd_terms(r, {kq: 1}, d, unit, -cq)
        shift = off_r - off_d
        return LaurentPoly(n, {k + shift: c for k, c in quotient.items()})

    # -- rendering -----------------------------------------------------------

    def canonical(self, name="x"):
        """Canonical text form: terms in descending lex order, exact coeffs.

        This string is the hashing and golden-file representation; its
        format is frozen by tests.
        """
        if not self._terms:
            return "0"
        parts = []
        for exps2, c in self.terms():
            factors = []
            for i, e2 in enumerate(exps2, start=1):
                if e2 == 0:
                    continue
                if e2 == 2:
                    factors.append(f"{name}{i}")
                elif e2 % 2 == 0:
                    factors.append(f"{name}{i}^{e2 // 2}")
                else:
                    factors.append(f"{name}{i}^({e2}/2)")
            cf = Fraction(c)
            if not factors:
                text = str(cf)
            elif cf == 1:
                text = "*".join(factors)
            elif cf == -1:
                text = "-" + "*".join(factors)
            else:
                text = str(cf) + "*" + "*".join(factors)
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def __repr__(self):
        body = self.canonical()
        if len(body) > 120:
            body = body[:117] + "..."
        return f"LaurentPoly[{self.num_vars}]({body})"
