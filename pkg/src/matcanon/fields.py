"""Exact coefficient fields: the rationals and prime fields GF(p).

A field object owns the raw representation of its elements (``Fraction``
for the rationals, canonical residues ``0 <= v < p`` for GF(p)) and all
arithmetic on raw values.  :class:`Scalar` is the user-facing wrapper that
pairs a raw value with its field and overloads the usual operators.  The
heavy algorithms in the rest of the package work on raw values through the
field methods, so they never pay for wrapper allocation in inner loops.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, ParseError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PolyOps:
    """Bundle of raw dense-polynomial helpers specialized to one field.

    Polynomials are plain lists of raw field values, ascending degree, with
    no trailing zeros (the zero polynomial is the empty list).
    """

    __slots__ = ("add", "sub", "mul", "scale", "divmod", "monic", "neg")

    def __init__(self, add, sub, mul, scale, divmod_, monic, neg):
        self.add = add
        self.sub = sub
        self.mul = mul
        self.scale = scale
        self.divmod = divmod_
        self.monic = monic
        self.neg = neg


class Field:
    """Common behaviour of the two supported coefficient fields."""

    characteristic: int

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.canon(value))

    scalar = __call__

    def poly_ops(self) -> PolyOps:
        ops = getattr(self, "_poly_ops", None)
        if ops is None:
            ops = self._build_poly_ops()
            self._poly_ops = ops
        return ops

    # Raw-value interface implemented by subclasses:
    #   zero, one, canon, add, sub, mul, neg, inv, div, is_zero, sort_key, sqrt


class Rationals(Field):
    """The field of rational numbers with Fraction-backed exact values."""

    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def canon(self, value) -> Fraction:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"expected a rational scalar, got one over {value.field}")
            return value.value
        if isinstance(value, bool) or isinstance(value, float):
            raise ParseError(f"rational values must be exact, got {value!r}")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, str):
            text = value.strip()
            try:
                if "/" in text:
                    num, den = text.split("/")
                    return Fraction(int(num, 10), int(den, 10))
                return Fraction(int(text, 10))
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad rational literal {value!r}") from exc
        raise ParseError(f"cannot interpret {value!r} as a rational")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a) -> bool:
        return not a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero")
        return a / b

    @staticmethod
    def sort_key(a):
        return a

    def sqrt(self, a):
        """Distinct square roots of ``a``, positive first, or None."""
        if not a:
            return (self.zero,)
        if a < 0:
            return None
        rn, rd = isqrt(a.numerator), isqrt(a.denominator)
        if rn * rn != a.numerator or rd * rd != a.denominator:
            return None
        r = Fraction(rn, rd)
        return (r, -r)

    def _build_poly_ops(self) -> PolyOps:
        zero = Fraction(0)

        def strip(c):
            while c and not c[-1]:
                c.pop()
            return c

        def padd(f, g):
            if len(f) < len(g):
                f, g = g, f
            out = list(f)
            for i, c in enumerate(g):
                out[i] += c
            return strip(out)

        def psub(f, g):
            out = list(f) + [zero] * (len(g) - len(f))
            for i, c in enumerate(g):
                out[i] -= c
            return strip(out)

        def pneg(f):
            return [-c for c in f]

        def pscale(f, s):
            if not s:
                return []
            return [c * s for c in f]

        def pmul(f, g):
            if not f or not g:
                return []
            out = [zero] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                if a:
                    for j, b in enumerate(g):
                        out[i + j] += a * b
            return strip(out)

        def pdivmod(f, g):
            if not g:
                raise DivisionByZero("polynomial division by zero")
            r = list(f)
            dg = len(g) - 1
            lead = g[-1]
            if len(r) - 1 < dg:
                return [], strip(r)
            q = [zero] * (len(r) - dg)
            for k in range(len(r) - 1, dg - 1, -1):
                c = r[k]
                if not c:
                    continue
                c = c / lead
                q[k - dg] = c
                for j, b in enumerate(g):
                    r[k - dg + j] -= c * b
            return strip(q), strip(r)

        def pmonic(f):
            if not f:
                raise DivisionByZero("cannot normalize the zero polynomial")
            lead = f[-1]
            if lead == 1:
                return list(f)
            return [c / lead for c in f]

        return PolyOps(padd, psub, pmul, pscale, pdivmod, pmonic, pneg)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """GF(p) for a prime p; values are canonical residues in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError(f"prime modulus must be an integer, got {p!r}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def canon(self, value) -> int:
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"expected a scalar over {self}, got one over {value.field}")
            return value.value
        if isinstance(value, bool) or isinstance(value, float):
            raise ParseError(f"GF({self.p}) values must be integers, got {value!r}")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            try:
                return int(value.strip(), 10) % self.p
            except ValueError as exc:
                raise ParseError(f"bad GF({self.p}) literal {value!r}") from exc
        raise ParseError(f"cannot interpret {value!r} as an element of {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return a * pow(b, self.p - 2, self.p) % self.p

    @staticmethod
    def sort_key(a):
        return a

    def sqrt(self, a):
        """Distinct square roots of ``a``, smallest residue first, or None."""
        p = self.p
        if a == 0:
            return (0,)
        if p == 2:
            return (a,)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        r = self._tonelli_shanks(a)
        return (r, p - r) if r <= p - r else (p - r, r)

    def _tonelli_shanks(self, a: int) -> int:
        p = self.p
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            t2, i = t * t % p, 1
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def _build_poly_ops(self) -> PolyOps:
        p = self.p

        def strip(c):
            while c and not c[-1]:
                c.pop()
            return c

        def padd(f, g):
            if len(f) < len(g):
                f, g = g, f
            out = list(f)
            for i, c in enumerate(g):
                out[i] = (out[i] + c) % p
            return strip(out)

        def psub(f, g):
            out = list(f) + [0] * (len(g) - len(f))
            for i, c in enumerate(g):
                out[i] = (out[i] - c) % p
            return strip(out)

        def pneg(f):
            return [-c % p for c in f]

        def pscale(f, s):
            s %= p
            if s == 0:
                return []
            return [c * s % p for c in f]

        def pmul(f, g):
            if not f or not g:
                return []
            out = [0] * (len(f) + len(g) - 1)
            for i, a in enumerate(f):
                if a:
                    for j, b in enumerate(g):
                        out[i + j] += a * b
            return strip([c % p for c in out])

        def pdivmod(f, g):
            if not g:
                raise DivisionByZero("polynomial division by zero")
            r = list(f)
            dg = len(g) - 1
            ilead = pow(g[-1], p - 2, p)
            if len(r) - 1 < dg:
                return [], strip(r)
            q = [0] * (len(r) - dg)
            for k in range(len(r) - 1, dg - 1, -1):
                c = r[k] % p
                if c == 0:
                    continue
                c = c * ilead % p
                q[k - dg] = c
                for j, b in enumerate(g):
                    r[k - dg + j] -= c * b
            return strip([c % p for c in q]), strip([c % p for c in r])

        def pmonic(f):
            if not f:
                raise DivisionByZero("cannot normalize the zero polynomial")
            lead = f[-1]
            if lead == 1:
                return list(f)
            il = pow(lead, p - 2, p)
            return [c * il % p for c in f]

        return PolyOps(padd, psub, pmul, pscale, pdivmod, pmonic, pneg)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (p is checked for primality)."""
    field = _gf_cache.get(p)
    if field is None:
        field = PrimeField(p)
        _gf_cache[p] = field
    return field


class Scalar:
    """An exact field element: a canonical raw value tagged with its field.

    Rational values are always in lowest terms with positive denominator
    (guaranteed by Fraction); prime-field values are canonical residues.
    Arithmetic mixes freely with ints, Fractions, and literals, which are
    canonicalized into the same field first.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine scalars over {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.field.canon(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.value, v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(v, self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def sort_key(self):
        return self.field.sort_key(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.value == self.field.canon(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.value} over {self.field})"


def sqrt_if_exists(x: Scalar) -> tuple[Scalar, ...] | None:
    """All square roots of x in its field, or None if there are none.

    The canonical root comes first (positive over Q, smaller residue over
    GF(p)); the tuple has one entry when the two roots coincide, as for
    x = 0 or in characteristic 2.
    """
    roots = x.field.sqrt(x.value)
    if roots is None:
        return None
    return tuple(Scalar(x.field, r) for r in roots)
