"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored against a fixed conductor n in the power basis
1, z, ..., z^(phi(n)-1), z = exp(2*pi*i/n), reduced modulo the n-th
cyclotomic polynomial.  Internally the coefficient vector is a tuple of
integers over one positive common denominator, normalized so the gcd of
all numerators and the denominator is 1; the power basis is an integral
basis, so a value is an algebraic integer exactly when the denominator
is 1.  Everything is exact: equality and zero tests are decisions, never
threshold comparisons.

Mixed-conductor arithmetic through the operators lifts both operands to
the lcm conductor.  There is no automatic descent to smaller conductors,
so canonical hashing is only guaranteed between values sharing a
conductor (rationals hash canonically at every conductor).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Union

from .numutil import divisors, euler_phi

__all__ = [
    "Cyclotomic",
    "Rational",
    "cyclotomic_polynomial",
    "arith",
    "galois",
    "is_algebraic_integer",
    "to_complex_approx",
    "basis_size",
    "reduction_rows",
    "power_vector",
]

Rational = Fraction

_Scalar = Union[int, Fraction]


# ---------------------------------------------------------------- polynomials
# Integer polynomials as tuples of coefficients, lowest degree first.


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod_exact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # b monic; remainder must vanish (used only for cyclotomic recursion)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = r[i + len(b) - 1]
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                r[i + j] -= c * bj
    if any(r):
        raise ArithmeticError("non-exact polynomial division")
    return _poly_trim(q)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first.

    Computed by exact division of x^n - 1 by the product of the lower
    cyclotomic polynomials, so the result is always an integer vector.
    """
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    if n == 1:
        return (-1, 1)
    num = tuple([-1] + [0] * (n - 1) + [1])  # x^n - 1
    den: tuple[int, ...] = (1,)
    for d in divisors(n):
        if d < n:
            den = _poly_mul(den, cyclotomic_polynomial(d))
    return _poly_divmod_exact(num, den)


# ------------------------------------------------------------ conductor cache


class _Context:
    """Per-conductor reduction data: x^k mod Phi_n for every needed k."""

    __slots__ = ("n", "phi", "poly", "red", "pow")

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_polynomial(n)
        self.phi = len(self.poly) - 1
        phi = self.phi
        # red[k - phi] = coefficient vector of x^k mod Phi_n for k in [phi, 2*phi-2]
        cur = [-c for c in self.poly[:phi]]  # x^phi
        red = [tuple(cur)]
        for _ in range(phi - 2):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for e in range(phi):
                    cur[e] -= top * self.poly[e]
            red.append(tuple(cur))
        self.red = red
        # pow[m] = coefficient vector of x^m mod Phi_n for m in [0, n)
        vec = [0] * phi
        vec[0] = 1
        pows = [tuple(vec)]
        for _ in range(n - 1):
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for e in range(phi):
                    vec[e] -= top * self.poly[e]
            pows.append(tuple(vec))
        self.pow = pows


@lru_cache(maxsize=None)
def _context(n: int) -> _Context:
    return _Context(n)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        den = -den
        num = [-c for c in num]
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if g > 1:
        den //= g
        num = [c // g for c in num]
    if all(c == 0 for c in num):
        den = 1
    return tuple(num), den


class Cyclotomic:
    """An exact element of Q(zeta_n) in the power basis."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num: tuple[int, ...], den: int = 1):
        ctx = _context(n)
        if len(num) != ctx.phi:
            raise ValueError("coefficient vector has wrong length for conductor")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.n = n
        self.num, self.den = _normalize(list(num), den)

    # ---------------------------------------------------------- constructors

    @classmethod
    def _make(cls, n: int, num: tuple[int, ...], den: int) -> "Cyclotomic":
        v = cls.__new__(cls)
        v.n, v.num, v.den = n, num, den
        return v

    @classmethod
    def zero(cls, n: int = 1) -> "Cyclotomic":
        return cls._make(n, (0,) * _context(n).phi, 1)

    @classmethod
    def one(cls, n: int = 1) -> "Cyclotomic":
        vec = [0] * _context(n).phi
        vec[0] = 1
        return cls._make(n, tuple(vec), 1)

    @classmethod
    def from_rational(cls, q: _Scalar, n: int = 1) -> "Cyclotomic":
        q = Fraction(q)
        vec = [0] * _context(n).phi
        vec[0] = q.numerator
        return cls._make(n, tuple(vec), q.denominator)

    @classmethod
    def root_of_unity(cls, n: int, e: int = 1) -> "Cyclotomic":
        """zeta_n^e at conductor n."""
        return cls._make(n, _context(n).pow[e % n], 1)

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Mapping[int, _Scalar] | Iterable[_Scalar]) -> "Cyclotomic":
        """Build from exponent->rational map (or a dense coefficient list)."""
        ctx = _context(n)
        if isinstance(coeffs, Mapping):
            items = list(coeffs.items())
        else:
            items = list(enumerate(coeffs))
        fracs = [(e, Fraction(c)) for e, c in items]
        den = 1
        for _, c in fracs:
            den = lcm(den, c.denominator)
        vec = [0] * ctx.phi
        for e, c in fracs:
            if not 0 <= e < ctx.phi:
                raise ValueError(f"exponent {e} outside power basis of conductor {n}")
            vec[e] += int(c * den)
        num, den = _normalize(vec, den)
        return cls._make(n, num, den)

    # ------------------------------------------------------------- predicates

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.num[1:])

    @property
    def is_algebraic_integer(self) -> bool:
        return self.den == 1

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError("value is not rational")
        return Fraction(self.num[0], self.den)

    def coeff(self, e: int) -> Fraction:
        """Coefficient of zeta_n^e in the power basis."""
        return Fraction(self.num[e], self.den)

    # ------------------------------------------------------------- conductors

    def lift(self, m: int) -> "Cyclotomic":
        """Rewrite at conductor m (the current conductor must divide m)."""
        if m == self.n:
            return self
        if m % self.n:
            raise ValueError("can only lift to a multiple of the conductor")
        ctx = _context(m)
        t = m // self.n
        vec = [0] * ctx.phi
        for e, c in enumerate(self.num):
            if c:
                pw = ctx.pow[(e * t) % m]
                for f in range(ctx.phi):
                    vec[f] += c * pw[f]
        num, den = _normalize(vec, self.den)
        return Cyclotomic._make(m, num, den)

    @staticmethod
    def common(a: "Cyclotomic", b: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if a.n == b.n:
            return a, b
        m = lcm(a.n, b.n)
        return a.lift(m), b.lift(m)

    # ------------------------------------------------------------- arithmetic

    def __add__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        a, b = Cyclotomic.common(self, other)
        d = lcm(a.den, b.den)
        sa, sb = d // a.den, d // b.den
        vec = [sa * x + sb * y for x, y in zip(a.num, b.num)]
        num, den = _normalize(vec, d)
        return Cyclotomic._make(a.n, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._make(self.n, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = _coerce(other, self.n)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            vec = [c * q.numerator for c in self.num]
            num, den = _normalize(vec, self.den * q.denominator)
            return Cyclotomic._make(self.n, num, den)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = Cyclotomic.common(self, other)
        ctx = _context(a.n)
        phi = ctx.phi
        conv = [0] * (2 * phi - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        conv[i + j] += x * y
        vec = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = ctx.red[k - phi]
                for e in range(phi):
                    vec[e] += c * row[e]
        num, den = _normalize(vec, a.den * b.den)
        return Cyclotomic._make(a.n, num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational scalar (field inverses not needed)."""
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(q.denominator, q.numerator)
        if isinstance(other, Cyclotomic) and other.is_rational:
            return self / other.rational_value()
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclotomic.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # ----------------------------------------------------------------- galois

    def galois(self, k: int) -> "Cyclotomic":
        """Apply the automorphism zeta -> zeta^k; k must be coprime to n."""
        n = self.n
        k %= n
        if gcd(k, n) != 1:
            raise ValueError(f"galois exponent {k} not coprime to conductor {n}")
        ctx = _context(n)
        vec = [0] * ctx.phi
        for e, c in enumerate(self.num):
            if c:
                pw = ctx.pow[(e * k) % n]
                for f in range(ctx.phi):
                    vec[f] += c * pw[f]
        num, den = _normalize(vec, self.den)
        return Cyclotomic._make(n, num, den)

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation (the automorphism zeta -> zeta^-1)."""
        return self.galois(-1)

    # ------------------------------------------------------------- comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.rational_value() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.n == other.n:
            return self.num == other.num and self.den == other.den
        a, b = Cyclotomic.common(self, other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self.is_rational:
            return hash(Fraction(self.num[0], self.den))
        return hash((self.n, self.num, self.den))

    def key(self) -> tuple:
        """Total-order key among values sharing this conductor."""
        return (self.num, self.den)

    # ---------------------------------------------------------------- display

    def __repr__(self):
        if self.is_rational:
            return f"Cyclotomic({self.rational_value()!s}, n={self.n})"
        terms = []
        for e, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(f"{q}*z{e}" if e else f"{q}")
        return f"Cyclotomic(n={self.n}, {' + '.join(terms)})"

    def __str__(self):
        if self.is_rational:
            return str(self.rational_value())
        terms = []
        for e, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(f"{q}*z{e}" if e else f"{q}")
        return " + ".join(terms)

    # ------------------------------------------------------------------- JSON

    def to_json(self) -> dict:
        coeffs = []
        for e, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                coeffs.append([e, str(q.numerator), str(q.denominator)])
        return {"n": self.n, "c": coeffs}

    @classmethod
    def from_json(cls, obj: dict) -> "Cyclotomic":
        n = obj["n"]
        ctx = _context(n)
        vec: dict[int, Fraction] = {}
        last = -1
        for e, nu, de in obj["c"]:
            if not isinstance(e, int) or e <= last:
                raise ValueError("exponents must be strictly increasing integers")
            last = e
            if e >= ctx.phi:
                raise ValueError(f"exponent {e} outside power basis of conductor {n}")
            q = Fraction(int(nu), int(de))
            if q == 0:
                raise ValueError("zero coefficients must be omitted")
            vec[e] = q
        return cls.from_coeffs(n, vec)


def _coerce(x, n: int):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.from_rational(x, n)
    return NotImplemented


# ------------------------------------------------------------- module surface


def arith(a: Cyclotomic, b: Cyclotomic, op: str) -> Cyclotomic:
    """Strict same-conductor add/sub/mul (callers lift beforehand)."""
    if a.n != b.n:
        raise ValueError(f"conductor mismatch: {a.n} vs {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def galois(a: Cyclotomic, k: int) -> Cyclotomic:
    return a.galois(k)


def is_algebraic_integer(a: Cyclotomic) -> bool:
    return a.is_algebraic_integer


def to_complex_approx(a: Cyclotomic, digits: int = 15) -> complex:
    """Floating approximation for display; never used in a decision.

    Evaluated with mpmath at the requested working precision, then rounded
    to a double-precision complex (so the practical accuracy floor is about
    1e-16 regardless of `digits`).
    """
    import mpmath

    with mpmath.workdps(digits + 10):
        total = mpmath.mpc(0)
        for e, c in enumerate(a.num):
            if c:
                total += c * mpmath.expjpi(Fraction(2 * e, a.n))
        total /= a.den
        return complex(total)


def value_order(a: Cyclotomic) -> int | None:
    """Multiplicative order if `a` is a root of unity, else None."""
    if a.is_zero:
        return None
    for d in divisors(a.n if a.n % 2 == 0 else 2 * a.n):
        if (a ** d) == 1:
            return d
    return None


# ------------------------------------------------------- basis introspection
# Integer data about the power basis of Q(zeta_n), used by the table modules
# to run bulk exact computations on integer tensors.


def basis_size(n: int) -> int:
    """Dimension phi(n) of the power basis of conductor n."""
    return _context(n).phi


def reduction_rows(n: int) -> list[tuple[int, ...]]:
    """Power-basis vector of x^m mod Phi_n for every m up to 2*phi(n)-2.

    Row m is the reduction of the degree-m monomial, so a convolution of two
    basis vectors folds back into the basis by summing these rows.
    """
    ctx = _context(n)
    ident = [tuple(1 if e == m else 0 for e in range(ctx.phi)) for m in range(ctx.phi)]
    return ident + list(ctx.red)


def power_vector(n: int, m: int) -> tuple[int, ...]:
    """Power-basis vector of zeta_n^m (m arbitrary, reduced mod n)."""
    return _context(n).pow[m % n]
