"""Finite fields GF(p^m) and polynomial factorization over F_p.

A field is described by a FieldSpec: characteristic p and a monic
irreducible modulus of degree m over F_p, coefficients ascending.  The
default modulus for field(p, m) is the least one when the coefficient
vectors (highest degree first, leading 1 omitted) are compared
lexicographically, so field(p, 1) always has modulus x and results are
reproducible byte for byte.  Elements are coefficient vectors reduced mod
the modulus.

factor_mod_p gives the complete factorization of the monic associate of a
polynomial into monic irreducibles: squarefree split (with the x -> x^p
descent in characteristic p), then distinct-degree, then equal-degree
splitting with a PRNG reseeded deterministically from the input.
"""

from __future__ import annotations

import hashlib
import itertools
import random
from dataclasses import dataclass
from math import gcd

from .numutil import factorint, is_prime

__all__ = ["FieldSpec", "FieldElement", "field", "field_with_modulus", "frobenius", "factor_mod_p"]

Poly = tuple[int, ...]  # coefficients ascending, normalized: no trailing zeros


# ------------------------------------------------------- polynomials over F_p


def _trim(c: list[int]) -> Poly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_mod(a, p: int) -> Poly:
    return _trim([c % p for c in a])


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return (), a
    inv_lead = pow(b[-1], -1, p)
    q = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        c = r[i + db] % p
        if c:
            c = c * inv_lead % p
            q[i] = c
            for j in range(db + 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
    return _trim(q), _trim(r)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple(c * inv % p for c in a)  # monic
    return a


def poly_powmod(a: Poly, e: int, mod: Poly, p: int) -> Poly:
    result: Poly = (1,)
    a = poly_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, a, p), mod, p)[1]
        a = poly_divmod(poly_mul(a, a, p), mod, p)[1]
        e >>= 1
    return result


def _poly_deriv(a: Poly, p: int) -> Poly:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _is_irreducible(f: Poly, p: int) -> bool:
    # x^(p^m) == x mod f, and x^(p^(m/r)) - x coprime to f for prime r | m
    m = len(f) - 1
    if m <= 0:
        return False
    x = poly_divmod((0, 1), f, p)[1]  # reduce in case deg f == 1
    h = x
    powers = {}
    for i in range(1, m + 1):
        h = poly_powmod(h, p, f, p)
        powers[i] = h
    if poly_sub(powers[m], x, p):
        return False
    for r in factorint(m):
        if len(poly_gcd(poly_sub(powers[m // r], x, p), f, p)) - 1 != 0:
            return False
    return True


# ------------------------------------------------------------------ FieldSpec


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) presented as F_p[x] modulo a monic irreducible of degree m."""

    p: int
    m: int
    modulus: Poly

    @property
    def order(self) -> int:
        return self.p**self.m

    def element(self, coeffs) -> "FieldElement":
        vec = list(coeffs) + [0] * (self.m - len(list(coeffs)))
        if len(vec) > self.m:
            vec = list(poly_divmod(_trim(vec), self.modulus, self.p)[1])
            vec += [0] * (self.m - len(vec))
        return FieldElement(self, tuple(c % self.p for c in vec[: self.m]))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        """The residue of x."""
        return self.element([0, 1])

    def from_int(self, k: int) -> "FieldElement":
        return self.element([k % self.p])

    def elements(self):
        """All field elements, ascending lexicographic in (c_{m-1},...,c_0)."""
        for rev in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, tuple(reversed(rev)))


def field(p: int, m: int) -> FieldSpec:
    """GF(p^m) with the canonical (least) monic irreducible modulus."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    for rev in itertools.product(range(p), repeat=m):
        candidate = _trim(list(reversed(rev)) + [1])
        if _is_irreducible(candidate, p):
            return FieldSpec(p, m, candidate)
    raise RuntimeError("unreachable: irreducibles of every degree exist")


def field_with_modulus(p: int, modulus) -> FieldSpec:
    """GF(p^deg) defined by an explicitly chosen irreducible modulus."""
    f = poly_mod(modulus, p)
    if not f or f[-1] != 1:
        raise ValueError("modulus must be monic mod p")
    if not _is_irreducible(f, p):
        raise ValueError("modulus is not irreducible mod p")
    return FieldSpec(p, len(f) - 1, f)


# --------------------------------------------------------------- FieldElement


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]  # length m, reduced mod p

    def _check(self, other: "FieldElement"):
        if self.spec != other.spec:
            raise ValueError("field mismatch")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.spec.p
            return FieldElement(self.spec, tuple(a * other % p for a in self.coeffs))
        self._check(other)
        spec = self.spec
        prod = poly_mul(_trim(list(self.coeffs)), _trim(list(other.coeffs)), spec.p)
        rem = poly_divmod(prod, spec.modulus, spec.p)[1]
        return spec.element(rem)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        # a^(q-2) in a field of order q
        return self ** (self.spec.order - 2)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        spec = self.spec
        out = spec.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def to_json(self) -> dict:
        return {"p": self.spec.p, "m": self.spec.m, "c": list(self.coeffs)}

    def __repr__(self):
        return f"FieldElement(GF({self.spec.p}^{self.spec.m}), {list(self.coeffs)})"


def frobenius(a: FieldElement, q: int) -> FieldElement:
    """The power map a -> a^q for q = p^t a power of the characteristic."""
    p = a.spec.p
    t = 0
    qq = q
    while qq > 1 and qq % p == 0:
        qq //= p
        t += 1
    if qq != 1:
        raise ValueError(f"{q} is not a power of the characteristic {p}")
    if t > a.spec.m:
        raise ValueError("frobenius exponent exceeds the field degree")
    return a**q


# ------------------------------------------------------------- factorization


def _squarefree_parts(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """(g, k) pairs with f = prod g^k, each g squarefree, pairwise coprime."""
    out: list[tuple[Poly, int]] = []
    deriv = _poly_deriv(f, p)
    if not deriv:
        # f = g(x^p); extract p-th root (coefficient Frobenius is identity on F_p)
        root = _trim([f[i] for i in range(0, len(f), p)])
        for g, k in _squarefree_parts(root, p):
            out.append((g, k * p))
        return out
    c = poly_gcd(f, deriv, p)
    w = poly_divmod(f, c, p)[0]
    k = 1
    while len(w) > 1:
        y = poly_gcd(w, c, p)
        z = poly_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, k))
        w = y
        c = poly_divmod(c, y, p)[0]
        k += 1
    if len(c) > 1:
        # leftover has every multiplicity divisible by p, hence zero derivative
        out.extend(_squarefree_parts(c, p))
    return out


def _distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """(product, d) pairs: product of the degree-d irreducible factors of squarefree f."""
    out = []
    x: Poly = (0, 1)
    h = x
    d = 0
    while len(f) - 1 > 2 * d:
        d += 1
        h = poly_powmod(h, p, f, p)
        g = poly_gcd(poly_sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = poly_divmod(f, g, p)[0]
            h = poly_divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """All monic irreducible (degree d) factors of f, f a product of them."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map over GF(2^d)
            b = a
            t = a
            for _ in range(d - 1):
                b = poly_powmod(b, 2, f, p)
                t = poly_add(t, b, p)
            g = poly_gcd(t, f, p)
        else:
            g = poly_gcd(a, f, p)
            if 1 < len(g) < len(f):
                pass  # lucky gcd; use it directly
            else:
                b = poly_powmod(a, (p**d - 1) // 2, f, p)
                g = poly_gcd(poly_sub(b, (1,), p), f, p)
        if 1 < len(g) < len(f):
            rest = poly_divmod(f, g, p)[0]
            return _equal_degree_split(g, d, p, rng) + _equal_degree_split(rest, d, p, rng)


def factor_mod_p(poly_coeffs, p: int) -> list[tuple[Poly, int]]:
    """Factor the monic associate of a polynomial over F_p.

    Returns [(monic irreducible, multiplicity), ...] sorted by degree and
    then by coefficient vector; the product over the list is the monic
    associate of the input mod p.  The leading coefficient must be a unit
    mod p.  Splitting is randomized internally but reseeded from a digest
    of (p, input), so the output is deterministic.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    raw = list(poly_coeffs)
    while raw and raw[-1] == 0:
        raw.pop()
    if not raw:
        raise ValueError("cannot factor the zero polynomial")
    if raw[-1] % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    f = poly_mod(raw, p)
    if f[-1] != 1:
        inv = pow(f[-1], -1, p)
        f = tuple(c * inv % p for c in f)
    if len(f) == 1:
        return []
    seed = int.from_bytes(hashlib.sha256(repr((p, f)).encode()).digest()[:8], "big")
    rng = random.Random(seed)
    found: dict[Poly, int] = {}
    for g, mult in _squarefree_parts(f, p):
        for prod, d in _distinct_degree(g, p):
            for irr in _equal_degree_split(prod, d, p, rng):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(), key=lambda kv: (len(kv[0]), tuple(reversed(kv[0]))))
