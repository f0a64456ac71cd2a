"""Named group constructions.

Small controls (symmetric, dihedral, quaternion, abelian) plus the three
p-group families used throughout: the order-p^5 class-3 family, the
order-p^7 coclass-2 family, and the Suzuki 2-group style tuple groups
G(q, s, l) built from a Frobenius-twisted multiplication on l-tuples over
GF(q^s).  Also the central growing quotient (G x Z)/<x> that preserves a
character table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .finitefield import FieldElement, field, frobenius
from .groups import (
    AbelianTupleGroup,
    FiniteGroup,
    PcGroup,
    PcPresentation,
    PermGroup,
    QuotientGroup,
    commutator_subgroup,
    subgroup_closure,
)
from .numutil import factorint, is_prime

__all__ = [
    "abelian",
    "symmetric",
    "dihedral",
    "quaternion8",
    "CentralPowerTwist",
    "hanaki_p5",
    "coclass2_p7",
    "SuzukiParams",
    "TupleFieldGroup",
    "suzuki_type",
    "suzuki_profile_expected",
    "grow_quotient",
    "element_word",
]


def abelian(invariants) -> AbelianTupleGroup:
    inv = list(invariants)
    desc = "abelian:" + "x".join(str(m) for m in inv)
    return AbelianTupleGroup(inv, descriptor=desc)


def symmetric(n: int) -> PermGroup:
    if not 1 <= n <= 5:
        raise ValueError("n must be between 1 and 5")
    gens = []
    if n >= 2:
        gens.append(tuple([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return PermGroup(n, gens, descriptor=f"sym:{n}")


def dihedral(n: int) -> PermGroup:
    """Symmetries of the regular n-gon on vertices 0..n-1, order 2n."""
    if n < 3:
        raise ValueError("n must be at least 3")
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return PermGroup(n, [rot, ref], descriptor=f"dih:{n}")


def quaternion8() -> PcGroup:
    pres = PcPresentation(
        p=2,
        ngens=3,
        powers=(((2, 1),), ((2, 1),), ()),
        commutators={(1, 0): ((2, 1),)},
    )
    return PcGroup(pres, descriptor="q8")


# ------------------------------------------------------------ p-group families


@dataclass(frozen=True)
class CentralPowerTwist:
    """Optional p-th power assignments g_i^p = word for family generators.

    assignments is a tuple of (generator index, word) pairs; each word is a
    tuple of (generator index, exponent) letters and may use only the
    family's central generators.
    """

    assignments: tuple = ()

    def power_words(self, p: int, ngens: int, central: frozenset, default_trivial) -> tuple:
        words = list(default_trivial)
        for g, word in self.assignments:
            if not 0 <= g < ngens or g in central:
                raise ValueError(f"twist target {g} is not a twistable generator")
            for c, _ in word:
                if c not in central:
                    raise ValueError("twist words must use only the central generators")
            words[g] = tuple((c, e % p) for c, e in word if e % p)
        return tuple(words)


def hanaki_p5(p: int, twist: CentralPowerTwist | None = None) -> PcGroup:
    """Order p^5 class-3 group on generators a1, a2, b, c1, c2.

    Relations: [a2, a1] = b^-1, [b, a1] = c1^-1, [b, a2] = c2^-1, with c1
    and c2 central and every generator of order p unless twisted.  For any
    odd prime this has center <c1, c2> of order p^2, derived subgroup
    <b, c1, c2> of order p^3, and p^2 + (p^3 - 1) conjugacy classes.
    """
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    comms = {(1, 0): ((2, p - 1),), (2, 0): ((3, p - 1),), (2, 1): ((4, p - 1),)}
    powers = ((), (), (), (), ())
    if twist is not None:
        powers = twist.power_words(p, 5, frozenset({3, 4}), powers)
    pres = PcPresentation(p=p, ngens=5, powers=powers, commutators=comms)
    desc = f"hanaki:p={p}" if twist is None or not twist.assignments else None
    return PcGroup(pres, descriptor=desc)


def coclass2_p7(p: int, twist: CentralPowerTwist | None = None) -> PcGroup:
    """Order p^7 class-5 group on generators a1, a2, b1, b2, b3, c1, c2.

    Relations: [a2, a1] = b1^-1, [b1, a1] = b2^-1, [b2, a1] = b3^-1,
    [b3, a1] = c1^-1, [b2, a2] = c2, [b3, a2] = c2^-1, [b2, b1] = c2,
    with c1 and c2 central.  Lower central series has orders p^7, p^5,
    p^4, p^3, p^2, 1, so the class is 5 and the coclass is 2; the center
    is <c1, c2> of order p^2 and the second derived subgroup is <c2>.

    The sign of [b2, a2] is forced: solving the overlap (consistency)
    conditions of the presentation linearly over the central tails shows
    no consistent completion exists with [b2, a2] = c2^-1, while the
    relation set below collects confluently for every prime tested.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("p must be a prime >= 5")
    comms = {
        (1, 0): ((2, p - 1),),
        (2, 0): ((3, p - 1),),
        (3, 0): ((4, p - 1),),
        (4, 0): ((5, p - 1),),
        (3, 1): ((6, 1),),
        (4, 1): ((6, p - 1),),
        (3, 2): ((6, 1),),
    }
    powers = ((), (), (), (), (), (), ())
    if twist is not None:
        powers = twist.power_words(p, 7, frozenset({5, 6}), powers)
    pres = PcPresentation(p=p, ngens=7, powers=powers, commutators=comms)
    desc = f"coclass2:p={p}" if twist is None or not twist.assignments else None
    return PcGroup(pres, descriptor=desc)


# ------------------------------------------------------------ tuple groups


@dataclass(frozen=True)
class SuzukiParams:
    q: int
    s: int
    l: int


class TupleFieldGroup(FiniteGroup):
    """l-tuples over GF(q^s) with the Frobenius-twisted product.

    (a * b)_i = a_i + b_i + sum_{j=1}^{i-1} theta^j(a_{i-j}) * b_j where
    theta is the q-power Frobenius.  Layer l is central; layer 1 elements
    generate everything.
    """

    def __init__(self, params: SuzukiParams):
        super().__init__()
        self.params = params
        q, s, l = params.q, params.s, params.l
        fac = factorint(q)
        if len(fac) != 1:
            raise ValueError("q must be a prime power")
        p, e = next(iter(fac.items()))
        if s < 1 or s % 2 == 0:
            raise ValueError("s must be odd")
        if math.gcd(s, math.factorial(l)) != 1:
            raise ValueError("s must be coprime to l!")
        # no coprimality with q itself: the reference tuples (q=3, s=3, l<=2)
        # require gcd(s, q) > 1 to be admitted
        if math.gcd(s, q - 1) != 1:
            raise ValueError("s must be coprime to q - 1")
        if l < 1:
            raise ValueError("l must be at least 1")
        self.field = field(p, e * s)
        self.zero = self.field.zero()
        self.identity = (self.zero,) * l
        basis = [self.field.element(tuple(1 if t == d else 0 for t in range(e * s)))
                 for d in range(e * s)]
        gens = []
        for layer in range(l):
            for v in basis:
                gens.append(tuple(v if t == layer else self.zero for t in range(l)))
        self.generators = gens
        self.descriptor = f"suzuki:q={q},s={s},l={l}"

    def _theta_pow(self, x: FieldElement, j: int) -> FieldElement:
        q = self.params.q
        for _ in range(j):
            x = frobenius(x, q)
        return x

    def mul(self, a, b):
        l = self.params.l
        out = []
        for i in range(1, l + 1):
            c = a[i - 1] + b[i - 1]
            for j in range(1, i):
                c = c + self._theta_pow(a[i - j - 1], j) * b[j - 1]
            out.append(c)
        return tuple(out)

    def inv(self, a):
        l = self.params.l
        out: list[FieldElement] = []
        for i in range(1, l + 1):
            c = -a[i - 1]
            for j in range(1, i):
                c = c - self._theta_pow(a[i - j - 1], j) * out[j - 1]
            out.append(c)
        return tuple(out)

    def to_description(self):
        return {"kind": "tuple", "q": self.params.q, "s": self.params.s, "l": self.params.l}


def suzuki_type(params: SuzukiParams) -> TupleFieldGroup:
    G = TupleFieldGroup(params)
    G.descriptor = f"suzuki:q={params.q},s={params.s},l={params.l}"
    return G


def suzuki_profile_expected(params: SuzukiParams) -> list[tuple[int, int, int]]:
    """Per-layer (character count, degree, class size) rows, layers 1..l.

    Layer i contributes q^(l-i) * (q^s - 1) characters (q^s at i = l) of
    degree q^((l-i)(s-1)/2) paired with classes of size q^((l-i)(s-1)).
    """
    q, s, l = params.q, params.s, params.l
    rows = []
    for i in range(1, l + 1):
        count = q ** s if i == l else q ** (l - i) * (q ** s - 1)
        half = (l - i) * (s - 1)
        if half % 2:
            raise ValueError("degree exponent is not integral")
        rows.append((count, q ** (half // 2), q ** half))
    return rows


# ------------------------------------------------------------ central growing


def element_word(G: FiniteGroup, x) -> tuple[int, ...]:
    """x as a product of generators, found breadth-first."""
    if x == G.identity:
        return ()
    parent: dict = {G.identity: None}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for y in frontier:
            for gi, g in enumerate(G.generators):
                z = G.mul(y, g)
                if z not in parent:
                    parent[z] = (y, gi)
                    if z == x:
                        word = []
                        while parent[z] is not None:
                            z, gi = parent[z]
                            word.append(gi)
                        return tuple(reversed(word))
                    nxt.append(z)
        frontier = nxt
    raise ValueError("element is not in the group")


def grow_quotient(G: FiniteGroup, x) -> QuotientGroup:
    """Quotient by a central cyclic subgroup that misses the derived subgroup.

    The character table of the result coincides with a quotient table of G,
    which is the growing step for transposability witnesses.
    """
    for g in G.generators:
        if G.mul(x, g) != G.mul(g, x):
            raise ValueError("element is not central")
    cyclic = subgroup_closure(G, [x])
    derived = set(commutator_subgroup(G))
    if sum(1 for y in cyclic if y in derived) > 1:
        raise ValueError("cyclic subgroup meets the derived subgroup")
    return QuotientGroup(G, cyclic, _by_words=[element_word(G, x)])
