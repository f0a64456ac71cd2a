"""Finite group construction and the class-level machinery.

A FiniteGroup supplies an identity, a generator list, and exact mul/inv on
hashable canonical element encodings (tuples throughout).  Everything else
is derived: breadth-first enumeration with a deterministic element order
(index 0 is the identity), conjugacy classes by orbit expansion under
generator conjugation, centers, commutator subgroups, the two central
series, quotients by canonical least-index coset representatives, and
direct products.

Polycyclic groups are given by a PcPresentation over a prime p: power
relations g_i^p = w_i and commutator relations [g_j, g_i] = w_ji (i < j)
with each right side a word in strictly later generators.  Normal forms
are computed by collection from the left with a step budget, so an
inconsistent presentation surfaces as an error or as a closure of the
wrong order rather than an infinite loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "ToolkitError",
    "EnumerationCapExceeded",
    "CollectionBudgetExceeded",
    "FiniteGroup",
    "PermGroup",
    "AbelianTupleGroup",
    "PcPresentation",
    "PcGroup",
    "ProductGroup",
    "QuotientGroup",
    "SubgroupView",
    "ClassData",
    "enumerate_group",
    "conjugacy_classes",
    "commutator",
    "center",
    "commutator_subgroup",
    "central_series_group",
    "quotient",
    "direct_product",
    "collect",
    "subgroup_closure",
]

DEFAULT_ENUMERATION_CAP = 10**6
COLLECTION_BUDGET = 10**7


class ToolkitError(Exception):
    pass


class EnumerationCapExceeded(ToolkitError):
    pass


class CollectionBudgetExceeded(ToolkitError):
    pass


# ------------------------------------------------------------------ the base


class FiniteGroup:
    """Base class: subclasses provide identity, generators, mul, inv."""

    identity = None
    generators: list = []
    descriptor: str | None = None

    def __init__(self):
        self._elements: list | None = None
        self._index: dict | None = None

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    # ------------------------------------------------------------ enumeration

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = enumerate_group(self)
            self._index = {x: i for i, x in enumerate(self._elements)}
        return self._elements

    @property
    def index(self) -> dict:
        self.elements
        return self._index

    @property
    def order(self) -> int:
        return len(self.elements)

    def element_order(self, x) -> int:
        n = 1
        y = x
        while y != self.identity:
            y = self.mul(y, x)
            n += 1
        return n

    def conjugate(self, x, g):
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    def to_description(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        name = self.descriptor or type(self).__name__
        size = len(self._elements) if self._elements is not None else "?"
        return f"<{name} order={size}>"


def enumerate_group(G: FiniteGroup, cap: int = DEFAULT_ENUMERATION_CAP) -> list:
    """Breadth-first closure of the generators; index 0 is the identity."""
    first = G.identity
    seen = {first}
    out = [first]
    frontier = [first]
    gens = list(G.generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    nxt.append(y)
                    if len(out) > cap:
                        raise EnumerationCapExceeded(f"more than {cap} elements")
        frontier = nxt
    return out


# ------------------------------------------------------------ concrete groups


class PermGroup(FiniteGroup):
    """Permutations of {0..degree-1} as image tuples; (a*b)(i) = a[b[i]]."""

    def __init__(self, degree: int, generators: Sequence[tuple], descriptor=None):
        super().__init__()
        self.degree = degree
        self.identity = tuple(range(degree))
        self.generators = [tuple(g) for g in generators]
        self.descriptor = descriptor

    def mul(self, a, b):
        return tuple(a[b[i]] for i in range(self.degree))

    def inv(self, a):
        out = [0] * self.degree
        for i, ai in enumerate(a):
            out[ai] = i
        return tuple(out)

    def to_description(self):
        return {"kind": "perm", "degree": self.degree, "generators": [list(g) for g in self.generators]}


class AbelianTupleGroup(FiniteGroup):
    """Direct product of cyclic groups Z_m1 x ... x Z_mt, written additively."""

    def __init__(self, moduli: Sequence[int], descriptor=None):
        super().__init__()
        if not moduli or any(m < 2 for m in moduli):
            raise ValueError("invariants must be a nonempty list of integers >= 2")
        self.moduli = tuple(int(m) for m in moduli)
        self.identity = (0,) * len(self.moduli)
        self.generators = [
            tuple(1 if j == i else 0 for j in range(len(self.moduli))) for i in range(len(self.moduli))
        ]
        self.descriptor = descriptor

    def mul(self, a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inv(self, a):
        return tuple(-x % m for x, m in zip(a, self.moduli))

    def to_description(self):
        return {"kind": "abelian", "moduli": list(self.moduli)}


# ----------------------------------------------------------------- polycyclic


@dataclass(frozen=True)
class PcPresentation:
    """Polycyclic presentation over a prime: r generators, each of order
    dividing p modulo later ones.

    powers[i] is the normal word for g_i^p; commutators[(j, i)] (j > i) is
    the normal word for [g_j, g_i] = g_j^-1 g_i^-1 g_j g_i.  Words are
    tuples of (generator index, exponent) with 0-based indices; omitted
    commutators are trivial.  Every right side may only involve generators
    with index strictly greater than j (resp. i for powers), which is what
    makes collection terminate.
    """

    p: int
    ngens: int
    powers: tuple[tuple[tuple[int, int], ...], ...]
    commutators: dict[tuple[int, int], tuple[tuple[int, int], ...]] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.powers) != self.ngens:
            raise ValueError("need one power word per generator")
        for i, w in enumerate(self.powers):
            if any(not i < g < self.ngens for g, _ in w):
                raise ValueError(f"power word of generator {i} must use later generators")
        for (j, i), w in self.commutators.items():
            if not 0 <= i < j < self.ngens:
                raise ValueError("commutator keys must satisfy j > i")
            if any(not j < g < self.ngens for g, _ in w):
                raise ValueError(f"commutator word [{j},{i}] must use generators beyond {j}")

    def comm(self, j: int, i: int) -> tuple[tuple[int, int], ...]:
        return self.commutators.get((j, i), ())


def _push_word(stack: list, word: Iterable[tuple[int, int]]):
    items = [it for it in word if it[1]]
    for it in reversed(items):
        stack.append(it)


def _inverse_word(word: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(g, -e) for g, e in reversed(word)]


def collect(pres: PcPresentation, word: Iterable[tuple[int, int]], budget: int = COLLECTION_BUDGET) -> tuple[int, ...]:
    """Normal form of a word, by collection from the left."""
    p, r = pres.p, pres.ngens
    e = [0] * r
    stack: list[tuple[int, int]] = []
    _push_word(stack, word)
    steps = 0
    while stack:
        steps += 1
        if steps > budget:
            raise CollectionBudgetExceeded("collection step budget exceeded")
        g, m = stack.pop()
        if not 0 <= g < r:
            raise ValueError(f"generator index {g} out of range")
        if m == 0:
            continue
        if m < 0:
            # g^-1 = g^(p-1) * (g^p)^-1
            if m < -1:
                stack.append((g, m + 1))
            _push_word(stack, [(g, p - 1)] + _inverse_word(pres.powers[g]))
            continue
        tail = [j for j in range(g + 1, r) if e[j]]
        if not tail:
            t = e[g] + m
            e[g] = t % p
            q = t // p
            for _ in range(q):
                _push_word(stack, pres.powers[g])
        else:
            # move one letter of g past the innermost tail generator
            j = tail[-1]
            e[j] -= 1
            rest = [(g, m - 1)] if m > 1 else []
            _push_word(stack, [(g, 1), (j, 1)] + list(pres.comm(j, g)) + rest)
    return tuple(e)


class PcGroup(FiniteGroup):
    """Group of normal forms of a polycyclic presentation."""

    def __init__(self, pres: PcPresentation, descriptor=None):
        super().__init__()
        self.pres = pres
        self.identity = (0,) * pres.ngens
        self.generators = [
            tuple(1 if j == i else 0 for j in range(pres.ngens)) for i in range(pres.ngens)
        ]
        self.descriptor = descriptor
        self._gen_cache: list[dict] = [dict() for _ in range(pres.ngens)]
        self._inv_cache: dict = {}

    def _mul_gen(self, a: tuple, g: int) -> tuple:
        cache = self._gen_cache[g]
        out = cache.get(a)
        if out is None:
            word = [(i, ei) for i, ei in enumerate(a) if ei] + [(g, 1)]
            out = collect(self.pres, word)
            cache[a] = out
        return out

    def mul(self, a, b):
        x = a
        for i, ei in enumerate(b):
            for _ in range(ei):
                x = self._mul_gen(x, i)
        return x

    def inv(self, a):
        out = self._inv_cache.get(a)
        if out is None:
            out = collect(self.pres, _inverse_word([(i, ei) for i, ei in enumerate(a) if ei]))
            self._inv_cache[a] = out
        return out

    def to_description(self):
        return {
            "kind": "pc",
            "p": self.pres.p,
            "ngens": self.pres.ngens,
            "powers": [[list(t) for t in w] for w in self.pres.powers],
            "commutators": [[j, i, [list(t) for t in w]] for (j, i), w in sorted(self.pres.commutators.items())],
        }


# ------------------------------------------------------- products & quotients


class ProductGroup(FiniteGroup):
    def __init__(self, G: FiniteGroup, H: FiniteGroup, descriptor=None):
        super().__init__()
        self.G, self.H = G, H
        self.identity = (G.identity, H.identity)
        self.generators = [(g, H.identity) for g in G.generators] + [
            (G.identity, h) for h in H.generators
        ]
        self.descriptor = descriptor

    def mul(self, a, b):
        return (self.G.mul(a[0], b[0]), self.H.mul(a[1], b[1]))

    def inv(self, a):
        return (self.G.inv(a[0]), self.H.inv(a[1]))

    def to_description(self):
        return {"kind": "product", "factors": [self.G.to_description(), self.H.to_description()]}


def direct_product(G: FiniteGroup, H: FiniteGroup) -> ProductGroup:
    desc = None
    if G.descriptor and H.descriptor:
        desc = f"{G.descriptor}*{H.descriptor}"
    return ProductGroup(G, H, descriptor=desc)


class QuotientGroup(FiniteGroup):
    """G/N on canonical coset representatives (least element index)."""

    def __init__(self, G: FiniteGroup, subgroup_elements, descriptor=None, _by_words=None):
        super().__init__()
        self.parent = G
        nset = set(subgroup_elements)
        _validate_normal_subgroup(G, nset)
        index = G.index
        rep_of: dict = {}
        reps = []
        for x in G.elements:
            if x in rep_of:
                continue
            coset = sorted((index[G.mul(x, n)] for n in nset))
            rep = G.elements[coset[0]]
            for i in coset:
                rep_of[G.elements[i]] = rep
            reps.append(rep)
        self.rep_of = rep_of
        self.identity = rep_of[G.identity]
        gens = []
        for g in G.generators:
            img = rep_of[g]
            if img != self.identity and img not in gens:
                gens.append(img)
        self.generators = gens
        self.subgroup = frozenset(nset)
        self.descriptor = descriptor
        self._by_words = _by_words

    def project(self, x):
        """Canonical representative of the coset of a parent element."""
        return self.rep_of[x]

    def mul(self, a, b):
        return self.rep_of[self.parent.mul(a, b)]

    def inv(self, a):
        return self.rep_of[self.parent.inv(a)]

    def to_description(self):
        if self._by_words is None:
            raise NotImplementedError("quotient was not built from generator words")
        return {
            "kind": "quotient",
            "of": self.parent.to_description(),
            "by": [list(w) for w in self._by_words],
        }


class SubgroupView(FiniteGroup):
    """A subgroup of a parent group, as a group in its own right."""

    def __init__(self, G: FiniteGroup, elements, descriptor=None):
        super().__init__()
        self.parent = G
        els = sorted(set(elements), key=lambda x: G.index[x])
        if not els or els[0] != G.identity:
            raise ValueError("subgroup must contain the identity")
        self.identity = G.identity
        self.generators = _small_generating_set(G, set(els))
        self.descriptor = descriptor
        self._member_set = frozenset(els)
        self._elements = None

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def inv(self, a):
        return self.parent.inv(a)


# ----------------------------------------------------------- class structures


@dataclass
class ClassData:
    """Conjugacy classes in deterministic order (class 0 is the identity)."""

    group: FiniteGroup
    reps: list
    sizes: list[int]
    members: list[list[int]]  # element indices per class
    class_of: list[int]  # element index -> class index
    orders: list[int]  # element order of each class representative
    inverse_class: list[int]

    _power_cache: dict = field(default_factory=dict, repr=False)

    @property
    def k(self) -> int:
        return len(self.reps)

    def power_class(self, c: int, m: int) -> int:
        """Class of (representative of class c)^m."""
        key = (c, m % self.orders[c])
        got = self._power_cache.get(key)
        if got is None:
            G = self.group
            x = G.identity
            for _ in range(key[1]):
                x = G.mul(x, self.reps[c])
            got = self.class_of[G.index[x]]
            self._power_cache[key] = got
        return got


def conjugacy_classes(G: FiniteGroup) -> ClassData:
    els = G.elements
    index = G.index
    n = len(els)
    gens = list(G.generators)
    inv_gens = [G.inv(g) for g in gens]
    class_of = [-1] * n
    reps, sizes, members = [], [], []
    for i in range(n):
        if class_of[i] != -1:
            continue
        c = len(reps)
        orbit = [i]
        class_of[i] = c
        pos = 0
        while pos < len(orbit):
            x = els[orbit[pos]]
            pos += 1
            for g, gi in zip(gens, inv_gens):
                y = G.mul(G.mul(gi, x), g)
                j = index[y]
                if class_of[j] == -1:
                    class_of[j] = c
                    orbit.append(j)
        reps.append(els[i])
        sizes.append(len(orbit))
        members.append(sorted(orbit))
    orders = [G.element_order(r) for r in reps]
    inverse_class = [class_of[index[G.inv(r)]] for r in reps]
    return ClassData(G, reps, sizes, members, class_of, orders, inverse_class)


def commutator(G: FiniteGroup, g, h):
    """[g, h] = g^-1 h^-1 g h."""
    return G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h))


def center(G: FiniteGroup) -> list:
    """Elements commuting with every generator, in enumeration order."""
    gens = G.generators
    return [x for x in G.elements if all(G.mul(x, g) == G.mul(g, x) for g in gens)]


def subgroup_closure(G: FiniteGroup, seed) -> list:
    """Subgroup generated by the seed elements, sorted by element index."""
    index = G.index
    gens = [s for s in set(seed) if s != G.identity]
    out = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(out, key=lambda x: index[x])


def _conjugation_closure(G: FiniteGroup, seed) -> set:
    out = set(seed)
    frontier = list(seed)
    gens = list(G.generators)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.conjugate(x, g)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


def _normal_closure_subgroup(G: FiniteGroup, seed) -> list:
    """Smallest normal subgroup containing the seed elements."""
    return subgroup_closure(G, _conjugation_closure(G, set(seed)))


def commutator_subgroup(G: FiniteGroup) -> list:
    pairs = [commutator(G, g, h) for g in G.generators for h in G.generators]
    return _normal_closure_subgroup(G, pairs)


def central_series_group(G: FiniteGroup) -> tuple[list[list], list[list]]:
    """(upper, lower) central series as element lists, to stabilization.

    upper starts at the trivial subgroup and ascends; lower starts at the
    whole group and descends.  Both stop at the first repeat, so a perfect
    group reports upper=[1] and lower=[G].
    """
    els = G.elements
    gens = list(G.generators)
    upper: list[list] = [[G.identity]]
    while True:
        prev = set(upper[-1])
        nxt = [x for x in els if all(commutator(G, x, g) in prev for g in gens)]
        if len(nxt) == len(prev):
            break
        upper.append(nxt)
    lower: list[list] = [list(els)]
    while True:
        prev = lower[-1]
        comms = {commutator(G, x, g) for x in prev for g in gens}
        nxt = _normal_closure_subgroup(G, comms)
        if len(nxt) == len(prev):
            break
        lower.append(nxt)
    return upper, lower


def _small_generating_set(G: FiniteGroup, members: set) -> list:
    index = G.index
    ordered = sorted(members, key=lambda x: index[x])
    gens: list = []
    have = {G.identity}
    for x in ordered:
        if x not in have:
            gens.append(x)
            have = set(subgroup_closure_within(G, gens, members))
            if len(have) == len(members):
                break
    return gens


def subgroup_closure_within(G: FiniteGroup, gens, bound: set) -> list:
    out = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in out:
                    if y not in bound:
                        raise ValueError("set is not closed under multiplication")
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(out, key=lambda x: G.index[x])


def _validate_normal_subgroup(G: FiniteGroup, nset: set):
    if G.identity not in nset:
        raise ValueError("not a subgroup: missing identity")
    gens = _small_generating_set(G, nset)
    try:
        closed = subgroup_closure_within(G, gens, nset)
    except ValueError:
        raise ValueError("not a subgroup: not closed under multiplication") from None
    if len(closed) != len(nset):
        raise ValueError("not a subgroup: not closed under multiplication")
    for n in gens:
        for g in G.generators:
            if G.conjugate(n, g) not in nset:
                raise ValueError("subgroup is not normal")


def quotient(G: FiniteGroup, subgroup_elements, descriptor=None) -> QuotientGroup:
    return QuotientGroup(G, subgroup_elements, descriptor=descriptor)
