"""Normal subgroup structure read off a character table, and its dual.

A union of conjugacy classes containing the identity is a normal subgroup
exactly when it is an intersection of character kernels, so the whole
normal subgroup lattice of a group is visible in its table.  This module
builds that lattice, the upper and lower central series, quotient and
central-section tables, and the checks that compare a group's structure
with the structure of its transposed table.

Class indices refer to table columns, character indices to table rows.
All decisions are exact; integer tensors accelerate the bulk pairings,
with pure cyclotomic fallbacks when entries are too large.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .chartab import (
    _INT64_BOUND,
    CharacterTable,
    CharacterTableError,
    character_table,
    conjugation_matrix,
    entry_tensor,
    make_table,
    monomial_exponents,
    power_matrix,
    reduction_tensor,
    verify_table,
)
from .cyclotomic import Cyclotomic, value_order
from .groups import (
    FiniteGroup,
    SubgroupView,
    ToolkitError,
    _validate_normal_subgroup,
    conjugacy_classes,
)
from .numutil import factorint
from .transpose import tables_equivalent, transpose_table


class SectionError(ToolkitError):
    """A requested section is not central, or its table degenerates."""


# ----------------------------------------------------------------- lattices


@dataclass(frozen=True)
class NormalSubgroupT:
    """Normal subgroup seen through the table.

    classes   indices of the conjugacy classes it comprises
    order     sum of those class sizes
    char_set  indices of the characters whose kernel contains it
    """

    classes: frozenset[int]
    order: int
    char_set: frozenset[int]

    def to_json(self) -> dict:
        return {
            "classes": sorted(self.classes),
            "order": self.order,
            "characters": sorted(self.char_set),
        }


def character_kernel(X: CharacterTable, r: int) -> frozenset[int]:
    """Classes where row r attains its degree: the kernel, a normal subgroup."""
    deg = X.entries[r][0]
    return frozenset(c for c in range(X.k) if X.entries[r][c] == deg)


def _all_kernels(X: CharacterTable) -> tuple[frozenset[int], ...]:
    return tuple(character_kernel(X, r) for r in range(X.k))


def _node(X: CharacterTable, classes, kernels) -> NormalSubgroupT:
    classes = frozenset(classes)
    return NormalSubgroupT(
        classes=classes,
        order=sum(X.class_sizes[c] for c in classes),
        char_set=frozenset(r for r in range(X.k) if classes <= kernels[r]),
    )


class LatticeT:
    """Lattice of a table's normal subgroups.

    Nodes are sorted by (order, class tuple), so nodes[0] is the trivial
    subgroup and nodes[-1] the whole group.  meet intersects class sets;
    join intersects character sets and takes their common kernel, the
    smallest normal subgroup containing both arguments.
    """

    def __init__(self, nodes, kernels):
        self.nodes = tuple(nodes)
        self.kernels = tuple(kernels)
        self._where = {n.classes: i for i, n in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"LatticeT({len(self.nodes)} nodes)"

    def index_of(self, classes) -> int | None:
        return self._where.get(frozenset(classes))

    def leq(self, a: int, b: int) -> bool:
        return self.nodes[a].classes <= self.nodes[b].classes

    def meet(self, a: int, b: int) -> int:
        got = self.index_of(self.nodes[a].classes & self.nodes[b].classes)
        if got is None:
            raise ToolkitError("lattice is not intersection closed")
        return got

    def join(self, a: int, b: int) -> int:
        chars = self.nodes[a].char_set & self.nodes[b].char_set
        # the trivial character sits in every char_set, so chars is nonempty
        classes = frozenset.intersection(*(self.kernels[r] for r in chars))
        got = self.index_of(classes)
        if got is None:
            raise ToolkitError("lattice is not join closed")
        return got

    def atoms(self) -> tuple[int, ...]:
        out = []
        for i, n in enumerate(self.nodes):
            if n.order == 1:
                continue
            if not any(1 < m.order < n.order and m.classes < n.classes for m in self.nodes):
                out.append(i)
        return tuple(out)


def normal_subgroups(X: CharacterTable) -> LatticeT:
    """Every normal subgroup, as the intersection closure of the kernels.

    Each normal subgroup is the intersection of the kernels containing it,
    so closing the kernel family under pairwise intersection is complete.
    The whole group (kernel of the trivial character) seeds the closure.
    """
    kernels = _all_kernels(X)
    seen = {frozenset(range(X.k))}
    frontier = list(seen)
    while frontier:
        fresh = []
        for s in frontier:
            for ker in kernels:
                t = s & ker
                if t not in seen:
                    seen.add(t)
                    fresh.append(t)
        frontier = fresh
    nodes = sorted(
        (_node(X, s, kernels) for s in seen),
        key=lambda n: (n.order, tuple(sorted(n.classes))),
    )
    return LatticeT(nodes, kernels)


# ----------------------------------------------------- commutator pairings


def n_value(X: CharacterTable, i: int, j: int) -> Cyclotomic:
    """n(g_i, g_j) = sum over chi of |chi(g_i)|^2 conj(chi(g_j)) / chi(1).

    Nonzero exactly when class j meets the commutator set {[g_i, x]}.
    """
    total = Cyclotomic.zero(X.conductor)
    for r in range(X.k):
        v = X.entries[r][i]
        total = total + v * v.conjugate() * X.entries[r][j].conjugate() / X.degrees[r]
    return total


def nT_value(X: CharacterTable, r: int, s: int) -> Cyclotomic:
    """Pairing [chi_r conj(chi_r), chi_s], the dual of the n values."""
    total = Cyclotomic.zero(X.conductor)
    for c in range(X.k):
        v = X.entries[r][c]
        total = total + v * v.conjugate() * X.entries[s][c].conjugate() * X.class_sizes[c]
    return total / X.order


def _nonzero_monomial(X: CharacterTable, P: np.ndarray, axis: str) -> np.ndarray:
    # Monomial entries have |value| = 1 and degree 1, so the pairing loses
    # its first argument entirely: n(i, j) is the plain column-j sum of
    # conjugates and nT(r, s) the class-size weighted row-s sum.  Zeroness
    # comes from an exponent histogram, exact in float64 below 2**53.
    n = X.conductor
    PV = power_matrix(n)
    k = X.k
    if axis == "rows":
        M = (-P.T) % n  # M[j, r]: conj exponents summed over rows r
        w = np.ones(k, dtype=np.float64)
    else:
        M = (-P) % n  # M[s, c]: conj exponents summed over classes c
        w = np.asarray(X.class_sizes, dtype=np.float64)
    codes = M + n * np.arange(k)[:, None]
    hist = np.bincount(codes.ravel(), weights=np.tile(w, k), minlength=n * k)
    coords = hist.reshape(k, n).astype(np.int64) @ PV
    line = coords.any(axis=1)
    return np.broadcast_to(line[None, :], (k, k)).copy()


def _nonzero_matrix(X: CharacterTable, axis: str, force_pure: bool = False) -> np.ndarray:
    """Boolean (k, k) matrix: n(i, j) != 0 ("rows") or nT(r, s) != 0 ("cols").

    Positive rational scalings do not change zeroness, so the integer
    paths drop the 1/conductor-denominator and 1/degree factors.
    """
    if not force_pure:
        P = monomial_exponents(X)
        if P is not None:
            return _nonzero_monomial(X, P, axis)
        got = _nonzero_numpy(X, axis)
        if got is not None:
            return got
    k = X.k
    out = np.zeros((k, k), dtype=bool)
    pair = n_value if axis == "rows" else nT_value
    for a in range(k):
        for b in range(k):
            out[a, b] = not pair(X, a, b).is_zero
    return out


def _nonzero_numpy(X: CharacterTable, axis: str) -> np.ndarray | None:
    pack = entry_tensor(X)
    if pack is None:
        return None
    E, _ = pack
    n = X.conductor
    R = reduction_tensor(n)
    C = conjugation_matrix(n)
    Ec = np.einsum("rce,ef->rcf", E, C)
    phi = R.shape[0]
    if axis == "rows":
        D = 1
        for d in X.degrees:
            D = lcm(D, d)
        weights = np.asarray([D // d for d in X.degrees], dtype=np.int64)
        A, Ac = E, Ec
    else:
        weights = np.asarray(X.class_sizes, dtype=np.int64)
        A = np.ascontiguousarray(np.swapaxes(E, 0, 1))
        Ac = np.ascontiguousarray(np.swapaxes(Ec, 0, 1))
    maxA = int(np.abs(A).max(initial=1))
    maxAc = int(np.abs(Ac).max(initial=1))
    maxR = int(np.abs(R).max(initial=1))
    b1 = phi * phi * maxA * maxAc * maxR
    b2 = phi * b1 * maxR
    b3 = X.k * int(weights.max(initial=1)) * phi * b2 * maxAc
    if b3 >= _INT64_BOUND:
        return None
    # A[t, a]: entry of pair (sum index t, argument a); fold |A|^2 first,
    # then multiply by the conjugate of the second argument and sum over t.
    W = np.einsum("tae,taf,efm->tam", A, Ac, R)
    W2 = np.einsum("tam,mgb->tagb", W, R)
    T = np.einsum("tagb,tcg,t->acb", W2, Ac, weights)
    return T.any(axis=2)


# ------------------------------------------------------------ central series


def upper_central_series_table(X: CharacterTable, force_pure: bool = False) -> tuple[NormalSubgroupT, ...]:
    """Ascending central series from the table, up to stabilization.

    Z_0 = 1, and Z_i collects the classes whose n value vanishes against
    every class outside Z_{i-1}.  The chain stops at the first repeat, so
    an abelian table yields (1, G) and a centerless one just (1,).
    """
    kernels = _all_kernels(X)
    nz = _nonzero_matrix(X, "rows", force_pure)
    chain = [frozenset({0})]
    while True:
        prev = chain[-1]
        outside = np.ones(X.k, dtype=bool)
        outside[sorted(prev)] = False
        nxt = frozenset(np.flatnonzero(~nz[:, outside].any(axis=1)).tolist())
        if nxt == prev:
            break
        chain.append(nxt)
    return tuple(_node(X, s, kernels) for s in chain)


def lower_central_series_table(X: CharacterTable, force_pure: bool = False) -> tuple[NormalSubgroupT, ...]:
    """Descending commutator series gamma_1 = G >= gamma_2 >= ...

    A character contains gamma_i in its kernel exactly when its nT pairing
    vanishes against every character outside the previous set; the common
    kernels of those growing character sets are the gamma terms.
    """
    kernels = _all_kernels(X)
    nt = _nonzero_matrix(X, "cols", force_pure)
    sets = [frozenset({0})]
    while True:
        prev = sets[-1]
        outside = np.ones(X.k, dtype=bool)
        outside[sorted(prev)] = False
        nxt = frozenset(np.flatnonzero(~nt[:, outside].any(axis=1)).tolist())
        if nxt == prev:
            break
        sets.append(nxt)
    out = []
    for s in sets:
        classes = frozenset.intersection(*(kernels[r] for r in s))
        out.append(_node(X, classes, kernels))
    return tuple(out)


# ------------------------------------------------- quotients and sections


def _as_classes(X: CharacterTable, N) -> frozenset[int]:
    if isinstance(N, NormalSubgroupT):
        return N.classes
    classes = frozenset(int(c) for c in N)
    if not classes or not classes <= frozenset(range(X.k)):
        raise ValueError("normal subgroup must be a set of class indices")
    return classes


def _quotient_with_map(X: CharacterTable, classes: frozenset):
    """(quotient table, class index -> quotient column) for a normal class set."""
    if 0 not in classes:
        raise ValueError("a normal subgroup contains the identity class")
    kernels = _all_kernels(X)
    rows_keep = [r for r in range(X.k) if classes <= kernels[r]]
    if frozenset.intersection(*(kernels[r] for r in rows_keep)) != classes:
        raise ValueError("class set is not a normal subgroup of the table")
    nord = sum(X.class_sizes[c] for c in classes)
    if X.order % nord:
        raise ValueError("subgroup order does not divide the group order")
    qorder = X.order // nord
    seen: dict = {}
    kept: list[int] = []
    col_image = []
    for c in range(X.k):
        key = tuple(X.entries[r][c].key() for r in rows_keep)
        got = seen.get(key)
        if got is None:
            got = len(kept)
            seen[key] = got
            kept.append(c)
        col_image.append(got)
    sizes = []
    for c in kept:
        # column orthogonality: sum |chi(g)|^2 over the quotient characters
        # is the centralizer order of the image class
        cent = Cyclotomic.zero(X.conductor)
        for r in rows_keep:
            v = X.entries[r][c]
            cent = cent + v * v.conjugate()
        if not cent.is_rational:
            raise CharacterTableError("column norm of a quotient is not rational")
        cval = cent.rational_value()
        if cval.denominator != 1 or cval <= 0 or qorder % int(cval):
            raise CharacterTableError("column norm of a quotient is not a centralizer order")
        sizes.append(qorder // int(cval))
    rows = [[X.entries[r][c] for c in kept] for r in rows_keep]
    Q = make_table(qorder, sizes, rows, conductor=X.conductor, sort_rows=False)
    rep = verify_table(Q)
    if not rep.ok:
        raise CharacterTableError(f"quotient table failed verification: {rep.failure}")
    return Q, tuple(col_image)


def quotient_table(X: CharacterTable, N) -> CharacterTable:
    """Table of X modulo a normal subgroup (a node or a class index set).

    Rows are the characters containing N in their kernel; columns that
    become equal are merged keeping the first, and the merged class sizes
    are recovered from column orthogonality.
    """
    Q, _ = _quotient_with_map(X, _as_classes(X, N))
    return Q


def section_table(X: CharacterTable, upper, lower) -> CharacterTable:
    """Abelian table of a central section upper/lower.

    Quotients by the lower term first; the image of the upper term must be
    central there (size-1 classes), as it is along both central series.
    Rows are the distinct degree-normalized character restrictions.
    """
    up = _as_classes(X, upper)
    lo = _as_classes(X, lower)
    if not lo <= up:
        raise ValueError("lower term must sit inside the upper term")
    if lo == frozenset({0}):
        Q, col_image = X, tuple(range(X.k))
    else:
        Q, col_image = _quotient_with_map(X, lo)
    img = sorted({col_image[c] for c in up})
    central = [j for j in img if Q.class_sizes[j] != 1]
    if central:
        raise SectionError(f"section is not central: quotient class {central[0]} has size {Q.class_sizes[central[0]]}")
    uord = sum(X.class_sizes[c] for c in up)
    lord = sum(X.class_sizes[c] for c in lo)
    if uord % lord or len(img) != uord // lord:
        raise SectionError("section image does not have quotient order")
    seen = set()
    rows = []
    for r in range(Q.k):
        deg = Q.degrees[r]
        vals = tuple(Q.entries[r][j] / deg for j in img)
        key = tuple(v.key() for v in vals)
        if key not in seen:
            seen.add(key)
            rows.append(list(vals))
    if len(rows) != len(img):
        raise SectionError("restrictions are not homogeneous across the section")
    S = make_table(len(img), [1] * len(img), rows, conductor=Q.conductor, sort_rows=False)
    rep = verify_table(S)
    if not rep.ok:
        raise SectionError(f"section table failed verification: {rep.failure}")
    return S


# ------------------------------------------------------- abelian invariants


def invariants_from_element_orders(orders) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... from an element order multiset.

    Counting solutions of x^(p^e) = 1 pins the p-primary partition one
    prime at a time; mismatched counts mean the multiset does not belong
    to any abelian group.
    """
    orders = sorted(int(o) for o in orders)
    total = len(orders)
    if total == 0 or orders[0] != 1:
        raise ValueError("element order multiset must contain the identity")
    if any(total % o for o in orders):
        raise ValueError("element orders must divide the group order")
    per_prime = []
    for p in sorted(factorint(total)):
        ms = []
        prev_v = 0
        e = 1
        while True:
            count = sum(1 for o in orders if (p ** e) % o == 0)
            v = 0
            while p ** (v + 1) <= count and count % (p ** (v + 1)) == 0:
                v += 1
            if p ** v != count:
                raise ValueError("order multiset does not come from an abelian group")
            m = v - prev_v
            if m == 0:
                break
            ms.append(m)
            prev_v = v
            e += 1
        if any(ms[i] < ms[i + 1] for i in range(len(ms) - 1)):
            raise ValueError("order multiset does not come from an abelian group")
        if ms:
            lam = [sum(1 for m in ms if m >= t) for t in range(1, ms[0] + 1)]
            per_prime.append([p ** a for a in lam])
    width = max((len(v) for v in per_prime), default=0)
    out = []
    prod = 1
    for t in range(width):
        f = 1
        for vals in per_prime:
            if t < len(vals):
                f *= vals[t]
        out.append(f)
        prod *= f
    if prod != total:
        raise ValueError("order multiset does not come from an abelian group")
    out.reverse()
    return tuple(out)


def abelian_invariants(X: CharacterTable) -> tuple[int, ...]:
    """Invariant factors of the abelian group behind a degree-one table.

    The element order in a column is the lcm of the orders of its root of
    unity entries; the multiset of element orders determines the group.
    """
    bad = [d for d in X.degrees if d != 1]
    if bad:
        raise ValueError("table has a row of degree above 1, not abelian")
    orders = []
    for c in range(X.k):
        o = 1
        for r in range(X.k):
            vo = value_order(X.entries[r][c])
            if vo is None:
                raise ValueError("abelian table entries must be roots of unity")
            o = lcm(o, vo)
        orders.append(o)
    return invariants_from_element_orders(orders)


# ------------------------------------------------------------ duality checks


@dataclass(frozen=True)
class DualLatticeReport:
    """Outcome of the lattice anti-isomorphism check.

    pairs lists (order, dual order) for each node in lattice order; on
    failure the first violated condition is spelled out.
    """

    ok: bool
    pairs: tuple[tuple[int, int], ...]
    failure: str | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "pairs": [list(p) for p in self.pairs], "failure": self.failure}


def dual_lattice_check(X: CharacterTable) -> DualLatticeReport:
    """Anti-isomorphism between the normal lattice and the transpose's.

    Each normal subgroup N maps to the transpose-side class set formed by
    the characters trivial on N.  Checks the map is a bijection of nodes,
    multiplies orders up to the group order, reverses inclusion, and swaps
    joins with meets; the first violated pair is reported.
    """
    Xt = transpose_table(X)
    lat = normal_subgroups(X)
    lat_t = normal_subgroups(Xt)
    dual = []
    pairs = []
    for node in lat.nodes:
        di = lat_t.index_of(node.char_set)
        if di is None:
            return DualLatticeReport(
                False, tuple(pairs),
                f"character set of the order-{node.order} node is not a transpose normal subgroup")
        dual.append(di)
        pairs.append((node.order, lat_t.nodes[di].order))
    pairs = tuple(pairs)
    if len(set(dual)) != len(lat.nodes) or len(lat_t.nodes) != len(lat.nodes):
        return DualLatticeReport(False, pairs, "dual map is not a bijection of nodes")
    for i, node in enumerate(lat.nodes):
        if node.order * lat_t.nodes[dual[i]].order != X.order:
            return DualLatticeReport(False, pairs, f"order product fails at the order-{node.order} node")
    m = len(lat.nodes)
    for i in range(m):
        for j in range(m):
            if lat.leq(i, j) != lat_t.leq(dual[j], dual[i]):
                return DualLatticeReport(
                    False, pairs,
                    f"inclusion is not reversed between orders {lat.nodes[i].order} and {lat.nodes[j].order}")
    for i in range(m):
        for j in range(i, m):
            if dual[lat.join(i, j)] != lat_t.meet(dual[i], dual[j]):
                return DualLatticeReport(
                    False, pairs,
                    f"join of orders ({lat.nodes[i].order}, {lat.nodes[j].order}) does not map to the meet")
            if dual[lat.meet(i, j)] != lat_t.join(dual[i], dual[j]):
                return DualLatticeReport(
                    False, pairs,
                    f"meet of orders ({lat.nodes[i].order}, {lat.nodes[j].order}) does not map to the join")
    return DualLatticeReport(True, pairs, None)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Layer-by-layer comparison of the two central series."""

    ok: bool
    layers: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    reason: str | None = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "layers": [[list(a), list(b)] for a, b in self.layers],
            "reason": self.reason,
        }


def central_factor_correspondence(X: CharacterTable, force_pure: bool = False) -> CorrespondenceReport:
    """Match Z_i/Z_{i-1} of the table against gamma_i/gamma_{i+1} of its transpose.

    Both chains are computed to stabilization; each ascending layer of X
    must carry the same abelian invariants as the corresponding descending
    layer of the transpose.
    """
    Xt = transpose_table(X)
    zs = upper_central_series_table(X, force_pure)
    gs = lower_central_series_table(Xt, force_pure)
    if len(zs) != len(gs):
        return CorrespondenceReport(False, (), f"series lengths differ: {len(zs)} against {len(gs)}")
    layers = []
    ok = True
    reason = None
    for i in range(1, len(zs)):
        left = abelian_invariants(section_table(X, zs[i], zs[i - 1]))
        right = abelian_invariants(section_table(Xt, gs[i - 1], gs[i]))
        layers.append((left, right))
        if left != right and ok:
            ok = False
            reason = f"layer {i} invariants differ"
    return CorrespondenceReport(ok, tuple(layers), reason)


@dataclass(frozen=True)
class SubgroupDualityReport:
    """Outcome of the normal subgroup against transpose-quotient comparison.

    status is "ok", or names the failed hypothesis ("fusion" at a class,
    "inhomogeneous" at a character) or a "mismatch" of the final tables.
    """

    ok: bool
    status: str
    detail: tuple = ()

    def to_json(self) -> dict:
        return {"ok": self.ok, "status": self.status, "detail": list(self.detail)}


def homogeneous_subgroup_duality(X: CharacterTable, G: FiniteGroup, N) -> SubgroupDualityReport:
    """Compare a normal subgroup's own table with a transpose-side quotient.

    N is a normal subgroup of G given by its elements, and X must be the
    table of G.  Two hypotheses are checked first and reported distinctly:
    no G-class may fuse several N-classes, and every character must
    restrict to a multiple of a single irreducible of N.  Under them the
    table of N has to match the transpose of the quotient of X-transpose
    by the characters trivial on N.
    """
    cd = conjugacy_classes(G)
    nset = set(N)
    _validate_normal_subgroup(G, nset)
    nidx = {G.index[x] for x in nset}
    H = SubgroupView(G, list(nset))
    cdh = conjugacy_classes(H)
    hcol = [cd.class_of[G.index[x]] for x in cdh.reps]
    for c in range(cd.k):
        hit = {cdh.class_of[H.index[G.elements[e]]] for e in cd.members[c] if e in nidx}
        if len(hit) > 1:
            return SubgroupDualityReport(False, "fusion", (c,))
    XN = character_table(H)
    big = lcm(X.conductor, XN.conductor)
    for r in range(X.k):
        constituents = 0
        for s in range(XN.k):
            total = Cyclotomic.zero(big)
            for c in range(cdh.k):
                v = X.entries[r][hcol[c]].lift(big)
                t = XN.entries[s][c].conjugate().lift(big)
                total = total + v * t * cdh.sizes[c]
            if not total.is_zero:
                constituents += 1
                if constituents > 1:
                    return SubgroupDualityReport(False, "inhomogeneous", (r,))
    kernels = _all_kernels(X)
    classes_in = frozenset(c for c in range(cd.k) if set(cd.members[c]) <= nidx)
    char_set = frozenset(r for r in range(X.k) if classes_in <= kernels[r])
    Xt = transpose_table(X)
    Q = quotient_table(Xt, char_set)
    eq = tables_equivalent(transpose_table(Q), XN)
    if eq is None:
        return SubgroupDualityReport(False, "mismatch", ())
    return SubgroupDualityReport(True, "ok", ())


@dataclass(frozen=True)
class CenterAbelianizationReport:
    """Z(G) read off the table against the linear characters of the transpose."""

    ok: bool
    center_invariants: tuple[int, ...]
    linear_invariants: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "center_invariants": list(self.center_invariants),
            "linear_invariants": list(self.linear_invariants),
        }


def center_abelianization_check(X: CharacterTable) -> CenterAbelianizationReport:
    """The center of X's group must match the transpose's abelianization.

    The center is the union of the size-1 classes and its table is the
    central section by the trivial subgroup; the dual side is the group of
    degree-one transpose rows under pointwise multiplication, recovered
    from the multiset of their value orders.
    """
    center_classes = frozenset(c for c in range(X.k) if X.class_sizes[c] == 1)
    left = abelian_invariants(section_table(X, center_classes, frozenset({0})))
    Xt = transpose_table(X)
    orders = []
    for r in range(Xt.k):
        if Xt.degrees[r] != 1:
            continue
        o = 1
        for v in Xt.entries[r]:
            vo = value_order(v)
            if vo is None:
                raise CharacterTableError("a linear transpose row is not made of roots of unity")
            o = lcm(o, vo)
        orders.append(o)
    right = invariants_from_element_orders(orders)
    return CenterAbelianizationReport(left == right, left, right)
