"""Group machinery against brute-force oracles on small groups."""

import pytest
from hypothesis import given, settings, strategies as st

from chardual.groups import (
    AbelianTupleGroup,
    CollectionBudgetExceeded,
    PcGroup,
    PcPresentation,
    PermGroup,
    QuotientGroup,
    SubgroupView,
    center,
    central_series_group,
    commutator,
    commutator_subgroup,
    conjugacy_classes,
    direct_product,
    collect,
    quotient,
    subgroup_closure,
)


# ------------------------------------------------------------------- fixtures


def sym3():
    return PermGroup(3, [(1, 0, 2), (1, 2, 0)], descriptor="sym:3")


def sym4():
    return PermGroup(4, [(1, 0, 2, 3), (1, 2, 3, 0)], descriptor="sym:4")


def dih4():
    # rotation (0 1 2 3) and the reflection fixing 0 and 2
    return PermGroup(4, [(1, 2, 3, 0), (0, 3, 2, 1)], descriptor="dih:4")


def q8():
    pres = PcPresentation(
        p=2,
        ngens=3,
        powers=(((2, 1),), ((2, 1),), ()),
        commutators={(1, 0): ((2, 1),)},
    )
    return PcGroup(pres, descriptor="q8")


def heisenberg27():
    pres = PcPresentation(p=3, ngens=3, powers=((), (), ()), commutators={(1, 0): ((2, 1),)})
    return PcGroup(pres)


# ----------------------------------------------------------- oracle functions


def naive_center(G):
    els = G.elements
    return sorted((x for x in els if all(G.mul(x, y) == G.mul(y, x) for y in els)),
                  key=lambda x: G.index[x])


def naive_derived(G):
    els = G.elements
    comms = {commutator(G, x, y) for x in els for y in els}
    return subgroup_closure(G, comms)


def naive_class_partition(G):
    els = G.elements
    out = []
    seen = set()
    for x in els:
        if x in seen:
            continue
        orbit = frozenset(G.mul(G.mul(G.inv(g), x), g) for g in els)
        seen |= orbit
        out.append(orbit)
    return out


# ---------------------------------------------------------------- enumeration


def test_sym3_enumeration():
    G = sym3()
    assert G.order == 6
    assert G.elements[0] == (0, 1, 2)
    assert G.index[(0, 1, 2)] == 0


def test_identity_first_and_indices_consistent():
    G = dih4()
    for i, x in enumerate(G.elements):
        assert G.index[x] == i


def test_abelian_group_basics():
    A = AbelianTupleGroup([2, 4])
    assert A.order == 8
    assert A.mul((1, 3), (1, 2)) == (0, 1)
    assert A.inv((1, 3)) == (1, 1)
    assert A.element_order((0, 1)) == 4
    assert A.to_description() == {"kind": "abelian", "moduli": [2, 4]}


def test_abelian_rejects_bad_invariants():
    with pytest.raises(ValueError):
        AbelianTupleGroup([])
    with pytest.raises(ValueError):
        AbelianTupleGroup([3, 1])


# ----------------------------------------------------------- conjugacy classes


def test_sym3_classes():
    cd = conjugacy_classes(sym3())
    assert sorted(cd.sizes) == [1, 2, 3]
    assert cd.sizes[0] == 1 and cd.reps[0] == (0, 1, 2)
    assert sorted(cd.orders) == [1, 2, 3]


def test_dih4_classes():
    cd = conjugacy_classes(dih4())
    assert sorted(cd.sizes) == [1, 1, 2, 2, 2]


def test_sym4_classes_match_cycle_types():
    G = sym4()
    cd = conjugacy_classes(G)
    assert sorted(cd.sizes) == [1, 3, 6, 6, 8]
    # sizes against the brute-force partition
    naive = {fs for fs in map(frozenset, naive_class_partition(G))}
    got = {frozenset(G.elements[i] for i in m) for m in cd.members}
    assert got == naive


def test_class_reps_are_least_index():
    G = sym4()
    cd = conjugacy_classes(G)
    for c, m in enumerate(cd.members):
        assert cd.reps[c] == G.elements[m[0]]
        assert m == sorted(m)


def test_inverse_class_and_power_class():
    A = AbelianTupleGroup([6])
    cd = conjugacy_classes(A)
    g = (1,)
    c = cd.class_of[A.index[g]]
    cinv = cd.class_of[A.index[(5,)]]
    assert cd.inverse_class[c] == cinv
    assert cd.power_class(c, 2) == cd.class_of[A.index[(2,)]]
    assert cd.power_class(c, 0) == 0


def test_class_of_covers_group():
    G = dih4()
    cd = conjugacy_classes(G)
    assert sum(cd.sizes) == G.order
    assert len(cd.class_of) == G.order


# ------------------------------------------------------- center & commutators


def test_center_matches_naive():
    for G in (sym3(), dih4(), sym4(), q8()):
        assert center(G) == naive_center(G)


def test_derived_subgroup_matches_naive():
    for G in (sym3(), dih4(), sym4(), q8()):
        assert commutator_subgroup(G) == naive_derived(G)


def test_sym3_series():
    upper, lower = central_series_group(sym3())
    assert [len(t) for t in upper] == [1]
    assert [len(t) for t in lower] == [6, 3]


def test_dih4_series():
    upper, lower = central_series_group(dih4())
    assert [len(t) for t in upper] == [1, 2, 8]
    assert [len(t) for t in lower] == [8, 2, 1]


def test_heisenberg_series_and_classes():
    G = heisenberg27()
    assert G.order == 27
    cd = conjugacy_classes(G)
    assert sorted(cd.sizes) == [1, 1, 1] + [3] * 8
    assert len(center(G)) == 3
    upper, lower = central_series_group(G)
    assert [len(t) for t in upper] == [1, 3, 27]
    assert [len(t) for t in lower] == [27, 3, 1]


def test_series_invariant_under_generating_set():
    G1 = sym4()
    G2 = PermGroup(4, [(1, 2, 3, 0), (1, 0, 2, 3), (0, 2, 1, 3)])
    assert set(center(G1)) == set(center(G2))
    assert set(commutator_subgroup(G1)) == set(commutator_subgroup(G2))
    u1, l1 = central_series_group(G1)
    u2, l2 = central_series_group(G2)
    assert [set(t) for t in u1] == [set(t) for t in u2]
    assert [set(t) for t in l1] == [set(t) for t in l2]


# ------------------------------------------------------------------ pc groups


def quaternion_oracle():
    """Hand multiplication table of {±1, ±i, ±j, ±k}."""
    sym_mul = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(a, b):
        s, sym = sym_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, sym)

    return mul


def test_q8_against_quaternion_units():
    G = q8()
    assert G.order == 8
    qmul = quaternion_oracle()

    def embed(x):
        # (a, b, c) -> i^a j^b (-1)^c
        v = (1, "1")
        for _ in range(x[0]):
            v = qmul(v, (1, "i"))
        for _ in range(x[1]):
            v = qmul(v, (1, "j"))
        if x[2]:
            v = qmul(v, (-1, "1"))
        return v

    images = {x: embed(x) for x in G.elements}
    assert len(set(images.values())) == 8
    for a in G.elements:
        for b in G.elements:
            assert images[G.mul(a, b)] == qmul(images[a], images[b])


def test_q8_structure():
    G = q8()
    assert G.mul((0, 1, 0), (1, 0, 0)) == (1, 1, 1)
    assert G.mul((1, 0, 0), (0, 1, 0)) == (1, 1, 0)
    assert G.element_order((1, 0, 0)) == 4
    assert G.element_order((0, 0, 1)) == 2
    cd = conjugacy_classes(G)
    assert sorted(cd.sizes) == [1, 1, 2, 2, 2]


def test_pc_inverse_roundtrip():
    G = heisenberg27()
    for x in G.elements:
        assert G.mul(x, G.inv(x)) == G.identity
        assert G.mul(G.inv(x), x) == G.identity


def test_collect_normalizes_overflow():
    G = heisenberg27()
    assert collect(G.pres, [(0, 5)]) == (2, 0, 0)
    assert collect(G.pres, [(1, 1), (0, 1)]) == (1, 1, 1)
    assert collect(G.pres, [(0, 1), (1, 1)]) == (1, 1, 0)


def test_presentation_validation():
    with pytest.raises(ValueError):
        PcPresentation(p=3, ngens=2, powers=(((0, 1),), ()))
    with pytest.raises(ValueError):
        PcPresentation(p=3, ngens=2, powers=((), ()), commutators={(0, 1): ()})
    with pytest.raises(ValueError):
        PcPresentation(p=3, ngens=3, powers=((), (), ()), commutators={(1, 0): ((1, 1),)})


def test_collection_budget():
    pres = PcPresentation(p=5, ngens=3, powers=((), (), ()), commutators={(1, 0): ((2, 1),)})
    with pytest.raises(CollectionBudgetExceeded):
        collect(pres, [(1, 4), (0, 4)] * 10, budget=5)


# --------------------------------------------------------- products, quotients


def test_direct_product_s3_c2():
    G = direct_product(sym3(), AbelianTupleGroup([2]))
    assert G.order == 12
    cd = conjugacy_classes(G)
    assert sorted(cd.sizes) == [1, 1, 2, 2, 3, 3]


def test_quotient_sym4_by_klein_is_sym3():
    G = sym4()
    klein = [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    Q = quotient(G, klein)
    assert Q.order == 6
    cd = conjugacy_classes(Q)
    assert sorted(cd.sizes) == [1, 2, 3]
    # canonical representatives: least parent index in each coset
    for x in Q.elements:
        assert Q.project(x) == x


def test_quotient_rejects_non_normal():
    G = sym3()
    with pytest.raises(ValueError, match="normal"):
        quotient(G, [(0, 1, 2), (1, 0, 2)])


def test_quotient_rejects_non_subgroup():
    G = sym4()
    with pytest.raises(ValueError):
        quotient(G, [(0, 1, 2, 3), (1, 2, 3, 0)])  # misses closure
    with pytest.raises(ValueError):
        quotient(G, [(1, 0, 3, 2), (2, 3, 0, 1)])  # misses identity


def test_quotient_by_whole_group_and_trivial():
    G = sym3()
    Q = quotient(G, G.elements)
    assert Q.order == 1
    Q2 = quotient(G, [G.identity])
    assert Q2.order == 6


def test_subgroup_view():
    G = sym3()
    a3 = subgroup_closure(G, [(1, 2, 0)])
    H = SubgroupView(G, a3)
    assert H.order == 3
    assert set(H.elements) == set(a3)
    cd = conjugacy_classes(H)
    assert cd.k == 3  # abelian: every class a singleton


def test_subgroup_closure_transposition():
    G = sym3()
    assert subgroup_closure(G, [(1, 0, 2)]) == [(0, 1, 2), (1, 0, 2)]


# ------------------------------------------------------------------- property


perm_words = st.lists(st.integers(min_value=0, max_value=1), min_size=0, max_size=8)


@st.composite
def sym4_elements(draw):
    G = sym4()
    word = draw(perm_words)
    x = G.identity
    for w in word:
        x = G.mul(x, G.generators[w])
    return x


@given(sym4_elements(), sym4_elements(), sym4_elements())
@settings(max_examples=60, deadline=None)
def test_perm_group_axioms(a, b, c):
    G = sym4()
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity
    assert G.mul(G.identity, a) == a


pc_words = st.lists(
    st.tuples(st.integers(min_value=0, max_value=2), st.integers(min_value=-4, max_value=4)),
    min_size=0,
    max_size=6,
)


@given(pc_words, pc_words)
@settings(max_examples=60, deadline=None)
def test_pc_collection_is_homomorphic(w1, w2):
    G = heisenberg27()
    a = collect(G.pres, w1)
    b = collect(G.pres, w2)
    assert G.mul(a, b) == collect(G.pres, list(w1) + list(w2))


@given(pc_words, pc_words, pc_words)
@settings(max_examples=40, deadline=None)
def test_pc_associativity(w1, w2, w3):
    G = q8()
    ws = [[(g % 3, e) for g, e in w] for w in (w1, w2, w3)]
    a, b, c = (collect(G.pres, w) for w in ws)
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
