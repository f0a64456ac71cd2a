"""Normal subgroup lattices, central series, sections, and duality checks.

Oracle values (lattice orders, series orders, invariant factors, dual
pairs) were computed by hand from the defining formulas and via the
group-side brute force helpers, then frozen here.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chardual.chartab import character_table
from chardual.families import abelian, dihedral, hanaki_p5, quaternion8, symmetric
from chardual.families import SuzukiParams, suzuki_type
from chardual.groups import (
    ToolkitError,
    center,
    central_series_group,
    commutator,
    conjugacy_classes,
    direct_product,
    subgroup_closure,
)
from chardual.structure import (
    CenterAbelianizationReport,
    SectionError,
    _nonzero_matrix,
    abelian_invariants,
    center_abelianization_check,
    central_factor_correspondence,
    character_kernel,
    dual_lattice_check,
    homogeneous_subgroup_duality,
    invariants_from_element_orders,
    lower_central_series_table,
    n_value,
    nT_value,
    normal_subgroups,
    quotient_table,
    section_table,
    upper_central_series_table,
)


def _element_sets(G, cd, nodes):
    return [frozenset(e for c in n.classes for e in cd.members[c]) for n in nodes]


# ----------------------------------------------------------------- kernels


def test_sym3_sgn_kernel():
    X = character_table(symmetric(3))
    sgn = next(r for r in range(1, 3) if X.degrees[r] == 1)
    ker = character_kernel(X, sgn)
    # identity plus the 3-cycles: the class of size 2
    assert sorted(X.class_sizes[c] for c in ker) == [1, 2]
    assert 0 in ker


def test_trivial_character_kernel_is_everything():
    X = character_table(dihedral(4))
    assert character_kernel(X, 0) == frozenset(range(X.k))


# ----------------------------------------------------------------- lattices


def test_sym3_lattice():
    X = character_table(symmetric(3))
    lat = normal_subgroups(X)
    assert [n.order for n in lat.nodes] == [1, 3, 6]
    assert lat.nodes[0].classes == frozenset({0})
    assert lat.nodes[-1].classes == frozenset(range(X.k))
    # A3 is the kernel of the sign character
    assert lat.nodes[1].char_set == frozenset({0, 1})


def test_hanaki_lattice_profile():
    X = character_table(hanaki_p5(3))
    lat = normal_subgroups(X)
    assert [n.order for n in lat.nodes] == [1, 3, 3, 3, 3, 9, 27, 81, 81, 81, 81, 243]
    atoms = lat.atoms()
    assert [lat.nodes[i].order for i in atoms] == [3, 3, 3, 3]
    # all four atoms sit inside the center (size-1 classes only)
    for i in atoms:
        assert all(X.class_sizes[c] == 1 for c in lat.nodes[i].classes)


def test_lattice_meet_join_hanaki():
    X = character_table(hanaki_p5(3))
    lat = normal_subgroups(X)
    bottom, top = 0, len(lat) - 1
    atoms = lat.atoms()
    a, b = atoms[0], atoms[1]
    assert lat.meet(a, b) == bottom
    # two distinct central atoms generate the order-9 center
    assert lat.nodes[lat.join(a, b)].order == 9
    assert lat.join(bottom, a) == a
    assert lat.meet(top, a) == a
    assert lat.leq(bottom, a) and lat.leq(a, top) and not lat.leq(a, b)


def test_normal_subgroups_match_brute_force_sym4():
    G = symmetric(4)
    X = character_table(G)
    cd = conjugacy_classes(G)
    lat = normal_subgroups(X)
    got = sorted(_element_sets(G, cd, lat.nodes), key=len)
    # brute force: unions of classes containing identity, closed as groups
    from itertools import combinations

    idx = G.index
    all_sets = []
    for r in range(1, cd.k + 1):
        for combo in combinations(range(cd.k), r):
            if 0 not in combo:
                continue
            els = {e for c in combo for e in cd.members[c]}
            if len(els) in (1, 2, 3, 4, 6, 8, 12, 24):
                closed = all(
                    idx[G.mul(G.elements[x], G.elements[y])] in els
                    for x in els for y in els
                )
                if closed:
                    all_sets.append(frozenset(els))
    assert got == sorted(set(all_sets), key=len)
    assert [len(s) for s in got] == [1, 4, 12, 24]


# ----------------------------------------------------------- n value oracle


@pytest.mark.parametrize(
    "G",
    [symmetric(3), dihedral(4), quaternion8(), abelian([2, 4]), symmetric(4)],
    ids=["sym3", "dih4", "q8", "z2z4", "sym4"],
)
def test_n_value_matches_commutator_classes(G):
    X = character_table(G)
    cd = conjugacy_classes(G)
    nz = _nonzero_matrix(X, "rows")
    assert (nz == _nonzero_matrix(X, "rows", force_pure=True)).all()
    for i in range(cd.k):
        comm = {
            cd.class_of[G.index[commutator(G, cd.reps[i], x)]] for x in G.elements
        }
        assert {j for j in range(cd.k) if nz[i, j]} == comm
        for j in range(cd.k):
            assert (not n_value(X, i, j).is_zero) == (j in comm)


def test_n_value_sym3_values():
    X = character_table(symmetric(3))
    # transposition class against the identity: 1 + 1 + 0 = 2
    assert n_value(X, 1, 0).rational_value() == 2
    assert n_value(X, 0, 1).is_zero


def test_nT_value_is_tensor_multiplicity():
    X = character_table(symmetric(3))
    two = X.degrees.index(2)
    # chi_2 * conj(chi_2) = 1 + sgn + chi_2 on S3
    for s in range(3):
        assert nT_value(X, two, s).rational_value() == 1
    assert nT_value(X, 0, 0).rational_value() == 1
    assert nT_value(X, 0, two).is_zero


# ------------------------------------------------------------ central series


def test_sym3_series():
    X = character_table(symmetric(3))
    ups = upper_central_series_table(X)
    assert [n.order for n in ups] == [1]
    los = lower_central_series_table(X)
    assert [n.order for n in los] == [6, 3]
    assert los[0].char_set == frozenset({0})


def test_hanaki_series_orders():
    X = character_table(hanaki_p5(3))
    assert [n.order for n in upper_central_series_table(X)] == [1, 9, 27, 243]
    assert [n.order for n in lower_central_series_table(X)] == [243, 27, 9, 1]


def test_abelian_series():
    X = character_table(abelian([2, 4]))
    assert [n.order for n in upper_central_series_table(X)] == [1, 8]
    assert [n.order for n in lower_central_series_table(X)] == [8, 1]


@pytest.mark.parametrize(
    "G",
    [symmetric(3), dihedral(4), quaternion8(), abelian([2, 4]),
     symmetric(4), dihedral(6), hanaki_p5(3)],
    ids=["sym3", "dih4", "q8", "z2z4", "sym4", "dih6", "hanaki3"],
)
def test_series_match_group_side(G):
    X = character_table(G)
    cd = conjugacy_classes(G)
    upper_g, lower_g = central_series_group(G)
    assert _element_sets(G, cd, upper_central_series_table(X)) == [
        frozenset(G.index[x] for x in lvl) for lvl in upper_g
    ]
    assert _element_sets(G, cd, lower_central_series_table(X)) == [
        frozenset(G.index[x] for x in lvl) for lvl in lower_g
    ]


# -------------------------------------------------------- quotients, sections


def test_quotient_sym3_by_a3():
    X = character_table(symmetric(3))
    a3 = character_kernel(X, 1)
    Q = quotient_table(X, a3)
    assert (Q.order, Q.k) == (2, 2)
    assert Q.degrees == (1, 1) and Q.class_sizes == (1, 1)
    assert Q.entries[1][1].rational_value() == -1


def test_quotient_rejects_non_normal_class_set():
    X = character_table(symmetric(3))
    with pytest.raises(ValueError):
        quotient_table(X, frozenset({0, 1}))  # identity + transpositions
    with pytest.raises(ValueError):
        quotient_table(X, frozenset({1, 2}))  # missing the identity


def test_quotient_by_trivial_is_identity_map():
    X = character_table(dihedral(4))
    Q = quotient_table(X, frozenset({0}))
    assert Q.entries == X.entries and Q.class_sizes == X.class_sizes


def test_hanaki_quotient_by_center():
    X = character_table(hanaki_p5(3))
    lat = normal_subgroups(X)
    z = next(n for n in lat.nodes if n.order == 9)
    Q = quotient_table(X, z)
    assert Q.order == 27
    # Z2/Z1 has order 3, so the quotient is extraspecial of order 27
    assert sorted(Q.degrees) == [1] * 9 + [3] * 2
    assert sorted(Q.class_sizes) == [1] * 3 + [3] * 8


def test_section_hanaki_center():
    X = character_table(hanaki_p5(3))
    center_classes = frozenset(c for c in range(X.k) if X.class_sizes[c] == 1)
    S = section_table(X, center_classes, frozenset({0}))
    assert (S.order, S.k) == (9, 9)
    assert abelian_invariants(S) == (3, 3)


def test_section_rejects_non_central():
    G = symmetric(4)
    X = character_table(G)
    lat = normal_subgroups(X)
    v4 = next(n for n in lat.nodes if n.order == 4)
    a4 = next(n for n in lat.nodes if n.order == 12)
    with pytest.raises(SectionError):
        section_table(X, a4.classes, v4.classes)


def test_section_rejects_bad_chain():
    X = character_table(hanaki_p5(3))
    lat = normal_subgroups(X)
    atoms = lat.atoms()
    with pytest.raises(ValueError):
        section_table(X, lat.nodes[atoms[0]].classes, lat.nodes[atoms[1]].classes)


# -------------------------------------------------------- abelian invariants


@pytest.mark.parametrize(
    "mods,expect",
    [([4], (4,)), ([2, 2], (2, 2)), ([2, 4], (2, 4)), ([6], (6,)),
     ([2, 3], (6,)), ([12, 2], (2, 12)), ([8, 3], (24,))],
)
def test_abelian_invariants(mods, expect):
    X = character_table(abelian(mods))
    assert abelian_invariants(X) == expect


def test_abelian_invariants_trivial_group():
    X = character_table(abelian([2]))
    Q = quotient_table(X, frozenset({0, 1}))
    assert (Q.order, Q.k) == (1, 1)
    assert abelian_invariants(Q) == ()


def test_abelian_invariants_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_invariants(character_table(symmetric(3)))


def test_invariants_from_orders_rejects_garbage():
    with pytest.raises(ValueError):
        invariants_from_element_orders([1, 2, 2])  # 3 elements, no C3 shape
    with pytest.raises(ValueError):
        invariants_from_element_orders([2, 2])  # identity missing


@settings(max_examples=20, deadline=None)
@given(st.lists(st.sampled_from([2, 3, 4, 5, 8, 9]), min_size=1, max_size=3))
def test_abelian_invariants_roundtrip(mods):
    X = character_table(abelian(mods))
    inv = abelian_invariants(X)
    # invariant factors are a canonical form: rebuilding gives them back
    if inv:
        assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))
        Y = character_table(abelian(list(inv)))
        assert abelian_invariants(Y) == inv


# ------------------------------------------------------------ duality checks


def test_dual_lattice_hanaki():
    X = character_table(hanaki_p5(3))
    rep = dual_lattice_check(X)
    assert rep.ok and rep.failure is None
    assert rep.pairs == (
        (1, 243), (3, 81), (3, 81), (3, 81), (3, 81), (9, 27),
        (27, 9), (81, 3), (81, 3), (81, 3), (81, 3), (243, 1),
    )


def test_dual_lattice_abelian():
    X = character_table(abelian([2, 4]))
    rep = dual_lattice_check(X)
    assert rep.ok
    assert all(a * b == 8 for a, b in rep.pairs)
    assert len(rep.pairs) == 8  # the subgroup count of Z2 x Z4


def test_central_factor_correspondence_hanaki():
    X = character_table(hanaki_p5(3))
    rep = central_factor_correspondence(X)
    assert rep.ok and rep.reason is None
    assert rep.layers == (((3, 3), (3, 3)), ((3,), (3,)), ((3, 3), (3, 3)))


def test_central_factor_correspondence_suzuki():
    X = character_table(suzuki_type(SuzukiParams(3, 3, 2)))
    rep = central_factor_correspondence(X)
    assert rep.ok
    assert rep.layers == (((3, 3, 3), (3, 3, 3)), ((3, 3, 3), (3, 3, 3)))


def test_center_abelianization_hanaki_and_suzuki():
    rep = center_abelianization_check(character_table(hanaki_p5(3)))
    assert isinstance(rep, CenterAbelianizationReport)
    assert rep.ok and rep.center_invariants == (3, 3)
    rep = center_abelianization_check(character_table(suzuki_type(SuzukiParams(3, 3, 2))))
    assert rep.ok and rep.center_invariants == (3, 3, 3)
    assert rep.linear_invariants == (3, 3, 3)


def test_homogeneous_duality_fusion_sym3():
    G = symmetric(3)
    X = character_table(G)
    cd = conjugacy_classes(G)
    three_cycles = next(c for c in range(cd.k) if cd.orders[c] == 3)
    a3 = subgroup_closure(G, [cd.reps[three_cycles]])
    rep = homogeneous_subgroup_duality(X, G, a3)
    assert not rep.ok and rep.status == "fusion"
    assert rep.detail == (three_cycles,)


def test_homogeneous_duality_hanaki_center():
    G = hanaki_p5(3)
    X = character_table(G)
    rep = homogeneous_subgroup_duality(X, G, center(G))
    assert rep.ok and rep.status == "ok"


def test_homogeneous_duality_degenerate_ends():
    G = hanaki_p5(3)
    X = character_table(G)
    assert homogeneous_subgroup_duality(X, G, list(G.elements)).ok
    assert homogeneous_subgroup_duality(X, G, [G.identity]).ok


def test_homogeneous_duality_rejects_non_normal():
    G = symmetric(3)
    X = character_table(G)
    cd = conjugacy_classes(G)
    swap = next(c for c in range(cd.k) if cd.orders[c] == 2)
    sub = subgroup_closure(G, [cd.reps[swap]])
    with pytest.raises(ValueError):
        homogeneous_subgroup_duality(X, G, sub)


def test_dual_lattice_on_product():
    G = direct_product(abelian([2]), abelian([9]))
    rep = dual_lattice_check(character_table(G))
    assert rep.ok
    assert sorted(a for a, _ in rep.pairs) == [1, 2, 3, 6, 9, 18]
