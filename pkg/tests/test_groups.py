from itertools import combinations

import pytest

from hopfgrade.catalog import GRADING_CATALOG
from hopfgrade.groups import (
    AbstractGroup,
    NotNormal,
    OrderBoundExceeded,
    Subgroup,
    all_subgroups,
    builtin_group,
    can_grade,
    character_degrees,
    close_generators,
    format_catalog_entry,
    min_abelian_index,
    normal_abelian_subgroups,
    parse_catalog,
    parse_cycles,
    quotient,
)


def subsets_oracle(G):
    """Every subset containing 1 that is closed under products (tiny groups only)."""
    els = G.elements
    others = [g for g in els if g != G.identity]
    found = set()
    for r in range(len(others) + 1):
        for combo in combinations(others, r):
            S = frozenset((G.identity,) + combo)
            if all(G.mul(a, b) in S for a in S for b in S):
                found.add(S)
    return found


def two_generated_oracle(G):
    """Subgroups generated by at most two elements (all subgroups of the catalog groups)."""
    els = G.elements
    return {G.closure([a, b]) for a in els for b in els}


def normal_abelian_oracle(subgroups, G):
    out = set()
    for S in subgroups:
        H = Subgroup(G, S)
        conj_closed = all(G.mul(G.mul(g, a), G.inv(g)) in S for g in G.elements for a in S)
        if conj_closed and H.is_abelian:
            out.add(S)
    return out


def test_close_generators_examples():
    assert close_generators(3, [(1, 0, 2), (1, 2, 0)]).order == 6
    assert close_generators(1, []).order == 1
    assert builtin_group("Q8").order == 8


def test_order_cap(monkeypatch):
    monkeypatch.setenv("HOPFGRADE_ORDER_CAP", "10")
    with pytest.raises(OrderBoundExceeded):
        close_generators(4, [(1, 2, 3, 0), (1, 0, 2, 3)]).elements


@pytest.mark.parametrize("name", ["Z2xZ2", "Q8", "D4", "S3", "Z6"])
def test_all_subgroups_against_subset_enumeration(name):
    G = builtin_group(name)
    assert set(all_subgroups(G)) == subsets_oracle(G)


@pytest.mark.parametrize("name", GRADING_CATALOG)
def test_normal_abelian_subgroups_against_oracle(name):
    G = builtin_group(name)
    ours = {H.members for H in normal_abelian_subgroups(G)}
    subs = two_generated_oracle(G)
    assert subs == set(all_subgroups(G))
    assert ours == normal_abelian_oracle(subs, G)
    oracle_min = min(G.order // len(S) for S in ours)
    assert min_abelian_index(G) == oracle_min


def test_normal_abelian_examples():
    S4 = builtin_group("S4")
    assert sorted(H.order for H in normal_abelian_subgroups(S4)) == [1, 4]
    Q8 = builtin_group("Q8")
    assert sorted(H.order for H in normal_abelian_subgroups(Q8)) == [1, 2, 4, 4, 4]
    Z6 = builtin_group("Z6")
    assert len(normal_abelian_subgroups(Z6)) == len(all_subgroups(Z6)) == 4


def test_min_abelian_index_values():
    assert min_abelian_index(builtin_group("Z6")) == 1
    assert min_abelian_index(builtin_group("Q8")) == 2
    assert min_abelian_index(builtin_group("S4")) == 6
    assert min_abelian_index(builtin_group("A4")) == 3


@pytest.mark.parametrize("name", GRADING_CATALOG)
def test_index_one_iff_abelian(name):
    G = builtin_group(name)
    assert (min_abelian_index(G) == 1) == G.is_abelian()


def test_can_grade():
    assert can_grade(builtin_group("Z2xZ2"), 1)
    assert can_grade(builtin_group("Q8"), 2)
    assert not can_grade(builtin_group("S4"), 3)
    with pytest.raises(ValueError):
        can_grade(builtin_group("Z2"), 0)


@pytest.mark.parametrize("name", ["Q8", "S4", "A4", "D4", "S3xZ2"])
def test_can_grade_monotone_under_multiples(name):
    G = builtin_group(name)
    for d in range(1, 13):
        if can_grade(G, d):
            assert all(can_grade(G, d * k) for k in range(1, 4))


def test_quotients():
    S4 = builtin_group("S4")
    V4 = next(H for H in normal_abelian_subgroups(S4) if H.order == 4)
    Q, proj = quotient(S4, V4)
    assert Q.order == 6 and not Q.is_abelian()
    assert all(proj[S4.mul(a, b)] == Q.mul(proj[a], proj[b]) for a in S4.elements for b in S4.elements)
    G = builtin_group("Q8")
    T, _ = quotient(G, Subgroup(G, G.elements))
    assert T.order == 1
    i_sub = Subgroup(G, G.closure([G.generators[0]]))
    assert quotient(G, i_sub)[0].order == 2
    S3 = builtin_group("S3")
    transposition = next(g for g in S3.elements if S3.element_order(g) == 2)
    with pytest.raises(NotNormal):
        quotient(S3, Subgroup(S3, S3.closure([transposition])))


@pytest.mark.parametrize("name,expected", [
    ("Z5", [1] * 5),
    ("S3", [1, 1, 2]),
    ("Q8", [1, 1, 1, 1, 2]),
    ("D4", [1, 1, 1, 1, 2]),
    ("A4", [1, 1, 1, 3]),
    ("S4", [1, 1, 2, 3, 3]),
])
def test_character_degrees_known_tables(name, expected):
    G = builtin_group(name)
    degs = sorted(character_degrees(G))
    assert degs == expected
    assert sum(d * d for d in degs) == G.order
    assert len(degs) == len(G.conjugacy_classes)


def test_catalog_round_trip():
    text = "name V; degree 4; gens (0 1)(2 3), (0 2)(1 3)\nname C3; degree 3; gens (0 1 2)\n"
    groups = parse_catalog(text)
    assert groups["V"].order == 4 and groups["C3"].order == 3
    again = parse_catalog(format_catalog_entry(groups["V"]))
    assert again["V"].elements == groups["V"].elements
    assert parse_cycles("(0 1 2)", 4) == (1, 2, 0, 3)


def test_abstract_group_regular_representation():
    G = AbstractGroup(range(6), lambda a, b: (a + b) % 6, 0, name="Z6")
    assert G.check_associative() is None
    P, to_perm = G.to_perm_group()
    assert P.order == 6 and P.is_abelian()
    assert G.fingerprint() == builtin_group("Z6").fingerprint()
