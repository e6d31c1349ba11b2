import random
from itertools import product

import pytest

from hopfgrade.catalog import shapiro_cases
from hopfgrade.cohomology import (
    Cocycle2,
    FinAb,
    GModule,
    NotACoboundary,
    abelian_structure,
    coboundary,
    coboundary_solve,
    cocycle_from_extension,
    dual_module,
    min_module_generators,
    shapiro_embedding,
    twisted_semidirect,
)
from hopfgrade.groups import Subgroup, builtin_group, quotient


def swap_module():
    Z2 = builtin_group("Z2")
    return GModule.from_generator_matrices(Z2, FinAb((2, 2)), [((0, 1), (1, 0))])


def extension(group, generators):
    G = builtin_group(group)
    return cocycle_from_extension(G, Subgroup(G, G.closure(generators(G))))


def test_finab_basics():
    A = FinAb((2, 4))
    assert A.order == 8 and A.exponent == 4 and A.rank == 2
    assert len(set(A.elements())) == 8
    assert A.add((1, 3), (1, 2)) == (0, 1)
    assert A.element_order((1, 2)) == 2
    assert FinAb(()).order == 1


def test_abelian_structure_of_subgroups():
    Q8 = builtin_group("Q8")
    ab, to_ab, from_ab = abelian_structure(Q8, Q8.closure([Q8.generators[0]]))
    assert ab.factors == (4,)
    for a in ab.elements():
        for b in ab.elements():
            assert from_ab[ab.add(a, b)] == Q8.mul(from_ab[a], from_ab[b])
    V = builtin_group("Z2xZ2")
    assert abelian_structure(V, V.elements)[0].factors == (2, 2)


def test_dual_pairing_is_invariant():
    for M in (swap_module(), extension("Q8", lambda G: [G.generators[0]]).module,
              extension("S3", lambda G: [next(g for g in G.elements if G.element_order(g) == 3)]).module):
        D = dual_module(M)
        n = M.ab.exponent
        for h in M.group.elements:
            for k in D.ab.elements():
                for a in M.ab.elements():
                    assert D.ab.pairing(D.act(h, k), M.act(h, a)) % n == D.ab.pairing(k, a) % n


def test_dual_of_coordinate_swap_is_the_swap():
    Z2 = builtin_group("Z2")
    swap = ((0, 1), (1, 0))
    M = GModule.from_generator_matrices(Z2, FinAb((3, 3)), [swap])
    D = dual_module(M)
    assert D.action == M.action
    assert D.action[Z2.generators[0]] == swap


def test_dual_of_trivial_is_trivial():
    M = GModule.trivial(builtin_group("Z3"), FinAb((2, 4)))
    assert dual_module(M).is_trivial()


def test_min_module_generators():
    Z2 = builtin_group("Z2")
    assert min_module_generators(GModule.trivial(Z2, FinAb((2, 2))))[0] == 2
    m, gens = min_module_generators(swap_module())
    assert m == 1 and gens == [(1, 0)] and len(swap_module().submodule(gens)) == 4
    assert min_module_generators(GModule.trivial(Z2, FinAb(())))[0] == 0


def test_invalid_action_rejected():
    Z2 = builtin_group("Z2")
    with pytest.raises(ValueError):  # singular matrix
        GModule.from_generator_matrices(Z2, FinAb((2, 2)), [((0, 0), (0, 1))])
    with pytest.raises(ValueError):  # generator of order 2 acting with order 3
        GModule.from_generator_matrices(Z2, FinAb((2, 2)), [((0, 1), (1, 1))])


def test_extension_cocycle_of_z4_is_not_a_coboundary():
    ext = extension("Z4", lambda G: [G.mul(G.generators[0], G.generators[0])])
    H = ext.H
    h = next(x for x in H.elements if x != H.identity)
    assert ext.cocycle(h, h) != ext.module.ab.zero
    with pytest.raises(NotACoboundary):
        coboundary_solve(ext.cocycle)
    # oracle: no cochain H -> Z2 at all has coboundary equal to c
    for values in product(ext.module.ab.elements(), repeat=H.order):
        mu = dict(zip(H.elements, values))
        assert coboundary(ext.module, mu) != ext.cocycle.table


def test_split_extension_cocycle_is_a_coboundary():
    ext = extension("S3", lambda G: [next(g for g in G.elements if G.element_order(g) == 3)])
    mu = coboundary_solve(ext.cocycle)
    assert coboundary(ext.module, mu) == ext.cocycle.table


def test_center_of_q8():
    ext = extension("Q8", lambda G: [G.mul(G.generators[0], G.generators[0])])
    assert ext.module.ab.factors == (2,)
    assert ext.H.order == 4 and ext.module.is_trivial()
    with pytest.raises(NotACoboundary):
        coboundary_solve(ext.cocycle)


def test_zero_cocycle_solves_to_a_cocycle():
    M = swap_module()
    mu = coboundary_solve(Cocycle2.zero(M))
    assert all(not any(v) for v in coboundary(M, mu).values())


def test_twisted_semidirect_recovers_groups():
    ext = extension("Z4", lambda G: [G.mul(G.generators[0], G.generators[0])])
    T = twisted_semidirect(ext.module, ext.cocycle)
    assert max(T.element_order(x) for x in T.elements) == 4
    split = twisted_semidirect(ext.module)
    assert max(split.element_order(x) for x in split.elements) == 2
    ext = extension("Q8", lambda G: [G.generators[0]])
    T = twisted_semidirect(ext.module, ext.cocycle)
    assert sum(1 for x in T.elements if T.element_order(x) == 2) == 1
    assert T.fingerprint() == builtin_group("Q8").fingerprint()


def test_changing_cocycle_by_coboundary_gives_isomorphic_group():
    rng = random.Random(0)
    for ext in (extension("Q8", lambda G: [G.generators[0]]),
                extension("D4", lambda G: [G.generators[0]])):
        M, ab, H = ext.module, ext.module.ab, ext.H
        mu = {h: (ab.zero if h == H.identity else ab.norm(tuple(rng.randrange(f) for f in ab.factors)))
              for h in H.elements}
        dmu = coboundary(M, mu)
        shifted = Cocycle2(M, {k: ab.sub(v, dmu[k]) for k, v in ext.cocycle.table.items()})
        T1, T2 = twisted_semidirect(M, ext.cocycle), twisted_semidirect(M, shifted)
        phi = {(a, h): (ab.add(a, mu[h]), h) for (a, h) in T1.elements}
        assert len(set(phi.values())) == T1.order
        assert all(phi[T1.mul(x, y)] == T2.mul(phi[x], phi[y]) for x in T1.elements for y in T1.elements)


@pytest.mark.parametrize("case,order", [("Q8/<i>", 32), ("S3/A3", 18)])
def test_shapiro_embedding(case, order):
    name, G, A = next(c for c in shapiro_cases() if c[0] == case)
    emb = shapiro_embedding(G, A)
    assert emb.target.order == order
    assert emb.hom.multiplicative_violation() is None
    assert emb.hom.injective and emb.residual_zero
    H, proj = quotient(G, A)
    assert all(emb.hom(g)[1] == proj[g] for g in G.elements)


def test_shapiro_abelian_normal_subgroup_of_a4():
    A4 = builtin_group("A4")
    V = next(s for s in (Subgroup(A4, m) for m in [A4.closure([a, b]) for a in A4.elements for b in A4.elements])
             if s.order == 4)
    emb = shapiro_embedding(A4, V)
    assert emb.hom.injective and emb.target.order == 2 ** (3 * emb.m) * 3
