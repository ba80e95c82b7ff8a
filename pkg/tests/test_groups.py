import random

import pytest

from mvgroups.errors import (
    BudgetExceeded,
    ClosureBudgetExceeded,
    InverseMissing,
    NotAnAutomorphism,
)
from mvgroups.groups import (
    Automorphism,
    CyclicGroup,
    DirectProduct,
    FreeAbelianGroup,
    FreeGroup,
    HeisenbergGroup,
    PermutationGroup,
    SemidirectProduct,
    close_automorphisms,
    identity_automorphism,
    monoid_balls,
    orbit,
)


def random_element(backend, rng, steps=6):
    g = backend.identity
    k = len(backend.gen_names)
    for _ in range(rng.randint(0, steps)):
        s = backend.gen(rng.randrange(k))
        if rng.random() < 0.5:
            s = backend.inv(s)
        g = backend.mul(g, s)
    return g


def s3():
    return PermutationGroup(3, ["t", "c"], [[1, 0, 2], [1, 2, 0]])


def all_backends():
    return [
        FreeGroup(2),
        FreeAbelianGroup(1),
        FreeAbelianGroup(2),
        CyclicGroup(6),
        HeisenbergGroup(),
        s3(),
        DirectProduct([CyclicGroup(3, ["h"]), FreeGroup(2)]),
    ]


@pytest.mark.parametrize("backend", all_backends(), ids=lambda b: b.kind)
def test_group_axioms_random_triples(backend):
    rng = random.Random(1234)
    e = backend.identity
    for _ in range(1000):
        g = random_element(backend, rng)
        h = random_element(backend, rng)
        k = random_element(backend, rng)
        assert backend.mul(backend.mul(g, h), k) == backend.mul(g, backend.mul(h, k))
        assert backend.mul(e, g) == g
        assert backend.mul(g, e) == g
        assert backend.mul(g, backend.inv(g)) == e


@pytest.mark.parametrize("backend", all_backends(), ids=lambda b: b.kind)
def test_canonical_key_injective_and_consistent(backend):
    rng = random.Random(99)
    seen = {}
    for _ in range(300):
        g = random_element(backend, rng)
        key = backend.canonical_key(g)
        if key in seen:
            assert seen[key] == g
        seen[key] = g
        assert backend.canonical_key(g) == key  # stable


def test_identity_key_is_minimal_in_samples():
    for backend in all_backends():
        rng = random.Random(7)
        keys = [backend.canonical_key(random_element(backend, rng)) for _ in range(100)]
        assert backend.canonical_key(backend.identity) <= min(keys)


def test_integer_addition():
    z = FreeAbelianGroup(1)
    assert z.mul((3,), (5,)) == (8,)
    assert z.inv((7,)) == (-7,)


def test_free_reduction():
    f = FreeGroup(2)
    g1, g2 = f.gen(0), f.gen(1)
    word = f.mul(g1, f.inv(g2))  # g1*g2^-1
    assert f.mul(word, g2) == g1
    assert f.inv(f.mul(g1, g2)) == f.mul(f.inv(g2), f.inv(g1))
    # equal words in different spellings share a key
    spelled = f.mul(f.mul(g1, f.inv(g1)), g2)
    assert f.canonical_key(spelled) == f.canonical_key(g2)


def test_distinct_vectors_distinct_keys():
    z2 = FreeAbelianGroup(2)
    assert z2.canonical_key((1, 0)) != z2.canonical_key((0, 1))


def test_heisenberg_convention():
    h = HeisenbergGroup()
    assert h.mul((1, 0, 0), (0, 1, 0)) == (1, 1, 1)


def test_heisenberg_matches_matrix_oracle():
    # oracle: (p,q,r) <-> [[1,p,r],[0,1,q],[0,0,1]], multiplied directly
    def to_matrix(g):
        p, q, r = g
        return [[1, p, r], [0, 1, q], [0, 0, 1]]

    def matmul(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)]
                for i in range(3)]

    h = HeisenbergGroup()
    rng = random.Random(5)
    for _ in range(200):
        g1 = random_element(h, rng)
        g2 = random_element(h, rng)
        prod = h.mul(g1, g2)
        assert to_matrix(prod) == matmul(to_matrix(g1), to_matrix(g2))


def test_s3_inverse_of_three_cycle():
    g = s3()
    c = g.gen(1)  # (1 2 3)
    assert g.inv(c) == (2, 0, 1)  # (1 3 2)
    assert g.render(g.inv(c)) == "(1 3 2)"


# ---------------------------------------------------------------------------
# automorphisms


def swap_automorphism(f):
    return Automorphism(f, "swap", [f.gen(1), f.gen(0)], [f.gen(1), f.gen(0)]).verify()


def test_swap_generator_image():
    f = FreeGroup(2)
    swap = swap_automorphism(f)
    assert swap.apply(f.gen(0)) == f.gen(1)


def test_h_inversion_on_product_group():
    g = DirectProduct([CyclicGroup(3, ["h"]), FreeGroup(2)])
    h, g1 = g.gen(0), g.gen(1)
    images = [g.inv(h), g.gen(1), g.gen(2)]
    a = Automorphism(g, "a", images, images).verify()
    # (h, g1) -> (h^2, g1)
    assert a.apply(g.mul(h, g1)) == g.mul(g.mul(h, h), g1)


def test_identity_automorphism_fixes_everything():
    f = HeisenbergGroup()
    ident = identity_automorphism(f)
    rng = random.Random(3)
    for _ in range(50):
        g = random_element(f, rng)
        assert ident.apply(g) == g


def test_automorphism_respects_mul_and_inv():
    f = FreeGroup(2)
    a = swap_automorphism(f)
    rng = random.Random(11)
    for _ in range(1000):
        g = random_element(f, rng)
        h = random_element(f, rng)
        assert a.apply(f.mul(g, h)) == f.mul(a.apply(g), a.apply(h))
        assert a.apply(f.inv(g)) == f.inv(a.apply(g))


def test_heisenberg_swap_is_automorphism():
    h = HeisenbergGroup()
    images = [h.gen(1), h.gen(0), h.inv(h.gen(2))]
    a = Automorphism(h, "swap", images, images).verify()
    rng = random.Random(21)
    for _ in range(300):
        g1 = random_element(h, rng)
        g2 = random_element(h, rng)
        assert a.apply(h.mul(g1, g2)) == h.mul(a.apply(g1), a.apply(g2))


def test_close_swap_gives_order_two():
    f = FreeGroup(2)
    auts = close_automorphisms([swap_automorphism(f)])
    assert auts.order == 2


def test_close_identity_gives_order_one():
    auts = close_automorphisms([identity_automorphism(FreeGroup(2))])
    assert auts.order == 1


def test_doubling_is_rejected():
    # g1 -> g1^2 on a free group is not surjective; no inverse images exist
    f = FreeGroup(1)
    square = f.mul(f.gen(0), f.gen(0))
    with pytest.raises(InverseMissing):
        Automorphism(f, "double", [square], None).verify()
    with pytest.raises(NotAnAutomorphism):
        Automorphism(f, "double", [square], [f.gen(0)]).verify()


def test_shear_closure_exceeds_bound():
    z2 = FreeAbelianGroup(2)
    shear = Automorphism(z2, "shear", [(1, 0), (1, 1)], [(1, 0), (-1, 1)]).verify()
    with pytest.raises(ClosureBudgetExceeded):
        close_automorphisms([shear], bound=10)


def test_orbit_examples():
    z = FreeAbelianGroup(1)
    neg = Automorphism(z, "neg", [(-1,)], [(-1,)]).verify()
    auts = close_automorphisms([neg])
    assert orbit(auts, (5,)) == ((5,), (-5,))  # nonneg rep sorts first
    assert orbit(auts, (0,)) == ((0,),)

    f = FreeGroup(2)
    swap_group = close_automorphisms([swap_automorphism(f)])
    g1g2 = f.mul(f.gen(0), f.gen(1))
    g2g1 = f.mul(f.gen(1), f.gen(0))
    assert set(orbit(swap_group, g1g2)) == {g1g2, g2g1}


# ---------------------------------------------------------------------------
# semidirect product


def z_pm1_semidirect():
    z = FreeAbelianGroup(1)
    neg = Automorphism(z, "neg", [(-1,)], [(-1,)]).verify()
    auts = close_automorphisms([neg])
    ga = SemidirectProduct(z, auts)
    i_neg = next(i for i, a in enumerate(auts.elements) if a.apply((1,)) == (-1,))
    return ga, auts.identity_index, i_neg


def test_semidirect_left_unit_and_embedding():
    ga, i_id, i_neg = z_pm1_semidirect()
    h = ((5,), i_neg)
    assert ga.mul(ga.identity, h) == h
    assert ga.mul(((3,), i_id), ((5,), i_id)) == ((8,), i_id)


def test_semidirect_displayed_formula():
    # (3, -1)(5, +1) = (3 + (-1)^{-1}(5), -1) = (-2, -1)
    ga, i_id, i_neg = z_pm1_semidirect()
    assert ga.mul(((3,), i_neg), ((5,), i_id)) == ((-2,), i_neg)


def test_semidirect_group_axioms():
    ga, _, _ = z_pm1_semidirect()
    rng = random.Random(8)
    for _ in range(500):
        p = random_element(ga, rng)
        q = random_element(ga, rng)
        r = random_element(ga, rng)
        assert ga.mul(ga.mul(p, q), r) == ga.mul(p, ga.mul(q, r))
        assert ga.mul(p, ga.inv(p)) == ga.identity


def test_semidirect_embeds_base_group():
    ga, i_id, _ = z_pm1_semidirect()
    rng = random.Random(13)
    for _ in range(200):
        a = rng.randint(-50, 50)
        b = rng.randint(-50, 50)
        assert ga.mul(((a,), i_id), ((b,), i_id)) == ((a + b,), i_id)
        assert ga.canonical_key(((a,), i_id)) != ga.canonical_key(((b,), i_id)) or a == b


# ---------------------------------------------------------------------------
# monoid balls


def test_free_monoid_spheres_double():
    f = FreeGroup(2)
    table = monoid_balls(f, [f.gen(0), f.gen(1)], 3)
    assert table.sphere_sizes() == [1, 2, 4, 8]


def test_z_one_generator_ball_counts():
    z = FreeAbelianGroup(1)
    table = monoid_balls(z, [(1,)], 5)
    assert table.ball_sizes == [1, 2, 3, 4, 5, 6]


def test_z_two_sided_ball():
    z = FreeAbelianGroup(1)
    table = monoid_balls(z, [(1,), (-1,)], 2)
    assert table.ball_sizes[2] == 5
    assert set(table.sphere_sets[2]) == {(2,), (-2,)}


def test_monoid_sphere_invariants():
    f = FreeGroup(2)
    gens = [f.gen(0), f.gen(1)]
    table = monoid_balls(f, gens, 5)
    seen = set()
    for r, sphere in enumerate(table.sphere_sets):
        assert not (set(sphere) & seen)
        if r > 0:
            # every sphere element has a predecessor in the previous layer
            prev = set(table.sphere_sets[r - 1])
            for v in sphere:
                assert any(f.mul(u, s) == v for u in prev for s in gens)
        seen |= set(sphere)
    assert table.ball_sizes == sorted(table.ball_sizes)


def test_monoid_budget_enforced():
    f = FreeGroup(2)
    with pytest.raises(BudgetExceeded):
        monoid_balls(f, [f.gen(0), f.gen(1)], 10, budget=20)
