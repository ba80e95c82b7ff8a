import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mvgroups.errors import InfiniteBackendUnsupported, ValidationError
from mvgroups.groups import (
    Automorphism,
    FreeAbelianGroup,
    FreeGroup,
    PermutationGroup,
    close_automorphisms,
)
from mvgroups.multiset import MultiSet
from mvgroups.mvalued import (
    CosetGroup,
    DoubleCosetGroup,
    MutatedNatGroup,
    MvGroup,
    NatGroup,
    check_axioms,
    triple_product_left,
    triple_product_right,
)


# ---------------------------------------------------------------------------
# builtin 2-valued group on the non-negative integers


def test_nat_product_examples():
    X = NatGroup()
    assert X.mul(3, 5) == MultiSet.of([8, 2])
    assert X.mul(4, 4) == MultiSet.of([0, 8])
    assert X.mul(0, 7) == MultiSet.of([7, 7])
    assert X.inv(9) == 9


@given(st.integers(min_value=0, max_value=500), st.integers(min_value=0, max_value=500))
def test_nat_support_formula(x, y):
    X = NatGroup()
    assert list(X.mul(x, y).support()) == sorted({x + y, abs(x - y)})


def test_nat_axioms_hold_on_initial_segment():
    X = NatGroup()
    report = check_axioms(X, range(11))
    assert report.all_ok
    assert report.triples_checked == 11 ** 3
    assert report.elements_checked == 11


def test_mutated_nat_fails_unit_and_inverse():
    X = MutatedNatGroup()
    report = check_axioms(X, range(5))
    # the mutation keeps associativity (both triple products are
    # {s:1, s+1:2, s+2:1} for s = x+y+z) but destroys the unit and inverse
    assert report.associativity_ok
    assert not report.unit_ok and report.unit_witness == 0
    assert not report.inverse_ok and report.inverse_witness == 1
    assert not report.all_ok


class _BrokenAt22(MvGroup):
    """Ad-hoc control: one corrupted product value breaks associativity."""

    n = 2
    unit = 0

    def mul(self, x, y):
        if x == 2 and y == 2:
            return MultiSet.of([4, 1])
        return MultiSet.of([x + y, abs(x - y)])

    def inv(self, x):
        return x


def test_associativity_failure_produces_witness():
    report = check_axioms(_BrokenAt22(), range(4))
    assert not report.associativity_ok
    assert report.associativity_witness is not None
    x, y, z = report.associativity_witness
    X = _BrokenAt22()
    assert triple_product_left(X, x, y, z) != triple_product_right(X, x, y, z)


def test_check_axioms_inserts_unit():
    report = check_axioms(NatGroup(), [3, 4])
    assert report.all_ok
    assert report.elements_checked == 3  # unit prepended


def test_check_axioms_rejects_empty_sample():
    with pytest.raises(ValidationError):
        check_axioms(NatGroup(), [])


def test_triple_product_total_size_is_n_squared():
    X = NatGroup()
    assert triple_product_left(X, 1, 1, 2).total_size == 4
    assert triple_product_left(X, 1, 1, 2) == MultiSet.of([0, 2, 2, 4])


# ---------------------------------------------------------------------------
# coset groups


def z_pm1():
    z = FreeAbelianGroup(1)
    neg = Automorphism(z, "neg", [(-1,)], [(-1,)]).verify()
    return CosetGroup(z, close_automorphisms([neg]))


def test_coset_projection_picks_nonnegative_rep():
    X = z_pm1()
    assert X.project((-5,)).rep == (5,)
    assert X.project((5,)) == X.project((-5,))
    assert X.unit.rep == (0,)


def test_coset_product_matches_nat():
    X = z_pm1()
    out = X.mul(X.project((3,)), X.project((5,)))
    assert [e.rep for e, _ in out] == [(2,), (8,)]
    assert X.inv(X.project((7,))).rep == (7,)


def test_coset_transports_builtin_nat():
    X = z_pm1()
    nat = NatGroup()
    for x in range(20):
        for y in range(20):
            lhs = sorted(e.rep[0] for e, m in X.mul(X.project((x,)), X.project((y,)))
                         for _ in range(m))
            rhs = sorted(w for w, m in nat.mul(x, y) for _ in range(m))
            assert lhs == rhs


def test_coset_product_total_size_is_order_of_A():
    X = z_pm1()
    assert X.n == 2
    out = X.mul(X.project((0,)), X.project((0,)))
    assert out.total_size == 2  # stabilized orbits still give an n-family
    assert out == MultiSet.of([X.unit, X.unit])


def test_coset_representative_independence(instances):
    inst = instances["z2_swap"]
    X, backend = inst.X, inst.backend
    rng = random.Random(42)
    for _ in range(200):
        g = (rng.randint(-6, 6), rng.randint(-6, 6))
        h = (rng.randint(-6, 6), rng.randint(-6, 6))
        base = X.mul(X.project(g), X.project(h))
        for a in X.auts:
            for b in X.auts:
                assert X.mul(X.project(a.apply(g)), X.project(b.apply(h))) == base


def test_coset_carrier_finite_backend(instances):
    X = instances["s3_conj"].X
    carrier = X.carrier()
    # conjugation by the transposition fixes e and t, swaps the two
    # 3-cycles, and swaps the remaining two transpositions
    assert len(carrier) == 4
    assert X.unit in carrier


def test_coset_axioms_full_finite_carrier(instances):
    X = instances["s3_conj"].X
    report = check_axioms(X, X.carrier())
    assert report.all_ok


def test_coset_carrier_needs_finite_backend():
    with pytest.raises(InfiniteBackendUnsupported):
        z_pm1().carrier()


# ---------------------------------------------------------------------------
# double coset groups


def s3_backend():
    return PermutationGroup(3, ["t", "c"], [[1, 0, 2], [1, 2, 0]])


def brute_double_cosets(subgroup):
    """Independent oracle: partition S3 tuples into H g H classes."""
    def mul(g, h):
        return tuple(h[g[i]] for i in range(3))

    classes = {}
    for g in itertools.permutations(range(3)):
        cls = frozenset(mul(mul(h1, g), h2) for h1 in subgroup for h2 in subgroup)
        classes[cls] = None
    return set(classes)


def test_double_coset_s3_transposition_subgroup(instances):
    X = instances["s3_doublecoset"].X
    assert X.n == 2
    carrier = X.carrier()
    oracle = brute_double_cosets([(0, 1, 2), (1, 0, 2)])
    assert len(carrier) == len(oracle) == 2
    reps = {x.rep for x in carrier}
    for cls in oracle:
        assert len(reps & cls) == 1  # exactly one representative per class


def test_double_coset_products_match_oracle(instances):
    X = instances["s3_doublecoset"].X
    backend = X.backend

    def project_oracle(g):
        cls = [backend.mul(backend.mul(h1, g), h2)
               for h1 in X.subgroup for h2 in X.subgroup]
        return min(cls, key=backend.canonical_key)

    for x in X.carrier():
        for y in X.carrier():
            expected = MultiSet.of([
                project_oracle(backend.mul(backend.mul(x.rep, h), y.rep))
                for h in X.subgroup])
            got = MultiSet.of([e.rep for e, m in X.mul(x, y) for _ in range(m)])
            assert got == expected


def test_double_coset_axioms_full_carrier(instances):
    X = instances["s3_doublecoset"].X
    assert check_axioms(X, X.carrier()).all_ok


def test_double_coset_cyclic_subgroup_has_n_three():
    X = DoubleCosetGroup(s3_backend(), [(1, 2, 0)])
    assert X.n == 3
    assert len(X.carrier()) == 2
    assert check_axioms(X, X.carrier()).all_ok


def test_double_coset_rejects_infinite_backend():
    f = FreeGroup(2)
    with pytest.raises(InfiniteBackendUnsupported):
        DoubleCosetGroup(f, [f.gen(0)])


def test_class_elements_order_and_hash():
    X = z_pm1()
    a, b = X.project((2,)), X.project((-2,))
    assert a == b and hash(a) == hash(b)
    assert X.project((1,)) < X.project((2,))  # key order: 1 before 2
    assert len({X.project((k,)) for k in (-3, 3, -3)}) == 1
