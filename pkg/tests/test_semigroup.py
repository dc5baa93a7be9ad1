import pytest
from hypothesis import given
from hypothesis import strategies as st

from bresinski.errors import EmptyInput, InconsistentSymmetry, NonCoprime, NotInSemigroup, ZeroGenerator
from bresinski.semigroup import (
    NumericalSemigroup,
    apery_set,
    contains,
    frobenius,
    gap_profile,
    geq_h,
    is_symmetric,
    make_semigroup,
    parse_semigroup,
    symmetry_tests,
)
from conftest import semigroups
from oracles import brute_apery, brute_contains, brute_frobenius, brute_pseudo_frobenius


class TestMakeSemigroup:
    def test_minimal_system_kept(self):
        H = make_semigroup([5, 6, 7, 8])
        assert H.generators == (5, 6, 7, 8)
        assert H.embedding_dim == 4
        assert H.total_weight == 26
        for i, n in enumerate(H.generators):
            others = H.generators[:i] + H.generators[i + 1:]
            assert not brute_contains(others, n)

    def test_redundant_removed_and_sorted(self):
        assert make_semigroup([2, 4, 3]).generators == (2, 3)
        assert make_semigroup([7, 5, 5, 10, 12]).generators == (5, 7)

    @pytest.mark.parametrize(
        "raw, exc",
        [([], EmptyInput), ([4, 6], NonCoprime), ([0, 1], ZeroGenerator), ([-3, 5], ZeroGenerator)],
    )
    def test_errors(self, raw, exc):
        with pytest.raises(exc):
            make_semigroup(raw)

    def test_constructor_rejects_non_minimal(self):
        with pytest.raises(ValueError):
            NumericalSemigroup((2, 3, 4))

    def test_parse_is_whitespace_tolerant(self):
        assert parse_semigroup(" 5, 6 ,7,  8 ").generators == (5, 6, 7, 8)
        with pytest.raises(ValueError):
            parse_semigroup("5,six")
        with pytest.raises(EmptyInput):
            parse_semigroup("  ")


class TestApery:
    def test_default_modulus(self, h5678):
        ap = apery_set(h5678)
        assert ap.modulus == 5
        assert ap.entries == (0, 6, 7, 8, 14)
        assert list(ap.entries) == brute_apery((5, 6, 7, 8), 5)

    def test_two_three(self):
        assert apery_set(make_semigroup([2, 3]), 2).entries == (0, 3)

    def test_modulus_must_be_in_h(self, h5678):
        with pytest.raises(NotInSemigroup):
            apery_set(h5678, 4)

    def test_other_modulus(self, h5678):
        assert list(apery_set(h5678, 6).entries) == brute_apery((5, 6, 7, 8), 6)
        assert list(apery_set(h5678, 14).entries) == brute_apery((5, 6, 7, 8), 14)


class TestMembership:
    @pytest.mark.parametrize("n, expected", [(9, False), (0, True), (14, True), (-5, False), (4, False), (10, True)])
    def test_contains(self, h5678, n, expected):
        assert contains(h5678, n) is expected
        assert (n in h5678) is expected

    @pytest.mark.parametrize(
        "gens, fr", [((5, 6, 7, 8), 9), ((10, 14, 15, 21), 47), ((1,), -1), ((2, 3), 1), ((4, 5, 6, 7), 3)]
    )
    def test_frobenius(self, gens, fr):
        assert frobenius(make_semigroup(gens)) == fr
        assert brute_frobenius(gens)[0] == fr

    def test_gap_profiles(self, h5678, h4567):
        p = gap_profile(h5678)
        assert p.gaps == (1, 2, 3, 4, 9) and p.genus == 5 and p.pseudo_frobenius == (9,)
        q = gap_profile(h4567)
        assert q.gaps == (1, 2, 3) and q.genus == 3
        # {0} U [4, oo): every gap is pseudo-Frobenius.
        assert q.pseudo_frobenius == tuple(brute_pseudo_frobenius((4, 5, 6, 7))) == (1, 2, 3)

    def test_trivial_semigroup(self):
        H = make_semigroup([1])
        p = gap_profile(H)
        assert p.gaps == () and p.genus == 0 and p.frobenius == -1
        assert is_symmetric(H)

    @pytest.mark.parametrize(
        "gens, sym", [((5, 6, 7, 8), True), ((4, 5, 6, 7), False), ((10, 14, 15, 21), True), ((3, 5, 7), False)]
    )
    def test_symmetric(self, gens, sym):
        assert is_symmetric(make_semigroup(gens)) is sym

    def test_geq_h(self, h5678):
        assert geq_h(h5678, 14, 6)
        assert geq_h(h5678, 11, 11)
        assert not geq_h(h5678, 9, 0)

    def test_inconsistent_symmetry_is_loud(self, h5678, monkeypatch):
        import bresinski.semigroup as sg

        monkeypatch.setattr(sg, "symmetry_tests", lambda H: {"mirror": True, "genus": False})
        with pytest.raises(InconsistentSymmetry):
            sg.is_symmetric(h5678)


@given(semigroups())
def test_gap_profile_matches_brute_force(H):
    fr, gaps, _ = brute_frobenius(H.generators)
    p = gap_profile(H)
    assert p.frobenius == fr
    assert list(p.gaps) == gaps
    if fr >= 0:
        assert list(p.pseudo_frobenius) == brute_pseudo_frobenius(H.generators)
        assert fr in p.pseudo_frobenius and set(p.pseudo_frobenius) <= set(p.gaps)


@given(semigroups(), st.integers(-5, 200))
def test_contains_matches_brute_force(H, n):
    assert contains(H, n) == brute_contains(H.generators, n)


@given(semigroups())
def test_apery_invariants_and_monotonicity(H):
    m = H.multiplicity
    ap = apery_set(H)
    fr = frobenius(H)
    assert ap.entries[0] == 0
    for r, w in enumerate(ap.entries):
        assert w % m == r and contains(H, w) and not contains(H, w - m)
    assert max(ap.entries) - m == fr
    assert all(contains(H, n) for n in range(fr + 1, fr + 2 * m + 2))


@given(semigroups(), st.data())
def test_frobenius_independent_of_modulus(H, data):
    m = data.draw(st.sampled_from([n for n in range(1, 60) if contains(H, n)]))
    ap = apery_set(H, m)
    assert max(ap.entries) - m == frobenius(H)


@given(semigroups())
def test_symmetry_tests_agree(H):
    assert len(set(symmetry_tests(H).values())) == 1


@given(semigroups(), st.integers(-30, 60), st.integers(-30, 60), st.integers(-30, 60))
def test_geq_h_partial_order(H, a, b, c):
    assert geq_h(H, a, a)
    if geq_h(H, a, b) and geq_h(H, b, c):
        assert geq_h(H, a, c)
    if geq_h(H, a, b) and geq_h(H, b, a):
        assert a == b
