from math import comb, gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from reference_tables import IU_ROWS
from sl2quot.ktheory import (
    DEGENERATE,
    DegeneratePrimeError,
    IdealIntegrityError,
    IdealProfile,
    KTheoryError,
    cached_profile,
    format_reduced,
    ideal_generators,
    ideal_profile,
    koszul_complex_build,
    koszul_homology_lemma,
    koszul_homology_snf,
    koszul_routes_agree,
    reduce_gcd_mod_p,
    separating_prime,
)
from sl2quot.orbits import enumerate_classes, find_class, trivial_class
from sl2quot.poly import IntPoly, fp_mul, fp_pow


def b6(label):
    return find_class("B6", label)


def test_b6_first_generator():
    prof = ideal_generators(b6("[3,1^10]"))
    assert prof.side == "SL2" and prof.eval_point == 2
    assert prof.generators[0] == IntPoly((-4, 0, 1))


def test_a1_identity():
    prof = ideal_generators(find_class("A1", "[2]"))
    assert prof.generators == (IntPoly((-2, 1)),)
    assert reduce_gcd_mod_p(prof, 5) == ([3, 1], 1)


def test_psl2_side():
    prof = ideal_generators(b6("[5^2,1^3]"))
    assert prof.side == "PSL2" and prof.eval_point == 3


def test_generators_vanish_at_eval_point():
    for c in enumerate_classes("B6") + enumerate_classes("C6") + enumerate_classes("E6"):
        prof = ideal_generators(c)
        assert all(g(prof.eval_point) == 0 for g in prof.generators)


def test_trivial_class_rejected():
    with pytest.raises(KTheoryError):
        ideal_generators(trivial_class("B6"))


@pytest.mark.parametrize("label,_i,p,a", [r for r in IU_ROWS if r[2] is not None])
def test_iu_rows(label, _i, p, a):
    assert cached_profile(b6(label)).per_prime[p] == a


def test_reduce_examples():
    g, a = reduce_gcd_mod_p(ideal_generators(b6("[5,2^4]")), 3)
    assert a == 3 and g == fp_pow([1, 1], 3, 3)  # (x - 2)^3 = (x + 1)^3 mod 3
    g, a = reduce_gcd_mod_p(ideal_generators(b6("[4^2,1^5]")), 2)
    assert g == [0, 0, 0, 0, 1] and a == 4


def test_index_11_profiles_equal():
    a = cached_profile(b6("[5,2^2,1^4]"))
    b = cached_profile(b6("[4^2,2^2,1]"))
    assert a.per_prime == b.per_prime
    assert separating_prime(a, b) is None


def test_separating_prime():
    a = cached_profile(b6("[5,2^4]"))
    b = cached_profile(b6("[4^2,3,1^2]"))
    assert separating_prime(a, b) == (3, 3, 2)


@pytest.mark.parametrize("g", ["B4", "C4", "D4", "A4"])
def test_generator_routes_same_ideal(g):
    for c in enumerate_classes(g):
        for p in (2, 3, 5):
            auto = reduce_gcd_mod_p(ideal_generators(c), p)
            fund = reduce_gcd_mod_p(ideal_generators(c, route="fundamental"), p)
            assert auto == fund


def _fake(gens, d=2):
    return IdealProfile("X", "y", "SL2", d, tuple(IntPoly(g) for g in gens))


def test_degenerate_and_integrity():
    with pytest.raises(DegeneratePrimeError):
        reduce_gcd_mod_p(_fake([(0, 3)]), 3)
    with pytest.raises(IdealIntegrityError):
        reduce_gcd_mod_p(_fake([(1, 0, 1)]), 3)  # x^2 + 1 is irreducible mod 3
    prof = _fake([(-2, 1), (0, 0)])
    assert prof.exponents() == {}


def test_degenerate_marked(monkeypatch):
    import sl2quot.ktheory as kt

    monkeypatch.setattr(kt, "ideal_generators", lambda c, route="auto": _fake([(-12, 6)]))  # 6 (x - 2)
    prof = kt.ideal_profile(None, 7)
    assert prof.per_prime[2] == DEGENERATE and prof.per_prime[3] == DEGENERATE
    assert prof.per_prime[5] == 1 and prof.degenerate_primes() == [2, 3]


def test_profile_json():
    prof = ideal_profile(b6("[5^2,1^3]"), 7)
    doc = prof.to_json()
    assert doc["variable"] == "x'" and doc["prime_bound"] == 7
    assert set(doc["per_prime"]) == {"2", "3", "5", "7"}
    with pytest.raises(KTheoryError):
        ideal_profile(b6("[5^2,1^3]"), 1)


@pytest.mark.parametrize(
    "p,d,a,text",
    [(2, 2, 4, "(x^4)"), (3, 2, 3, "((x-2)^3)"), (5, 2, 1, "((x-2))"), (2, 2, 2, "(x^2)"), (7, 3, 0, "(1)")],
)
def test_format_reduced(p, d, a, text):
    assert format_reduced(p, d, a) == text


# -- Koszul --------------------------------------------------------------------

def test_lemma_examples():
    h = koszul_homology_lemma([2, 4])
    assert h.degrees == ((2,), (2,), ())
    assert koszul_homology_lemma([3, 5]).degrees == ((), (), ())
    h = koszul_homology_lemma([[1, 1]], 3)  # x - 2 over F_3
    assert h.degrees == (((1, 1),), ())
    with pytest.raises(DegeneratePrimeError):
        koszul_homology_lemma([[0], [3]], 3)


def test_complex_shapes():
    d = koszul_complex_build([[1, 1], [0, 1], [2, 0, 1]], 3)
    assert [m.shape for m in d] == [(1, 3), (3, 3), (3, 1)]
    (d1,) = koszul_complex_build([[0, 1]], 2)
    assert d1.shape == (1, 1)
    d1, d2 = koszul_complex_build([6, 10])
    assert d1.to_Matrix().tolist() == [[6, 10]]
    assert d2.to_Matrix().tolist() == [[10], [-6]]


def test_snf_examples():
    h = koszul_homology_snf([[0, 1], [0, 1]], 2)
    assert h.degrees == (((0, 1),), ((0, 1),), ())
    assert koszul_homology_snf([[1]], 5).degrees == ((), ())
    x2 = [3, 1]  # x - 2 over F_5
    gens = [x2, fp_mul(x2, x2, 5), fp_pow(x2, 3, 5)]
    h = koszul_homology_snf(gens, 5)
    assert h.degrees == tuple((tuple(x2),) * comb(2, i) for i in range(4))


def _direct_two_generator(a, b):
    # H0 = Z/g, H1 = ker/im with ker = Z (b/g, -a/g), im = Z (b, -a) -> Z/g, H2 = 0
    g = gcd(a, b)
    return ((g,) if g != 1 else (), (g,) if g != 1 else (), ())


@pytest.mark.parametrize("a,b", [(2, 4), (6, 9), (5, 7), (12, 18)])
def test_two_generators_over_z(a, b):
    assert koszul_homology_lemma([a, b]).degrees == _direct_two_generator(a, b)
    assert koszul_homology_snf([a, b]).degrees == _direct_two_generator(a, b)


poly_coeffs = st.lists(st.integers(0, 6), min_size=0, max_size=6)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(poly_coeffs, min_size=1, max_size=4))
def test_lemma_matches_snf_fp(p, gens):
    assume(any(c % p for g in gens for c in g))
    assert koszul_routes_agree(gens, p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=1, max_size=4))
def test_lemma_matches_snf_z(gens):
    assume(any(gens))
    assert koszul_routes_agree(gens)
