import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import GF, Poly, Symbol, isprime

from sl2quot.poly import (
    IntPoly,
    fp_divmod,
    fp_gcd,
    fp_monic,
    fp_mul,
    fp_pow,
    fp_trim,
    format_poly,
    linear_power_exponent,
    primes_up_to,
)

X = Symbol("x")
coeff_lists = st.lists(st.integers(-20, 20), max_size=7)
small_primes = st.sampled_from([2, 3, 5, 7, 11])


def _sympy_fp(c, p):
    return Poly(list(reversed(c)) or [0], X, domain=GF(p))


def _from_sympy(f, p):
    return [int(v) % p for v in reversed(f.all_coeffs())] if not f.is_zero else []


@pytest.mark.parametrize(
    "coeffs,text",
    [
        ((), "0"),
        ((-4, 0, 1), "x^2 - 4"),
        ((1, -1, 1), "x^2 - x + 1"),
        ((0, 3), "3x"),
        ((-1,), "-1"),
    ],
)
def test_format(coeffs, text):
    assert format_poly(coeffs) == text
    assert str(IntPoly(coeffs)) == text


def test_trailing_zeros_trimmed():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).is_zero()


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(-5, 5))
def test_ring_ops_evaluate(a, b, t):
    fa, fb = IntPoly(a), IntPoly(b)
    assert (fa + fb)(t) == fa(t) + fb(t)
    assert (fa - fb)(t) == fa(t) - fb(t)
    assert (fa * fb)(t) == fa(t) * fb(t)
    assert fa.compose(fb)(t) == fa(fb(t))


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists, small_primes)
def test_gcd_matches_sympy(a, b, p):
    want = _sympy_fp(a, p).gcd(_sympy_fp(b, p))
    got = fp_gcd(a, b, p)
    assert got == fp_monic(_from_sympy(want, p), p)


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists.filter(lambda c: any(c)), small_primes)
def test_divmod_identity(a, b, p):
    if not fp_monic(b, p):
        return
    q, r = fp_divmod(a, b, p)
    back = [(x + y) % p for x, y in _zip_pad(fp_mul(q, [c % p for c in b], p), r)]
    assert fp_trim(back, p) == fp_trim(a, p)
    assert len(r) < len(fp_trim(b, p))


def _zip_pad(u, v):
    n = max(len(u), len(v))
    return zip(list(u) + [0] * (n - len(u)), list(v) + [0] * (n - len(v)))


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        fp_divmod([1, 1], [0, 0], 3)


def test_gcd_zero_zero():
    assert fp_gcd([], [0], 5) == []


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("a", [0, 1, 3, 6])
def test_linear_power_exponent(p, a):
    d = 2 if p != 2 else 0
    f = fp_pow([-d % p, 1], a, p)
    assert linear_power_exponent(f, d, p) == a
    assert linear_power_exponent(fp_mul(f, [1, 1, 1], p), d, p) is None


def test_linear_power_examples():
    # (x - 2) over F_5 and x^4 over F_2
    assert linear_power_exponent([3, 1], 2, 5) == 1
    assert linear_power_exponent([0, 0, 0, 0, 1], 2, 2) == 4
    assert linear_power_exponent([], 2, 5) is None


@pytest.mark.parametrize("n", [0, 1, 2, 10, 97, 100])
def test_primes(n):
    assert primes_up_to(n) == [k for k in range(n + 1) if isprime(k)]
