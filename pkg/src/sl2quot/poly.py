"""Univariate polynomials over Z and over prime fields.

Coefficients are stored lowest degree first.  ``IntPoly`` is an immutable
value type; polynomials over GF(p) are plain lists with no trailing zeros
(the zero polynomial is ``[]``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple


def _trim(c: Sequence[int]) -> Tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(x) for x in self.coeffs))

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, inner: "IntPoly") -> "IntPoly":
        acc = IntPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def mod(self, p: int) -> List[int]:
        return list(_trim(c % p for c in self.coeffs))

    def __str__(self):
        return format_poly(self.coeffs)


def _coerce(v) -> IntPoly:
    return v if isinstance(v, IntPoly) else IntPoly((v,))


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    coeffs = _trim(coeffs)
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else var if k == 1 else f"{var}^{k}"
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# -- GF(p)[x] ---------------------------------------------------------------

def fp_trim(a: Iterable[int], p: int) -> List[int]:
    return list(_trim(c % p for c in a))


def fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    a = fp_trim(a, p)
    b = fp_trim(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        shift = len(r) - len(b)
        f = r[-1] * inv % p
        q[shift] = f
        for i, c in enumerate(b):
            r[shift + i] = (r[shift + i] - f * c) % p
        r = fp_trim(r, p)
    return fp_trim(q, p), r


def fp_monic(a: Sequence[int], p: int) -> List[int]:
    a = fp_trim(a, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Monic gcd in GF(p)[x]; gcd(0, 0) = 0."""
    a, b = fp_trim(a, p), fp_trim(b, p)
    while b:
        a, b = b, fp_divmod(a, b, p)[1]
    return fp_monic(a, p)


def fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return fp_trim(out, p)


def fp_pow(a: Sequence[int], e: int, p: int) -> List[int]:
    out = [1]
    for _ in range(e):
        out = fp_mul(out, a, p)
    return out


def linear_power_exponent(f: Sequence[int], root: int, p: int):
    """Return a if the monic ``f`` equals ``(x - root)^a`` over GF(p), else None."""
    f = fp_monic(f, p)
    if not f:
        return None
    a = len(f) - 1
    return a if f == fp_pow([-root % p, 1], a, p) else None


def primes_up_to(n: int) -> List[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]
