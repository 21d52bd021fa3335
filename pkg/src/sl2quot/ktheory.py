"""The restriction ideal of a unipotent class in R(SL2) or R(PSL2), its reductions mod p, and Koszul homology.

Over F_p[x] the ideal is principal, so its reduction is described by one
monic gcd.  Two independent routes to Koszul homology are provided: the
closed form valid over a PID (``koszul_homology_lemma``) and an explicit
complex diagonalized by Smith normal form (``snf_homology``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import GF, ZZ, Symbol
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .invariants import is_quite_even
from .orbits import UnipotentClass
from .poly import IntPoly, fp_gcd, fp_monic, fp_trim, linear_power_exponent, primes_up_to
from .sl2restrict import (
    CharacterPoly,
    character,
    exterior_power,
    natural_weights,
    restrict_fundamental,
    semispin_weights,
    spin_weights,
    to_psl2_variable,
    total,
)

DEFAULT_PRIME_BOUND = 97
DEGENERATE = "degenerate"


class KTheoryError(ValueError):
    """Bad input to the K-theory computations."""


class DegeneratePrimeError(KTheoryError):
    """Every generator vanishes mod p."""


class IdealIntegrityError(KTheoryError):
    """A reduced gcd that is not a power of (x - d): the data is corrupt."""


@dataclass(frozen=True)
class IdealProfile:
    group: str
    label: str
    side: str
    eval_point: int
    generators: Tuple[IntPoly, ...]
    per_prime: Dict[int, Union[int, str]] = field(default_factory=dict, compare=False)
    prime_bound: Optional[int] = None

    def exponents(self) -> Dict[int, int]:
        return {p: a for p, a in self.per_prime.items() if a != DEGENERATE}

    def degenerate_primes(self) -> List[int]:
        return [p for p, a in self.per_prime.items() if a == DEGENERATE]

    def to_json(self) -> dict:
        var = "x" if self.side == "SL2" else "x'"
        return {
            "side": self.side,
            "eval_point": self.eval_point,
            "generators": [str(CharacterPoly(g, self.side)) for g in self.generators],
            "variable": var,
            "prime_bound": self.prime_bound,
            "per_prime": {str(p): a for p, a in sorted(self.per_prime.items())},
        }


# -- generators ---------------------------------------------------------------

def _classical_modules(c: UnipotentClass):
    g = c.group
    r = g.rank
    v = natural_weights(c)
    if g.series in "AC":
        return [exterior_power(v, k) for k in range(1, r + 1)]
    if g.series == "B":
        return [exterior_power(v, k) for k in range(1, r)] + [spin_weights(c)]
    if g.series == "D":
        return [exterior_power(v, k) for k in range(1, r - 1)] + [
            semispin_weights(c, "odd"),
            semispin_weights(c, "even"),
        ]
    raise KTheoryError(f"{g} is not classical")


def _fundamental_modules(c: UnipotentClass):
    return [restrict_fundamental(None, c, i) for i in range(1, c.group.rank + 1)]


def ideal_generators(c: UnipotentClass, route: str = "auto") -> IdealProfile:
    """Generators [restriction] - dim of the restriction ideal, on the PSL2 side when u is quite even.

    ``route="auto"`` uses exterior powers and (half-)spin modules for classical
    groups, which differ from the fundamental modules by a unitriangular change
    of generators; ``route="fundamental"`` restricts every V(varpi_i) directly.
    """
    if c.trivial:
        raise KTheoryError("the restriction ideal is only defined here for u != 1")
    if route not in ("auto", "fundamental"):
        raise ValueError(f"unknown route {route!r}")
    mods = _classical_modules(c) if c.classical and route == "auto" else _fundamental_modules(c)
    side = "PSL2" if is_quite_even(c) else "SL2"
    gens = []
    for w in mods:
        ch = character(w)
        if side == "PSL2":
            ch = to_psl2_variable(ch)
        if ch.dimension != total(w):
            raise KTheoryError(f"{c}: character dimension {ch.dimension} != {total(w)}")
        gens.append(ch.poly - total(w))
    return IdealProfile(c.group.name, c.label, side, 2 if side == "SL2" else 3, tuple(gens))


def reduce_gcd_mod_p(prof: IdealProfile, p: int) -> Tuple[List[int], int]:
    """Monic generator of the restriction ideal mod p and its exponent a with gcd = (x - d)^a."""
    g: List[int] = []
    for f in prof.generators:
        g = fp_gcd(g, f.mod(p), p)
    if not g:
        raise DegeneratePrimeError(f"all generators vanish mod {p}")
    a = linear_power_exponent(g, prof.eval_point, p)
    if a is None:
        raise IdealIntegrityError(f"{prof.group} {prof.label}: gcd mod {p} is not a power of (x - {prof.eval_point})")
    return g, a


def ideal_profile(c: UnipotentClass, prime_bound: int = DEFAULT_PRIME_BOUND, route: str = "auto") -> IdealProfile:
    if prime_bound < 2:
        raise KTheoryError("prime_bound must be at least 2")
    base = ideal_generators(c, route)
    per_prime: Dict[int, Union[int, str]] = {}
    for p in primes_up_to(prime_bound):
        try:
            per_prime[p] = reduce_gcd_mod_p(base, p)[1]
        except DegeneratePrimeError:
            per_prime[p] = DEGENERATE
    return IdealProfile(base.group, base.label, base.side, base.eval_point, base.generators, per_prime, prime_bound)


@lru_cache(maxsize=None)
def cached_profile(c: UnipotentClass, prime_bound: int = DEFAULT_PRIME_BOUND) -> IdealProfile:
    return ideal_profile(c, prime_bound)


def separating_prime(a: IdealProfile, b: IdealProfile):
    """First prime where both profiles are non-degenerate and the exponents differ."""
    ea, eb = a.exponents(), b.exponents()
    for p in sorted(set(ea) & set(eb)):
        if ea[p] != eb[p]:
            return p, ea[p], eb[p]
    return None


def format_reduced(p: int, d: int, a: int) -> str:
    """Render (x - d)^a mod p the way the tables print it."""
    shift = d % p
    base = "x" if shift == 0 else f"(x-{shift})"
    if a == 0:
        return "(1)"
    return f"({base}^{a})" if a > 1 else f"({base})"


# -- Koszul homology ----------------------------------------------------------
#
# A ring is named by ``None`` (the integers) or by a prime p (F_p[x]).
# Polynomials over F_p are coefficient lists, lowest degree first.
# A homology module is a sorted tuple of cyclic factors R/(f): for Z the
# factor is f >= 0, for F_p[x] the monic coefficient tuple of f; free
# summands are f = 0, written 0 resp. ().

@dataclass(frozen=True)
class KoszulHomology:
    m: int
    degrees: Tuple[Tuple, ...]  # degrees[i] lists the cyclic factors of H_i

    def module(self, i: int) -> Tuple:
        return self.degrees[i] if 0 <= i < len(self.degrees) else ()


def _norm(a, p):
    if p is None:
        return abs(int(a))
    return tuple(fp_monic(a, p))


def _is_unit(key, p) -> bool:
    return key == 1 if p is None else key == (1,)


def _gcd_all(gens, p):
    if p is None:
        return math.gcd(*[int(a) for a in gens]) if gens else 0
    g: List[int] = []
    for a in gens:
        g = fp_gcd(g, a, p)
    return g


def koszul_homology_lemma(gens: Sequence, p: Optional[int] = None) -> KoszulHomology:
    """H_i = (R/(a))^binom(m-1, i) with a = gcd(gens), R = Z or F_p[x]."""
    m = len(gens)
    if m < 1:
        raise KTheoryError("need at least one generator")
    a = _norm(_gcd_all([a if p is None else fp_trim(a, p) for a in gens], p), p)
    if a in (0, ()):
        raise DegeneratePrimeError("all generators are zero; the closed form does not apply")
    degrees = []
    for i in range(m + 1):
        n = math.comb(m - 1, i)
        degrees.append(() if _is_unit(a, p) else (a,) * n)
    return KoszulHomology(m, tuple(degrees))


_X = Symbol("x")


def _domain(p):
    return ZZ if p is None else GF(p)[_X]


def _to_domain(a, p, K):
    if p is None:
        return K(int(a))
    coeffs = fp_trim(a, p)
    return K.ring.from_list(list(reversed(coeffs))) if coeffs else K.zero


def koszul_complex_build(gens: Sequence, p: Optional[int] = None) -> List[DomainMatrix]:
    """Differentials d_1..d_m of the Koszul complex; d_i maps C_i -> C_{i-1}.

    Basis of C_i: the i-subsets of generator positions in lexicographic order.
    d(e_S) = sum_j (-1)^(k-j) a_{s_j} e_{S minus s_j}, S = {s_1 < ... < s_k};
    for two generators f, g this gives d_1 = (f g) and d_2 = (g, -f)^T.
    """
    m = len(gens)
    if m < 1:
        raise KTheoryError("need at least one generator")
    K = _domain(p)
    elems = [_to_domain(a, p, K) for a in gens]
    bases = [list(combinations(range(m), i)) for i in range(m + 1)]
    diffs = []
    for i in range(1, m + 1):
        rows = {s: n for n, s in enumerate(bases[i - 1])}
        mat = [[K.zero] * len(bases[i]) for _ in bases[i - 1]]
        for col, S in enumerate(bases[i]):
            k = len(S)
            for j, s in enumerate(S, start=1):
                face = S[: j - 1] + S[j:]
                coeff = elems[s] if (k - j) % 2 == 0 else -elems[s]
                mat[rows[face]][col] = mat[rows[face]][col] + coeff
        diffs.append(DomainMatrix(mat, (len(bases[i - 1]), len(bases[i])), K))
    for i in range(len(diffs) - 1):
        prod = diffs[i] * diffs[i + 1]
        if not prod.is_zero_matrix:
            raise AssertionError(f"d_{i + 1} d_{i + 2} != 0")
    return diffs


def _factor_key(f, p, K):
    if p is None:
        return abs(int(f))
    coeffs = [int(c) % p for c in reversed(f.to_dense())] if f else []
    return tuple(fp_monic(coeffs, p))


def _invariant_keys(mat: DomainMatrix, p, K) -> List:
    rows, cols = mat.shape
    if rows == 0 or cols == 0 or mat.is_zero_matrix:
        return []
    keys = [_factor_key(f, p, K) for f in invariant_factors(mat)]
    return [k for k in keys if k not in (0, ())]


def snf_homology(diffs: Sequence[DomainMatrix], p: Optional[int] = None) -> KoszulHomology:
    """Homology of 0 -> C_m -> ... -> C_0 -> 0 from the invariant factors of each map."""
    K = _domain(p)
    m = len(diffs)
    ranks = [diffs[0].shape[0]] + [d.shape[1] for d in diffs]  # rank of C_0..C_m
    factors = [_invariant_keys(d, p, K) for d in diffs]  # factors[i] belongs to d_{i+1}
    degrees = []
    for i in range(m + 1):
        incoming = factors[i] if i < m else []  # image of d_{i+1} in C_i
        rank_out = len(factors[i - 1]) if i >= 1 else 0
        free = ranks[i] - rank_out - len(incoming)
        torsion = [k for k in incoming if not _is_unit(k, p)]
        zero = 0 if p is None else ()
        degrees.append(tuple(sorted(torsion + [zero] * free)))
    return KoszulHomology(m, tuple(degrees))


def koszul_homology_snf(gens: Sequence, p: Optional[int] = None) -> KoszulHomology:
    return snf_homology(koszul_complex_build(gens, p), p)


def _canonical(h: KoszulHomology) -> KoszulHomology:
    return KoszulHomology(h.m, tuple(tuple(sorted(d)) for d in h.degrees))


def koszul_routes_agree(gens: Sequence, p: Optional[int] = None) -> bool:
    return _canonical(koszul_homology_lemma(gens, p)) == _canonical(koszul_homology_snf(gens, p))


__all__ = [
    "DEFAULT_PRIME_BOUND", "DEGENERATE", "KTheoryError", "DegeneratePrimeError", "IdealIntegrityError",
    "IdealProfile", "ideal_generators", "reduce_gcd_mod_p", "ideal_profile", "cached_profile",
    "separating_prime", "format_reduced", "KoszulHomology", "koszul_homology_lemma",
    "koszul_complex_build", "snf_homology", "koszul_homology_snf", "koszul_routes_agree",
]
