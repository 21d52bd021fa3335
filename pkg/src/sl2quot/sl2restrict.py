"""Restriction of representations along phi_u : SL2 -> G.

A weight multiset is a ``dict`` mapping an sl2-weight (eigenvalue of h) to
its multiplicity.  Decompositions map the dimension ``d`` of an irreducible
constituent to how often it occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Optional

from . import _kernels
from .orbits import OrbitError, Partition, UnipotentClass, h_vector, natural_eigenvalues
from .poly import IntPoly
from .rootdata import GroupType, build_root_system, fundamental_weight, inverse_cartan_apply, restricted_weights

WeightMultiset = Dict[int, int]
Decomposition = Dict[int, int]


class RestrictionError(ValueError):
    """Inputs that are not genuine sl2 characters, or routes that disagree."""


def total(w: WeightMultiset) -> int:
    return sum(w.values())


def is_symmetric(w: WeightMultiset) -> bool:
    return all(w.get(-m, 0) == n for m, n in w.items())


def natural_weights(c: UnipotentClass) -> WeightMultiset:
    if not c.classical:
        raise OrbitError(f"{c} has no natural-module partition")
    out: WeightMultiset = {}
    for v in natural_eigenvalues(c.partition):
        out[v] = out.get(v, 0) + 1
    return out


def exterior_power(w: WeightMultiset, k: int) -> WeightMultiset:
    """Weights of the k-th exterior power: sums over k-element subsets."""
    if k < 0 or k > total(w):
        raise ValueError(f"exterior power {k} of a {total(w)}-dimensional module")
    keys = sorted(w)
    return _kernels.subset_sums(keys, [w[m] for m in keys], k)


def _half(sums: Dict[int, int]) -> WeightMultiset:
    # the only place spin weights are halved; every sum here is even
    out = {}
    for s, n in sums.items():
        if s % 2:
            raise RestrictionError("odd signed sum in a spin character")
        out[s // 2] = n
    return out


def spin_weights(c: UnipotentClass) -> WeightMultiset:
    """Weights of the spin module of Spin(2r+1): all sign-sums of the h-vector, halved."""
    if c.group.series != "B":
        raise OrbitError(f"spin module needs type B, got {c.group}")
    even, odd = _kernels.signed_sums(list(h_vector(c)))
    merged = dict(even)
    for s, n in odd.items():
        merged[s] = merged.get(s, 0) + n
    return _half(merged)


def semispin_weights(c: UnipotentClass, parity: str) -> WeightMultiset:
    """Weights of a half-spin module of Spin(2r): sign-sums with an even/odd number of '+'."""
    if c.group.series != "D":
        raise OrbitError(f"semispin modules need type D, got {c.group}")
    hv = list(h_vector(c))
    if c.very_even == "II":
        hv[-1] = -hv[-1]
    even, odd = _kernels.signed_sums(hv)
    if parity == "even":
        return _half(even)
    if parity == "odd":
        return _half(odd)
    raise ValueError(f"parity must be 'even' or 'odd', not {parity!r}")


def fundamental_values(g: GroupType, diagram) -> tuple:
    """``(varpi_i(h))`` as integers, from the simple-root values of h."""
    rs = build_root_system(g)
    vals = inverse_cartan_apply(rs, diagram)
    if any(v.denominator != 1 for v in vals):
        raise RestrictionError(f"C^-1 {tuple(diagram)} is not integral for {g}")
    return tuple(int(v) for v in vals)


def restrict_fundamental(g, c: UnipotentClass, i: int) -> WeightMultiset:
    """Weights of ``V(varpi_i)`` restricted along phi_u (Freudenthal route)."""
    rs = build_root_system(c.group if g is None else g)
    hw = fundamental_weight(rs, i)
    return restricted_weights(rs, hw, fundamental_values(rs.group, c.diagram))


def restrict_highest_weight(c: UnipotentClass, hw) -> WeightMultiset:
    rs = build_root_system(c.group)
    return restricted_weights(rs, hw, fundamental_values(rs.group, c.diagram))


def sl2_decompose(w: WeightMultiset) -> Decomposition:
    """Split a weight multiset into irreducible strings (peel off from the top)."""
    if not is_symmetric(w):
        raise RestrictionError("weight multiset is not symmetric")
    out: Decomposition = {}
    for m in sorted((m for m in w if m >= 0), reverse=True):
        n = w.get(m, 0) - w.get(m + 2, 0)
        if n < 0:
            raise RestrictionError(f"not an sl2 character: weight {m} rises")
        if n:
            out[m + 1] = n
    if any(w.get(m + 2, 0) > w.get(m, 0) for m in range(0, 2)):
        raise RestrictionError("not an sl2 character")
    return out


def strings(dec: Decomposition) -> WeightMultiset:
    out: WeightMultiset = {}
    for d, n in dec.items():
        for m in range(d - 1, -d, -2):
            out[m] = out.get(m, 0) + n
    return out


def _string_char(d: int) -> IntPoly:
    prev, cur = IntPoly.const(0), IntPoly.const(1)
    x = IntPoly.x()
    for _ in range(d - 1):
        prev, cur = cur, x * cur - prev
    return cur


@dataclass(frozen=True)
class CharacterPoly:
    poly: IntPoly
    side: str = "SL2"

    @property
    def eval_point(self) -> int:
        return 2 if self.side == "SL2" else 3

    @property
    def dimension(self) -> int:
        return self.poly(self.eval_point)

    def __str__(self):
        return str(self.poly) if self.side == "SL2" else str(self.poly).replace("x", "x'")


def char_poly(dec: Decomposition) -> CharacterPoly:
    """Class in R(SL2) = Z[x], x = [2-dim module]; [V_{d+1}] = x [V_d] - [V_{d-1}]."""
    acc = IntPoly()
    for d, n in sorted(dec.items()):
        acc = acc + n * _string_char(d)
    return CharacterPoly(acc, "SL2")


def character(w: WeightMultiset) -> CharacterPoly:
    return char_poly(sl2_decompose(w))


def to_psl2_variable(cp: CharacterPoly) -> CharacterPoly:
    """Rewrite p(x) with only even powers as q(x') where x' = x^2 - 1."""
    if cp.side != "SL2":
        raise ValueError("already on the PSL2 side")
    coeffs = cp.poly.coeffs
    if any(c for k, c in enumerate(coeffs) if k % 2):
        raise RestrictionError(f"{cp.poly} has odd-degree terms; not a PSL2 class")
    # p(x) = r(x^2) with r(t) = sum c_{2k} t^k, then q(x') = r(x' + 1)
    r = IntPoly(coeffs[0::2])
    return CharacterPoly(r.compose(IntPoly((1, 1))), "PSL2")


# -- Dynkin index ------------------------------------------------------------

def index_from_partition(g: GroupType, p: Partition) -> int:
    s = sum(d * (d * d - 1) // 6 for d in p.parts)
    if g.series in "AC":
        return s
    if g.series in "BD":
        if s % 2:
            raise RestrictionError(f"odd per-part sum for {g} {p}")
        return s // 2
    raise ValueError(f"{g} is not classical")


def index_from_diagram(g: GroupType, diagram) -> int:
    """Root-sum route: [sum over all roots of alpha(h)^2 / 2] / (2 h^vee)."""
    rs = build_root_system(g)
    sq = 2 * sum(sum(a * w for a, w in zip(root, diagram)) ** 2 for root in rs.positive_roots)
    idx = Fraction(sq, 2) / (2 * rs.dual_coxeter)
    if idx.denominator != 1:
        raise RestrictionError(f"non-integral index {idx} for {g} {tuple(diagram)}")
    return int(idx)


def dynkin_index(c: UnipotentClass) -> int:
    """Dynkin index of d(phi_u); both routes are evaluated and must agree."""
    via_roots = index_from_diagram(c.group, c.diagram)
    other: Optional[int] = None
    if c.classical:
        other = index_from_partition(c.group, c.partition)
    elif c.index is not None:
        other = c.index
    if other is not None and other != via_roots:
        raise RestrictionError(f"{c}: Dynkin index routes disagree ({other} vs {via_roots})")
    return via_roots


def check_exterior_total(w: WeightMultiset, k: int) -> bool:
    return total(exterior_power(w, k)) == comb(total(w), k)
