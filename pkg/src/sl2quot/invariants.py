"""Homotopy invariants of the quotient G / phi_u(SL2)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Optional, Tuple

from .orbits import Partition, UnipotentClass
from .rootdata import GroupType, build_root_system, group_type, inverse_cartan_apply
from .sl2restrict import dynkin_index, semispin_weights


class InvariantError(ValueError):
    """Hypothesis of an invariant computation not met."""


@dataclass(frozen=True)
class FiniteAbelianGroupDesc:
    """Symbolic isomorphism type: ``trivial``, ``cyclic`` (order > 1), ``sum``,
    ``infinite_cyclic`` or ``order4_undetermined`` (Z/2+Z/2 or Z/4)."""

    kind: str
    orders: Tuple[int, ...] = ()

    def __str__(self):
        if self.kind == "trivial":
            return "0"
        if self.kind == "infinite_cyclic":
            return "Z"
        if self.kind == "order4_undetermined":
            return "Z/2+Z/2 or Z/4"
        return "+".join(f"Z/{n}" for n in self.orders)

    def to_json(self):
        out = {"kind": self.kind}
        if self.orders:
            out["orders"] = list(self.orders)
        return out


TRIVIAL = FiniteAbelianGroupDesc("trivial")
INTEGERS = FiniteAbelianGroupDesc("infinite_cyclic")
ORDER4_UNDETERMINED = FiniteAbelianGroupDesc("order4_undetermined")


def cyclic(n: int) -> FiniteAbelianGroupDesc:
    if n < 0:
        raise ValueError("negative order")
    if n == 0:
        return INTEGERS
    if n == 1:
        return TRIVIAL
    return FiniteAbelianGroupDesc("cyclic", (n,))


def direct_sum(*parts: FiniteAbelianGroupDesc) -> FiniteAbelianGroupDesc:
    if any(p.kind in ("infinite_cyclic", "order4_undetermined") for p in parts):
        raise ValueError("direct_sum only handles finite, determined summands")
    orders = tuple(sorted(n for p in parts for n in p.orders))
    if not orders:
        return TRIVIAL
    if len(orders) == 1:
        return cyclic(orders[0])
    return FiniteAbelianGroupDesc("sum", orders)


Z2 = cyclic(2)


@dataclass(frozen=True)
class HomotopyReport:
    dim_X: int
    quite_even: bool
    pi1: FiniteAbelianGroupDesc
    pi2: FiniteAbelianGroupDesc
    pi3: FiniteAbelianGroupDesc
    sphere_degrees: Tuple[int, ...]
    dynkin_index: int
    trivial_class: bool = False
    even: bool = False
    pi4: Optional[FiniteAbelianGroupDesc] = None
    pi5: Optional[FiniteAbelianGroupDesc] = None
    pi6: Optional[FiniteAbelianGroupDesc] = None
    notes: Tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        out = {}
        for k in ("dim_X", "quite_even", "even", "trivial_class", "dynkin_index"):
            out[k] = getattr(self, k)
        for k in ("pi1", "pi2", "pi3", "pi4", "pi5", "pi6"):
            v = getattr(self, k)
            out[k] = None if v is None else str(v)
        out["sphere_degrees"] = list(self.sphere_degrees)
        out["notes"] = list(self.notes)
        return out


def dim_X(g) -> int:
    return build_root_system(group_type(g)).dim - 3


def _product(parts) -> int:
    return reduce(lambda a, b: a * b, parts, 1)


def even_partition(p: Partition) -> bool:
    """u is even iff all parts have the same parity."""
    return len({d % 2 for d in p.parts}) == 1


def quite_even_partition(g, p: Partition) -> bool:
    g = group_type(g)
    if not g.classical:
        raise InvariantError(f"{g} is not classical")
    if all(d == 1 for d in p.parts):
        raise InvariantError("the trivial class has no quite-even status (reported as not quite even)")
    odd = all(d % 2 for d in p.parts)
    if g.series in "AC":
        return odd
    return odd and _product(p.parts) % 8 in (1, 7)


def quite_even_cartan(g, diagram) -> bool:
    g = group_type(g)
    if not any(diagram):
        raise InvariantError("the trivial class has no quite-even status (reported as not quite even)")
    vals = inverse_cartan_apply(build_root_system(g), diagram)
    if any(v.denominator != 1 for v in vals):
        raise InvariantError(f"C^-1 {tuple(diagram)} is not integral for {g}; corrupt diagram")
    return all(v.numerator % 2 == 0 for v in vals)


def is_quite_even(c: UnipotentClass) -> bool:
    """Cartan-matrix criterion; False for u = 1."""
    return False if c.trivial else quite_even_cartan(c.group, c.diagram)


def spin_parity_check(p: Partition) -> str:
    """Parity of the spin weights for a type-B class with all parts odd."""
    if any(d % 2 == 0 for d in p.parts):
        raise InvariantError(f"{p} has an even part")
    s = sum(c * (c + 1) // 2 for c in ((d - 1) // 2 for d in p.parts))
    return "all_even" if s % 2 == 0 else "all_odd"


def rational_type(g, trivial: bool) -> Tuple[int, ...]:
    degs = build_root_system(group_type(g)).fundamental_degrees
    keep = degs if trivial else degs[1:]
    return tuple(sorted(2 * e - 1 for e in keep))


def low_homotopy(c: UnipotentClass):
    """(pi1, pi2, pi3) of G / phi_u(SL2); for u = 1 these are the groups of G itself."""
    if c.trivial:
        return TRIVIAL, TRIVIAL, INTEGERS
    return TRIVIAL, Z2 if is_quite_even(c) else TRIVIAL, cyclic(dynkin_index(c))


def higher_pi_BC(series: str, nu: int, rank: int):
    """(pi4, pi5, pi6) for Spin_{2r+1} (series B) and Sp_{2r} (series C), u != 1.

    Rank 2 is handled through the C column since Spin_5 = Sp_4.
    """
    if rank < 2:
        raise InvariantError("rank must be at least 2")
    if nu <= 0:
        raise InvariantError("nontrivial class required")
    if series == "B" and rank > 2:
        return TRIVIAL, Z2, Z2
    if series not in "BC":
        raise InvariantError(f"no higher homotopy table for series {series}")
    if nu % 2 == 0:
        return Z2, TRIVIAL, Z2
    return TRIVIAL, ORDER4_UNDETERMINED, TRIVIAL


def homotopy_report(c: UnipotentClass) -> HomotopyReport:
    g = c.group
    pi1, pi2, pi3 = low_homotopy(c)
    nu = 0 if c.trivial else dynkin_index(c)
    notes = []
    higher = (None, None, None)
    if g.series in "BC" and not c.trivial:
        higher = higher_pi_BC(g.series, nu, g.rank)
        if g.rank == 2:
            notes.append("rank 2: Spin_5 = Sp_4, higher groups read from the symplectic column")
    return HomotopyReport(
        dim_X=dim_X(g) + (3 if c.trivial else 0),  # the quotient by the trivial class is G itself
        quite_even=is_quite_even(c),
        pi1=pi1,
        pi2=pi2,
        pi3=pi3,
        sphere_degrees=rational_type(g, c.trivial),
        dynkin_index=nu,
        trivial_class=c.trivial,
        even=c.even,
        pi4=higher[0],
        pi5=higher[1],
        pi6=higher[2],
        notes=tuple(notes),
    )


# -- intermediate quotients of types A and D ------------------------------

QUOTIENT_CASES = ("A_scalar", "D_SO", "D_semispin")


def quotient_image_psl(case: str, c: UnipotentClass, s: Optional[int] = None) -> bool:
    """Is the image of SL2 in the intermediate quotient G/A equal to PSL2?

    ``case`` is ``A_scalar`` (A_{2k-1} modulo the scalars of order ``s``),
    ``D_SO`` or ``D_semispin``.  The class must be even, not quite even and
    nontrivial.
    """
    if case not in QUOTIENT_CASES:
        raise ValueError(f"unknown case {case!r}")
    if c.trivial or not c.even or is_quite_even(c):
        raise InvariantError(f"{c} is not an even, not quite even, nontrivial class")
    g = c.group
    parts = c.partition.parts
    if case == "A_scalar":
        if g.series != "A" or g.rank % 2 == 0:
            raise InvariantError(f"{g} is not of type A_(2k-1)")
        n = g.rank + 1
        if s is None or s < 1 or n % s:
            raise InvariantError(f"s={s} does not divide {n}")
        return (n // s) % 2 == 0
    if g.series != "D":
        raise InvariantError(f"{g} is not of type D")
    if case == "D_SO":
        return all(d % 2 for d in parts)
    if g.rank % 2:
        raise InvariantError(f"{g} has no semispin quotient")
    return _product(parts) % 8 in (1, 7)


def semispin_image_psl_by_weights(c: UnipotentClass, parity: str) -> bool:
    """Direct check: -1 in SL2 acts trivially on the chosen half-spin module."""
    if c.group.series != "D" or c.group.rank % 2:
        raise InvariantError(f"{c.group} has no semispin quotient")
    return all(m % 2 == 0 for m in semispin_weights(c, parity))


__all__ = [
    "FiniteAbelianGroupDesc", "HomotopyReport", "InvariantError", "TRIVIAL", "INTEGERS",
    "ORDER4_UNDETERMINED", "Z2", "cyclic", "direct_sum", "dim_X", "even_partition",
    "quite_even_partition", "quite_even_cartan", "is_quite_even", "spin_parity_check",
    "rational_type", "low_homotopy", "higher_pi_BC", "homotopy_report",
    "quotient_image_psl", "semispin_image_psl_by_weights",
]
