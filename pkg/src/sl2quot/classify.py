"""Deciding whether two quotient spaces G/phi_u(SL2) and K/phi_v(SL2) can be homotopy equivalent.

Invariants are compared in a fixed order; the first one that differs is the
witness.  When none differs the verdict is ``Undetermined``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .invariants import HomotopyReport, homotopy_report
from .ktheory import DEFAULT_PRIME_BOUND, cached_profile, separating_prime
from .orbits import UnipotentClass, enumerate_classes, find_class
from .rootdata import GroupType, build_root_system, group_type

WITNESSES = (
    "dimension",
    "rational_spheres",
    "BC_separation",
    "pi2_quite_even",
    "pi3_dynkin_index",
    "higher_pi",
    "ktheory_profile",
)

SAME_INVARIANTS_DIAGRAM_SWAP = "same_invariants_diagram_swap"
RANK2_CAVEAT = "rank 2: Spin_5 = Sp_4, so B/C separation is not applied"


class ClassifyError(ValueError):
    pass


@dataclass(frozen=True)
class SpaceId:
    group: GroupType
    cls: UnipotentClass

    def __post_init__(self):
        if self.cls.group != self.group:
            raise ClassifyError(f"{self.cls} is not a class of {self.group}")

    @property
    def name(self) -> str:
        return f"{self.group.name} {self.cls.label}"

    def __str__(self):
        return self.name


def space(group, label: str, data_dir=None) -> SpaceId:
    g = group_type(group)
    return SpaceId(g, find_class(g, label, data_dir))


@dataclass(frozen=True)
class Verdict:
    outcome: str  # Distinct, Undetermined or Identical
    witness: Optional[str] = None
    payload: Tuple = ()
    notes: Tuple[str, ...] = ()
    flags: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "witness": self.witness,
            "payload": list(self.payload),
            "notes": list(self.notes),
            "flags": list(self.flags),
        }


def _report(s: SpaceId) -> HomotopyReport:
    return homotopy_report(s.cls)


def _very_even_twins(a: SpaceId, b: SpaceId) -> bool:
    ca, cb = a.cls, b.cls
    return (
        a.group == b.group
        and ca.classical
        and ca.partition == cb.partition
        and ca.very_even is not None
        and cb.very_even is not None
        and ca.very_even != cb.very_even
    )


def distinguish(a: SpaceId, b: SpaceId, prime_bound: int = DEFAULT_PRIME_BOUND) -> Verdict:
    if a == b:
        return Verdict("Identical")
    ra, rb = _report(a), _report(b)
    if ra.trivial_class != rb.trivial_class:
        return Verdict("Distinct", "rational_spheres", (ra.sphere_degrees, rb.sphere_degrees))
    if ra.dim_X != rb.dim_X:
        return Verdict("Distinct", "dimension", (ra.dim_X, rb.dim_X))
    if ra.sphere_degrees != rb.sphere_degrees:
        return Verdict("Distinct", "rational_spheres", (ra.sphere_degrees, rb.sphere_degrees))
    notes = []
    series = {a.group.series, b.group.series}
    if series == {"B", "C"} and a.group.rank == b.group.rank:
        if a.group.rank >= 3:
            return Verdict("Distinct", "BC_separation", (a.group.name, b.group.name))
        notes.append(RANK2_CAVEAT)
    if ra.quite_even != rb.quite_even:
        return Verdict("Distinct", "pi2_quite_even", (str(ra.pi2), str(rb.pi2)), tuple(notes))
    if ra.pi3 != rb.pi3:
        return Verdict("Distinct", "pi3_dynkin_index", (ra.dynkin_index, rb.dynkin_index), tuple(notes))
    for k in ("pi4", "pi5", "pi6"):
        x, y = getattr(ra, k), getattr(rb, k)
        if x is not None and y is not None and x != y:
            return Verdict("Distinct", "higher_pi", (k, str(x), str(y)), tuple(notes))
    if not ra.trivial_class:
        pa, pb = cached_profile(a.cls, prime_bound), cached_profile(b.cls, prime_bound)
        if pa.side != pb.side:  # cannot happen once pi2 agrees
            raise AssertionError("quite-even status and K-theory side disagree")
        hit = separating_prime(pa, pb)
        if hit is not None:
            return Verdict("Distinct", "ktheory_profile", hit, tuple(notes))
        notes.append(f"no prime <= {prime_bound} separates the mod-p profiles")
    flags = (SAME_INVARIANTS_DIAGRAM_SWAP,) if _very_even_twins(a, b) else ()
    return Verdict("Undetermined", None, (), tuple(notes), flags)


# -- batch ---------------------------------------------------------------------

def _group_dim(series: str, r: int) -> int:
    return {
        "A": r * (r + 2),
        "B": r * (2 * r + 1),
        "C": r * (2 * r + 1),
        "D": r * (2 * r - 1),
    }[series]


def groups_of_dimension(n: int) -> List[GroupType]:
    """Simple groups of dimension n, one per isomorphism type (B2 stands for C2)."""
    out = []
    for series, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        r = lo
        while _group_dim(series, r) <= n:
            if _group_dim(series, r) == n:
                out.append(GroupType(series, r))
            r += 1
    for name in ("G2", "F4", "E6", "E7", "E8"):
        g = group_type(name)
        if build_root_system(g).dim == n:
            out.append(g)
    return out


@dataclass
class ClassificationReport:
    dim_x: int
    prime_bound: int
    groups: List[GroupType]
    spaces: List[SpaceId]
    verdicts: Dict[Tuple[int, int], Verdict] = field(default_factory=dict)

    def undetermined(self) -> List[Tuple[SpaceId, SpaceId, Verdict]]:
        return [
            (self.spaces[i], self.spaces[j], v)
            for (i, j), v in sorted(self.verdicts.items())
            if v.outcome == "Undetermined"
        ]

    def witness_counts(self) -> Dict[str, int]:
        out = {w: 0 for w in WITNESSES}
        for v in self.verdicts.values():
            if v.witness:
                out[v.witness] += 1
        return out

    def to_json(self) -> dict:
        return {
            "dim_x": self.dim_x,
            "prime_bound": self.prime_bound,
            "groups": [g.name for g in self.groups],
            "space_count": len(self.spaces),
            "pair_count": len(self.verdicts),
            "witness_counts": self.witness_counts(),
            "undetermined": [
                {"a": a.name, "b": b.name, "notes": list(v.notes), "flags": list(v.flags)}
                for a, b, v in self.undetermined()
            ],
        }


def classify_dimension(dim_x: int, prime_bound: int = DEFAULT_PRIME_BOUND, data_dir=None) -> ClassificationReport:
    if dim_x < 0:
        raise ClassifyError("dimension must be non-negative")
    groups = groups_of_dimension(dim_x + 3)
    if not groups:
        raise ClassifyError(f"no simple group has dimension {dim_x + 3}")
    spaces = [SpaceId(g, c) for g in groups for c in enumerate_classes(g, data_dir=data_dir)]
    rep = ClassificationReport(dim_x, prime_bound, groups, spaces)
    for i, j in combinations(range(len(spaces)), 2):
        rep.verdicts[(i, j)] = distinguish(spaces[i], spaces[j], prime_bound)
    return rep


D4_PARTITIONS = ("[2^2,1^4]", "[3,1^5]", "[3^2,1^2]", "[3,2^2,1]", "[5,1^3]", "[5,3]")


def d4_report(prime_bound: int = DEFAULT_PRIME_BOUND) -> dict:
    """Index and quite-even status of the six D4 classes left after triality."""
    g = group_type("D4")
    spaces = [space(g, p) for p in D4_PARTITIONS]
    rows = []
    for s in spaces:
        r = _report(s)
        rows.append({"partition": str(s.cls.partition), "index": r.dynkin_index, "quite_even": r.quite_even})
    pairs = []
    for a, b in combinations(spaces, 2):
        v = distinguish(a, b, prime_bound)
        pairs.append({"a": str(a.cls.partition), "b": str(b.cls.partition), "outcome": v.outcome, "witness": v.witness})
    return {"group": "D4", "rows": rows, "pairs": pairs}


__all__ = [
    "SpaceId", "Verdict", "ClassificationReport", "ClassifyError", "WITNESSES",
    "SAME_INVARIANTS_DIAGRAM_SWAP", "space", "distinguish", "groups_of_dimension",
    "classify_dimension", "d4_report",
]
