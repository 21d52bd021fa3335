"""Unipotent classes: partitions, weighted Dynkin diagrams, exceptional tables."""

from __future__ import annotations

import json
import os
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

import jsonschema

from .rootdata import GroupType, build_root_system, group_type


class OrbitError(ValueError):
    """Invalid class, partition or exceptional table."""


class MissingTableError(OrbitError):
    """No orbit table shipped or found for an exceptional group."""


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if not parts or parts[-1] < 1:
            raise OrbitError(f"invalid partition {self.parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __str__(self):
        items = []
        for d, m in sorted(self.multiplicities().items(), reverse=True):
            items.append(f"{d}^{m}" if m > 1 else str(d))
        return "[" + ",".join(items) + "]"


_PART_RE = re.compile(r"^\s*\[([0-9^,\s]+)\]\s*(I{1,2})?\s*$")


def parse_partition(text: str) -> Tuple[Partition, Optional[str]]:
    """Parse ``"[5,2^4]"`` or ``"[5,2,2,2,2]"``; an ``I``/``II`` suffix marks a very even class."""
    m = _PART_RE.match(text)
    if not m:
        raise OrbitError(f"cannot parse partition {text!r}")
    parts = []
    for item in m.group(1).split(","):
        item = item.strip()
        if not item:
            raise OrbitError(f"empty part in {text!r}")
        if "^" in item:
            d, e = item.split("^")
            parts += [int(d)] * int(e)
        else:
            parts.append(int(item))
    if not parts or min(parts) < 1:
        raise OrbitError(f"invalid partition {text!r}")
    return Partition(tuple(parts)), m.group(2)


@dataclass(frozen=True)
class UnipotentClass:
    group: GroupType
    label: str
    diagram: Tuple[int, ...]
    partition: Optional[Partition] = None
    very_even: Optional[str] = None
    index: Optional[int] = None  # published cross-check value, exceptional tables only

    @property
    def trivial(self) -> bool:
        return not any(self.diagram)

    @property
    def classical(self) -> bool:
        return self.partition is not None

    @property
    def even(self) -> bool:
        return all(w % 2 == 0 for w in self.diagram)

    def __str__(self):
        return f"{self.group.name} {self.label}"


# -- classical partitions -------------------------------------------------

def natural_dimension(g: GroupType) -> int:
    s, r = g.series, g.rank
    if s == "A":
        return r + 1
    if s == "B":
        return 2 * r + 1
    if s in "CD":
        return 2 * r
    raise OrbitError(f"{g} has no classical natural module")


def validate_partition(g, p: Partition) -> int:
    """Number of classes with partition ``p`` (0 when ``p`` is not admissible)."""
    g = group_type(g)
    if not g.classical or p.n != natural_dimension(g):
        return 0
    mult = p.multiplicities()
    if g.series == "A":
        return 1
    if g.series == "C":
        return int(all(m % 2 == 0 for d, m in mult.items() if d % 2))
    if any(m % 2 for d, m in mult.items() if d % 2 == 0):
        return 0
    if g.series == "D" and all(d % 2 == 0 for d in p.parts):
        return 2
    return 1


def partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order (a linear extension of dominance)."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def natural_eigenvalues(p: Partition) -> List[int]:
    """h-eigenvalues on the natural module, sorted non-increasing."""
    vals = []
    for d in p.parts:
        vals += range(d - 1, -d, -2)
    return sorted(vals, reverse=True)


def h_vector(c: UnipotentClass) -> Tuple[int, ...]:
    """Non-negative half of the natural-module eigenvalues, in the Euclidean basis.

    For types B, C, D this is the diagonal block ``D`` of ``h = diag(D, -D, 0)``.
    """
    if not c.classical:
        raise OrbitError(f"{c} is exceptional; use its weighted diagram")
    vals = natural_eigenvalues(c.partition)
    return tuple(vals[: len(vals) // 2])


def _diagram_from_eigenvalues(g: GroupType, vals: Sequence[int]) -> Tuple[int, ...]:
    s, r = g.series, g.rank
    if s == "A":
        return tuple(vals[i] - vals[i + 1] for i in range(r))
    h = vals[:r]
    head = [h[i] - h[i + 1] for i in range(r - 1)]
    if s == "B":
        return tuple(head + [h[r - 1]])
    if s == "C":
        return tuple(head + [2 * h[r - 1]])
    return tuple(head[: r - 1] + [h[r - 2] + h[r - 1]])


def weighted_diagram_classical(g, p: Partition, very_even: Optional[str] = None) -> Tuple[int, ...]:
    g = group_type(g)
    count = validate_partition(g, p)
    if count == 0:
        raise OrbitError(f"{p} is not a unipotent class of {g}")
    diagram = list(_diagram_from_eigenvalues(g, natural_eigenvalues(p)))
    if count == 2:
        if very_even not in ("I", "II"):
            raise OrbitError(f"very even partition {p} of {g} needs label I or II")
        if very_even == "II":
            diagram[-2], diagram[-1] = diagram[-1], diagram[-2]
    elif very_even:
        raise OrbitError(f"{p} is not very even; label {very_even} not allowed")
    return tuple(diagram)


def classical_class(g, p: Partition, very_even: Optional[str] = None) -> UnipotentClass:
    g = group_type(g)
    diagram = weighted_diagram_classical(g, p, very_even)
    return UnipotentClass(g, str(p) + (very_even or ""), diagram, p, very_even)


# -- exceptional tables ---------------------------------------------------

TABLE_SCHEMA = {
    "type": "object",
    "required": ["group", "classes"],
    "additionalProperties": False,
    "properties": {
        "group": {"type": "string", "pattern": "^[EFG][0-9]$"},
        "classes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["label", "diagram"],
                "additionalProperties": False,
                "properties": {
                    "label": {"type": "string", "minLength": 1},
                    "diagram": {"type": "array", "items": {"type": "integer", "minimum": 0, "maximum": 2}},
                    "index": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


def load_exceptional_table(raw) -> List[UnipotentClass]:
    """Validate a parsed orbit document and turn it into classes (file order)."""
    try:
        jsonschema.validate(raw, TABLE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise OrbitError(f"orbit table does not match schema: {exc.message}") from None
    g = group_type(raw["group"])
    out, labels, diagrams = [], set(), set()
    for entry in raw["classes"]:
        label, diagram = entry["label"], tuple(entry["diagram"])
        if len(diagram) != g.rank:
            raise OrbitError(f"{g} class {label}: diagram has length {len(diagram)}")
        if label in labels:
            raise OrbitError(f"{g}: duplicate label {label}")
        if diagram in diagrams:
            raise OrbitError(f"{g}: duplicate diagram {diagram}")
        labels.add(label)
        diagrams.add(diagram)
        out.append(UnipotentClass(g, label, diagram, index=entry.get("index")))
    return out


def default_data_dir() -> Optional[Path]:
    env = os.environ.get("ORBIT_DATA_DIR")
    return Path(env) if env else None


@lru_cache(maxsize=None)
def _read_table(g: GroupType, data_dir: Optional[str]) -> Tuple[UnipotentClass, ...]:
    name = f"{g.name}.json"
    if data_dir is not None:
        path = Path(data_dir) / name
        if not path.exists():
            raise MissingTableError(f"no orbit table {name} in {data_dir}")
        text = path.read_text()
    else:
        res = resources.files("sl2quot") / "data" / name
        if not res.is_file():
            raise MissingTableError(f"no orbit table shipped for {g}")
        text = res.read_text()
    raw = json.loads(text)
    if raw.get("group") != g.name:
        raise OrbitError(f"{name} declares group {raw.get('group')!r}")
    return tuple(load_exceptional_table(raw))


def exceptional_classes(g, data_dir=None) -> List[UnipotentClass]:
    g = group_type(g)
    if g.classical:
        raise OrbitError(f"{g} is classical")
    if data_dir is None:
        data_dir = default_data_dir()
    return list(_read_table(g, None if data_dir is None else str(data_dir)))


def enumerate_classes(g, include_trivial: bool = False, data_dir=None) -> List[UnipotentClass]:
    """All unipotent classes of ``g``, in a deterministic order.

    Classical: partitions in reverse lexicographic order (the trivial class
    last), the two very even classes adjacent as I then II.  Exceptional:
    table order.
    """
    g = group_type(g)
    if not g.classical:
        out = exceptional_classes(g, data_dir)
    else:
        out = []
        for parts in partitions(natural_dimension(g)):
            p = Partition(parts)
            count = validate_partition(g, p)
            if count == 1:
                out.append(classical_class(g, p))
            elif count == 2:
                out += [classical_class(g, p, "I"), classical_class(g, p, "II")]
    if not include_trivial:
        out = [c for c in out if not c.trivial]
    return out


def _norm_label(s: str) -> str:
    return re.sub(r"[\s_{}]", "", s).replace("′", "'").replace("″", "''").lower()


def find_class(g, text: str, data_dir=None) -> UnipotentClass:
    """Look up a class by partition (classical) or Bala-Carter label (exceptional)."""
    g = group_type(g)
    text = text.strip()
    if g.classical:
        if text == "0":
            return classical_class(g, Partition((1,) * natural_dimension(g)))
        p, ve = parse_partition(text)
        return classical_class(g, p, ve)
    want = _norm_label(text)
    for c in exceptional_classes(g, data_dir):
        if _norm_label(c.label) == want:
            return c
    raise OrbitError(f"{g} has no class labelled {text!r}")


def trivial_class(g, data_dir=None) -> UnipotentClass:
    g = group_type(g)
    if g.classical:
        return classical_class(g, Partition((1,) * natural_dimension(g)))
    return next(c for c in exceptional_classes(g, data_dir) if c.trivial)


def orbit_dimension(c: UnipotentClass) -> int:
    """dim G - dim g_0 - dim g_1 for the grading defined by the diagram."""
    rs = build_root_system(c.group)
    n0 = n1 = 0
    for a in rs.positive_roots:
        v = sum(x * w for x, w in zip(a, c.diagram))
        n0 += v == 0
        n1 += v == 1
    return rs.dim - (rs.rank + 2 * n0) - n1
