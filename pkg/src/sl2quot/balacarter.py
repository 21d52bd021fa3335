"""Weighted Dynkin diagrams from the Bala-Carter classification.

Used to generate (and independently re-check) the shipped exceptional orbit
tables.  Every class is a distinguished class of a Levi subalgebra spanned by
a subset J of simple roots; distinguished classes of a simple factor are the
even gradings with ``dim g_0 == dim g_2`` (distinguished parabolics).  The
characteristic of the Levi class is conjugated into the dominant chamber of
G, which yields the diagram.  Labels are assembled from the Levi type, with
``(a_k)`` counting the zero nodes of a distinguished grading and ``'``/``''``
separating non-conjugate Levis of the same type (``''`` is the even one).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from . import orbits
from .rootdata import GroupType, RootSystem, _matrix_inverse, build_root_system, group_type

_SERIES_ORDER = "EFDCBAG"


def _components(rs: RootSystem, nodes: Sequence[int]) -> List[List[int]]:
    nodes = set(nodes)
    comps = []
    while nodes:
        stack = [nodes.pop()]
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(nodes):
                if rs.cartan[i][j] != 0:
                    nodes.remove(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def identify(rs: RootSystem, comp: Sequence[int]) -> Tuple[GroupType, List[int]]:
    """Dynkin type of a connected set of simple roots and its Bourbaki ordering."""
    k = len(comp)
    sub = {i: [j for j in comp if j != i and rs.cartan[i][j] != 0] for i in comp}
    lengths = {i: rs.half_lengths[i] for i in comp}

    def arm(start, prev):
        path = [start]
        while True:
            nxt = [j for j in sub[path[-1]] if j != prev]
            if not nxt:
                return path
            prev = path[-1]
            path.append(nxt[0])

    branch = [i for i in comp if len(sub[i]) == 3]
    if branch:
        b = branch[0]
        arms = sorted((arm(j, b) for j in sub[b]), key=len)
        if len(arms[1]) == 1:
            return GroupType("D", k), list(reversed(arms[2])) + [b, arms[0][0], arms[1][0]]
        return GroupType("E", k), [arms[1][1], arms[0][0], arms[1][0], b] + arms[2]
    if k == 1:
        return GroupType("A", 1), list(comp)
    ends = [i for i in comp if len(sub[i]) == 1]
    if len(set(lengths.values())) == 1:
        return GroupType("A", k), arm(min(ends), None)
    short = min(lengths.values())
    if k == 2:
        i, j = comp
        if max(lengths.values()) == 3 * short:
            return GroupType("G", 2), [i, j] if lengths[i] == short else [j, i]
        return GroupType("B", 2), [i, j] if lengths[i] > lengths[j] else [j, i]
    for start in ends:
        path = arm(start, None)
        ls = [lengths[i] for i in path]
        if k == 4 and ls[0] == ls[1] > ls[2] == ls[3]:
            return GroupType("F", 4), path
        if all(x > ls[-1] for x in ls[:-1]):
            return GroupType("B", k), path
        if all(x < ls[-1] for x in ls[:-1]):
            return GroupType("C", k), path
    raise AssertionError(f"unidentified component {comp}")


@lru_cache(maxsize=None)
def distinguished_gradings(g: GroupType) -> Tuple[Tuple[int, ...], ...]:
    """Even diagrams of ``g`` with ``dim g_0 == dim g_2``, fewest zeros first."""
    rs = build_root_system(g)
    out = []
    for bits in product((0, 2), repeat=g.rank):
        n0 = n2 = 0
        for a in rs.positive_roots:
            v = sum(x * w for x, w in zip(a, bits))
            n0 += v == 0
            n2 += v == 2
        if rs.rank + 2 * n0 == n2:
            out.append(bits)
    return tuple(sorted(out, key=lambda b: (b.count(0), [-x for x in b])))


def dominant_diagram(rs: RootSystem, values: Sequence[int]) -> Tuple[int, ...]:
    """Conjugate h (given by its simple-root values) into the dominant chamber."""
    v = list(values)
    r = rs.rank
    while True:
        i = next((i for i in range(r) if v[i] < 0), None)
        if i is None:
            return tuple(v)
        c = v[i]
        for j in range(r):
            # alpha_j(s_i h) = alpha_j(h) - alpha_i(h) <alpha_j, alpha_i^vee>
            v[j] -= c * rs.cartan[j][i]


def _levi_values(rs: RootSystem, nodes: Sequence[int], local: Dict[int, int]) -> List[int]:
    """Simple-root values of the h in the coroot span of ``nodes`` with alpha_j(h) = local[j]."""
    sub = [[rs.cartan[j][k] for k in nodes] for j in nodes]
    inv = _matrix_inverse(sub)
    x = [sum(inv[a][b] * local[nodes[b]] for b in range(len(nodes))) for a in range(len(nodes))]
    vals = []
    for i in range(rs.rank):
        v = sum(x[a] * rs.cartan[i][k] for a, k in enumerate(nodes))
        if Fraction(v).denominator != 1:
            raise AssertionError("non-integral characteristic")
        vals.append(int(v))
    return vals


def _component_label(g_comp: GroupType, zeros: int, short: bool) -> str:
    base = g_comp.name
    if short and g_comp.series == "A":
        base = "Ã" + base[1:]
    return base + (f"(a{zeros})" if zeros else "")


def _component_index(rs: RootSystem, comp_type: GroupType, order: Sequence[int], grading) -> Optional[int]:
    """Dynkin index of a distinguished class of a Levi factor, via partitions.

    Returns None for exceptional factors (no partition route).
    """
    theta = max(rs.half_lengths)
    scale = Fraction(theta, max(rs.half_lengths[i] for i in order))
    if comp_type.series == "A" and grading == (2,) * comp_type.rank:
        k = comp_type.rank
        return int(scale * k * (k + 1) * (k + 2) // 6)
    if comp_type.series == "E" and grading == (2,) * comp_type.rank:
        sub = build_root_system(comp_type)
        # principal sl2 of a simply-laced algebra: dim * h / 6
        return int(scale * sub.dim * sub.dual_coxeter // 6)
    if comp_type.series not in "BCD":
        return None
    from .sl2restrict import index_from_partition

    for parts in orbits.partitions(orbits.natural_dimension(comp_type)):
        p = orbits.Partition(parts)
        if orbits.validate_partition(comp_type, p) == 1:
            if orbits.weighted_diagram_classical(comp_type, p) == tuple(grading):
                return int(scale * index_from_partition(comp_type, p))
    return None


def bala_carter_diagrams(g) -> Dict[Tuple[int, ...], Tuple[str, Optional[int]]]:
    """Map each weighted diagram to its (unprimed) Levi label and derived index."""
    g = group_type(g)
    rs = build_root_system(g)
    non_simply_laced = len(set(rs.half_lengths)) > 1
    found: Dict[Tuple[int, ...], Tuple[str, Optional[int]]] = {}
    for size in range(g.rank + 1):
        for nodes in combinations(range(g.rank), size):
            comps = [identify(rs, c) for c in _components(rs, nodes)]
            choices = [distinguished_gradings(t) for t, _ in comps]
            for pick in product(*choices):
                local, parts, index = {}, [], 0
                for (t, order), grading in zip(comps, pick):
                    for node, w in zip(order, grading):
                        local[node] = w
                    short = non_simply_laced and all(
                        rs.half_lengths[i] < max(rs.half_lengths) for i in order
                    )
                    parts.append((t, grading.count(0), short))
                    ci = _component_index(rs, t, order, grading)
                    index = None if index is None or ci is None else index + ci
                vals = _levi_values(rs, list(nodes), local) if nodes else [0] * g.rank
                diagram = dominant_diagram(rs, vals)
                label = _label(parts)
                prev = found.get(diagram)
                if prev is None:
                    found[diagram] = (label, index)
                elif prev[0] != label:
                    raise AssertionError(f"{g}: diagram {diagram} has labels {prev[0]} and {label}")
    return found


def bala_carter_classes(g) -> List[dict]:
    """Every class of ``g`` as ``{"label", "diagram", "index"?, "dim"}``, by increasing orbit dimension."""
    g = group_type(g)
    found = bala_carter_diagrams(g)
    by_label: Dict[str, List[Tuple[int, ...]]] = {}
    for diagram, (label, _) in found.items():
        by_label.setdefault(label, []).append(diagram)
    names = {}
    for label, diagrams in by_label.items():
        if len(diagrams) == 1:
            names[diagrams[0]] = label
            continue
        even = [d for d in diagrams if all(x % 2 == 0 for x in d)]
        if len(diagrams) != 2 or len(even) != 1:
            raise AssertionError(f"{g}: cannot prime-label {label}: {diagrams}")
        odd = next(d for d in diagrams if d is not even[0])
        names[even[0]] = f"({label})''"
        names[odd] = f"({label})'"
    rows = []
    for diagram, (_, index) in found.items():
        c = orbits.UnipotentClass(g, names[diagram], diagram)
        row = {"label": names[diagram], "diagram": list(diagram)}
        if index is not None:
            row["index"] = index
        row["dim"] = orbits.orbit_dimension(c)
        rows.append(row)
    rows.sort(key=lambda r: (r["dim"], r["label"]))
    return rows


def _label(parts) -> str:
    if not parts:
        return "0"
    names = Counter()
    keys = {}
    for t, zeros, short in parts:
        name = _component_label(t, zeros, short)
        names[name] += 1
        keys[name] = (_SERIES_ORDER.index(t.series), -t.rank, short, zeros)
    out = []
    for name in sorted(names, key=lambda n: keys[n]):
        m = names[name]
        out.append(f"{m}{name}" if m > 1 else name)
    return "+".join(out)


def table_document(g) -> dict:
    """The JSON document shipped in ``sl2quot/data`` for ``g``."""
    g = group_type(g)
    rows = bala_carter_classes(g)
    return {
        "group": g.name,
        "classes": [{k: v for k, v in r.items() if k != "dim"} for r in rows],
    }
