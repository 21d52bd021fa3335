"""Exact root-system data for the simple types A-G.

Simple roots follow the Bourbaki numbering.  The Cartan matrix uses the
convention ``C[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` of ``C`` is the
simple root ``alpha_i`` written in fundamental-weight coordinates, and
``C^{-1}`` maps simple-root values ``(alpha_i(h))`` to fundamental-weight
values ``(varpi_i(h))``.

Root lengths are normalised so that short roots have squared length 2; the
half-lengths ``d_i = (alpha_i, alpha_i) / 2`` are then integers in {1, 2, 3}
and every pairing used below stays integral.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import _kernels

SERIES = "ABCDEFG"

Vec = Tuple[int, ...]


class RootDataError(ValueError):
    """Unsupported group type or malformed root-theoretic input."""


@dataclass(frozen=True, order=True)
class GroupType:
    series: str
    rank: int

    def __post_init__(self):
        s, r = self.series, self.rank
        if s not in SERIES or not isinstance(r, int):
            raise RootDataError(f"unknown group type {s}{r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[s]
        if not ok:
            raise RootDataError(f"unsupported rank {r} for series {s}")

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def classical(self) -> bool:
        return self.series in "ABCD"

    def __str__(self):
        return self.name


def group_type(spec) -> GroupType:
    """Parse ``"B6"``, ``("B", 6)`` or a GroupType, canonicalising aliases.

    C1 and B1 become A1, D3 becomes A3 and D2 is rejected; a warning is
    emitted whenever an alias is rewritten.
    """
    if isinstance(spec, GroupType):
        return spec
    if isinstance(spec, str):
        s = spec.strip().upper()
        if len(s) < 2 or s[0] not in SERIES or not s[1:].isdigit():
            raise RootDataError(f"cannot parse group type {spec!r}")
        series, rank = s[0], int(s[1:])
    else:
        series, rank = spec
        series = series.upper()
    alias = {("C", 1): ("A", 1), ("B", 1): ("A", 1), ("D", 3): ("A", 3)}
    if (series, rank) in alias:
        new = alias[(series, rank)]
        warnings.warn(f"{series}{rank} canonicalised to {new[0]}{new[1]}", stacklevel=2)
        series, rank = new
    return GroupType(series, rank)


def _diagram(g: GroupType):
    """Edges (i, j, bond) and squared root lengths, 0-based Bourbaki order."""
    s, r = g.series, g.rank
    edges = []
    if s in "ABCD":
        chain = r - 1 if s == "D" else r
        edges = [(i, i + 1, 1) for i in range(chain - 1)]
        if s in "BC":
            edges[-1] = (r - 2, r - 1, 2)
        if s == "D":
            edges.append((r - 3, r - 1, 1))
        lengths = [2] * r
        if s == "B":
            lengths = [4] * (r - 1) + [2]
        elif s == "C":
            lengths = [2] * (r - 1) + [4]
    elif s == "E":
        edges = [(0, 2, 1), (1, 3, 1), (2, 3, 1)] + [(i, i + 1, 1) for i in range(3, r - 1)]
        lengths = [2] * r
    elif s == "F":
        edges = [(0, 1, 1), (1, 2, 2), (2, 3, 1)]
        lengths = [4, 4, 2, 2]
    else:  # G2: alpha_1 short, alpha_2 long
        edges = [(0, 1, 3)]
        lengths = [2, 6]
    return edges, lengths


def _matrix_inverse(m: Sequence[Sequence[int]]) -> List[List[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def _det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for i in range(col + 1, n):
            f = a[i][col] / a[col][col]
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return int(det)


@dataclass(frozen=True)
class RootSystem:
    group: GroupType
    cartan: Tuple[Vec, ...]
    inverse_cartan: Tuple[Tuple[Fraction, ...], ...]
    half_lengths: Vec
    positive_roots: Tuple[Vec, ...]
    fundamental_degrees: Vec
    dual_coxeter: int
    fundamental_rep_dims: Vec = field(default=())

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def dim(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def highest_root(self) -> Vec:
        return max(self.positive_roots, key=sum)

    @property
    def roots(self) -> List[Vec]:
        return list(self.positive_roots) + [tuple(-x for x in a) for a in self.positive_roots]

    def det_cartan(self) -> int:
        return _det(self.cartan)

    # basis conversions -------------------------------------------------

    def root_to_weight(self, a: Sequence[int]) -> Vec:
        """Simple-root coordinates to fundamental-weight coordinates."""
        r = self.rank
        return tuple(sum(a[j] * self.cartan[j][l] for j in range(r)) for l in range(r))

    def weight_to_root(self, w: Sequence) -> Tuple[Fraction, ...]:
        r = self.rank
        inv = self.inverse_cartan
        # a = (C^T)^{-1} w, i.e. a_j = sum_l w_l (C^{-1})_{l j}
        return tuple(sum(Fraction(w[l]) * inv[l][j] for l in range(r)) for j in range(r))

    def pair_root(self, weight: Sequence[int], root: Sequence[int]) -> int:
        """(mu, alpha) for mu in weight coordinates and alpha in root coordinates."""
        return sum(root[j] * weight[j] * self.half_lengths[j] for j in range(self.rank))

    def coroot_pairing(self, weight: Sequence[int], root: Sequence[int]) -> Fraction:
        """<mu, alpha^vee> = 2 (mu, alpha) / (alpha, alpha)."""
        return Fraction(2 * self.pair_root(weight, root), self.root_norm(root))

    def root_norm(self, root: Sequence[int]) -> int:
        """(alpha, alpha) for alpha given in simple-root coordinates."""
        return self.pair_root(self.root_to_weight(root), root)


def inverse_cartan_apply(rs: RootSystem, v: Sequence[int]) -> Tuple[Fraction, ...]:
    """Return ``C^{-1} v`` as exact rationals."""
    if len(v) != rs.rank:
        raise RootDataError(f"vector of length {len(v)} for rank {rs.rank}")
    inv = rs.inverse_cartan
    return tuple(sum(inv[i][j] * v[j] for j in range(rs.rank)) for i in range(rs.rank))


def _positive_roots(cartan: Tuple[Vec, ...]) -> List[Vec]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    layer = list(simple)
    out = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                p = 0
                b = list(beta)
                while True:
                    b[i] -= 1
                    if tuple(b) in found:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * cartan[j][i] for j in range(r))
                q = p - pairing
                if q > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        out.extend(nxt)
        layer = nxt
    return out


def _degrees(positive_roots: Sequence[Vec]) -> List[int]:
    heights: Dict[int, int] = {}
    for a in positive_roots:
        heights[sum(a)] = heights.get(sum(a), 0) + 1
    top = max(heights)
    exps = []
    for k in range(1, top + 1):
        exps += [k] * (heights.get(k, 0) - heights.get(k + 1, 0))
    return sorted(e + 1 for e in exps)


@lru_cache(maxsize=None)
def build_root_system(g) -> RootSystem:
    g = group_type(g)
    r = g.rank
    edges, lengths = _diagram(g)
    sym = [[0] * r for _ in range(r)]
    for i in range(r):
        sym[i][i] = lengths[i]
    for i, j, bond in edges:
        sym[i][j] = sym[j][i] = -bond * min(lengths[i], lengths[j]) // 2
    cartan = tuple(tuple(2 * sym[i][j] // lengths[j] for j in range(r)) for i in range(r))
    inv = _matrix_inverse(cartan)
    half = tuple(x // 2 for x in lengths)
    pos = _positive_roots(cartan)
    theta = max(pos, key=sum)
    theta_norm = sum(theta[i] * theta[j] * sym[i][j] for i in range(r) for j in range(r))
    # h^vee = 1 + sum of coroot coefficients of theta^vee
    hv = 1 + sum(Fraction(theta[i] * lengths[i], theta_norm) for i in range(r))
    rs = RootSystem(
        group=g,
        cartan=cartan,
        inverse_cartan=tuple(tuple(row) for row in inv),
        half_lengths=half,
        positive_roots=tuple(pos),
        fundamental_degrees=tuple(_degrees(pos)),
        dual_coxeter=int(hv),
    )
    dims = tuple(weyl_dimension(rs, tuple(int(i == j) for j in range(r))) for i in range(r))
    object.__setattr__(rs, "fundamental_rep_dims", dims)
    return rs


def _check_dominant(rs: RootSystem, hw: Sequence[int]):
    if len(hw) != rs.rank or any(int(x) != x or x < 0 for x in hw):
        raise RootDataError(f"{tuple(hw)} is not a dominant integral weight of {rs.group}")


def weyl_dimension(rs: RootSystem, hw: Sequence[int]) -> int:
    """Weyl's product formula for dim V(hw), hw in fundamental-weight coordinates."""
    _check_dominant(rs, hw)
    rho = (1,) * rs.rank
    lam_rho = tuple(x + 1 for x in hw)
    num = den = 1
    for a in rs.positive_roots:
        num *= rs.pair_root(lam_rho, a)
        den *= rs.pair_root(rho, a)
    return num // den


def dominant_weights(rs: RootSystem, hw: Sequence[int]) -> Dict[Vec, Vec]:
    """Dominant weights of V(hw), mapped to their depth ``hw - mu`` in root coordinates."""
    hw = tuple(hw)
    roots_w = [(a, rs.root_to_weight(a)) for a in rs.positive_roots]
    seen = {hw: (0,) * rs.rank}
    stack = [hw]
    while stack:
        mu = stack.pop()
        depth = seen[mu]
        for a, aw in roots_w:
            nu = tuple(x - y for x, y in zip(mu, aw))
            if min(nu) >= 0 and nu not in seen:
                seen[nu] = tuple(x + y for x, y in zip(depth, a))
                stack.append(nu)
    return seen


@lru_cache(maxsize=256)
def _dominant_multiplicities(rs: RootSystem, hw: Vec) -> Dict[Vec, int]:
    dom = dominant_weights(rs, hw)
    order = sorted(dom, key=lambda mu: sum(dom[mu]))
    cart = rs.cartan
    roots_w = [(a, rs.root_to_weight(a)) for a in rs.positive_roots]
    two_rho_plus = [hw[j] + 2 for j in range(rs.rank)]
    mult: Dict[Vec, int] = {hw: 1}
    for mu in order[1:]:
        depth = dom[mu]
        denom = sum(
            depth[j] * rs.half_lengths[j] * (two_rho_plus[j] + mu[j]) for j in range(rs.rank)
        )
        total = 0
        for a, aw in roots_w:
            nu = mu
            while True:
                nu = tuple(x + y for x, y in zip(nu, aw))
                m = mult.get(_kernels.dominant_rep(nu, cart))
                if not m:
                    break
                total += m * rs.pair_root(nu, a)
        mult[mu] = 2 * total // denom
    return mult


def weight_multiplicities(rs: RootSystem, hw: Sequence[int], *, dominant_only=False) -> Dict[Vec, int]:
    """Multiplicities of the weights of V(hw) (fundamental-weight coordinates).

    Freudenthal's recursion runs over dominant weights only; the full map is
    obtained by Weyl symmetry unless ``dominant_only`` is set.
    """
    _check_dominant(rs, hw)
    hw = tuple(int(x) for x in hw)
    dom = _dominant_multiplicities(rs, hw)
    if dominant_only:
        return dict(dom)
    out = {}
    for mu, m in dom.items():
        for nu in _kernels.weyl_orbit(mu, rs.cartan):
            out[nu] = m
    return out


def weyl_orbit(rs: RootSystem, mu: Sequence[int]) -> List[Vec]:
    return _kernels.weyl_orbit(_kernels.dominant_rep(tuple(mu), rs.cartan), rs.cartan)


def restricted_weights(rs: RootSystem, hw: Sequence[int], fund_values: Sequence[int]) -> Dict[int, int]:
    """Weight multiset of V(hw) evaluated at h, given ``varpi_i(h)`` for each i.

    Only the dominant multiplicities are stored; each Weyl orbit is streamed
    straight into a histogram of h-values.
    """
    _check_dominant(rs, hw)
    hw = tuple(int(x) for x in hw)
    vals = tuple(int(v) for v in fund_values)
    hist: Dict[int, int] = {}
    for mu, m in _dominant_multiplicities(rs, hw).items():
        for value, count in _kernels.orbit_values(mu, rs.cartan, vals).items():
            hist[value] = hist.get(value, 0) + m * count
    return hist


def fundamental_weight(rs: RootSystem, i: int) -> Vec:
    """``varpi_i`` with 1-based node index i."""
    if not 1 <= i <= rs.rank:
        raise RootDataError(f"node {i} out of range for {rs.group}")
    return tuple(int(j == i - 1) for j in range(rs.rank))


def center_order(g: GroupType) -> int:
    s, r = g.series, g.rank
    return {"A": r + 1, "B": 2, "C": 2, "D": 4, "E": {6: 3, 7: 2, 8: 1}.get(r, 1), "F": 1, "G": 1}[s]


# -- Euclidean realisation ------------------------------------------------------

BASES = ("simple_root", "fundamental_weight", "euclidean")


def _unit(n: int, i: int, c=1) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _sub(a, b):
    return [x - y for x, y in zip(a, b)]


def euclidean_simple_roots(g) -> List[Tuple[Fraction, ...]]:
    """Simple roots in the standard coordinates of the Bourbaki tables."""
    g = group_type(g)
    s, r = g.series, g.rank
    half = Fraction(1, 2)
    if s == "A":
        n = r + 1
        out = [_sub(_unit(n, i), _unit(n, i + 1)) for i in range(r)]
    elif s in "BCD":
        n = r
        out = [_sub(_unit(n, i), _unit(n, i + 1)) for i in range(r - 1)]
        if s == "B":
            out.append(_unit(n, r - 1))
        elif s == "C":
            out.append(_unit(n, r - 1, 2))
        else:
            out.append([a + b for a, b in zip(_unit(n, r - 2), _unit(n, r - 1))])
    elif s == "G":
        out = [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    elif s == "F":
        out = [
            _sub(_unit(4, 1), _unit(4, 2)),
            _sub(_unit(4, 2), _unit(4, 3)),
            _unit(4, 3),
            [half, -half, -half, -half],
        ]
    else:
        e8 = [[half] + [-half] * 6 + [half], [a + b for a, b in zip(_unit(8, 0), _unit(8, 1))]]
        e8 += [_sub(_unit(8, i), _unit(8, i - 1)) for i in range(1, 7)]
        out = e8[:r]
    return [tuple(v) for v in out]


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class WeightVector:
    coords: Tuple
    basis: str = "fundamental_weight"

    def __post_init__(self):
        if self.basis not in BASES:
            raise RootDataError(f"unknown basis {self.basis!r}")


def convert_weight(rs: RootSystem, w: WeightVector, basis: str) -> WeightVector:
    """Exact change of basis between simple-root, fundamental and Euclidean coordinates."""
    if basis not in BASES:
        raise RootDataError(f"unknown basis {basis!r}")
    if w.basis == basis:
        return w
    alphas = euclidean_simple_roots(rs.group)
    # normalise to fundamental-weight coordinates first
    if w.basis == "fundamental_weight":
        fund = tuple(Fraction(x) for x in w.coords)
    elif w.basis == "simple_root":
        a = [Fraction(x) for x in w.coords]
        fund = tuple(sum(a[j] * rs.cartan[j][l] for j in range(len(a))) for l in range(rs.rank))
    else:
        v = tuple(Fraction(x) for x in w.coords)
        if len(v) != len(alphas[0]):
            raise RootDataError(f"Euclidean vector of length {len(v)} for {rs.group}")
        fund = tuple(2 * _dot(v, a) / _dot(a, a) for a in alphas)
        back = convert_weight(rs, WeightVector(fund), "euclidean").coords
        if back != v:
            raise RootDataError(f"{v} is not in the span of the roots of {rs.group}")
    if len(fund) != rs.rank:
        raise RootDataError(f"vector of length {len(fund)} for rank {rs.rank}")
    if basis == "fundamental_weight":
        return WeightVector(fund, basis)
    roots = rs.weight_to_root(fund)
    if basis == "simple_root":
        return WeightVector(roots, basis)
    n = len(alphas[0])
    return WeightVector(tuple(sum((roots[j] * alphas[j][k] for j in range(rs.rank)), Fraction(0)) for k in range(n)), basis)
