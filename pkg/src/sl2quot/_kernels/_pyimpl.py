"""Pure-Python versions of the hot loops.

Every function here has a drop-in twin in ``_ckernels.pyx``; the two must
return identical results.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple


def dominant_rep(mu: Sequence[int], cartan: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Reflect ``mu`` (fundamental-weight coordinates) into the dominant chamber."""
    nu = list(mu)
    r = len(nu)
    while True:
        for i in range(r):
            c = nu[i]
            if c < 0:
                row = cartan[i]
                for j in range(r):
                    nu[j] -= c * row[j]
                break
        else:
            return tuple(nu)


def _children(nu, cartan, r):
    # s_i nu is a child of nu iff nu_i > 0 and i is the first negative
    # coordinate of s_i nu; this makes the orbit a tree rooted at the
    # dominant weight, so no visited-set is needed.
    for i in range(r):
        c = nu[i]
        if c <= 0:
            continue
        row = cartan[i]
        child = [nu[j] - c * row[j] for j in range(r)]
        if all(child[j] >= 0 for j in range(i)):
            yield child


def weyl_orbit(mu: Sequence[int], cartan: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """All elements of the W-orbit of the dominant weight ``mu``."""
    r = len(mu)
    out = []
    stack = [list(mu)]
    while stack:
        nu = stack.pop()
        out.append(tuple(nu))
        stack.extend(_children(nu, cartan, r))
    return out


def orbit_values(mu: Sequence[int], cartan: Sequence[Sequence[int]], vals: Sequence[int]) -> Dict[int, int]:
    """Histogram of ``sum_i nu_i * vals_i`` over the W-orbit of dominant ``mu``."""
    r = len(mu)
    hist: Dict[int, int] = {}
    stack = [list(mu)]
    while stack:
        nu = stack.pop()
        v = 0
        for j in range(r):
            v += nu[j] * vals[j]
        hist[v] = hist.get(v, 0) + 1
        stack.extend(_children(nu, cartan, r))
    return hist


def subset_sums(weights: Sequence[int], counts: Sequence[int], k: int) -> Dict[int, int]:
    """Multiset of sums of k-element sub-multisets of a weighted list.

    ``weights[i]`` occurs ``counts[i]`` times; the result maps each sum to the
    number of k-subsets (of the underlying list, elements distinguishable)
    realising it.
    """
    # layers[j] : {sum: number of j-subsets}
    layers: List[Dict[int, int]] = [{0: 1}] + [{} for _ in range(k)]
    for w, c in zip(weights, counts):
        binom = [1]
        for t in range(1, c + 1):
            binom.append(binom[-1] * (c - t + 1) // t)
        for j in range(k, 0, -1):
            acc = layers[j]
            for t in range(1, min(c, j) + 1):
                src = layers[j - t]
                if not src:
                    continue
                shift, b = t * w, binom[t]
                for s, n in src.items():
                    acc[s + shift] = acc.get(s + shift, 0) + b * n
    return {s: n for s, n in layers[k].items() if n}


def signed_sums(entries: Sequence[int]) -> Tuple[Dict[int, int], Dict[int, int]]:
    """All sums ``sum_i (+/-) entries[i]``, split by parity of the number of '+' signs.

    Returns ``(even_plus, odd_plus)`` histograms.
    """
    even: Dict[int, int] = {-sum(entries): 1}
    odd: Dict[int, int] = {}
    for e in entries:
        ne: Dict[int, int] = dict(even)
        no: Dict[int, int] = dict(odd)
        # flipping entry e from '-' to '+' adds 2e and toggles the parity
        for s, n in even.items():
            no[s + 2 * e] = no.get(s + 2 * e, 0) + n
        for s, n in odd.items():
            ne[s + 2 * e] = ne.get(s + 2 * e, 0) + n
        even, odd = ne, no
    return even, odd
