# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of the loops in ``_pyimpl``."""

from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libc.stdint cimport int64_t
from math import comb

from . import _pyimpl


cdef vector[int] _flat_cartan(cartan, int r):
    cdef vector[int] c
    c.resize(r * r)
    cdef int i, j
    for i in range(r):
        row = cartan[i]
        for j in range(r):
            c[i * r + j] = row[j]
    return c


def dominant_rep(mu, cartan):
    cdef int r = len(mu)
    cdef vector[int] c = _flat_cartan(cartan, r)
    cdef vector[int] nu
    cdef int i, j, x
    cdef bint moved = True
    nu.resize(r)
    for i in range(r):
        nu[i] = mu[i]
    while moved:
        moved = False
        for i in range(r):
            x = nu[i]
            if x < 0:
                for j in range(r):
                    nu[j] -= x * c[i * r + j]
                moved = True
                break
    return tuple([nu[i] for i in range(r)])


cdef void _walk(vector[int]& start, vector[int]& c, int r,
                vector[int]& vals, bint keep, list out,
                unordered_map[int64_t, int64_t]& hist):
    # depth-first walk of the orbit tree; see _pyimpl._children
    cdef vector[int] stack = start
    cdef vector[int] nu, child
    cdef int i, j, x
    cdef int64_t v
    cdef bint ok
    nu.resize(r)
    child.resize(r)
    while stack.size() > 0:
        for j in range(r):
            nu[j] = stack[stack.size() - r + j]
        stack.resize(stack.size() - r)
        if keep:
            out.append(tuple([nu[j] for j in range(r)]))
        else:
            v = 0
            for j in range(r):
                v += <int64_t>nu[j] * vals[j]
            hist[v] += 1
        for i in range(r):
            x = nu[i]
            if x <= 0:
                continue
            ok = True
            for j in range(r):
                child[j] = nu[j] - x * c[i * r + j]
                if j < i and child[j] < 0:
                    ok = False
                    break
            if ok:
                for j in range(r):
                    stack.push_back(child[j])


def weyl_orbit(mu, cartan):
    cdef int r = len(mu)
    cdef vector[int] c = _flat_cartan(cartan, r)
    cdef vector[int] start, vals
    cdef unordered_map[int64_t, int64_t] hist
    cdef int j
    for j in range(r):
        start.push_back(mu[j])
    out = []
    _walk(start, c, r, vals, True, out, hist)
    return out


def orbit_values(mu, cartan, vals):
    cdef int r = len(mu)
    cdef vector[int] c = _flat_cartan(cartan, r)
    cdef vector[int] start, cvals
    cdef unordered_map[int64_t, int64_t] hist
    cdef int j
    for j in range(r):
        start.push_back(mu[j])
        cvals.push_back(vals[j])
    _walk(start, c, r, cvals, False, None, hist)
    return {int(kv.first): int(kv.second) for kv in hist}


def subset_sums(weights, counts, int k):
    cdef int n = sum(counts)
    if k < 0 or k > n:
        return {}
    if comb(n, k) >= (1 << 62) or not weights:
        return _pyimpl.subset_sums(weights, counts, k)
    cdef int lo = 0, hi = 0, w, cnt, t, j, s, m = len(weights)
    for idx in range(m):
        if weights[idx] < 0:
            lo += weights[idx] * counts[idx]
        else:
            hi += weights[idx] * counts[idx]
    cdef int width = hi - lo + 1
    # layer j occupies [j*width, (j+1)*width); index s - lo
    cdef vector[int64_t] dp
    dp.assign((k + 1) * width, 0)
    dp[-lo] = 1
    cdef vector[int64_t] binom
    cdef int64_t b
    for idx in range(m):
        w = weights[idx]
        cnt = counts[idx]
        binom.assign(cnt + 1, 0)
        binom[0] = 1
        for t in range(1, cnt + 1):
            binom[t] = binom[t - 1] * (cnt - t + 1) // t
        for j in range(k, 0, -1):
            for t in range(1, min(cnt, j) + 1):
                b = binom[t]
                for s in range(width):
                    if dp[(j - t) * width + s] != 0:
                        dp[j * width + s + t * w] += b * dp[(j - t) * width + s]
    return {s + lo: int(dp[k * width + s]) for s in range(width) if dp[k * width + s] != 0}


def signed_sums(entries):
    cdef int n = len(entries)
    if n >= 62:
        return _pyimpl.signed_sums(entries)
    cdef int total = 0, e, s, idx
    for idx in range(n):
        total += abs(entries[idx])
    cdef int width = 2 * total + 1
    cdef vector[int64_t] even, odd, ne, no
    even.assign(width, 0)
    odd.assign(width, 0)
    even[total - sum(entries)] = 1
    for idx in range(n):
        e = entries[idx]
        ne = even
        no = odd
        for s in range(width):
            if even[s] != 0:
                no[s + 2 * e] += even[s]
            if odd[s] != 0:
                ne[s + 2 * e] += odd[s]
        even = ne
        odd = no
    return (
        {s - total: int(even[s]) for s in range(width) if even[s] != 0},
        {s - total: int(odd[s]) for s in range(width) if odd[s] != 0},
    )
