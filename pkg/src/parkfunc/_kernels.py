"""Numba kernels for enumeration sweeps and Monte Carlo batches.

These are internal accelerated paths; each one is cross-checked in the test
suite against the pure-Python implementations in :mod:`parkfunc.structure`,
:mod:`parkfunc.parking`, and :mod:`parkfunc.stein`.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _structure_pass(succ, on_cycle, cid, clen, cpos, tail, root, color, pathbuf, pathpos):
    """Fill per-vertex structure arrays for one successor digraph.

    ``cid``/``clen`` hold the component's cycle id/length for every vertex
    (tree vertices inherit their component's values), ``cpos`` the position
    along the cycle for cycle vertices, ``root`` the nearest cycle vertex on
    the forward orbit. Returns the number of cycles.
    """
    n = succ.shape[0]
    for v in range(n):
        color[v] = 0
        on_cycle[v] = False
        tail[v] = -1
    ncyc = 0
    for v0 in range(n):
        if color[v0] != 0:
            continue
        plen = 0
        u = v0
        while color[u] == 0:
            color[u] = 1
            pathpos[u] = plen
            pathbuf[plen] = u
            plen += 1
            u = succ[u]
        if color[u] == 1:
            start = pathpos[u]
            length = plen - start
            for j in range(start, plen):
                w = pathbuf[j]
                on_cycle[w] = True
                cid[w] = ncyc
                clen[w] = length
                cpos[w] = j - start
                tail[w] = 0
                root[w] = w
            ncyc += 1
        for j in range(plen):
            color[pathbuf[j]] = 2
    for v0 in range(n):
        if tail[v0] >= 0:
            continue
        plen = 0
        u = v0
        while tail[u] < 0:
            pathbuf[plen] = u
            plen += 1
            u = succ[u]
        t = tail[u]
        r = root[u]
        c = cid[u]
        length = clen[u]
        for j in range(plen - 1, -1, -1):
            w = pathbuf[j]
            t += 1
            tail[w] = t
            root[w] = r
            cid[w] = c
            clen[w] = length
    return ncyc


@njit(cache=True)
def batch_cycle_stats(succ_batch, kmax):
    """Per-row truncated cycle profiles (C_1..C_kmax) and total cycle counts."""
    nrows, n = succ_batch.shape
    profiles = np.zeros((nrows, kmax), np.int64)
    totals = np.zeros(nrows, np.int64)
    on_cycle = np.zeros(n, np.bool_)
    cid = np.empty(n, np.int64)
    clen = np.empty(n, np.int64)
    cpos = np.empty(n, np.int64)
    tail = np.empty(n, np.int64)
    root = np.empty(n, np.int64)
    color = np.empty(n, np.int8)
    pathbuf = np.empty(n, np.int64)
    pathpos = np.empty(n, np.int64)
    for r in range(nrows):
        _structure_pass(succ_batch[r], on_cycle, cid, clen, cpos, tail, root,
                        color, pathbuf, pathpos)
        tot = 0
        for v in range(n):
            if on_cycle[v] and cpos[v] == 0:
                tot += 1
                if clen[v] <= kmax:
                    profiles[r, clen[v] - 1] += 1
        totals[r] = tot
    return profiles, totals


@njit(cache=True)
def _advance(vals, slack, t):
    # Move the enumeration cursor to the next branch; returns the new depth.
    while t >= 0:
        v = vals[t]
        if slack[v] > 0:
            slack[v] -= 1
            vals[t] = v + 1
            return t + 1
        for i in range(1, v):
            slack[i] += 1
        t -= 1
    return t


@njit(cache=True)
def enum_joint_counts(n, d):
    """Joint counts of (C_1..C_d) over all parking functions of size n.

    Returns a flat array of length (n+1)**d indexed radix-(n+1) with C_1 as
    the least significant digit.
    """
    radix = n + 1
    size = 1
    for _ in range(d):
        size *= radix
    counts = np.zeros(size, np.int64)
    vals = np.ones(n + 1, np.int64)
    slack = np.empty(n + 1, np.int64)
    for i in range(1, n + 1):
        slack[i] = n - i
    succ = np.empty(n, np.int64)
    on_cycle = np.zeros(n, np.bool_)
    cid = np.empty(n, np.int64)
    clen = np.empty(n, np.int64)
    cpos = np.empty(n, np.int64)
    tail = np.empty(n, np.int64)
    root = np.empty(n, np.int64)
    color = np.empty(n, np.int8)
    pathbuf = np.empty(n, np.int64)
    pathpos = np.empty(n, np.int64)
    ck = np.zeros(d + 1, np.int64)
    t = 0
    while True:
        if t < n:
            vals[t] = 1
            t += 1
            continue
        for i in range(n):
            succ[i] = vals[i] - 1
        _structure_pass(succ, on_cycle, cid, clen, cpos, tail, root, color, pathbuf, pathpos)
        for k in range(1, d + 1):
            ck[k] = 0
        for v in range(n):
            if on_cycle[v] and cpos[v] == 0 and clen[v] <= d:
                ck[clen[v]] += 1
        key = 0
        mult = 1
        for k in range(1, d + 1):
            key += ck[k] * mult
            mult *= radix
        counts[key] += 1
        t = _advance(vals, slack, n - 1)
        if t < 0:
            return counts


@njit(cache=True)
def enum_cycle_sums(n):
    """Totals over all parking functions of size n.

    Returns (number of parking functions, per-length cycle-count sums indexed
    1..n, sum of total cycle counts).
    """
    sums = np.zeros(n + 1, np.int64)
    ksum = 0
    total = 0
    vals = np.ones(n + 1, np.int64)
    slack = np.empty(n + 1, np.int64)
    for i in range(1, n + 1):
        slack[i] = n - i
    succ = np.empty(n, np.int64)
    on_cycle = np.zeros(n, np.bool_)
    cid = np.empty(n, np.int64)
    clen = np.empty(n, np.int64)
    cpos = np.empty(n, np.int64)
    tail = np.empty(n, np.int64)
    root = np.empty(n, np.int64)
    color = np.empty(n, np.int8)
    pathbuf = np.empty(n, np.int64)
    pathpos = np.empty(n, np.int64)
    t = 0
    while True:
        if t < n:
            vals[t] = 1
            t += 1
            continue
        for i in range(n):
            succ[i] = vals[i] - 1
        _structure_pass(succ, on_cycle, cid, clen, cpos, tail, root, color, pathbuf, pathpos)
        total += 1
        for v in range(n):
            if on_cycle[v] and cpos[v] == 0:
                sums[clen[v]] += 1
                ksum += 1
        t = _advance(vals, slack, n - 1)
        if t < 0:
            return total, sums, ksum


@njit(cache=True)
def enum_vertex_length_counts(n):
    """Per-vertex distributions of cycle and tail lengths over all parking functions.

    Returns (total, cyc, tl) where cyc[a, k] counts parking functions in which
    vertex a+1 lies on a k-cycle and tl[a, k] those in which it sits at tail
    distance k >= 1 from its cycle.
    """
    cyc = np.zeros((n, n + 1), np.int64)
    tl = np.zeros((n, n + 1), np.int64)
    total = 0
    vals = np.ones(n + 1, np.int64)
    slack = np.empty(n + 1, np.int64)
    for i in range(1, n + 1):
        slack[i] = n - i
    succ = np.empty(n, np.int64)
    on_cycle = np.zeros(n, np.bool_)
    cid = np.empty(n, np.int64)
    clen = np.empty(n, np.int64)
    cpos = np.empty(n, np.int64)
    tail = np.empty(n, np.int64)
    root = np.empty(n, np.int64)
    color = np.empty(n, np.int8)
    pathbuf = np.empty(n, np.int64)
    pathpos = np.empty(n, np.int64)
    t = 0
    while True:
        if t < n:
            vals[t] = 1
            t += 1
            continue
        for i in range(n):
            succ[i] = vals[i] - 1
        _structure_pass(succ, on_cycle, cid, clen, cpos, tail, root, color, pathbuf, pathpos)
        total += 1
        for v in range(n):
            if on_cycle[v]:
                cyc[v, clen[v]] += 1
            else:
                tl[v, tail[v]] += 1
        t = _advance(vals, slack, n - 1)
        if t < 0:
            return total, cyc, tl


@njit(cache=True)
def _transposition_events(succ, d, on_cycle, cid, clen, cpos, tail, root,
                          color, pathbuf, pathpos, tin, tout, childstart,
                          childlist, cursor, stackv, stackc, lens, dels,
                          acounts, bcounts):
    """Count unordered position pairs whose entry swap raises/lowers C_k by one.

    For each pair the swap's exact effect on the cycle-length multiset is
    derived from the digraph structure (merge, split, unroll, or re-loop of
    the affected cycle/tail), then reduced to the single candidate index k:
    the largest affected length <= d. acounts[k-1]/bcounts[k-1] receive the
    pairs whose net change at k is exactly +1/-1 with no changes above k
    (up to d).
    """
    n = succ.shape[0]
    _structure_pass(succ, on_cycle, cid, clen, cpos, tail, root, color, pathbuf, pathpos)
    # children lists over tree edges (child x -> parent succ[x]), CSR layout
    for v in range(n + 1):
        childstart[v] = 0
    for x in range(n):
        if not on_cycle[x]:
            childstart[succ[x] + 1] += 1
    for v in range(n):
        childstart[v + 1] += childstart[v]
    for v in range(n):
        cursor[v] = childstart[v]
    for x in range(n):
        if not on_cycle[x]:
            p = succ[x]
            childlist[cursor[p]] = x
            cursor[p] += 1
    # Euler intervals over the tree forest for O(1) is-ancestor tests
    timer = 0
    for r in range(n):
        if not on_cycle[r]:
            continue
        top = 0
        stackv[0] = r
        stackc[0] = childstart[r]
        while top >= 0:
            v = stackv[top]
            c = stackc[top]
            if c < childstart[v + 1]:
                stackc[top] = c + 1
                w = childlist[c]
                tin[w] = timer
                timer += 1
                top += 1
                stackv[top] = w
                stackc[top] = childstart[w]
            else:
                if top > 0:
                    tout[v] = timer
                top -= 1
    for k in range(d):
        acounts[k] = 0
        bcounts[k] = 0
    for a in range(n - 1):
        for b in range(a + 1, n):
            nentries = 0
            if on_cycle[a] and on_cycle[b]:
                if cid[a] == cid[b]:
                    length = clen[a]
                    step = cpos[b] - cpos[a]
                    if step < 0:
                        step += length
                    lens[0] = length
                    dels[0] = -1
                    lens[1] = step
                    dels[1] = 1
                    lens[2] = length - step
                    dels[2] = 1
                    nentries = 3
                else:
                    lens[0] = clen[a]
                    dels[0] = -1
                    lens[1] = clen[b]
                    dels[1] = -1
                    lens[2] = clen[a] + clen[b]
                    dels[2] = 1
                    nentries = 3
            elif on_cycle[a] or on_cycle[b]:
                if on_cycle[a]:
                    c, w = a, b
                else:
                    c, w = b, a
                lens[0] = clen[c]
                dels[0] = -1
                nentries = 1
                if cid[w] == cid[c]:
                    # tree vertex hangs off the same cycle: a new cycle closes
                    # through its tail and the arc back to the cycle vertex
                    u = cpos[c] - cpos[root[w]]
                    if u < 0:
                        u += clen[c]
                    lens[1] = tail[w] + u
                    dels[1] = 1
                    nentries = 2
            else:
                if cid[a] == cid[b]:
                    if tin[a] <= tin[b] and tout[b] <= tout[a]:
                        lens[0] = tail[b] - tail[a]
                        dels[0] = 1
                        nentries = 1
                    elif tin[b] <= tin[a] and tout[a] <= tout[b]:
                        lens[0] = tail[a] - tail[b]
                        dels[0] = 1
                        nentries = 1
            best_len = -1
            best_net = 0
            for i in range(nentries):
                li = lens[i]
                if li > d or li <= best_len:
                    continue
                net = 0
                for j in range(nentries):
                    if lens[j] == li:
                        net += dels[j]
                if net != 0:
                    best_len = li
                    best_net = net
            if best_len >= 1:
                if best_net == 1:
                    acounts[best_len - 1] += 1
                elif best_net == -1:
                    bcounts[best_len - 1] += 1


@njit(cache=True)
def batch_transposition_events(succ_batch, d):
    """Per-row A/B event pair counts for each k <= d."""
    nrows, n = succ_batch.shape
    aout = np.zeros((nrows, d), np.int64)
    bout = np.zeros((nrows, d), np.int64)
    on_cycle = np.zeros(n, np.bool_)
    cid = np.empty(n, np.int64)
    clen = np.empty(n, np.int64)
    cpos = np.empty(n, np.int64)
    tail = np.empty(n, np.int64)
    root = np.empty(n, np.int64)
    color = np.empty(n, np.int8)
    pathbuf = np.empty(n, np.int64)
    pathpos = np.empty(n, np.int64)
    tin = np.empty(n, np.int64)
    tout = np.empty(n, np.int64)
    childstart = np.empty(n + 1, np.int64)
    childlist = np.empty(n, np.int64)
    cursor = np.empty(n, np.int64)
    stackv = np.empty(n + 1, np.int64)
    stackc = np.empty(n + 1, np.int64)
    lens = np.empty(3, np.int64)
    dels = np.empty(3, np.int64)
    for r in range(nrows):
        _transposition_events(succ_batch[r], d, on_cycle, cid, clen, cpos, tail,
                              root, color, pathbuf, pathpos, tin, tout,
                              childstart, childlist, cursor, stackv, stackc,
                              lens, dels, aout[r], bout[r])
    return aout, bout
