# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_kernels_py`` for the reference semantics."""

from libc.stdlib cimport malloc, free

from ._kernels_py import prepare_equations, side_counts, arc_offsets, piece_offsets


def enumerate_solutions(int nvars, equations, int max_coord):
    cdef list flat = []
    cdef list start = []
    cdef int nflat
    cdef int *eq
    cdef int *eq_start
    cdef int *x
    cdef int *lo
    cdef int *hi
    cdef int i, v, k, neq, p, coef, nrest, total, forced, ok, depth
    if nvars == 0:
        return [()]
    by_last = prepare_equations(nvars, equations)
    # flatten: per variable a run of equations, each (coef, nrest, rest...)
    for v in range(nvars):
        start.append(len(flat))
        flat.append(len(by_last[v]))
        for coef, rest in by_last[v]:
            flat.append(coef)
            flat.append(len(rest))
            for u, c in rest:
                flat.append(u)
                flat.append(c)
    nflat = len(flat)
    eq = <int *> malloc((nflat + 1) * sizeof(int))
    eq_start = <int *> malloc(nvars * sizeof(int))
    x = <int *> malloc(nvars * sizeof(int))
    lo = <int *> malloc(nvars * sizeof(int))
    hi = <int *> malloc(nvars * sizeof(int))
    out = []
    try:
        for i in range(nflat):
            eq[i] = flat[i]
        for i in range(nvars):
            eq_start[i] = start[i]
        depth = 0
        lo[0] = -1
        while depth >= 0:
            if lo[depth] == -1:
                # compute the candidate range for this depth
                p = eq_start[depth]
                neq = eq[p]
                p += 1
                forced = -1
                ok = 1
                lo[depth] = 0
                hi[depth] = max_coord
                for k in range(neq):
                    coef = eq[p]
                    nrest = eq[p + 1]
                    p += 2
                    total = 0
                    for i in range(nrest):
                        total += eq[p + 2 * i + 1] * x[eq[p + 2 * i]]
                    p += 2 * nrest
                    if not ok:
                        continue
                    if coef == 0:
                        if total != 0:
                            ok = 0
                    elif forced < 0:
                        if total % coef != 0:
                            ok = 0
                        else:
                            forced = -total // coef
                            if forced < 0 or forced > max_coord:
                                ok = 0
                            else:
                                lo[depth] = forced
                                hi[depth] = forced
                    elif coef * forced + total != 0:
                        ok = 0
                if not ok:
                    hi[depth] = -1
                x[depth] = lo[depth] - 1
            x[depth] += 1
            if x[depth] > hi[depth]:
                depth -= 1
                continue
            if depth == nvars - 1:
                out.append(tuple([x[i] for i in range(nvars)]))
                continue
            depth += 1
            lo[depth] = -1
    finally:
        free(eq)
        free(eq_start)
        free(x)
        free(lo)
        free(hi)
    return out


def trace_curves(partner, primary, x):
    cdef int n3 = len(x)
    cdef list m_list = side_counts(x)
    cdef list base_list = arc_offsets(x)
    cdef int narcs = base_list[n3]
    cdef int *m = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *xs = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *par = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *base = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *arc_comp = <int *> malloc((narcs + 1) * sizeof(int))
    cdef int *seen_off = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *word = <int *> malloc((2 * narcs + 1) * sizeof(int))
    cdef unsigned char *seen
    cdef int i, j, q, t3, s, k, side, pos, comp, wlen, npts, d, nxt, prev
    words = []
    npts = 0
    for i in range(n3):
        seen_off[i] = npts
        npts += m_list[i]
    seen = <unsigned char *> malloc(npts + 1)
    try:
        for i in range(n3):
            m[i] = m_list[i]
            xs[i] = x[i]
            par[i] = partner[i]
            base[i] = base_list[i]
        for i in range(narcs):
            arc_comp[i] = -1
        for i in range(npts):
            seen[i] = 0
        for side in primary:
            for k in range(m[side]):
                if seen[seen_off[side] + k]:
                    continue
                comp = len(words)
                wlen = 0
                i = side
                pos = k
                while True:
                    seen[seen_off[i] + pos] = 1
                    word[wlen] = i
                    wlen += 1
                    j = par[i]
                    q = m[i] - 1 - pos
                    seen[seen_off[j] + q] = 1
                    t3 = j - j % 3
                    s = j % 3
                    if q < xs[j]:
                        prev = t3 + (s + 2) % 3
                        arc_comp[base[j] + q] = comp
                        i = prev
                        pos = m[prev] - 1 - q
                    else:
                        d = m[j] - 1 - q
                        nxt = t3 + (s + 1) % 3
                        arc_comp[base[nxt] + d] = comp
                        i = nxt
                        pos = d
                    if i == side and pos == k:
                        break
                words.append([word[k2] for k2 in range(wlen)])
        arcs = [arc_comp[i] for i in range(narcs)]
    finally:
        free(m)
        free(xs)
        free(par)
        free(base)
        free(arc_comp)
        free(seen_off)
        free(word)
        free(seen)
    return words, arcs


cdef inline int _piece(int *xs, int *base, int i, int j, int m_i) nogil:
    cdef int t3 = i - i % 3
    cdef int s = i % 3
    cdef int c, depth, start, cc
    if j < xs[i]:
        c = s
        depth = j
    elif m_i - j < xs[t3 + (s + 1) % 3]:
        c = (s + 1) % 3
        depth = m_i - j
    else:
        return base[t3 // 3]
    start = 1
    for cc in range(c):
        start += xs[t3 + cc]
    return base[t3 // 3] + start + depth


cdef inline int _find(int *parent, int a) nogil:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def complement_labels(partner, x):
    cdef int n3 = len(x)
    cdef list m_list = side_counts(x)
    cdef list base_list = piece_offsets(x)
    cdef int total = base_list[n3 // 3]
    cdef int *m = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *xs = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *par = <int *> malloc((n3 + 1) * sizeof(int))
    cdef int *base = <int *> malloc((n3 // 3 + 2) * sizeof(int))
    cdef int *parent = <int *> malloc((total + 1) * sizeof(int))
    cdef int *relabel = <int *> malloc((total + 1) * sizeof(int))
    cdef int i, j, seg, p, q, count
    try:
        for i in range(n3):
            m[i] = m_list[i]
            xs[i] = x[i]
            par[i] = partner[i]
        for i in range(n3 // 3 + 1):
            base[i] = base_list[i]
        for i in range(total):
            parent[i] = i
            relabel[i] = -1
        for i in range(n3):
            j = par[i]
            if j < i:
                continue
            for seg in range(m[i] + 1):
                p = _find(parent, _piece(xs, base, i, seg, m[i]))
                q = _find(parent, _piece(xs, base, j, m[i] - seg, m[j]))
                if p != q:
                    parent[q] = p
        labels = [0] * total
        count = 0
        for i in range(total):
            p = _find(parent, i)
            if relabel[p] < 0:
                relabel[p] = count
                count += 1
            labels[i] = relabel[p]
    finally:
        free(m)
        free(xs)
        free(par)
        free(base)
        free(parent)
        free(relabel)
    return labels
