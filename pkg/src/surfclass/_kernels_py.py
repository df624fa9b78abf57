"""Pure-Python kernels.  ``_kernels.pyx`` mirrors these signatures exactly.

All inputs are flat integer sequences: ``partner[3t+s]`` is the side glued
to side ``(t, s)`` and ``x`` holds the corner counts.  Points on side ``i`` are numbered ``0..m_i-1`` from corner ``s``
towards corner ``s+1`` with ``m_i = x[3t+s] + x[3t+s+1]``.
"""


def prepare_equations(nvars, equations):
    """Group equations by the variable that completes them.

    Returns ``(coef, rest)`` per variable: ``coef`` is the net coefficient of
    the completing variable and ``rest`` the other (variable, coefficient)
    terms, all of lower index.
    """
    by_last = [[] for _ in range(nvars)]
    for i, j, k, l in equations:
        terms = {}
        for v, c in ((i, 1), (j, 1), (k, -1), (l, -1)):
            terms[v] = terms.get(v, 0) + c
        last = max(i, j, k, l)
        coef = terms.pop(last)
        rest = tuple((v, c) for v, c in sorted(terms.items()) if c)
        by_last[last].append((coef, rest))
    return by_last


def enumerate_solutions(nvars, equations, max_coord):
    """All vectors in ``{0..max_coord}^nvars`` satisfying every equation
    ``x_i + x_j = x_k + x_l``, in lexicographic order."""
    by_last = prepare_equations(nvars, equations)
    out = []
    x = [0] * nvars

    def candidates(v):
        forced = None
        checks = []
        for coef, rest in by_last[v]:
            total = 0
            for u, c in rest:
                total += c * x[u]
            if coef == 0:
                if total != 0:
                    return ()
            elif forced is None:
                if total % coef:
                    return ()
                forced = -total // coef
                if not 0 <= forced <= max_coord:
                    return ()
            else:
                checks.append((coef, total))
        if forced is None:
            return range(max_coord + 1)
        for coef, total in checks:
            if coef * forced + total != 0:
                return ()
        return (forced,)

    stack = [iter(candidates(0))] if nvars else []
    if not nvars:
        return [()]
    depth = 0
    while stack:
        try:
            value = next(stack[-1])
        except StopIteration:
            stack.pop()
            depth -= 1
            continue
        x[depth] = value
        if depth == nvars - 1:
            out.append(tuple(x))
            continue
        depth += 1
        stack.append(iter(candidates(depth)))
    return out


def side_counts(x):
    n3 = len(x)
    return [x[i] + x[i - i % 3 + (i % 3 + 1) % 3] for i in range(n3)]


def arc_offsets(x):
    base = [0] * (len(x) + 1)
    for i, v in enumerate(x):
        base[i + 1] = base[i] + v
    return base


def trace_curves(partner, primary, x):
    """Follow the arcs of the normal curve with corner counts ``x``.

    ``primary[e]`` is the side on which positions along edge ``e`` are read.
    Returns ``(words, arc_component)``: ``words[k]`` lists the sides
    through which component ``k`` exits its triangles, starting at the
    component's smallest ``(edge, position)`` point; ``arc_component[arc]``
    is the component of each arc, arcs numbered by corner index then
    nesting depth.
    """
    n3 = len(x)
    m = side_counts(x)
    base = arc_offsets(x)
    arc_component = [-1] * base[n3]
    seen = [bytearray(m[i]) for i in range(n3)]
    words = []
    for side in primary:
        for k in range(m[side]):
            if seen[side][k]:
                continue
            comp = len(words)
            word = []
            i, pos = side, k
            while True:
                seen[i][pos] = 1
                word.append(i)
                j = partner[i]
                q = m[i] - 1 - pos
                seen[j][q] = 1
                # the arc in j's triangle ending at point q of side j
                t3 = j - j % 3
                s = j % 3
                if q < x[j]:
                    prev = t3 + (s + 2) % 3
                    arc_component[base[j] + q] = comp
                    i, pos = prev, m[prev] - 1 - q
                else:
                    d = m[j] - 1 - q
                    nxt = t3 + (s + 1) % 3
                    arc_component[base[nxt] + d] = comp
                    i, pos = nxt, d
                if i == side and pos == k:
                    break
            words.append(word)
    return words, arc_component


def piece_offsets(x):
    n = len(x) // 3
    base = [0] * (n + 1)
    for t in range(n):
        base[t + 1] = base[t] + x[3 * t] + x[3 * t + 1] + x[3 * t + 2] + 1
    return base


def piece_of_segment(x, base, i, j, m_i):
    """Piece containing segment ``j`` (of ``m_i + 1``) on side ``i``.

    Within triangle ``t`` piece 0 is the central piece; the corner-``c``
    stack occupies ``1 + x[3t] + .. + x[3t+c-1]`` onwards, one piece per
    nesting depth.
    """
    t3 = i - i % 3
    s = i % 3
    a = x[i]
    nxt = t3 + (s + 1) % 3
    b = x[nxt]
    t = t3 // 3
    if j < a:
        c, depth = s, j
    elif m_i - j < b:
        c, depth = (s + 1) % 3, m_i - j
    else:
        return base[t]
    start = 1
    for cc in range(c):
        start += x[t3 + cc]
    return base[t] + start + depth


def complement_labels(partner, x):
    """Connected-component label of every complement piece.

    Segment ``j`` of a side is glued to segment ``m - j`` of its partner.
    Labels are numbered by first appearance in piece order.
    """
    n3 = len(x)
    m = side_counts(x)
    base = piece_offsets(x)
    total = base[-1]
    parent = list(range(total))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(n3):
        j = partner[i]
        if j < i:
            continue
        for seg in range(m[i] + 1):
            p = find(piece_of_segment(x, base, i, seg, m[i]))
            q = find(piece_of_segment(x, base, j, m[i] - seg, m[j]))
            if p != q:
                parent[q] = p
    labels = [0] * total
    seen = {}
    for p in range(total):
        labels[p] = seen.setdefault(find(p), len(seen))
    return labels
