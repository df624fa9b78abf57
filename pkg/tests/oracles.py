"""Reference computations written independently of the library code."""
import itertools


def edge_equations(T):
    """Per gluing, the two corner indices touching each side."""
    eqs = []
    for a, b in T.gluings:
        eqs.append(((3 * a.t + a.s, 3 * a.t + (a.s + 1) % 3),
                    (3 * b.t + b.s, 3 * b.t + (b.s + 1) % 3)))
    return eqs


def satisfies(eqs, x):
    return all(x[i] + x[j] == x[k] + x[l] for (i, j), (k, l) in eqs)


def brute_force(T, max_coord):
    """Literal filter over every vector in {0..max_coord}^(3n)."""
    eqs = edge_equations(T)
    return [x for x in itertools.product(range(max_coord + 1), repeat=3 * T.n) if satisfies(eqs, x)]


def triplewise(T, max_coord):
    """Admissible vectors found by choosing a corner triple per triangle and
    checking each gluing as soon as both of its triangles are fixed.

    Same answer as ``brute_force`` but feasible for ten triangles.
    """
    eqs = edge_equations(T)
    ready = [[] for _ in range(T.n)]
    for (i, j), (k, l) in eqs:
        ready[max(i, j, k, l) // 3].append((i, j, k, l))
    triples = list(itertools.product(range(max_coord + 1), repeat=3))
    out = []
    x = [0] * (3 * T.n)

    def place(t):
        if t == T.n:
            out.append(tuple(x))
            return
        for triple in triples:
            x[3 * t: 3 * t + 3] = triple
            if all(x[i] + x[j] == x[k] + x[l] for i, j, k, l in ready[t]):
                place(t + 1)

    place(0)
    return sorted(out)


def euler_chi(T):
    """V - E + F with vertices found by flood fill over corner identifications."""
    corners = {(t, c) for t in range(T.n) for c in range(3)}
    links = {v: [] for v in corners}
    for a, b in T.gluings:
        for u, v in (((a.t, a.s), (b.t, (b.s + 1) % 3)), ((a.t, (a.s + 1) % 3), (b.t, b.s))):
            links[u].append(v)
            links[v].append(u)
    seen, V = set(), 0
    for v in sorted(corners):
        if v in seen:
            continue
        V += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in links[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return V - len(T.gluings) + T.n
