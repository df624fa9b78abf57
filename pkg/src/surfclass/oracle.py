"""Euler-characteristic oracle and fixture generators.

Nothing in the classification path depends on this module except the
iteration guard in ``classify.genus``.  It exists to check answers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .complex import Side, Triangulation, require_valid, vertex_classes
from .curveword import Component, CurveWord
from .errors import InvariantViolation


@dataclass(frozen=True)
class OracleReport:
    V: int
    E: int
    F: int

    @property
    def chi(self):
        return self.V - self.E + self.F

    @property
    def genus(self):
        return (2 - self.chi) // 2

    def __str__(self):
        return f"V {self.V}\nE {self.E}\nF {self.F}\nchi {self.chi}\ngenus {self.genus}"


def euler(T: Triangulation) -> OracleReport:
    require_valid(T)
    return OracleReport(vertex_classes(T).count, len(T.gluings), T.n)


def oracle_genus(T: Triangulation) -> int:
    return euler(T).genus


def canonical_torus() -> Triangulation:
    return Triangulation(2, (
        (Side(0, 0), Side(1, 0)),
        (Side(0, 1), Side(1, 1)),
        (Side(0, 2), Side(1, 2)),
    ))


def canonical_sphere() -> Triangulation:
    return Triangulation(2, (
        (Side(0, 0), Side(1, 2)),
        (Side(0, 1), Side(1, 1)),
        (Side(0, 2), Side(1, 0)),
    ))


def one_to_three(T: Triangulation, t: int) -> Triangulation:
    """Cone triangle ``t`` from a new interior vertex.

    The piece containing old side ``i`` keeps corners ``(i, i+1)`` of the
    old triangle as its corners 0 and 1; it is ``t`` itself for ``i = 0``
    and the appended triangles ``n``, ``n+1`` otherwise.
    """
    n = T.n
    new = {Side(t, 0): Side(t, 0), Side(t, 1): Side(n, 0), Side(t, 2): Side(n + 1, 0)}
    gluings = [(new.get(a, a), new.get(b, b)) for a, b in T.gluings]
    pieces = (t, n, n + 1)
    for i in range(3):
        gluings.append((Side(pieces[i], 1), Side(pieces[(i + 1) % 3], 2)))
    return Triangulation(n + 2, tuple(gluings))


def refine(T: Triangulation, steps: int, seed: int) -> Triangulation:
    rng = random.Random(seed)
    for _ in range(steps):
        T = one_to_three(T, rng.randrange(T.n))
    return T


def _swap(T, a, b):
    perm = list(range(T.n))
    perm[a], perm[b] = b, a
    return Triangulation(
        T.n,
        tuple((Side(perm[x.t], x.s), Side(perm[y.t], y.s)) for x, y in T.gluings),
    )


def _embedded(T, t):
    vc = vertex_classes(T)
    return len({vc.of(t, c) for c in range(3)}) == 3


def with_embedded_first(T: Triangulation) -> Triangulation:
    """Make triangle 0 an embedded disk (three distinct vertices).

    Two 1-3 moves create a triangle meeting two fresh vertices and one old
    one; it is moved to index 0.
    """
    require_valid(T)
    if _embedded(T, 0):
        return T
    T = one_to_three(one_to_three(T, 0), 0)
    T = _swap(T, 0, T.n - 2)
    if not _embedded(T, 0):
        raise InvariantViolation("failed to produce an embedded triangle")
    return T


def _fan_walk(T: Triangulation):
    """Crossing word of a curve running just outside the embedded triangle 0.

    The walk rotates around each vertex of triangle 0 through the outside
    triangles, switching vertex whenever the next side belongs to triangle 0.
    """
    def forward(t, c):
        other = T.glued_to(Side(t, c))
        return other.t, (other.s + 1) % 3

    start = forward(0, 0)
    state = start
    crossings = []
    for _ in range(6 * T.n + 6):
        t, c = state
        nxt = forward(t, c)
        if nxt[0] == 0:
            state = (t, (c + 1) % 3)
        else:
            crossings.append(Side(t, c))
            state = nxt
        if state == start:
            return crossings
    raise InvariantViolation("fan walk around triangle 0 did not close")


def connected_sum_with_neck(T1: Triangulation, T2: Triangulation):
    """Connected sum plus the crossing word of a curve parallel to the seam.

    Triangle 0 of each summand (made embedded first) is removed; the three
    sides formerly glued to ``T1``'s triangle 0 are glued to those formerly
    glued to ``T2``'s, side ``s`` against side ``-s mod 3``, which matches
    the boundary vertices consistently.  ``T1``'s triangles come first.
    """
    A = with_embedded_first(T1)
    B = with_embedded_first(T2)
    neck = _fan_walk(A)

    def move_a(x):
        return Side(x.t - 1, x.s)

    def move_b(x):
        return Side(x.t - 1 + A.n - 1, x.s)

    gluings = []
    for a, b in A.gluings:
        if a.t and b.t:
            gluings.append((move_a(a), move_a(b)))
    for a, b in B.gluings:
        if a.t and b.t:
            gluings.append((move_b(a), move_b(b)))
    for s in range(3):
        p = A.glued_to(Side(0, s))
        q = B.glued_to(Side(0, (-s) % 3))
        gluings.append((move_a(p), move_b(q)))
    T = Triangulation(A.n + B.n - 2, tuple(gluings))
    require_valid(T)
    if neck:
        word = CurveWord((Component(tuple(move_a(c) for c in neck)),))
    else:
        # A had one triangle left: the neck is a small circle inside it
        word = CurveWord((Component((), 0),))
    return T, word


def connected_sum(T1: Triangulation, T2: Triangulation) -> Triangulation:
    return connected_sum_with_neck(T1, T2)[0]


def genus_g_with_neck(g: int):
    """``genus_g(g)`` and, for ``g >= 2``, the neck of its last connected sum
    (separating a genus ``g-1`` side from a torus)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    if g == 0:
        return canonical_sphere(), None
    T, neck = canonical_torus(), None
    for _ in range(g - 1):
        T, neck = connected_sum_with_neck(T, canonical_torus())
    return T, neck


def genus_g(g: int) -> Triangulation:
    return genus_g_with_neck(g)[0]
