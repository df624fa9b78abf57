"""Normal coordinates and the matching system.

A normal curve is recorded by its corner counts: entry ``3t+c`` of the
coordinate vector is the number of arcs cutting off corner ``c`` of
triangle ``t``.  Corner ``c`` arcs join side ``c`` to side ``c-1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .complex import Side, Triangulation, require_valid
from .curveword import Component, CurveWord, is_normal
from .errors import SurfaceError


@dataclass(frozen=True)
class MatchingSystem:
    """One equation ``x_i + x_j = x_k + x_l`` per gluing, in file order."""

    equations: tuple[tuple[int, int, int, int], ...]

    def __len__(self):
        return len(self.equations)

    def holds(self, x):
        return all(x[i] + x[j] == x[k] + x[l] for i, j, k, l in self.equations)

    def lines(self):
        return [f"x{i} + x{j} = x{k} + x{l}" for i, j, k, l in self.equations]


def matching_system(T: Triangulation) -> MatchingSystem:
    require_valid(T)
    eqs = []
    for a, b in T.gluings:
        eqs.append((
            3 * a.t + a.s, 3 * a.t + (a.s + 1) % 3,
            3 * b.t + b.s, 3 * b.t + (b.s + 1) % 3,
        ))
    return MatchingSystem(tuple(eqs))


def _check_length(T, x):
    if len(x) != 3 * T.n:
        raise SurfaceError(f"coordinate vector has length {len(x)}, expected {3 * T.n}")


def is_admissible(T: Triangulation, x) -> bool:
    """Non-negative and satisfying every matching equation."""
    _check_length(T, x)
    return all(v >= 0 for v in x) and matching_system(T).holds(x)


def require_admissible(T, x):
    _check_length(T, x)
    if any(v < 0 for v in x):
        raise SurfaceError("coordinates must be non-negative")
    if not matching_system(T).holds(x):
        raise SurfaceError("matching system violated")


def enumerate_admissible(T: Triangulation, max_coord: int) -> list[tuple[int, ...]]:
    """Every admissible vector with entries at most ``max_coord``, in
    lexicographic order (the zero vector first)."""
    system = matching_system(T)
    return kernels.enumerate_solutions(3 * T.n, list(system.equations), max_coord)


@dataclass(frozen=True)
class TracedComponent:
    coords: tuple[int, ...]
    word: CurveWord
    edges: frozenset[int]


@dataclass(frozen=True)
class TracedCurves:
    components: tuple[TracedComponent, ...]
    arc_component: tuple[int, ...]

    def __len__(self):
        return len(self.components)

    def combined_word(self) -> CurveWord:
        return CurveWord(tuple(c.word.components[0] for c in self.components))


def primary_sides(T: Triangulation):
    return [a.index for a, _ in T.gluings]


def trace(T: Triangulation, x) -> TracedCurves:
    """Realize admissible coordinates as a curve system and split it into
    components.

    Arcs nest towards their corner: along side ``(t, s)`` the first
    ``x[3t+s]`` points belong to corner-``s`` arcs, innermost first, and the
    last ``x[3t+s+1]`` to corner-``s+1`` arcs.  Point ``k`` on a side meets
    point ``m-1-k`` on the side glued to it.
    """
    require_admissible(T, x)
    x = list(x)
    words, arc_component = kernels.trace_curves(list(T.partner), primary_sides(T), x)
    coords = [[0] * len(x) for _ in words]
    arc = 0
    for corner, count in enumerate(x):
        for _ in range(count):
            coords[arc_component[arc]][corner] += 1
            arc += 1
    edge_of_side = T.edge_of_side
    comps = []
    for word, vec in zip(words, coords):
        sides = tuple(Side(i // 3, i % 3) for i in word)
        comps.append(TracedComponent(
            tuple(vec),
            CurveWord((Component(sides),)),
            frozenset(edge_of_side[i] for i in word),
        ))
    return TracedCurves(tuple(comps), tuple(arc_component))


def arc_corner(entry: int, exit: int) -> int:
    """Corner cut off by an arc entering through side ``entry`` and leaving
    through side ``exit`` of the same triangle."""
    return exit if exit == (entry + 1) % 3 else entry


def coordinates_of(T: Triangulation, w: CurveWord) -> tuple[int, ...]:
    if not is_normal(T, w):
        raise SurfaceError("word is not normal: normalize first")
    x = [0] * (3 * T.n)
    for comp in w.components:
        k = len(comp.crossings)
        for i, c in enumerate(comp.crossings):
            entry = T.glued_to(c)
            exit = comp.crossings[(i + 1) % k]
            x[3 * entry.t + arc_corner(entry.s, exit.s)] += 1
    return tuple(x)
