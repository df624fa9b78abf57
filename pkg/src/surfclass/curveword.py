"""Curve systems in general position, written as crossing words.

A component is the cyclic list of sides through which the curve leaves
successive triangles.  A component with no crossings is a small closed
curve inside one triangle and carries that triangle's index instead.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex import Side, Triangulation, dual_adjacency
from .errors import ParseError, SurfaceError


@dataclass(frozen=True)
class Component:
    crossings: tuple[Side, ...] = ()
    triangle: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(Side(*c) for c in self.crossings))
        if not self.crossings and self.triangle is None:
            raise SurfaceError("an empty component needs its triangle")

    @property
    def is_empty(self):
        return not self.crossings


@dataclass(frozen=True)
class CurveWord:
    components: tuple[Component, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def from_sides(cls, *sequences):
        return cls(tuple(Component(tuple(seq)) for seq in sequences))

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class Step:
    kind: str  # "disk" (closed curve removed) or "isotopy" (returning pair removed)
    component: int
    position: int
    complexity: int


def check_chain(T: Triangulation, w: CurveWord):
    for comp in w.components:
        if comp.is_empty:
            if not 0 <= comp.triangle < T.n:
                raise SurfaceError(f"triangle {comp.triangle} out of range")
            continue
        for c in comp.crossings:
            if not (0 <= c.t < T.n and 0 <= c.s < 3):
                raise SurfaceError(f"crossing {c} out of range")
        k = len(comp.crossings)
        for i, c in enumerate(comp.crossings):
            nxt = comp.crossings[(i + 1) % k]
            if T.glued_to(c).t != nxt.t:
                raise SurfaceError(
                    f"crossing {c} enters triangle {T.glued_to(c).t} "
                    f"but the next crossing {nxt} leaves triangle {nxt.t}"
                )


def complexity(T: Triangulation, w: CurveWord) -> int:
    """Number of components plus number of edge crossings."""
    check_chain(T, w)
    return len(w.components) + sum(len(c.crossings) for c in w.components)


def _returning_positions(T, crossings):
    k = len(crossings)
    if k < 2:
        return []
    return [
        i for i in range(k)
        if crossings[(i + 1) % k] == T.glued_to(crossings[i])
    ]


def is_normal(T: Triangulation, w: CurveWord) -> bool:
    check_chain(T, w)
    return all(
        not comp.is_empty and not _returning_positions(T, comp.crossings)
        for comp in w.components
    )


def normalize(T: Triangulation, w: CurveWord, rng=None) -> tuple[CurveWord, tuple[Step, ...]]:
    """Remove closed curves inside triangles and returning pairs of crossings.

    Without ``rng`` the first returning pair (component order, then position,
    wrapping cyclically) is removed each round; with ``rng`` a uniformly
    random one is.  Each disk removal lowers the complexity by 1 and each
    returning-pair removal by 2.
    """
    d = complexity(T, w)
    comps = [[c.triangle, list(c.crossings)] for c in w.components]
    steps = []
    while True:
        kept = []
        for index, (tri, crossings) in enumerate(comps):
            if crossings:
                kept.append([tri, crossings])
            else:
                d -= 1
                steps.append(Step("disk", index, 0, d))
        comps = kept
        pairs = []
        for ci, (_, crossings) in enumerate(comps):
            for i in _returning_positions(T, crossings):
                pairs.append((ci, i))
                if rng is None:
                    break
            if pairs and rng is None:
                break
        if not pairs:
            break
        ci, i = pairs[rng.randrange(len(pairs))] if rng is not None else pairs[0]
        crossings = comps[ci][1]
        k = len(crossings)
        home = crossings[i].t
        j = (i + 1) % k
        for pos in sorted((i, j), reverse=True):
            del crossings[pos]
        if not crossings:
            comps[ci][0] = home
        d -= 2
        steps.append(Step("isotopy", ci, i, d))
    result = CurveWord(tuple(Component(tuple(c)) for _, c in comps))
    return result, tuple(steps)


def random_word(T: Triangulation, rng, max_length=12, max_components=3, empty_rate=0.15):
    """A random chain-compatible word built from closed random walks.

    Each component walks through random sides, then returns to its start
    along a shortest path in the dual graph.
    """
    adjacency = dual_adjacency(T)
    comps = []
    for _ in range(rng.randint(1, max_components)):
        start = rng.randrange(T.n)
        if rng.random() < empty_rate:
            comps.append(Component((), start))
            continue
        t = start
        crossings = []
        for _ in range(rng.randint(1, max_length)):
            side = Side(t, rng.randrange(3))
            crossings.append(side)
            t = T.glued_to(side).t
        crossings += _path_back(T, adjacency, t, start)
        comps.append(Component(tuple(crossings)))
    return CurveWord(tuple(comps))


def _path_back(T, adjacency, source, target):
    if source == target:
        return []
    prev = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for s, v in enumerate(adjacency[u]):
            if v not in prev:
                prev[v] = (u, s)
                queue.append(v)
    path = []
    v = target
    while prev[v] is not None:
        u, s = prev[v]
        path.append(Side(u, s))
        v = u
    return path[::-1]


# ---------------------------------------------------------------------------
# text syntax: "0.1,1.1;@0"


def parse_word(text: str) -> CurveWord:
    text = text.strip()
    if not text:
        return CurveWord()
    comps = []
    for part in text.split(";"):
        part = part.strip()
        if part.startswith("@"):
            try:
                comps.append(Component((), int(part[1:])))
            except ValueError:
                raise ParseError(f"bad empty component {part!r}") from None
            continue
        crossings = []
        for item in part.split(","):
            pieces = item.strip().split(".")
            try:
                t, s = (int(p) for p in pieces)
            except ValueError:
                raise ParseError(f"bad crossing {item.strip()!r}") from None
            crossings.append(Side(t, s))
        comps.append(Component(tuple(crossings)))
    return CurveWord(tuple(comps))


def format_word(w: CurveWord) -> str:
    return ";".join(
        f"@{c.triangle}" if c.is_empty else ",".join(str(x) for x in c.crossings)
        for c in w.components
    )
