"""Singular triangulations, polygonal cell complexes and the ``.tri`` format.

Indexing conventions used throughout the package:

* side ``s`` of triangle ``t`` runs from corner ``s`` to corner ``(s+1) % 3``;
* every gluing ``(t, s) ~ (t', s')`` reverses orientation, identifying
  corner ``(t, s)`` with ``(t', s'+1)`` and corner ``(t, s+1)`` with ``(t', s')``.

Only orientable surfaces can be written down this way.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .dsu import DisjointSet
from .errors import ParseError, SurfaceError, ValidationError


class Side(NamedTuple):
    t: int
    s: int

    def __str__(self):
        return f"{self.t}.{self.s}"

    @property
    def index(self):
        return 3 * self.t + self.s


def corner_pairs(a, b):
    """The two corner identifications induced by gluing side ``a`` to side ``b``."""
    return (
        ((a.t, a.s), (b.t, (b.s + 1) % 3)),
        ((a.t, (a.s + 1) % 3), (b.t, b.s)),
    )


@dataclass(frozen=True)
class Triangulation:
    triangle_count: int
    gluings: tuple[tuple[Side, Side], ...]

    def __post_init__(self):
        glued = tuple((Side(*a), Side(*b)) for a, b in self.gluings)
        object.__setattr__(self, "gluings", glued)

    @property
    def n(self):
        return self.triangle_count

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)

    @cached_property
    def partner(self) -> tuple[int, ...]:
        """``partner[3t+s]`` is the flat index of the side glued to ``(t, s)``."""
        require_valid(self)
        out = [-1] * (3 * self.n)
        for a, b in self.gluings:
            out[a.index] = b.index
            out[b.index] = a.index
        return tuple(out)

    @cached_property
    def edge_of_side(self) -> tuple[int, ...]:
        """Gluing (edge class) index of every side, in file order."""
        require_valid(self)
        out = [-1] * (3 * self.n)
        for e, (a, b) in enumerate(self.gluings):
            out[a.index] = e
            out[b.index] = e
        return tuple(out)

    def glued_to(self, side: Side) -> Side:
        p = self.partner[3 * side[0] + side[1]]
        return Side(p // 3, p % 3)


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...] = ()

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        return "valid" if self.ok else "; ".join(self.violations)


def validate(T: Triangulation) -> ValidationReport:
    n = T.triangle_count
    problems = []
    if n < 1:
        return ValidationReport(("triangle count must be positive",))
    seen = {}
    for a, b in T.gluings:
        bad = [x for x in (a, b) if not (0 <= x.t < n and 0 <= x.s < 3)]
        for x in bad:
            problems.append(f"side {x} out of range")
        if bad:
            continue
        if a == b:
            problems.append(f"side {a} glued to itself")
            continue
        for x in (a, b):
            if x in seen:
                problems.append(f"side {x} glued more than once")
            seen[x] = True
    for t in range(n):
        for s in range(3):
            if Side(t, s) not in seen:
                problems.append(f"unpaired side {t}.{s}")
    if not problems and _dual_component_count(n, T.gluings) > 1:
        problems.append("dual graph disconnected")
    return ValidationReport(tuple(problems))


def _dual_component_count(n, gluings):
    dsu = DisjointSet(n)
    for a, b in gluings:
        dsu.union(a.t, b.t)
    return len({dsu.find(t) for t in range(n)})


def require_valid(T: Triangulation):
    report = T.report
    if not report.ok:
        raise ValidationError(str(report))


@dataclass(frozen=True)
class VertexClasses:
    labels: tuple[int, ...]
    count: int

    def of(self, t, c):
        return self.labels[3 * t + c]


def vertex_classes(T: Triangulation) -> VertexClasses:
    require_valid(T)
    dsu = DisjointSet(3 * T.n)
    for a, b in T.gluings:
        for (t1, c1), (t2, c2) in corner_pairs(a, b):
            dsu.union(3 * t1 + c1, 3 * t2 + c2)
    labels = dsu.labels()
    return VertexClasses(tuple(labels), max(labels) + 1)


def relabel(T: Triangulation, perm) -> Triangulation:
    """Rename triangle ``t`` to ``perm[t]``; gluing order is preserved."""
    if sorted(perm) != list(range(T.n)):
        raise SurfaceError("relabeling must be a permutation of the triangles")
    return Triangulation(
        T.n,
        tuple((Side(perm[a.t], a.s), Side(perm[b.t], b.s)) for a, b in T.gluings),
    )


def dual_adjacency(T: Triangulation):
    """Neighbors of each triangle, listed in side order 0, 1, 2."""
    require_valid(T)
    return [[T.partner[3 * t + s] // 3 for s in range(3)] for t in range(T.n)]


# ---------------------------------------------------------------------------
# Cell complexes


class FaceSide(NamedTuple):
    f: int
    i: int


@dataclass(frozen=True)
class BoundaryCircle:
    sides: tuple[FaceSide, ...]
    label: str = ""


@dataclass(frozen=True)
class CellComplex:
    """Polygons with some sides glued in pairs; the rest form boundary circles.

    Face ``f`` has ``faces[f]`` sides; side ``i`` runs from the face's vertex
    ``i`` to vertex ``i+1``.  Gluings reverse orientation just as for
    triangulations.
    """

    faces: tuple[int, ...]
    gluings: tuple[tuple[FaceSide, FaceSide], ...]
    boundary: tuple[BoundaryCircle, ...] = ()
    _partner: dict = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        gluings = tuple((FaceSide(*a), FaceSide(*b)) for a, b in self.gluings)
        object.__setattr__(self, "faces", tuple(self.faces))
        object.__setattr__(self, "gluings", gluings)
        partner = {}
        for a, b in gluings:
            for x in (a, b):
                if not (0 <= x.f < len(self.faces) and 0 <= x.i < self.faces[x.f]):
                    raise SurfaceError(f"face side {x} out of range")
                if x in partner:
                    raise SurfaceError(f"face side {x} glued more than once")
            if a == b:
                raise SurfaceError(f"face side {a} glued to itself")
            partner[a] = b
            partner[b] = a
        object.__setattr__(self, "_partner", partner)

    @classmethod
    def build(cls, faces, gluings, label_of=None):
        """Create a complex and chain its unglued sides into boundary circles.

        ``label_of`` maps a face side to its provenance label; a circle takes
        the label of its first side.
        """
        C = cls(tuple(faces), tuple(gluings))
        circles = tuple(
            BoundaryCircle(c, label_of(c[0]) if label_of else "")
            for c in C._chain_boundary()
        )
        return cls(C.faces, C.gluings, circles)

    def partner_of(self, side):
        return self._partner.get(side)

    def unglued_sides(self):
        return [
            FaceSide(f, i)
            for f, k in enumerate(self.faces)
            for i in range(k)
            if FaceSide(f, i) not in self._partner
        ]

    def next_boundary_side(self, side):
        """The unglued side that starts where ``side`` ends, found by rotating
        around the shared vertex."""
        f, i = side
        cur = FaceSide(f, (i + 1) % self.faces[f])
        for _ in range(2 * sum(self.faces) + 1):
            other = self._partner.get(cur)
            if other is None:
                return cur
            cur = FaceSide(other.f, (other.i + 1) % self.faces[other.f])
        raise SurfaceError("boundary rotation did not close up")

    def _chain_boundary(self):
        todo = self.unglued_sides()
        remaining = set(todo)
        circles = []
        for start in todo:
            if start not in remaining:
                continue
            circle = [start]
            remaining.discard(start)
            cur = self.next_boundary_side(start)
            while cur != start:
                if cur not in remaining:
                    raise SurfaceError("boundary sides do not form disjoint circles")
                circle.append(cur)
                remaining.discard(cur)
                cur = self.next_boundary_side(cur)
            circles.append(tuple(circle))
        return circles

    def check(self):
        """Raise if the stored boundary circles disagree with the gluings."""
        stored = sorted(s for c in self.boundary for s in c.sides)
        if stored != sorted(self.unglued_sides()):
            raise SurfaceError("boundary circles do not cover the unglued sides")
        for c in self.boundary:
            for k, side in enumerate(c.sides):
                if self.next_boundary_side(side) != c.sides[(k + 1) % len(c.sides)]:
                    raise SurfaceError("boundary circle sides do not chain end to end")

    def components(self) -> list[CellComplex]:
        """Split into connected components, faces kept in their original order."""
        dsu = DisjointSet(len(self.faces))
        for a, b in self.gluings:
            dsu.union(a.f, b.f)
        labels = dsu.labels()
        count = max(labels, default=-1) + 1
        if count <= 1:
            return [self] if self.faces else []
        new_index = {}
        faces = [[] for _ in range(count)]
        for f, k in enumerate(self.faces):
            new_index[f] = len(faces[labels[f]])
            faces[labels[f]].append(k)

        def move(x):
            return FaceSide(new_index[x.f], x.i)

        gluings = [[] for _ in range(count)]
        for a, b in self.gluings:
            gluings[labels[a.f]].append((move(a), move(b)))
        circles = [[] for _ in range(count)]
        for c in self.boundary:
            circles[labels[c.sides[0].f]].append(
                BoundaryCircle(tuple(move(x) for x in c.sides), c.label)
            )
        return [
            CellComplex(tuple(faces[k]), tuple(gluings[k]), tuple(circles[k]))
            for k in range(count)
        ]


def from_triangulation(T: Triangulation) -> CellComplex:
    require_valid(T)
    return CellComplex(
        (3,) * T.n,
        tuple((FaceSide(*a), FaceSide(*b)) for a, b in T.gluings),
    )


def triangulate(C: CellComplex) -> Triangulation:
    """Turn a closed connected complex into a singular triangulation.

    Triangles are kept; any other ``k``-gon (including monogons and bigons)
    is coned from a new interior vertex into ``k`` triangles.
    """
    if C.boundary or C.unglued_sides():
        raise SurfaceError("open complex: boundary must be capped first")
    if len(C.components()) != 1:
        raise SurfaceError("complex is disconnected")
    first = []
    count = 0
    for k in C.faces:
        first.append(count)
        count += 1 if k == 3 else k

    def side_of(x):
        if C.faces[x.f] == 3:
            return Side(first[x.f], x.i)
        return Side(first[x.f] + x.i, 0)

    gluings = [(side_of(a), side_of(b)) for a, b in C.gluings]
    for f, k in enumerate(C.faces):
        if k == 3:
            continue
        base = first[f]
        # fan triangle j has corners (v_j, v_j+1, apex)
        for j in range(k):
            gluings.append((Side(base + j, 1), Side(base + (j + 1) % k, 2)))
    T = Triangulation(count, tuple(gluings))
    require_valid(T)
    return T


# ---------------------------------------------------------------------------
# .tri text format


def parse_tri(text: str) -> Triangulation:
    header = []
    gluings = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if len(header) == 0:
            if words != ["tri", "1"]:
                raise ParseError("expected version line 'tri 1'", lineno)
            header.append(1)
        elif len(header) == 1:
            if len(words) != 2 or words[0] != "triangles":
                raise ParseError("expected 'triangles <n>'", lineno)
            header.append(_parse_int(words[1], lineno))
        else:
            if len(words) != 3 or words[0] != "glue":
                raise ParseError("expected 'glue <t>.<s> <t>.<s>'", lineno)
            gluings.append((_parse_side(words[1], lineno), _parse_side(words[2], lineno)))
    if len(header) < 2:
        raise ParseError("missing header")
    return Triangulation(header[1], tuple(gluings))


def _parse_int(word, lineno):
    try:
        value = int(word)
    except ValueError:
        raise ParseError(f"not an integer: {word!r}", lineno) from None
    if value < 0:
        raise ParseError(f"negative value: {word!r}", lineno)
    return value


def _parse_side(word, lineno):
    parts = word.split(".")
    if len(parts) != 2:
        raise ParseError(f"bad side {word!r}", lineno)
    return Side(_parse_int(parts[0], lineno), _parse_int(parts[1], lineno))


def format_tri(T: Triangulation) -> str:
    lines = ["tri 1", f"triangles {T.triangle_count}"]
    lines += [f"glue {a} {b}" for a, b in T.gluings]
    return "\n".join(lines) + "\n"


def read_tri(path) -> Triangulation:
    with open(path, encoding="utf-8") as fh:
        return parse_tri(fh.read())


def write_tri(T: Triangulation, path):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_tri(T))

