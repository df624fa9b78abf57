"""Complement pieces of a normal curve, cutting, capping, parallel curves.

Inside a triangle with corner counts ``(a0, a1, a2)`` the curve splits the
triangle into one central piece and, at each corner ``c``, a stack of
``a_c`` pieces: the innermost is a triangle at the corner, the others are
quadrilateral bands between consecutive parallel arcs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import kernels
from .complex import CellComplex, FaceSide, Triangulation, triangulate
from .errors import SurfaceError
from .normal import TracedCurves, require_admissible, trace

CENTRAL = "Central"
CORNER = "CornerInner"
BAND = "Band"


@dataclass(frozen=True)
class Piece:
    triangle: int
    kind: str
    corner: int | None = None
    depth: int | None = None

    @property
    def exceptional(self):
        return self.kind != BAND


@dataclass(frozen=True)
class ComplementComponent:
    pieces: tuple[int, ...]
    kinds: dict
    curves: frozenset[int]

    @property
    def all_bands(self):
        return set(self.kinds) == {BAND}


@dataclass(frozen=True)
class ComplementAnalysis:
    pieces: tuple[Piece, ...]
    component_of: tuple[int, ...]
    components: tuple[ComplementComponent, ...]
    curves: TracedCurves

    @property
    def exceptional_count(self):
        return sum(p.exceptional for p in self.pieces)


def _pieces(x):
    pieces = []
    for t in range(len(x) // 3):
        pieces.append(Piece(t, CENTRAL))
        for c in range(3):
            for depth in range(x[3 * t + c]):
                pieces.append(Piece(t, CORNER if depth == 0 else BAND, c, depth))
    return pieces


def _arc_base(x):
    base = [0]
    for v in x:
        base.append(base[-1] + v)
    return base


def _bounding_arcs(piece, x, base):
    """Arcs (corner index, depth) on the boundary of a piece."""
    t = piece.triangle
    if piece.kind == CENTRAL:
        return [(3 * t + c, x[3 * t + c] - 1) for c in range(3) if x[3 * t + c]]
    corner = 3 * t + piece.corner
    arcs = [(corner, piece.depth)]
    if piece.depth:
        arcs.append((corner, piece.depth - 1))
    return arcs


def complement(T: Triangulation, x) -> ComplementAnalysis:
    require_admissible(T, x)
    x = list(x)
    curves = trace(T, x)
    pieces = _pieces(x)
    labels = kernels.complement_labels(list(T.partner), x)
    base = _arc_base(x)
    members = {}
    for p, label in enumerate(labels):
        members.setdefault(label, []).append(p)
    comps = []
    for label in range(len(members)):
        idx = members[label]
        kinds = Counter(pieces[p].kind for p in idx)
        bounding = set()
        for p in idx:
            for corner, depth in _bounding_arcs(pieces[p], x, base):
                bounding.add(curves.arc_component[base[corner] + depth])
        comps.append(ComplementComponent(tuple(idx), dict(kinds), frozenset(bounding)))
    return ComplementAnalysis(tuple(pieces), tuple(labels), tuple(comps), curves)


def exceptional_count(x) -> int:
    """Non-band pieces: one central piece per triangle plus one corner
    piece per occupied corner."""
    n = len(x) // 3
    return n + sum(1 for v in x if v)


def _single_component(T, x):
    analysis = complement(T, x)
    if len(analysis.curves) != 1:
        raise SurfaceError("single component required")
    return analysis


def is_separating(T: Triangulation, x) -> bool:
    return len(_single_component(T, x).components) == 2


@dataclass(frozen=True)
class ParallelPair:
    curves: tuple[int, int]
    component: int
    pieces: tuple[int, ...]


def detect_parallel(T: Triangulation, x) -> ParallelPair | None:
    """First complement component made only of bands, with the curve
    components on its two boundary circles."""
    analysis = complement(T, x)
    for k, comp in enumerate(analysis.components):
        if comp.all_bands:
            curves = sorted(comp.curves)
            pair = (curves[0], curves[-1])
            return ParallelPair(pair, k, comp.pieces)
    return None


def cut(T: Triangulation, x) -> CellComplex:
    """Cut the surface along the curve; arcs become boundary sides.

    Faces are the complement pieces in piece order.  Face sides run
    counterclockwise; boundary circles are labelled ``curve k`` after the
    curve component that produced them.
    """
    require_admissible(T, x)
    x = list(x)
    curves = trace(T, x)
    base = _arc_base(x)
    pieces = _pieces(x)
    m = [x[i] + x[i - i % 3 + (i % 3 + 1) % 3] for i in range(len(x))]

    face_of = {}
    for f, p in enumerate(pieces):
        face_of[(p.triangle, p.corner, p.depth)] = f

    faces = []
    segment_side = {}
    arc_label = {}

    def seg(f, i, t, s, j):
        segment_side[(3 * t + s, j)] = FaceSide(f, i)

    for f, p in enumerate(pieces):
        t = p.triangle
        if p.kind == CENTRAL:
            sides = 0
            for s in range(3):
                seg(f, sides, t, s, x[3 * t + s])
                sides += 1
                c = (s + 1) % 3
                if x[3 * t + c]:
                    arc_label[FaceSide(f, sides)] = curves.arc_component[base[3 * t + c] + x[3 * t + c] - 1]
                    sides += 1
            faces.append(sides)
            continue
        c, j = p.corner, p.depth
        prev = (c + 2) % 3
        comp = curves.arc_component
        seg(f, 0, t, c, j)
        arc_label[FaceSide(f, 1)] = comp[base[3 * t + c] + j]
        seg(f, 2, t, prev, m[3 * t + prev] - j)
        if j == 0:
            faces.append(3)
        else:
            arc_label[FaceSide(f, 3)] = comp[base[3 * t + c] + j - 1]
            faces.append(4)

    gluings = []
    for a, b in T.gluings:
        ia, ib = a.index, b.index
        for j in range(m[ia] + 1):
            gluings.append((segment_side[(ia, j)], segment_side[(ib, m[ia] - j)]))

    return CellComplex.build(faces, gluings, lambda side: f"curve {arc_label[side]}")


def cap(C: CellComplex) -> CellComplex:
    """Glue a coned disk (one triangle per side) onto every boundary circle."""
    faces = list(C.faces)
    gluings = list(C.gluings)
    for circle in C.boundary:
        k = len(circle.sides)
        first = len(faces)
        faces += [3] * k
        for j, side in enumerate(circle.sides):
            gluings.append((side, FaceSide(first + j, 0)))
        for j in range(k):
            gluings.append((FaceSide(first + j, 2), FaceSide(first + (j + 1) % k, 1)))
    return CellComplex(tuple(faces), tuple(gluings), ())


def close_up(C: CellComplex) -> list[Triangulation]:
    """Cap every boundary circle and triangulate each connected component."""
    return [triangulate(part) for part in cap(C).components()]


def surgery(T: Triangulation, x) -> list[Triangulation]:
    return close_up(cut(T, x))
