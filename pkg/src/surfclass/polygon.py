"""Polygon descriptions: unfold the triangles along a dual spanning tree.

The unfolded disk has ``n + 2`` boundary sides, identified in pairs.  Its
boundary word is reduced by cancelling adjacent ``x x^-1`` pairs (each one
collapses a disk cut off near a vertex); a nonempty reduced word always has
two interleaved letters, and the arc joining the two sides of such a letter
closes up to a non-separating curve.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex import Side, Triangulation, require_valid
from .curveword import Component, CurveWord
from .errors import SurfaceError


def letter_name(k: int) -> str:
    name = chr(ord("a") + k % 26)
    return name if k < 26 else f"{name}{k // 26}"


@dataclass(frozen=True)
class Word:
    """Cyclic word of ``(letter, exponent)`` pairs."""

    letters: tuple[tuple[int, int], ...] = ()

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(
            letter_name(x) if e > 0 else f"{letter_name(x)}^-1" for x, e in self.letters
        )

    def check(self):
        seen = {}
        for x, e in self.letters:
            if e not in (1, -1):
                raise SurfaceError(f"bad exponent {e}")
            seen.setdefault(x, []).append(e)
        for x, exps in seen.items():
            if sorted(exps) != [-1, 1]:
                raise SurfaceError(
                    f"letter {letter_name(x)} must occur once with each exponent"
                )

    def positions(self):
        out = {}
        for i, (x, _) in enumerate(self.letters):
            out.setdefault(x, []).append(i)
        return out


def parse_letters(text: str) -> Word:
    """Inverse of ``str(Word)`` for words using single-letter names."""
    letters = []
    for token in text.split():
        name, _, power = token.partition("^")
        if len(name) != 1 or not name.isalpha():
            raise SurfaceError(f"bad letter {token!r}")
        letters.append((ord(name) - ord("a"), -1 if power == "-1" else 1))
    return Word(tuple(letters))


@dataclass(frozen=True)
class PolygonDescription:
    surface: Triangulation
    order: tuple[int, ...]  # triangles in unfolding order
    parent_side: dict  # triangle -> side of its tree parent leading to it
    tree_edges: frozenset[int]
    word: Word
    sides: tuple[Side, ...]  # concrete side behind each word position
    letter_edge: tuple[int, ...]  # gluing index of each letter

    @property
    def root(self):
        return self.order[0]


def build_polygon(T: Triangulation, root: int = 0) -> PolygonDescription:
    require_valid(T)
    if not 0 <= root < T.n:
        raise SurfaceError(f"root triangle {root} out of range")
    parent_side = {root: None}
    tree = set()
    order = [root]
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for s in range(3):
            other = T.glued_to(Side(t, s))
            if other.t not in parent_side:
                parent_side[other.t] = Side(t, s)
                tree.add(T.edge_of_side[3 * t + s])
                order.append(other.t)
                queue.append(other.t)

    def is_tree(side):
        return T.edge_of_side[side.index] in tree

    start = next(Side(t, s) for t in order for s in range(3) if not is_tree(Side(t, s)))
    walk = []
    cur = start
    while True:
        walk.append(cur)
        nxt = Side(cur.t, (cur.s + 1) % 3)
        while is_tree(nxt):
            other = T.glued_to(nxt)
            nxt = Side(other.t, (other.s + 1) % 3)
        cur = nxt
        if cur == start:
            break

    letter_of = {}
    letters = []
    for side in walk:
        e = T.edge_of_side[side.index]
        if e in letter_of:
            letters.append((letter_of[e], -1))
        else:
            letter_of[e] = len(letter_of)
            letters.append((letter_of[e], 1))
    letter_edge = [0] * len(letter_of)
    for e, k in letter_of.items():
        letter_edge[k] = e
    word = Word(tuple(letters))
    if len(word) != T.n + 2:
        raise SurfaceError("unfolded polygon has the wrong number of sides")
    return PolygonDescription(
        T,
        tuple(order), parent_side, frozenset(tree), word, tuple(walk), tuple(letter_edge)
    )


def _cancels(a, b):
    return a[0] == b[0] and a[1] == -b[1]


def reduce_word(w: Word) -> tuple[Word, int]:
    """Cancel adjacent inverse pairs, always the leftmost one first (the
    pair formed by the last and first letters comes last in that order)."""
    w.check()
    letters = list(w.letters)
    count = 0
    i = 0
    while len(letters) >= 2 and i < len(letters):
        j = (i + 1) % len(letters)
        if not _cancels(letters[i], letters[j]):
            i += 1
            continue
        count += 1
        if j == 0:
            del letters[i]
            del letters[0]
            i = len(letters) - 1
        else:
            del letters[j]
            del letters[i]
            i = max(i - 1, 0)
    return Word(tuple(letters)), count


def is_reduced(w: Word) -> bool:
    k = len(w.letters)
    return not any(_cancels(w.letters[i], w.letters[(i + 1) % k]) for i in range(k))


def interleaved_pairs(w: Word) -> list[tuple[int, int]]:
    """All letter pairs ``(x, y)`` laid out as ``x .. y .. x^-1 .. y^-1``,
    ordered by the positions of their first occurrences."""
    pos = w.positions()
    firsts = sorted((p[0], x) for x, p in pos.items())
    pairs = []
    for i, x in firsts:
        k = pos[x][1]
        for j, y in firsts:
            if i < j < k < pos[y][1]:
                pairs.append((x, y))
    return pairs


def find_interleaved(w: Word) -> tuple[int, int] | None:
    w.check()
    if not is_reduced(w):
        raise SurfaceError("word is not reduced")
    pairs = interleaved_pairs(w)
    return pairs[0] if pairs else None


def _ancestors(P, t):
    chain = [t]
    while P.parent_side[t] is not None:
        t = P.parent_side[t].t
        chain.append(t)
    return chain


def route_arc(P: PolygonDescription, letter: int) -> CurveWord:
    """Closed curve through the disk from one side labelled ``letter`` to the
    other, following the tree path between their triangles."""
    pos = P.word.positions().get(letter)
    if pos is None:
        raise SurfaceError(f"letter {letter} not in word")
    T = P.surface
    first, second = P.sides[pos[0]], P.sides[pos[1]]
    up = _ancestors(P, first.t)
    down = _ancestors(P, second.t)
    common = set(down)
    lca = next(t for t in up if t in common)
    crossings = []
    for t in up[: up.index(lca)]:
        crossings.append(T.glued_to(P.parent_side[t]))
    for t in reversed(down[: down.index(lca)]):
        crossings.append(P.parent_side[t])
    crossings.append(second)
    return CurveWord((Component(tuple(crossings)),))
