"""Genus classification by repeated surgery along non-separating curves.

Each round unfolds the surface into a polygon and reduces its boundary
word.  An empty reduced word means the surface is a sphere.  Otherwise an
interleaved pair of letters yields a curve meeting its partner curve once;
that curve does not separate, and cutting along it and capping the two new
boundary circles removes one handle.  The genus is the number of rounds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .complex import Triangulation, require_valid
from .curveword import normalize
from .errors import InvariantViolation, SurfaceError
from .normal import coordinates_of, enumerate_admissible, trace
from .polygon import Word, build_polygon, interleaved_pairs, letter_name, reduce_word, route_arc
from .surgery import is_separating, surgery


@dataclass(frozen=True)
class SurgeryRecord:
    surface: Triangulation  # the surface the surgery was applied to
    reduced_word: Word
    letter: str
    coords: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationResult:
    genus: int
    records: tuple[SurgeryRecord, ...]
    final_word: Word
    final_surface: Triangulation


def _iteration_bound(T):
    # Engineering guard only: the oracle is never consulted for the answer.
    from .oracle import oracle_genus

    return oracle_genus(T)


def genus(T: Triangulation, seed: int | None = None) -> ClassificationResult:
    """Classify ``T``.  With ``seed`` the unfolding root, the interleaved pair
    and the routed letter are chosen at random; the genus must not change."""
    require_valid(T)
    rng = random.Random(seed) if seed is not None else None
    bound = _iteration_bound(T)
    records = []
    while True:
        root = rng.randrange(T.n) if rng else 0
        P = build_polygon(T, root)
        reduced, _ = reduce_word(P.word)
        if not len(reduced):
            return ClassificationResult(len(records), tuple(records), reduced, T)
        pairs = interleaved_pairs(reduced)
        if not pairs:
            raise InvariantViolation(f"reduced word {reduced} has no interleaved pair")
        pair = rng.choice(pairs) if rng else pairs[0]
        letter = rng.choice(pair) if rng else pair[0]
        x = curve_for_letter(P, letter)
        records.append(SurgeryRecord(T, reduced, letter_name(letter), x))
        parts = surgery(T, x)
        if len(parts) != 1:
            raise InvariantViolation("surgery along a non-separating curve split the surface")
        T = parts[0]
        if len(records) > bound:
            raise InvariantViolation("classification exceeded its iteration bound")


def curve_for_letter(P, letter) -> tuple[int, ...]:
    """Normal coordinates of the routed curve for ``letter``, checked to be
    connected and non-separating."""
    T = P.surface
    word, _ = normalize(T, route_arc(P, letter))
    x = coordinates_of(T, word)
    if len(trace(T, x)) != 1:
        raise InvariantViolation(f"routed curve for letter {letter_name(letter)} is not connected")
    if is_separating(T, x):
        raise InvariantViolation(f"routed curve for letter {letter_name(letter)} separates")
    return x


def is_prime(T: Triangulation) -> bool:
    return genus(T).genus <= 1


def decompose(T: Triangulation) -> list[str]:
    g = genus(T).genus
    return ["S2"] if g == 0 else ["T2"] * g


def format_decomposition(factors) -> str:
    return " # ".join(factors)


def bounds_disk(T: Triangulation, x) -> bool:
    """Whether the connected normal curve ``x`` bounds a disk."""
    if len(trace(T, x)) != 1:
        raise SurfaceError("single component required")
    if not is_separating(T, x):
        return False
    return any(genus(side).genus == 0 for side in surgery(T, x))


def find_reducing_curve(T: Triangulation, max_coord: int):
    """Bounded search for an essential separating connected normal curve.

    Only for testing primality claims; classification never searches.
    """
    for x in enumerate_admissible(T, max_coord):
        if not any(x) or len(trace(T, x)) != 1:
            continue
        if is_separating(T, x) and not bounds_disk(T, x):
            return x
    return None


# ---------------------------------------------------------------------------
# two-triangle torus


def torus_solution(m: int, l: int, k: int) -> tuple[int, ...]:
    """Coordinates on ``canonical_torus`` with ``m`` arcs at both corners 0,
    ``l`` at both corners 1 and ``k`` at both corners 2."""
    if min(m, l, k) < 0:
        raise SurfaceError("torus coordinates must be non-negative")
    return (m, l, k, m, l, k)


@dataclass(frozen=True)
class TorusSlope:
    p: int
    q: int

    def __str__(self):
        return f"{self.p}mu {'+' if self.q >= 0 else '-'} {abs(self.q)}lambda"


def torus_slope(m: int, l: int, k: int) -> TorusSlope:
    """Meridian/longitude class of the torus curve ``(m, l, k)``.

    The meridian is ``(1, 0, 0)``, the longitude ``(0, 1, 0)`` and
    ``(0, 0, 1)`` is meridian minus longitude.
    """
    if min(m, l, k) < 0:
        raise SurfaceError("torus coordinates must be non-negative")
    if m and l and k:
        raise SurfaceError("not slope-reduced: all three coordinates positive")
    if k == 0:
        return TorusSlope(m, l)
    if l == 0:
        return TorusSlope(m + k, -k)
    return TorusSlope(k, l - k)


def slope_is_connected(slope: TorusSlope) -> bool:
    return gcd(slope.p, slope.q) == 1
