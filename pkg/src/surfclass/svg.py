"""Static SVG drawing of a polygon description."""
from __future__ import annotations

import math

from .polygon import PolygonDescription, letter_name

SIZE = 400
RADIUS = 150


def _color(letter):
    hue = (letter * 137.508) % 360
    return f"hsl({hue:.1f},65%,42%)"


def _fmt(v):
    return f"{v:.2f}"


def render_svg(P: PolygonDescription, arcs=()) -> str:
    """Regular polygon with one side per word letter; paired sides share a
    color and every letter in ``arcs`` gets a chord between its two sides.

    Output depends only on the input, so it is byte-stable across runs.
    """
    word = P.word.letters
    count = len(word)
    c = SIZE / 2
    pts = [
        (c + RADIUS * math.sin(2 * math.pi * k / count),
         c - RADIUS * math.cos(2 * math.pi * k / count))
        for k in range(count)
    ]
    mids = []
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>',
    ]
    for k, (letter, exp) in enumerate(word):
        (x1, y1), (x2, y2) = pts[k], pts[(k + 1) % count]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        mids.append((mx, my))
        color = _color(letter)
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{color}" stroke-width="3"/>'
        )
        dx, dy = mx - c, my - c
        norm = math.hypot(dx, dy) or 1.0
        lx, ly = mx + 18 * dx / norm, my + 18 * dy / norm
        label = letter_name(letter) + ("" if exp > 0 else "⁻¹")
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" fill="{color}" font-family="sans-serif" '
            f'font-size="14" text-anchor="middle" dominant-baseline="middle">{label}</text>'
        )
    positions = P.word.positions()
    for letter in arcs:
        i, j = positions[letter]
        (x1, y1), (x2, y2) = mids[i], mids[j]
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
            f'stroke="{_color(letter)}" stroke-width="1.5" stroke-dasharray="6,4"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
