"""Deterministic SVG and ascii drawings of dissections.

Vertices sit on a circle inscribed in a fixed square viewport, stored
vertex 0 at the top (angle 90 degrees), counterclockwise.  Vertex labels
are the quiddity entries; excluded vertices print as bullets; capped
dissections get their face weights at the face centroids.  Identical
input gives identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dissections import Dissection, faces_of, paper_labels, quiddity_of

BULLET = "•"


@dataclass(frozen=True)
class RenderSpec:
    format: str = "svg"  # "svg" or "ascii"
    size: int = 512
    margin: int = 16


def _positions(vc: int, size: int, margin: int) -> list[tuple[float, float]]:
    radius = size / 2 - margin
    cx = cy = size / 2
    out = []
    for k in range(vc):
        angle = math.pi / 2 + 2 * math.pi * k / vc
        out.append((cx + radius * math.cos(angle), cy - radius * math.sin(angle)))
    return out


def _vertex_labels(d: Dissection) -> dict[int, str]:
    quiddity = quiddity_of(d)
    vc = d.vertex_count
    if d.kind == "plain":
        counted = list(range(vc))
    elif d.kind == "echancree":
        counted = list(range(1, vc))
    else:
        counted = list(range(1, vc - 1))
    labels = {v: BULLET for v in range(vc)}
    for entry, v in zip(quiddity, counted):
        labels[v] = str(entry)
    return labels


def _edges(d: Dissection) -> list[tuple[int, int]]:
    vc = d.vertex_count
    sides = [(i, (i + 1) % vc) for i in range(vc)]
    return sides + list(d.diagonals)


def _centroid(points: list[tuple[float, float]]) -> tuple[float, float]:
    return (
        sum(x for x, _ in points) / len(points),
        sum(y for _, y in points) / len(points),
    )


def _render_svg(d: Dissection, spec: RenderSpec) -> bytes:
    size, margin = spec.size, spec.margin
    pos = _positions(d.vertex_count, size, margin)
    labels = _vertex_labels(d)
    faces = faces_of(d)
    cx = cy = size / 2

    def fmt(v: float) -> str:
        return f"{v:.2f}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    outline = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in pos)
    lines.append(
        f'<polygon points="{outline}" fill="none" stroke="black" stroke-width="1.5"/>'
    )
    for i, j in d.diagonals:
        (x1, y1), (x2, y2) = pos[i], pos[j]
        lines.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            'stroke="black" stroke-width="1"/>'
        )
    for v, (x, y) in enumerate(pos):
        lines.append(f'<circle cx="{fmt(x)}" cy="{fmt(y)}" r="3" fill="black"/>')
        # label pulled slightly toward the center
        lx = x + (cx - x) * 0.10
        ly = y + (cy - y) * 0.10
        lines.append(
            f'<text x="{fmt(lx)}" y="{fmt(ly)}" font-family="sans-serif" '
            f'font-size="16" text-anchor="middle" dominant-baseline="middle">'
            f"{labels[v]}</text>"
        )
    if d.kind == "coiffee":
        wmap = dict(d.weights)
        for idx, face in enumerate(faces):
            fx, fy = _centroid([pos[v] for v in face])
            text = f"{wmap[idx]:+d}"
            lines.append(
                f'<text x="{fmt(fx)}" y="{fmt(fy)}" font-family="sans-serif" '
                f'font-size="13" text-anchor="middle" dominant-baseline="middle" '
                f'fill="gray">{text}</text>'
            )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


_ASCII_COLS = 65
_ASCII_ROWS = 33


def _render_ascii(d: Dissection, spec: RenderSpec) -> bytes:
    pos = _positions(d.vertex_count, spec.size, spec.margin)
    labels = _vertex_labels(d)
    faces = faces_of(d)
    scale_x = (_ASCII_COLS - 1) / spec.size
    scale_y = (_ASCII_ROWS - 1) / spec.size
    grid = [[" "] * _ASCII_COLS for _ in range(_ASCII_ROWS)]

    def cell(x: float, y: float) -> tuple[int, int]:
        return round(y * scale_y), round(x * scale_x)

    def put(row: int, col: int, text: str) -> None:
        for k, ch in enumerate(text):
            if 0 <= row < _ASCII_ROWS and 0 <= col + k < _ASCII_COLS:
                grid[row][col + k] = ch

    for i, j in _edges(d):
        (x1, y1), (x2, y2) = pos[i], pos[j]
        steps = 2 * max(_ASCII_COLS, _ASCII_ROWS)
        for t in range(steps + 1):
            x = x1 + (x2 - x1) * t / steps
            y = y1 + (y2 - y1) * t / steps
            r, c = cell(x, y)
            if grid[r][c] == " ":
                grid[r][c] = "."
    if d.kind == "coiffee":
        wmap = dict(d.weights)
        for idx, face in enumerate(faces):
            fx, fy = _centroid([pos[v] for v in face])
            r, c = cell(fx, fy)
            put(r, c, f"{wmap[idx]:+d}")
    for v, (x, y) in enumerate(pos):
        r, c = cell(x, y)
        put(r, c, labels[v])
    text = "\n".join("".join(row).rstrip() for row in grid) + "\n"
    return text.encode("utf-8")


def render(d: Dissection, spec: RenderSpec = RenderSpec()) -> bytes:
    """Draw a valid dissection; same dissection and spec give identical bytes."""
    if spec.format == "svg":
        return _render_svg(d, spec)
    if spec.format == "ascii":
        return _render_ascii(d, spec)
    raise ValueError(f"unknown render format {spec.format!r}")
