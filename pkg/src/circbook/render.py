"""Circular chord drawings (SVG 1.1) and DOT export.

The vertex at layout index ``i`` sits at angle ``2*pi*i/n`` measured from the
positive x axis; SVG's y axis points down, so indices advance clockwise on
screen.
"""
from __future__ import annotations

import math
from typing import Dict, Tuple
from xml.etree import ElementTree as ET

from .book import PALETTE
from .document import EmbeddingDocument

SVG_NS = "http://www.w3.org/2000/svg"


def vertex_positions(doc: EmbeddingDocument, radius: float, center: float) -> Dict[int, Tuple[float, float]]:
    n = len(doc.order)
    out = {}
    for i, v in enumerate(doc.order):
        theta = 2 * math.pi * i / n
        out[v] = (center + radius * math.cos(theta), center + radius * math.sin(theta))
    return out


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def to_svg(doc: EmbeddingDocument, size: int = 480) -> str:
    center = size / 2
    radius = size * 0.42
    pos = vertex_positions(doc, radius, center)
    ET.register_namespace("", SVG_NS)
    root = ET.Element(f"{{{SVG_NS}}}svg", {
        "version": "1.1",
        "width": str(size),
        "height": str(size),
        "viewBox": f"0 0 {size} {size}",
    })
    title = ET.SubElement(root, f"{{{SVG_NS}}}title")
    title.text = f"{doc.name} in {doc.pages} pages [{doc.route}]"
    ET.SubElement(root, f"{{{SVG_NS}}}circle", {
        "cx": _fmt(center), "cy": _fmt(center), "r": _fmt(radius),
        "fill": "none", "stroke": "#cccccc",
    })
    chords = ET.SubElement(root, f"{{{SVG_NS}}}g", {"id": "chords", "stroke-width": "1.6"})
    for u, v, p in doc.edges:
        (x1, y1), (x2, y2) = pos[u], pos[v]
        ET.SubElement(chords, f"{{{SVG_NS}}}line", {
            "x1": _fmt(x1), "y1": _fmt(y1), "x2": _fmt(x2), "y2": _fmt(y2),
            "stroke": doc.palette[p] if p < len(doc.palette) else "black",
            "data-u": str(u), "data-v": str(v), "data-page": str(p),
        })
    dots = ET.SubElement(root, f"{{{SVG_NS}}}g", {"id": "vertices"})
    for i, v in enumerate(doc.order):
        x, y = pos[v]
        ET.SubElement(dots, f"{{{SVG_NS}}}circle", {
            "cx": _fmt(x), "cy": _fmt(y), "r": "3",
            "fill": "black", "data-vertex": str(v), "data-index": str(i),
        })
        theta = 2 * math.pi * i / len(doc.order)
        label = ET.SubElement(dots, f"{{{SVG_NS}}}text", {
            "x": _fmt(center + (radius + 14) * math.cos(theta)),
            "y": _fmt(center + (radius + 14) * math.sin(theta)),
            "font-size": "10", "text-anchor": "middle", "dominant-baseline": "middle",
        })
        label.text = str(v)
    return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"


def to_dot(doc: EmbeddingDocument, radius: float = 4.0) -> str:
    """Undirected DOT graph with pinned circular positions (``neato -n``)."""
    n = len(doc.order)
    lines = [f'graph "{doc.name}" {{',
             f'  label="{doc.route}, {doc.pages} pages";',
             "  node [shape=point];"]
    for i, v in enumerate(doc.order):
        theta = 2 * math.pi * i / n
        x, y = radius * math.cos(theta), -radius * math.sin(theta)
        lines.append(f'  {v} [xlabel="{v}", pos="{x:.3f},{y:.3f}!"];')
    for u, v, p in doc.edges:
        color = doc.palette[p] if p < len(doc.palette) else PALETTE[-1]
        lines.append(f"  {u} -- {v} [color={color}, page={p}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
