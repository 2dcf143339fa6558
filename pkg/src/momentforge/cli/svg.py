"""Static SVG figure of P+ with the Weyl walls, 2rho, the shifted cone 2rho + Xi and the barycenter."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path

from ..domain.polytope.models import GroupPolytope
from ..domain.quadrature.exact import barycenter
from ..domain.rootsys import linalg as la

SVG_NS = "http://www.w3.org/2000/svg"
SIZE = 480
PAD = 24


class _Frame:
    """Maps chamber coordinates to the pixel grid, y pointing up."""

    def __init__(self, points: list[tuple[float, float]]) -> None:
        xs = [p[0] for p in points] + [0.0]
        ys = [p[1] for p in points] + [0.0]
        self.x0, self.y1 = min(xs), max(ys)
        span = max(max(xs) - self.x0, self.y1 - min(ys), 1e-9)
        self.k = (SIZE - 2 * PAD) / span

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        return (PAD + (x - self.x0) * self.k, PAD + (self.y1 - y) * self.k)

    def pair(self, x: float, y: float) -> str:
        px, py = self(x, y)
        return f"{px:.3f},{py:.3f}"


def render_svg(p: GroupPolytope) -> ET.Element:
    rs = p.rs
    verts = [(float(v[0]), float(v[1])) for v in p.cell.vertices]
    two_rho = la.scale(2, rs.rho)
    rho2 = (float(two_rho[0]), float(two_rho[1]))
    bar = barycenter(p.cell, rs)
    frame = _Frame(verts + [rho2])
    reach = 4 * (SIZE / frame.k)

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": str(SIZE),
            "height": str(SIZE),
            "viewBox": f"0 0 {SIZE} {SIZE}",
        },
    )
    ET.SubElement(root, "title").text = f"P+ for {rs.name}: " + ", ".join(str(f) for f in p.chamber_facets)

    a0, a1 = (tuple(float(c) for c in alpha) for alpha in rs.simple_roots)
    cone = [rho2, (rho2[0] + reach * a0[0], rho2[1] + reach * a0[1]),
            (rho2[0] + reach * (a0[0] + a1[0]), rho2[1] + reach * (a0[1] + a1[1])),
            (rho2[0] + reach * a1[0], rho2[1] + reach * a1[1])]
    ET.SubElement(
        root,
        "path",
        {
            "d": "M " + " L ".join(frame.pair(*c) for c in cone) + " Z",
            "fill": "#9ecae1",
            "fill-opacity": "0.35",
            "stroke": "none",
            "class": "shifted-cone",
        },
    )

    ET.SubElement(
        root,
        "polygon",
        {
            "points": " ".join(frame.pair(*v) for v in verts),
            "fill": "#fdd49e",
            "fill-opacity": "0.8",
            "stroke": "#d94801",
            "stroke-width": "2",
        },
    )

    for ray in rs.chamber_rays():
        end = (reach * float(ray[0]), reach * float(ray[1]))
        x1, y1 = frame(0.0, 0.0)
        x2, y2 = frame(*end)
        ET.SubElement(
            root,
            "line",
            {
                "x1": f"{x1:.3f}", "y1": f"{y1:.3f}", "x2": f"{x2:.3f}", "y2": f"{y2:.3f}",
                "stroke": "#636363", "stroke-dasharray": "6 4", "class": "weyl-wall",
            },
        )

    for name, point, colour in (("two-rho", rho2, "#08519c"), ("barycenter", (float(bar[0]), float(bar[1])), "#a50f15")):
        cx, cy = frame(*point)
        ET.SubElement(
            root,
            "circle",
            {"cx": f"{cx:.3f}", "cy": f"{cy:.3f}", "r": "4", "fill": colour, "class": name},
        )
    return root


def write_svg(p: GroupPolytope, path: Path) -> Path:
    tree = ET.ElementTree(render_svg(p))
    path.parent.mkdir(parents=True, exist_ok=True)
    tree.write(path, encoding="utf-8", xml_declaration=True)
    return path
