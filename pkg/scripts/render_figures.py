"""SVG figures: small double circles, Jarnik polygons, edge-vector fans.

    python scripts/render_figures.py --outdir figures
"""
import argparse
import os
from dataclasses import dataclass, field
from typing import List

from doublecircle.constructions import build_double_circle, double_circle_edges, jarnik_polygon, naive_symmetric
from doublecircle.render import svg_point_set, svg_vectors
from doublecircle.sequences import visible_vectors
from doublecircle.verification import grid_size, label_roles


@dataclass
class FigureConfig:
    outdir: str = "figures"
    small_n: List[int] = field(default_factory=lambda: [3, 4, 5, 6])
    fan_n: List[int] = field(default_factory=lambda: [256, 512, 1024])
    jarnik_q: List[int] = field(default_factory=lambda: [1, 2, 3])
    scale: float = 24.0


def write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    print(path)


def render(cfg: FigureConfig):
    os.makedirs(cfg.outdir, exist_ok=True)
    for n in cfg.small_n:
        P = label_roles(build_double_circle(n))
        write(os.path.join(cfg.outdir, f"double_circle_n{n}.svg"),
              svg_point_set(P, scale=cfg.scale, title=f"n={n} N={grid_size(P)}"))
    write(os.path.join(cfg.outdir, "naive_n4.svg"),
          svg_point_set(label_roles(naive_symmetric(4)), scale=cfg.scale, title="naive n=4"))
    for q in cfg.jarnik_q:
        P = jarnik_polygon(q)
        write(os.path.join(cfg.outdir, f"jarnik_q{q}.svg"), svg_point_set(P, scale=cfg.scale, title=f"Q={q}"))
    for n in cfg.fan_n:
        # fans get a smaller scale, the longest vectors grow like sqrt(n)
        s = cfg.scale * 8 / n**0.5
        write(os.path.join(cfg.outdir, f"visible_n{n}.svg"), svg_vectors(visible_vectors(n), scale=s, title=f"V n={n}"))
        write(os.path.join(cfg.outdir, f"edges_n{n}.svg"), svg_vectors(double_circle_edges(n), scale=s / 3, title=f"3W n={n}"))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default=FigureConfig.outdir)
    render(FigureConfig(outdir=ap.parse_args().outdir))
