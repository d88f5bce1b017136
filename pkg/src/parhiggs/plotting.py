"""Deterministic Newton-polygon figures.

The admissibility region of a Jordan type delta lives on the integer grid
(beta, alpha): the lambda^beta t^alpha coefficient of the characteristic
polynomial may be nonzero only when alpha >= min_alpha(beta).  The figure
shades exactly those cells, draws the boundary, and marks the integer
points of the even-slope edges that carry the square conditions.

Rendering is pinned (Agg backend, fixed hash salt, no date metadata) so a
fixed configuration always produces byte-identical SVG output.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .typedd import JordanType, NewtonPolygon

_SVG_SETTINGS = {"svg.hashsalt": "parhiggs", "svg.fonttype": "none"}


def admissible_cells(delta: JordanType, alpha_max: int) -> set:
    """Integer points (beta, alpha) allowed by the polygon, alpha <= alpha_max."""
    poly = NewtonPolygon(delta)
    cells = set()
    for beta in range(0, poly.two_n, 2):
        for alpha in range(poly.min_alpha(beta), alpha_max + 1):
            cells.add((beta, alpha))
    for alpha in range(0, alpha_max + 1):
        cells.add((poly.two_n, alpha))
    return cells


def render_newton_svg(delta: JordanType, path: str) -> dict:
    """Write the polygon figure to path; return a summary of what was drawn."""
    poly = NewtonPolygon(delta)
    alpha_max = delta.mu + 1
    cells = admissible_cells(delta, alpha_max)
    with plt.rc_context(_SVG_SETTINGS):
        fig, ax = plt.subplots(figsize=(6, 4))
        xs = [b for b, _ in cells]
        ys = [a for _, a in cells]
        ax.scatter(xs, ys, s=36, marker="s", color="#9ecae1", zorder=1)
        boundary_beta = list(range(0, poly.two_n + 1, 2))
        boundary_alpha = [
            poly.min_alpha(b) if b < poly.two_n else 0 for b in boundary_beta
        ]
        ax.plot(boundary_beta, boundary_alpha, color="#08519c", zorder=2)
        edge_pts = []
        for _, _, pts in poly.relevant_pairs():
            edge_pts.extend((beta, alpha) for alpha, beta in pts)
        if edge_pts:
            ax.scatter(
                [b for b, _ in edge_pts],
                [a for _, a in edge_pts],
                s=60,
                marker="o",
                color="#e6550d",
                zorder=3,
            )
        ax.set_xlabel("beta (power of lambda)")
        ax.set_ylabel("alpha (power of t)")
        ax.set_title(f"admissibility region, delta = {list(delta.delta)}")
        ax.set_xticks(boundary_beta)
        ax.set_yticks(range(alpha_max + 1))
        ax.invert_xaxis()
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
    return {
        "path": path,
        "shaded_cells": sorted(cells),
        "edge_points": sorted(edge_pts),
        "alpha_max": alpha_max,
    }
