"""Colored planar patches of Z[xi_n] via cut-and-project, written as SVG.

The physical image of a coefficient vector is ``sum v_j exp(2 pi i j/n)``;
the internal image stacks the conjugate embeddings ``sigma_k`` for one k
per conjugate pair, k coprime to n and k not in {1, n-1}.  A point is kept
when its internal image lies in a ball (the window) and its physical image
lies in a disc (the patch).  Colors are exact coset indices.
"""
from __future__ import annotations

import colorsys
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .colorsym import ColoringModel
from .cyclo import ModulusContext

__all__ = [
    "DEFAULT_PALETTE",
    "ProjectionSetup",
    "ColoredPatch",
    "embedding_matrix",
    "embed_physical",
    "embed_internal",
    "cut_and_project",
    "palette",
    "svg_text",
    "emit_svg",
]

log = logging.getLogger(__name__)

DEFAULT_PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
    "#9a6324", "#fffac8", "#800000", "#000075",
)


def internal_ks(n: int) -> list[int]:
    return [k for k in range(2, n) if math.gcd(k, n) == 1 and k < n - k]


def embedding_matrix(ctx: ModulusContext) -> np.ndarray:
    """Real phi(n) x phi(n) matrix: rows 0-1 physical, the rest internal."""
    n, d = ctx.n, ctx.degree
    j = np.arange(d)
    rows = []
    for k in [1] + internal_ks(n):
        ang = 2 * np.pi * k * j / n
        rows.append(np.cos(ang))
        rows.append(np.sin(ang))
    E = np.array(rows)
    assert E.shape == (d, d)
    return E


def embed_physical(ctx: ModulusContext, v: Sequence[int]) -> tuple[float, float]:
    if len(v) != ctx.degree:
        raise ValueError(f"expected a vector of dimension {ctx.degree}")
    ang = 2 * np.pi * np.arange(ctx.degree) / ctx.n
    v = np.asarray(v, dtype=float)
    return float(v @ np.cos(ang)), float(v @ np.sin(ang))


def embed_internal(ctx: ModulusContext, v: Sequence[int]) -> np.ndarray:
    return embedding_matrix(ctx)[2:] @ np.asarray(v, dtype=float)


@dataclass
class ProjectionSetup:
    ctx: ModulusContext
    window_radius: float = 1.0
    patch_radius: float = 8.0

    def __post_init__(self):
        if self.window_radius <= 0:
            raise ValueError("window_radius must be positive")
        if self.patch_radius <= 0:
            raise ValueError("patch_radius must be positive")

    @property
    def internal_dims(self) -> int:
        return self.ctx.degree - 2

    @property
    def physical_pair(self) -> np.ndarray:
        return embedding_matrix(self.ctx)[:2]


@dataclass
class ColoredPatch:
    points: list[tuple[float, float, int, tuple[int, ...]]]
    ell: int
    meta: dict = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def xy(self) -> np.ndarray:
        return np.array([(p[0], p[1]) for p in self.points], dtype=float).reshape(-1, 2)

    def colors(self) -> set[int]:
        return {p[2] for p in self.points}


def _enumerate_ellipsoid(G: np.ndarray, bound: float) -> list[tuple[int, ...]]:
    """Integer vectors c with c^T G c <= bound (Fincke-Pohst)."""
    d = G.shape[0]
    R = np.linalg.cholesky(G).T  # G = R^T R, R upper triangular
    out: list[tuple[int, ...]] = []
    c = [0] * d
    eps = 1e-9

    def rec(i: int, remaining: float):
        # sum_{j >= i} (R c)_j^2 where (R c)_i = R_ii c_i + sum_{j>i} R_ij c_j
        shift = sum(R[i, j] * c[j] for j in range(i + 1, d))
        r = R[i, i]
        span = math.sqrt(max(remaining, 0.0)) / r
        center = -shift / r
        lo = math.ceil(center - span - eps)
        hi = math.floor(center + span + eps)
        for x in range(lo, hi + 1):
            t = r * x + shift
            left = remaining - t * t
            if left < -eps:
                continue
            c[i] = x
            if i == 0:
                out.append(tuple(c))
            else:
                rec(i - 1, left)
        c[i] = 0

    rec(d - 1, bound)
    return out


def cut_and_project(setup: ProjectionSetup, model: ColoringModel) -> ColoredPatch:
    """Points with physical radius <= patch_radius and internal radius <= window_radius."""
    ctx = setup.ctx
    if model.ctx.n != ctx.n:
        raise ValueError("model and projection use different moduli")
    E = embedding_matrix(ctx)
    P, Q = E[:2], E[2:]
    Rp, Rw = setup.patch_radius, setup.window_radius
    if ctx.degree == 2:
        G = P.T @ P / Rp**2
        bound = 1.0
    else:
        # ellipsoid |Pc|^2/Rp^2 + |Qc|^2/Rw^2 <= 2 contains the cylinder product
        G = P.T @ P / Rp**2 + Q.T @ Q / Rw**2
        bound = 2.0
    vecs = _enumerate_ellipsoid(G, bound)
    tol = 1e-9
    if vecs:
        V = np.array(vecs, dtype=float)
        phys = V @ P.T
        keep = np.hypot(phys[:, 0], phys[:, 1]) <= Rp + tol
        if ctx.degree > 2:
            keep &= np.linalg.norm(V @ Q.T, axis=1) <= Rw + tol
        kept = [vecs[i] for i in np.flatnonzero(keep)]
    else:
        kept = []
    kept.sort()
    if kept:
        colors = model.sublattice.coset_index(np.array(kept, dtype=object).T)
        phys = np.array(kept, dtype=float) @ P.T
    else:
        log.warning("empty patch: window %.3g is too small for radius %.3g", Rw, Rp)
        colors, phys = [], np.zeros((0, 2))
    points = [
        (float(phys[i, 0]), float(phys[i, 1]), int(colors[i]), kept[i]) for i in range(len(kept))
    ]
    meta = {"n": ctx.n, "generator": str(model.generator), "window": Rw, "radius": Rp}
    return ColoredPatch(points, model.ell, meta)


def palette(k: int, base: Optional[Sequence[str]] = None) -> list[str]:
    """k fill colors: the base list first, then evenly rotated HSV hues."""
    base = list(base or DEFAULT_PALETTE)
    if k <= len(base):
        return base[:k]
    extra = k - len(base)
    out = list(base)
    for i in range(extra):
        r, g, b = colorsys.hsv_to_rgb((i * 0.618033988749895) % 1.0, 0.65, 0.85)
        out.append("#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255)))
    return out


def _min_distance(xy: np.ndarray) -> float:
    if len(xy) < 2:
        return 1.0
    best = math.inf
    # chunked to keep memory bounded on large patches
    for start in range(0, len(xy), 512):
        block = xy[start:start + 512]
        d = np.hypot(block[:, None, 0] - xy[None, :, 0], block[:, None, 1] - xy[None, :, 1])
        idx = np.arange(start, start + len(block))
        d[np.arange(len(block)), idx] = math.inf
        best = min(best, float(d.min()))
    return best


def svg_text(patch: ColoredPatch, colors: Optional[Sequence[str]] = None) -> str:
    fills = palette(patch.ell, colors)
    if len(fills) < patch.ell:
        raise ValueError(f"palette has {len(fills)} colors, coloring needs {patch.ell}")
    pts = sorted(patch.points, key=lambda p: p[3])
    xy = patch.xy
    r = 0.35 * _min_distance(xy)
    extent = float(np.abs(xy).max()) + 2 * r if len(pts) else 1.0
    size = 2 * extent
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{-extent:.6f} {-extent:.6f} {size:.6f} {size:.6f}" width="800" height="800">',
    ]
    meta = patch.meta
    if meta:
        lines.append(
            f"<title>n={meta.get('n')} ideal=&lt;{meta.get('generator')}&gt; ell={patch.ell}</title>"
        )
    lines.append('<g stroke="none">')
    for x, y, color, _ in pts:
        # SVG y axis points down
        lines.append(f'<circle cx="{x:.6f}" cy="{-y:.6f}" r="{r:.6f}" fill="{fills[color]}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(patch: ColoredPatch, path, colors: Optional[Sequence[str]] = None) -> None:
    Path(path).write_text(svg_text(patch, colors), encoding="utf-8")
