"""Figures for pipeline reports.  Rendering is headless (Agg)."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402

from .lattice import INFINITE  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "figure.dpi": 100,
    "savefig.bbox": "tight",
}
# PNG metadata would otherwise embed the matplotlib version
_META = {"Software": None}


def _label(mu, p):
    return f"({'.'.join(mu) or 'ε'}, {p})"


def stabilization_figure(homs: dict, path) -> Path:
    """Members found and lattice rank per exploration length, one line per (mu, p)."""
    path = Path(path)
    with plt.rc_context(STYLE):
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(7.5, 2.8))
        for (mu, p), hom in sorted(homs.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
            xs = [r.length for r in hom.history]
            ax1.plot(xs, [r.members for r in hom.history], marker="o", ms=3, label=_label(mu, p))
            ax2.step(xs, [len(r.g_basis) for r in hom.history], where="post", label=_label(mu, p))
            if hom.stabilized_at is not None:
                ax2.axvline(hom.stabilized_at, color="0.7", lw=0.8, ls=":")
        ax1.set_xlabel("loop length L")
        ax1.set_ylabel("members of M")
        ax1.set_yscale("symlog")
        ax2.set_xlabel("loop length L")
        ax2.set_ylabel("rank of G(mu, p)")
        for ax in (ax1, ax2):
            ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax2.yaxis.set_major_locator(MaxNLocator(integer=True))
        ax1.set_title("exploration")
        ax2.set_title("stabilization")
        if homs:
            ax2.legend(frameon=False, fontsize=7)
        fig.savefig(path, metadata=_META)
        plt.close(fig)
    return path


def _coords(group, h):
    kind = group.kind
    if kind == "abelian":
        v = list(h) + [0, 0]
        return v[0], v[1]
    if kind == "virtually_abelian":
        v = list(h[0]) + [0]
        return v[0], h[1]
    return h, 0


def cover_figure(report, group, path) -> Path:
    """Ball elements placed by coordinates and coloured by the coset that covers them."""
    path = Path(path)
    keys = list(report.cosets)
    cmap = plt.get_cmap("tab10")
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3.2))
        for k, key in enumerate(keys):
            pts = [_coords(group, loc.h) for loc in report.locators if (loc.mu, loc.p, loc.h1, loc.h2) == key]
            if not pts:
                continue
            xs, ys = zip(*pts)
            ax.scatter(xs, ys, s=28, color=cmap(k % 10), label=f"coset {k}", edgecolor="k", linewidth=0.3)
        bad = [_coords(group, loc.h) for loc in report.locators if not loc.ok]
        if bad:
            xs, ys = zip(*bad)
            ax.scatter(xs, ys, marker="x", color="red", s=40, label="unverified")
        kind = group.kind
        ax.xaxis.set_major_locator(MaxNLocator(integer=True))
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
        ax.set_xlabel("translation" if kind != "finite" else "element id")
        ax.set_ylabel({"abelian": "second coordinate", "virtually_abelian": "point part"}.get(kind, ""))
        ax.set_title(f"coset cover of the radius-{report.radius} ball")
        ax.legend(frameon=False, fontsize=7, loc="center left", bbox_to_anchor=(1, 0.5))
        fig.savefig(path, metadata=_META)
        plt.close(fig)
    return path


def index_text(idx) -> str:
    return "infinite" if idx is INFINITE else str(idx)
