"""Phase-space histogram of the output quadratures with a scatter inset.

Reads histogram.csv (columns x_edge, p_edge, count: one row per bin, lower
edges on a uniform grid) and scatter.csv (columns x, p) from --in-dir.  An
empty scatter file yields a histogram-only figure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import SchemaError, read_columns, run_footer


def _edges_from_lower(lower: np.ndarray) -> np.ndarray:
    uniq = np.unique(lower)
    if uniq.size == 1:
        return np.array([uniq[0], uniq[0] + 1.0])
    step = uniq[1] - uniq[0]
    return np.append(uniq, uniq[-1] + step)


def load_histogram(path: Path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    cols = read_columns(path, ["x_edge", "p_edge", "count"])
    x_edges = _edges_from_lower(cols["x_edge"])
    p_edges = _edges_from_lower(cols["p_edge"])
    nx, npp = x_edges.size - 1, p_edges.size - 1
    if cols["count"].size != nx * npp:
        raise SchemaError(f"{path}: {cols['count'].size} bins do not tile "
                          f"a {nx} x {npp} grid")
    counts = cols["count"].reshape(nx, npp)
    return x_edges, p_edges, counts


def render(in_dir: Path, out: Path) -> Path:
    x_edges, p_edges, counts = load_histogram(in_dir / "histogram.csv")
    scatter = read_columns(in_dir / "scatter.csv", ["x", "p"])

    fig, ax = plt.subplots(figsize=(5.2, 4.4))
    mesh = ax.pcolormesh(x_edges, p_edges, counts.T, cmap="inferno",
                         rasterized=True)
    fig.colorbar(mesh, ax=ax, label="counts")
    ax.set_xlabel(r"$x = \mathrm{Re}\,(a_1 + a_2)/\sqrt{2}$")
    ax.set_ylabel(r"$p = \mathrm{Re}\,(i a_1 - i a_2)/\sqrt{2}$")

    if scatter["x"].size:
        inset = ax.inset_axes([0.62, 0.62, 0.36, 0.36])
        inset.scatter(scatter["x"], scatter["p"], s=0.4, lw=0,
                      color="tab:cyan", alpha=0.6)
        inset.set_xlim(x_edges[0], x_edges[-1])
        inset.set_ylim(p_edges[0], p_edges[-1])
        inset.set_xticks([])
        inset.set_yticks([])
        inset.set_title(f"{scatter['x'].size} samples", fontsize=6)

    fig.text(0.99, 0.01, run_footer(in_dir), ha="right", va="bottom",
             fontsize=6, color="0.5")
    fig.tight_layout()
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150, metadata={"Software": None})
    plt.close(fig)
    return out


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--in-dir", type=Path, required=True,
                    help="directory holding histogram.csv and scatter.csv")
    ap.add_argument("--out", type=Path, required=True, help="output image path")
    args = ap.parse_args(argv)
    try:
        path = render(args.in_dir, args.out)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
