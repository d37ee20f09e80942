"""Pump envelope and emitted-mode overlay (the pulse/mode figure).

Reads pump.csv and mode.csv (columns tau, re, im) from --in-dir and renders
the pump ramp together with the magnitude of the dominant temporal mode.
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


def render(in_dir: Path, out: Path) -> Path:
    pump = read_columns(in_dir / "pump.csv", ["tau", "re", "im"])
    mode = read_columns(in_dir / "mode.csv", ["tau", "re", "im"])
    mode_abs = np.hypot(mode["re"], mode["im"])

    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    ax2 = ax.twinx()
    ax.plot(pump["tau"], pump["re"], color="tab:orange", lw=1.8,
            label="pump $E_s(\\tau)$")
    ax2.plot(mode["tau"], mode_abs, color="tab:blue", lw=1.8,
             label="mode $|\\mathcal{E}(\\tau)|$")
    ax.set_xlabel(r"retarded time $\tau$  [$l_0/c$]")
    ax.set_ylabel(r"pump amplitude", color="tab:orange")
    ax2.set_ylabel(r"mode magnitude", color="tab:blue")
    ax.tick_params(axis="y", colors="tab:orange")
    ax2.tick_params(axis="y", colors="tab:blue")
    lines = ax.get_lines() + ax2.get_lines()
    ax.legend(lines, [ln.get_label() for ln in lines], loc="upper right",
              frameon=False)
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
                    help="directory holding pump.csv and mode.csv")
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
