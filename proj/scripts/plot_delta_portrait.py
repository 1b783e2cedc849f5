#!/usr/bin/env python3
"""Delta phase portrait from an `actkit evaluate` *_delta.csv file.

Plots (sim - real) position against (sim - real) velocity per joint;
tighter clouds around the origin mean a smaller reality gap.
"""
import csv
import sys

import matplotlib.pyplot as plt


def main() -> None:
    if len(sys.argv) < 2:
        sys.exit("usage: plot_delta_portrait.py metrics_delta.csv [joint] [out.png]")
    joint = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    dq, dqd = [], []
    with open(sys.argv[1]) as fh:
        for row in csv.DictReader(line for line in fh if not line.startswith("#")):
            dq.append(float(row[f"dq{joint}"]))
            dqd.append(float(row[f"dqd{joint}"]))

    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(dq, dqd, ",", alpha=0.5)
    ax.axhline(0.0, color="k", lw=0.5)
    ax.axvline(0.0, color="k", lw=0.5)
    ax.set_xlabel("position delta [rad]")
    ax.set_ylabel("velocity delta [rad/s]")
    ax.set_title(f"joint {joint}")
    fig.tight_layout()
    if len(sys.argv) > 3:
        fig.savefig(sys.argv[3], dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
