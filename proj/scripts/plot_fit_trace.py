#!/usr/bin/env python3
"""Plot the best-loss trace written next to an `actkit fit` result."""
import csv
import sys

import matplotlib.pyplot as plt


def main() -> None:
    if len(sys.argv) < 2:
        sys.exit("usage: plot_fit_trace.py fit_trace.csv [out.png]")
    iters, best = [], []
    with open(sys.argv[1]) as fh:
        for row in csv.DictReader(line for line in fh if not line.startswith("#")):
            iters.append(int(row["iteration"]))
            best.append(float(row["best_loss"]))

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(iters, best)
    ax.set_xlabel("iteration")
    ax.set_ylabel("best loss [rad^2]")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    if len(sys.argv) > 2:
        fig.savefig(sys.argv[2], dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
