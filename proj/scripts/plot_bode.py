#!/usr/bin/env python3
"""Plot a bode CSV (f_hz,mag_db,phase_deg) produced by `actkit bode`."""
import csv
import sys

import matplotlib.pyplot as plt


def main() -> None:
    if len(sys.argv) < 2:
        sys.exit("usage: plot_bode.py bode.csv [out.png]")
    freqs, mags, phases = [], [], []
    with open(sys.argv[1]) as fh:
        for row in csv.DictReader(line for line in fh if not line.startswith("#")):
            freqs.append(float(row["f_hz"]))
            mags.append(float(row["mag_db"]))
            phases.append(float(row["phase_deg"]))

    fig, (ax_mag, ax_phase) = plt.subplots(2, 1, sharex=True, figsize=(7, 6))
    ax_mag.semilogx(freqs, mags)
    ax_mag.set_ylabel("magnitude [dB]")
    ax_mag.grid(True, which="both", alpha=0.3)
    ax_phase.semilogx(freqs, phases)
    ax_phase.set_ylabel("phase [deg]")
    ax_phase.set_xlabel("frequency [Hz]")
    ax_phase.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    if len(sys.argv) > 2:
        fig.savefig(sys.argv[2], dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main()
