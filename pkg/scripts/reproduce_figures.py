"""Regenerate the simulated figures (beam cross-sections, delay, waist, wavelength and mode-order sweeps).

    python scripts/reproduce_figures.py [--out results] [--workers 4] [--trials 20]
"""
import argparse
import sys
import time
from pathlib import Path

from mmdelay.cli import main as cli

ROOT = Path(__file__).resolve().parent.parent
JOBS = [
    ("beam-image", "fig2b_beam_images.ini"),
    ("delay-sweep", "fig3_delay_rayleigh.ini"),
    ("delay-sweep", "fig4_delay_time.ini"),
    ("wavelength-sweep", "fig5_wavelength.ini"),
    ("mode-sweep", "fig6_mode_order.ini"),
]


def run(out, workers, trials):
    for command, cfg in JOBS:
        args = [command, "--config", str(ROOT / "configs" / cfg), "--out", str(Path(out) / Path(cfg).stem)]
        if command != "beam-image":
            args += ["--workers", str(workers)]
        if trials and command in ("delay-sweep", "mode-sweep"):
            args += ["--trials", str(trials)]
        t0 = time.perf_counter()
        code = cli(args)
        print(f"{cfg}: exit {code} in {time.perf_counter() - t0:.1f} s")
        if code:
            return code
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="results")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--trials", type=int)
    a = parser.parse_args()
    sys.exit(run(a.out, a.workers, a.trials))
