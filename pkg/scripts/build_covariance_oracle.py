"""Build (or load) the cached Monte Carlo covariance truth used by the covariance experiments.

Usage: python3 scripts/build_covariance_oracle.py [--theta 1.0] [--samples 200000] [--n 5000]
The cache lives in $BETACOP_CACHE_DIR or ~/.cache/betacop.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from betacop.inference import COVARIANCE_GRID, covariance_oracle, limit_covariance
from betacop.parametric import CopulaModel


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--family", default="clayton")
    p.add_argument("--theta", type=float, default=1.0)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--n", type=int, default=5000)
    args = p.parse_args(argv)
    model = CopulaModel(args.family, args.theta)
    t0 = time.time()
    mc = covariance_oracle(model, COVARIANCE_GRID, samples=args.samples, n=args.n)
    exact = limit_covariance(model, COVARIANCE_GRID)
    np.set_printoptions(precision=5, suppress=True)
    print(f"oracle ({time.time() - t0:.0f}s):\n{mc}\nanalytic limit:\n{exact}")
    print(f"max abs difference {np.abs(mc - exact).max():.2e}")


if __name__ == "__main__":
    main()
