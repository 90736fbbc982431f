"""Tabulate G(theta) on S^n for a few shifts and write one CSV per case.

Usage: python scripts/tabulate_green.py [--outdir results] [--steps 64]
"""

import argparse
import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from spheregreen import QuadratureConfig, green_integral, make_context, params_from_a


@dataclass(frozen=True)
class Case:
    n: int
    a: float

    @property
    def label(self) -> str:
        return f"n{self.n}_a{self.a:g}"


CASES = (Case(2, 0.0), Case(2, -0.24), Case(2, 5.0), Case(3, 0.0), Case(3, 8.0), Case(4, 2.5))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="results")
    ap.add_argument("--steps", type=int, default=64)
    ap.add_argument("--tol", type=float, default=1e-10)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    qc = QuadratureConfig(tol=args.tol)
    thetas = np.linspace(math.pi / args.steps, math.pi, args.steps)
    for case in CASES:
        ctx = make_context(case.n)
        p = params_from_a(ctx, case.a)
        path = out / f"green_{case.label}.csv"
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["theta", "value", "error_estimate"])
            for th in thetas:
                ev = green_integral(ctx, p, float(th), qc)
                w.writerow([f"{th:.17g}", f"{ev.value:.17g}", f"{ev.error_estimate:.3g}"])
        print(f"{case.label}: {p.kind.value}, L={p.L:.6g} -> {path}")


if __name__ == "__main__":
    main()
