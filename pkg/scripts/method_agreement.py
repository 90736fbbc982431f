"""Compare the series, integral and F1 routes on a theta grid and print a summary.

Usage: python scripts/method_agreement.py
"""

import math
import time

from spheregreen import (GreenError, QuadratureConfig, green_appell, green_integral, green_series,
                         make_context, params_from_L)

CASES = [(2, -0.4), (2, -0.7), (3, -1.2), (3, 0.3), (4, -0.8), (4, 1.7), (5, -2.6)]
THETAS = [k * math.pi / 12 for k in range(1, 13)]


def main():
    qc = QuadratureConfig(tol=1e-10)
    print(f"{'n':>2} {'L':>6} {'max|I-A|':>10} {'max|I-S|/est':>13} {'s':>6}")
    for n, L in CASES:
        ctx = make_context(n)
        p = params_from_L(ctx, L)
        start = time.perf_counter()
        worst_ia, worst_ratio = math.nan, 0.0
        for th in THETAS:
            g = green_integral(ctx, p, th, qc)
            s = green_series(ctx, p, th)
            worst_ratio = max(worst_ratio, abs(g.value - s.value) / (g.error_estimate + s.error_estimate))
            try:
                a = green_appell(ctx, p, th, qc).value
            except GreenError:
                continue
            worst_ia = abs(g.value - a) if math.isnan(worst_ia) else max(worst_ia, abs(g.value - a))
        print(f"{n:>2} {L:>6} {worst_ia:>10.2e} {worst_ratio:>13.3f} "
              f"{time.perf_counter() - start:>6.2f}")


if __name__ == "__main__":
    main()
