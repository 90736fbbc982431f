"""Extract the Gegenbauer spectrum of G and compare with 1/(a - l(n+l-1)).

Usage: python scripts/coefficient_spectrum.py --n 3 --a 8 --lmax 20
"""

import argparse

from spheregreen import extract_green_coefficients, green_integral, make_context, params_from_a
from spheregreen.solver import exact_green_coefficient


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--a", type=float, default=8.0)
    ap.add_argument("--lmax", type=int, default=20)
    ap.add_argument("--nodes", type=int, default=None)
    args = ap.parse_args()
    ctx = make_context(args.n)
    p = params_from_a(ctx, args.a)
    got = extract_green_coefficients(ctx, lambda th: green_integral(ctx, p, th),
                                     range(args.lmax + 1), args.nodes)
    print(f"n={args.n} a={args.a} kind={p.kind.value} L={p.L:.6g}")
    for l, g in enumerate(got):
        exact = exact_green_coefficient(p, l)
        err = abs(g - exact) / abs(exact) if exact else abs(g)
        print(f"{l:3d} {g: .15e} {exact: .15e} {err:.1e}")


if __name__ == "__main__":
    main()
