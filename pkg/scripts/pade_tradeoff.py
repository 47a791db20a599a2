"""Memory vs coefficient error for Padé approximants of 1/sqrt(1-x).

For each degree d the approximant streams with d registers; the table shows
the largest coefficient deviation over the first N indices, exactly and as a
float for reading.

    python scripts/pade_tradeoff.py --length 200 --dmax 10
"""

import argparse

from gfstream.ratgf import agreement, approx_error, pade
from gfstream.series import catalog, fmt_rat


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=200)
    ap.add_argument("--dmax", type=int, default=10)
    args = ap.parse_args()

    f = catalog("g_half", max(args.length - 1, 2 * args.dmax - 1))
    print(f"{'d':>3} {'agree':>6} {'max |err| (float)':>18}  exact")
    for d in range(1, args.dmax + 1):
        g = pade(f, d)
        err = approx_error(f, g, args.length - 1)
        exact = fmt_rat(err)
        if len(exact) > 40:
            exact = exact[:37] + "..."
        print(f"{g.degree:>3} {agreement(f, g):>6} {float(err):>18.3e}  {exact}")


if __name__ == "__main__":
    main()
