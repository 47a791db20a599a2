"""Print rank(H^(d,d)) for catalog generating functions, one row per entry.

    python scripts/rank_table.py --dmax 12
"""

import argparse
from fractions import Fraction

from gfstream.hankel import HankelView, rank
from gfstream.series import catalog

ENTRIES = [
    ("g_one", ()),
    ("g_exp", ()),
    ("g_lm", (1, Fraction(1, 2))),
    ("g_half", ()),
    ("g_catalan", ()),
    ("central_binomial", ()),
    ("sqrt_g_lm", (1, Fraction(1, 2))),
    ("sqrt_g_lm", (Fraction(3, 4), Fraction(1, 4))),
    ("junod_g", (5, 1)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=12)
    args = ap.parse_args()

    header = "d".rjust(28) + "".join(f"{d:>4}" for d in range(args.dmax + 1))
    print(header)
    for name, params in ENTRIES:
        a = catalog(name, 2 * args.dmax, *params)
        ranks = [rank(HankelView(a, d, d)) for d in range(args.dmax + 1)]
        label = name + (f"({','.join(str(p) for p in params)})" if params else "")
        print(label.rjust(28) + "".join(f"{r:>4}" for r in ranks))


if __name__ == "__main__":
    main()
