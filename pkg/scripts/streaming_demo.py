"""Side-by-side buffer profiles of dense and rational streamers on one input.

    python scripts/streaming_demo.py --steps 12
"""

import argparse
import random
from fractions import Fraction

from gfstream.ratgf import expand, make
from gfstream.series import Poly, fmt_rat
from gfstream.streamkit import dense_streamer, rational_streamer, run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    z = [Fraction(rng.randint(-5, 5)) for _ in range(args.steps)]
    # G_{1, 1/2} = 1/((1 - x)(1 - x/2)), degree 2
    g = make([1], Poly([1, -1]) * Poly([1, Fraction(-1, 2)]))
    fast = run(rational_streamer(g), z)
    slow = run(dense_streamer(expand(g, args.steps)), z)
    print(f"{'t':>3} {'z_t':>5} {'output':>14} {'beta_rat':>9} {'beta_dense':>11}")
    for t in range(args.steps):
        assert fast.outputs[t] == slow.outputs[t]
        print(f"{t:>3} {fmt_rat(z[t]):>5} {fmt_rat(fast.outputs[t]):>14} "
              f"{fast.buffers[t]:>9} {slow.buffers[t]:>11}")


if __name__ == "__main__":
    main()
