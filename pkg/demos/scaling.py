"""
Timing component extraction on braids with many invariant curves.

Each sample cables a random braid of fixed canonical length into pairs of
strands, so the curves [2i-1, 2i] are invariant, then times the braid induced
on the outer component. A least-squares fit of log time against log n gives
the growth exponent.
"""

from __future__ import annotations

import math
import random
import time

import numpy as np

import braidcrs
from braidcrs.crs import BOUNDARY, component_braid
from braidcrs.curves import StandardCurve
from braidcrs.sampling import cabled_pairs

LENGTH = 6


def main() -> None:
    rng = random.Random(1)
    sizes, times = [], []
    for k in (4, 6, 8, 11, 14, 18, 22):
        n = 2 * k
        M = [StandardCurve(2 * i + 1, 2 * i + 2, n) for i in range(k)]
        best = math.inf
        for _ in range(3):
            beta = cabled_pairs(rng, k, LENGTH)
            braidcrs.clear_caches()
            start = time.perf_counter()
            component_braid(beta, M, BOUNDARY)
            best = min(best, time.perf_counter() - start)
        sizes.append(n)
        times.append(best)
        print(f"n = {n:3d}  canonical length {LENGTH}  {best * 1000:8.2f} ms")
    slope = np.polyfit(np.log(sizes), np.log(times), 1)[0]
    print(f"fitted exponent: {slope:.2f}")


if __name__ == "__main__":
    main()
