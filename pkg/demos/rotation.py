"""
The rotation braid α = σ_n⋯σ_1 on n+1 strands.

Its (n+1)-th power is the full twist Δ², so it is periodic. Following the
curve [1,2] under α walks it one step to the right each time until it hits
[n, n+1], whose image is no longer a round curve. The script also writes an
SVG of the single closed orbit of Δ in B_4 to ``rotation.svg``.
"""

from __future__ import annotations

from pathlib import Path

from braidcrs.crs import classify
from braidcrs.curves import StandardCurve, curve_orbit
from braidcrs.garside import CanonicalBraid, normalize, power
from braidcrs.render import render_multicurve_svg


def main() -> None:
    for size in (3, 4, 5, 6):
        alpha = normalize(list(range(size - 1, 0, -1)), size)
        twist = power(alpha, size) == CanonicalBraid.delta(size, 2)
        orbit = curve_orbit(StandardCurve(1, 2, size), alpha)
        status = "closed" if orbit.closed else "leaves the round curves"
        print(f"B_{size}: α = {alpha}")
        print(f"  α^{size} = Δ²: {twist}   type: {classify(alpha).value}")
        print(f"  orbit of [1,2]: {' '.join(map(str, orbit.curves))} ({status})")

    orbit = curve_orbit(StandardCurve(1, 2, 4), CanonicalBraid.delta(4))
    out = Path("rotation.svg")
    out.write_text(render_multicurve_svg(orbit.curves, 4), encoding="utf-8")
    print(f"wrote {out} with the Δ-orbit {' '.join(map(str, orbit.curves))}")


if __name__ == "__main__":
    main()
