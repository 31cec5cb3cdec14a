"""
A short tour: normal forms, sliding circuits and canonical reduction systems.

Run with ``python demos/tour.py``. Each braid is printed with its left normal
form, the size of its set of sliding circuits, its canonical reduction system
(as a standard multicurve of a conjugate plus the conjugator) and its
Nielsen-Thurston type. Every essential curve is then re-checked with the
centralizer test.
"""

from __future__ import annotations

from braidcrs.centralizer_crs import membership_via_centralizer
from braidcrs.conjugacy import sliding_circuits_set
from braidcrs.crs import canonical_reduction_system, classify
from braidcrs.garside import parse_braid_word

EXAMPLES = [
    ("1", 3),
    ("1 3", 4),
    ("1 -2", 3),
    ("1 2 1 1 2 1", 3),
    ("1 1", 4),
    ("2 1 1 -2 3 3", 4),
    ("-3 1 2 2 1 3 4 -4 4", 5),
]


def show(word: str, n: int) -> None:
    alpha = parse_braid_word(word, n)
    result = canonical_reduction_system(alpha)
    print(f"B_{n}  word {word!r}")
    print(f"  normal form    {alpha}")
    print(f"  |SC|           {len(sliding_circuits_set(alpha))}")
    print(f"  candidates     {result.candidates}")
    print(f"  CRS            {result.curves}  conjugator {result.conjugator}")
    print(f"  type           {classify(alpha).value}")
    for c in result.candidates:
        v = membership_via_centralizer(result.representative, c, candidates=result.candidates)
        verdict = "essential" if v.member else "dropped"
        print(f"    {c}: {verdict} by centralizer test ({v.reason.value}, l = {v.l})")
    print()


def main() -> None:
    for word, n in EXAMPLES:
        show(word, n)


if __name__ == "__main__":
    main()
