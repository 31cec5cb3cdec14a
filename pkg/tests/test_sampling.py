from __future__ import annotations

import random

import pytest

from braidcrs.crs import is_periodic
from braidcrs.curves import StandardCurve, apply_braid
from braidcrs.garside import CanonicalBraid, power
from braidcrs.sampling import cable, cabled_pairs, corpus, periodic_braid, rotation
from oracles import same_braid


def test_cable_of_delta_is_block_delta():
    # cabling Δ on 2 tubes of width 2 gives the 4-strand braid σ2σ1σ3σ2
    assert same_braid(cable(CanonicalBraid.delta(2), [2, 2]), [2, 1, 3, 2], 4)


def test_cabled_pairs_preserve_pair_curves():
    rng = random.Random(51)
    for k in (3, 5, 8):
        beta = cabled_pairs(rng, k, 4)
        curves = {StandardCurve(2 * i + 1, 2 * i + 2, 2 * k) for i in range(k)}
        assert {apply_braid(c, beta) for c in curves} == curves
    with pytest.raises(ValueError):
        cabled_pairs(rng, 2, 4)


def test_rotation_and_periodic_braids():
    for n in range(2, 7):
        assert power(rotation(n), n) == CanonicalBraid.delta(n, 2)
    rng = random.Random(52)
    for _ in range(40):
        assert is_periodic(periodic_braid(rng, rng.randint(2, 6)))


def test_corpus_respects_bounds():
    braids = corpus(seed=53, size=60, max_n=4, max_length=3)
    assert len(braids) == 60
    assert all(3 <= b.n <= 4 and b.canonical_length <= 3 for b in braids)
    assert braids == corpus(seed=53, size=60, max_n=4, max_length=3)
