from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcrs.garside import (
    CanonicalBraid,
    InvalidGeneratorError,
    MalformedWordError,
    SimpleElement,
    StrandCountError,
    StrandMismatchError,
    all_simples,
    atom_perm,
    boundary_factors,
    cyclic_sliding,
    delta_perm,
    finishing_set,
    inverse,
    is_pure,
    meet,
    meet_perm,
    meet_simple,
    mirror,
    multiply,
    normalize,
    parse_braid_word,
    parse_canonical,
    pn_normal_form,
    preferred_prefix,
    right_meet,
    starting_set,
    tau,
    underlying_permutation,
)
from oracles import (
    brute_finishing_set,
    brute_meet,
    brute_starting_set,
    rewrite,
    same_braid,
    weak_prefix,
)


def w(text: str, n: int) -> CanonicalBraid:
    return parse_braid_word(text, n)


def simple(word: str, n: int) -> SimpleElement:
    return SimpleElement.from_word([int(x) for x in word.split()], n)


words = st.integers(min_value=3, max_value=6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.integers(min_value=1, max_value=n - 1).flatmap(lambda i: st.sampled_from((i, -i))),
        max_size=14)))


def left_weighted(b: CanonicalBraid) -> bool:
    return all(brute_starting_set(q) <= brute_finishing_set(p) for p, q in zip(b.factors, b.factors[1:]))


def proper(b: CanonicalBraid) -> bool:
    ident, top = tuple(range(b.n)), delta_perm(b.n)
    return all(p not in (ident, top) for p in b.factors)


# --- normalize ---------------------------------------------------------------

def test_normalize_examples():
    assert w("1 2 1", 3) == CanonicalBraid.delta(3)
    assert w("1 -1", 3) == CanonicalBraid.identity(3)
    b = w("2 1 1", 3)
    assert b.inf == 0
    assert b.factors == (simple("2 1", 3).perm, simple("1", 3).perm)
    assert str(b) == "Δ^0 | 2,3,1 | 2,1,3"


def test_normalize_negative_letter():
    # σ1⁻¹σ2 in B_3: inf -1, checked against the free group action
    b = w("1 -2", 3)
    assert b.inf == -1
    assert str(b) == "Δ^-1 | 1,3,2 | 2,3,1"
    assert same_braid(b, [1, -2], 3)


def test_normalize_errors():
    with pytest.raises(InvalidGeneratorError):
        normalize([3], 3)
    with pytest.raises(InvalidGeneratorError):
        normalize([0], 3)
    with pytest.raises(StrandCountError):
        normalize([], 1)
    with pytest.raises(MalformedWordError):
        parse_braid_word("1 a", 3)
    with pytest.raises(MalformedWordError):
        parse_braid_word("1 0", 3)


def test_parse_word_formats():
    assert parse_braid_word("", 4) == CanonicalBraid.identity(4)
    assert parse_braid_word("1,2,1", 3) == CanonicalBraid.delta(3)
    assert parse_braid_word("  1   -2 ", 3) == w("1 -2", 3)


@settings(max_examples=200, deadline=None)
@given(words)
def test_normal_form_represents_word(data):
    n, word = data
    b = normalize(word, n)
    assert proper(b)
    assert left_weighted(b)
    assert same_braid(b, word, n)


def test_uniqueness_under_rewriting():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(3, 6)
        word = [rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(rng.randint(0, 20))]
        other = rewrite(word, n, rng)
        assert normalize(word, n) == normalize(other, n)


def test_canonical_serialization_roundtrip():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(2, 6)
        b = normalize([rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(12)], n)
        assert parse_canonical(str(b), n) == b


def test_two_strands_degenerate():
    b = w("1 1 -1", 2)
    assert b == CanonicalBraid.delta(2, 1)
    assert all_simples(2) == ((1, 0),)


# --- group operations -------------------------------------------------------

def test_multiply_examples():
    d = CanonicalBraid.delta(3)
    assert multiply(d, inverse(d)).is_identity()
    assert multiply(w("1", 3), w("-1", 3)).is_identity()
    assert multiply(d, d) == CanonicalBraid(3, 2, ())
    with pytest.raises(StrandMismatchError):
        multiply(w("1", 3), w("1", 4))


def test_inverse_examples():
    assert inverse(CanonicalBraid.identity(4)).is_identity()
    assert inverse(CanonicalBraid.delta(4, 3)) == CanonicalBraid.delta(4, -3)
    inv = inverse(w("1", 3))
    assert inv.inf == -1 and inv.factors == (simple("1 2", 3).perm,)


@settings(max_examples=150, deadline=None)
@given(words, words)
def test_multiply_matches_concatenation(d1, d2):
    n = min(d1[0], d2[0])
    a = [x for x in d1[1] if abs(x) < n]
    b = [x for x in d2[1] if abs(x) < n]
    prod = multiply(normalize(a, n), normalize(b, n))
    assert prod == normalize(a + b, n)
    assert left_weighted(prod)
    assert multiply(prod, inverse(prod)).is_identity()


def test_tau_examples():
    assert tau(w("1", 4)) == w("3", 4)
    assert tau(CanonicalBraid.delta(4)) == CanonicalBraid.delta(4)
    assert tau(w("1 2", 3)) == w("2 1", 3)


def test_power_and_conjugate():
    a = w("1 -2 3", 4)
    assert a ** 3 == normalize([1, -2, 3] * 3, 4)
    assert a ** -2 == normalize([-3, 2, -1] * 2, 4)
    c = w("2 2 -1", 4)
    assert a.conjugate(c) == normalize([1, -2, -2, 1, -2, 3, 2, 2, -1], 4)


# --- lattice ------------------------------------------------------------------

def test_meet_simple_examples():
    assert meet_simple(simple("1", 3), simple("2", 3)).is_identity()
    s = simple("1 2", 3)
    assert meet_simple(s, SimpleElement.delta(3)) == s
    assert meet_simple(simple("1 2", 4), simple("1 3", 4)) == simple("1", 4)


def test_meet_matches_brute_force():
    for n in (3, 4):
        simples = list(itertools.permutations(range(n)))
        for s, t in itertools.product(simples, repeat=2):
            assert meet_perm(s, t) == brute_meet(s, t)


def test_starting_and_finishing_sets_match_weak_order():
    for n in (3, 4, 5):
        for p in itertools.permutations(range(n)):
            assert set(starting_set(p)) == brute_starting_set(p)
            assert set(finishing_set(p)) == brute_finishing_set(p)


def test_meet_lattice_axioms():
    rng = random.Random(5)
    simples = list(itertools.permutations(range(5)))
    ident, top = tuple(range(5)), delta_perm(5)
    for _ in range(300):
        x, y, z = (rng.choice(simples) for _ in range(3))
        assert meet_perm(x, x) == x
        assert meet_perm(x, y) == meet_perm(y, x)
        assert meet_perm(meet_perm(x, y), z) == meet_perm(x, meet_perm(y, z))
        assert meet_perm(x, top) == x and meet_perm(x, ident) == ident
        assert (meet_perm(x, y) == x) == weak_prefix(x, y)


def test_general_meet_is_common_prefix():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(3, 5)
        a = normalize([rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(8)], n)
        b = normalize([rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(8)], n)
        g = meet(a, b)
        # g ≼ a  iff  g⁻¹a is positive
        assert multiply(inverse(g), a).inf >= 0
        assert multiply(inverse(g), b).inf >= 0
        # maximality: no atom extends g inside both
        ra, rb = multiply(inverse(g), a), multiply(inverse(g), b)
        for i in range(1, n):
            s = CanonicalBraid.from_simple(atom_perm(n, i))
            assert not (multiply(inverse(s), ra).inf >= 0 and multiply(inverse(s), rb).inf >= 0)


# --- mirror and pn form -------------------------------------------------------

def test_mirror_examples():
    assert mirror(w("1", 3)) == w("1", 3)
    assert mirror(w("1 2", 3)) == w("2 1", 3)


@settings(max_examples=150, deadline=None)
@given(words, words)
def test_mirror_is_involutive_anti_automorphism(d1, d2):
    n = min(d1[0], d2[0])
    a = normalize([x for x in d1[1] if abs(x) < n], n)
    b = normalize([x for x in d2[1] if abs(x) < n], n)
    assert mirror(mirror(a)) == a
    assert mirror(multiply(a, b)) == multiply(mirror(b), mirror(a))
    assert same_braid(mirror(a), list(reversed(a.to_word())), n)


def test_pn_examples():
    pos = w("1 2 2 3", 4)
    assert pn_normal_form(pos).a == pos and pn_normal_form(pos).b.is_identity()
    d = pn_normal_form(w("-1", 3))
    assert d.a.is_identity() and d.b == w("1", 3)
    d = pn_normal_form(w("-2 1 2", 3))
    assert d.a == w("1 2", 3) and d.b == w("1", 3)
    assert right_meet(d.a, d.b).is_identity()


@settings(max_examples=150, deadline=None)
@given(words)
def test_pn_form_properties(data):
    n, word = data
    x = normalize(word, n)
    d = pn_normal_form(x)
    assert d.a.inf >= 0 and d.b.inf >= 0
    assert d.reassemble() == x
    assert right_meet(d.a, d.b).is_identity()


# --- boundary factors, sliding ----------------------------------------------

def test_boundary_factor_examples():
    init, fin = boundary_factors(CanonicalBraid.delta(4, 3))
    assert init.is_identity() and fin.is_delta()
    s = simple("1 2", 3)
    assert boundary_factors(w("1 2", 3)) == (s, s)
    assert boundary_factors(w("2 1 1", 3)) == (simple("2 1", 3), simple("1", 3))


@settings(max_examples=200, deadline=None)
@given(words)
def test_final_times_initial_of_inverse_is_delta(data):
    n, word = data
    b = normalize(word, n)
    _, fin = boundary_factors(b)
    init_inv, _ = boundary_factors(inverse(b))
    assert multiply(fin.braid(), init_inv.braid()) == CanonicalBraid.delta(n)


def test_preferred_prefix_examples():
    assert preferred_prefix(CanonicalBraid.delta(3, 2)).is_identity()
    assert preferred_prefix(CanonicalBraid.identity(3)).is_identity()
    expected = meet_simple(simple("1", 3), SimpleElement(3, tau(w("1 2", 3)).factors[0]))
    assert preferred_prefix(w("1", 3)) == expected


def test_cyclic_sliding_recurs():
    x = w("2 1 1", 3)
    seen = []
    while x not in seen:
        seen.append(x)
        x = cyclic_sliding(x)
    assert len(seen) <= 6
    assert cyclic_sliding(CanonicalBraid.delta(4, 3)) == CanonicalBraid.delta(4, 3)


def test_underlying_permutation_examples():
    assert underlying_permutation(CanonicalBraid.delta(3)) == (3, 2, 1)
    assert is_pure(w("1 1", 3))
    assert underlying_permutation(w("3 2 1", 4)) == (2, 3, 4, 1)
