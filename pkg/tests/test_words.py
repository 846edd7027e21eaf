import random

import pytest

from qonsager import qfield as qf
from qonsager import rewrite
from qonsager import words as W
from qonsager.words import NCPoly, g_, gt_, wm, wp


def all_letters(kmax):
    out = []
    for k in range(kmax + 1):
        out += [g_(k + 1), wm(k), wp(k + 1), gt_(k + 1)]
    return out


def test_gen_cmp_examples():
    assert W.gen_cmp(g_(3), wm(0)) == -1
    assert W.gen_cmp(wm(0), wm(1)) == -1  # W_0 before W_{-1}
    assert W.gen_cmp(wp(2), wp(2)) == 0


def test_gen_cmp_total_order():
    letters = all_letters(10)
    for a in letters:
        for b in letters:
            c = W.gen_cmp(a, b)
            assert c == -W.gen_cmp(b, a)
            assert (c == 0) == (a == b)
    # transitivity via the sort key is immediate; spot check family ranks
    assert g_(11) < wm(0) < wp(1) < gt_(1)


def test_word_degree_examples():
    w = (wp(2), wm(1), g_(3), wp(4))
    assert W.word_degree(w) == 3 + 3 + 6 + 7
    assert W.word_degree(()) == 0
    assert W.word_degree((gt_(1),)) == 2


def test_word_weight_examples():
    assert W.word_weight((wp(2), wm(1), g_(3), wp(4))) == W.Weight(8, 5, 16)
    assert W.word_weight((wp(3), gt_(4), wm(1), wm(2))) == W.Weight(13, 4, 24)
    assert W.word_weight(()) == W.Weight(0, 0, 0)


def test_word_weight_recomputation():
    rng = random.Random(3)
    letters = all_letters(5)
    for _ in range(50):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
        n = len(word)
        a = sum((n - i) * word[i].weight().a for i in range(n))
        b = sum((n - i) * word[i].weight().b for i in range(n))
        c = sum((n - i) * word[i].weight().c for i in range(n))
        assert W.word_weight(word) == W.Weight(a, b, c)


def test_weight_order_additive_and_total():
    rng = random.Random(4)
    for _ in range(200):
        u = W.Weight(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        v = W.Weight(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        u2 = W.Weight(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        v2 = W.Weight(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9))
        assert (u < v) or (v < u) or u == v
        if u <= u2 and v <= v2:
            assert u.add(v) <= u2.add(v2)


def test_is_irreducible():
    assert W.is_irreducible((wm(0), wp(1)))
    assert not W.is_irreducible((wp(1), wm(0)))
    assert W.is_irreducible(())
    assert W.is_irreducible((g_(1), g_(1)))


def random_poly(rng, max_terms=5, kmax=4):
    letters = all_letters(kmax)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 3)))
        terms[word] = qf.q_pow(rng.randint(-3, 3)) * qf.of(rng.randint(-4, 4))
    return NCPoly(terms)


def test_sigma_examples():
    assert W.sigma(NCPoly.gen(wm(0))) == NCPoly.gen(wp(1))
    p = NCPoly.word((g_(2), wm(3)))
    assert W.sigma(W.sigma(p)) == p
    q = NCPoly.word((g_(1), wm(0)), qf.Q) + NCPoly.gen(wp(2))
    expected = NCPoly.word((gt_(1), wp(1)), qf.Q) + NCPoly.gen(wm(1))
    assert W.sigma(q) == expected


def test_dagger_examples():
    assert W.dagger(NCPoly.word((wm(0), g_(1)))) == NCPoly.word((gt_(1), wm(0)))
    p = NCPoly.word((wp(2), gt_(3), wm(1)))
    assert W.dagger(W.dagger(p)) == p
    # the two maps commute
    x = NCPoly.word((wm(0), g_(1)))
    both = W.sigma(W.dagger(x))
    assert both == W.dagger(W.sigma(x))
    assert both == NCPoly.word((g_(1), wp(1)))


def test_sigma_dagger_commuting_involutions_random():
    rng = random.Random(5)
    for _ in range(40):
        p = random_poly(rng)
        assert W.sigma(W.sigma(p)) == p
        assert W.dagger(W.dagger(p)) == p
        assert W.sigma(W.dagger(p)) == W.dagger(W.sigma(p))


def test_sigma_is_multiplicative():
    rng = random.Random(6)
    for _ in range(20):
        p, q = random_poly(rng, 3), random_poly(rng, 3)
        assert W.sigma(p * q) == W.sigma(p) * W.sigma(q)
        assert W.dagger(p * q) == W.dagger(q) * W.dagger(p)


def test_symbol_from_subscript():
    assert W.symbol_from_subscript("W", -2) == wm(2)
    assert W.symbol_from_subscript("W", 3) == wp(3)
    assert W.symbol_from_subscript("W", 0) == wm(0)
    g0 = W.symbol_from_subscript("G", 0)
    assert g0 == qf.g0_const()
    assert W.symbol_from_subscript("Gt", 0) == qf.g0_const()
    with pytest.raises(IndexError):
        W.symbol_from_subscript("G", -1)


def test_maps_preserve_relation_ideal():
    for name, poly in W.defining_relations(3):
        assert rewrite.normal_form(W.sigma(poly)).is_zero(), f"sigma on {name}"
        assert rewrite.normal_form(W.dagger(poly)).is_zero(), f"dagger on {name}"


def test_ncpoly_equality_is_structural():
    p = NCPoly.word((wm(0), wp(1)), qf.q_int(2))
    q = NCPoly.word((wm(0), wp(1))) * qf.q_int(2)
    assert p == q and hash(p) == hash(q)
    assert (p - q).is_zero()
