"""Strata, positive parametrization, duality, and the double Bruhat embedding."""

import random
from fractions import Fraction
from itertools import product

import pytest

from tnnflag import ratlin, slk, twisted
from tnnflag.verify import brute_circ_r, brute_demazure
from tnnflag.weyl import from_perm, type_a_group


def flag_coord(f):
    """Affine chart coordinate of an SL2 flag: ratio of the first column."""
    col = [row[0] for row in f.rep]
    return col[1] / col[0]


def all_reduced_words(group, w):
    if w.length == 0:
        return [()]
    out = []
    for i in group.right_descents(w):
        shorter = group.multiply(w, group.simple(i))
        out.extend([word + (i,) for word in all_reduced_words(group, shorter)])
    return out


def test_stratum_examples(S3):
    # (y(1), y(2)): both factors in the s-cell, product lower unipotent
    z = twisted.ZPoint((slk.y_gen(2, 1, 1), slk.y_gen(2, 1, 2)))
    v, wbar = twisted.stratum(z)
    assert v.length == 0 and [w.word for w in wbar] == [(0,), (0,)]
    # (y(1), sdot): the convolution flag moves to the far edge
    z = twisted.ZPoint((slk.y_gen(2, 1, 1), slk.sdot(2, 1)))
    v, wbar = twisted.stratum(z)
    assert v.word == (0,) and [w.word for w in wbar] == [(0,), (0,)]
    # representatives of Weyl elements land in their own cells
    rng = random.Random(2)
    elems = S3.elements_up_to_length(3)
    for _ in range(5):
        ws = [rng.choice(elems) for _ in range(2)]
        z = twisted.ZPoint(tuple(
            slk.wdot_from_word(3, tuple(t + 1 for t in w.word)) for w in ws
        ))
        v, wbar = twisted.stratum(z)
        assert list(wbar) == ws
        prod = ratlin.mat_mul(*z.factors)
        assert v == from_perm(S3, slk.opposite_cell(prod))


def test_nonempty(S3):
    e = S3.identity
    s1, s2 = S3.simple(0), S3.simple(1)
    for w in S3.elements_up_to_length(3):
        assert twisted.nonempty(e, (w, w))
    A1 = type_a_group(2)
    s = A1.simple(0)
    assert twisted.nonempty(s, (s, A1.identity))
    assert not twisted.nonempty(s, (A1.identity, A1.identity))
    w0 = S3.from_word((0, 1, 0))
    assert twisted.nonempty(w0, (S3.multiply(s1, s2), S3.multiply(s2, s1)))


def test_zpoint_validation():
    with pytest.raises(ValueError):
        twisted.ZPoint(())
    with pytest.raises(ValueError):
        twisted.ZPoint((((Fraction(0), Fraction(0)), (Fraction(0), Fraction(0))),))


def test_parametrize_cell_examples():
    A1 = type_a_group(2)
    e, s = A1.identity, A1.simple(0)
    z = twisted.parametrize_cell(s, (s, s), [Fraction(3, 2)])
    assert z.factors[0] == slk.y_gen(2, 1, Fraction(3, 2))
    assert z.factors[1] == slk.sdot(2, 1)
    # rank-0 cell: no parameters
    z0 = twisted.parametrize_cell(s, (s, e), [])
    assert z0.factors[0] == slk.sdot(2, 1)
    with pytest.raises(ValueError):
        twisted.parametrize_cell(s, (e, e), [])
    with pytest.raises(ValueError):
        twisted.parametrize_cell(e, (s, s), [Fraction(1)])  # wrong count
    with pytest.raises(ValueError):
        twisted.parametrize_cell(e, (s, s), [Fraction(1), Fraction(-1)])


def test_parametrize_roundtrip_with_word_choices(S3):
    """Containment holds for every reduced-word choice, not just canonical."""
    rng = random.Random(19)
    elems = S3.elements_up_to_length(3)
    for wbar in product(elems, repeat=2):
        words_per_factor = [all_reduced_words(S3, w)[:2] for w in wbar]
        for v in S3.lower_interval(S3.m_star(wbar)):
            dim = sum(w.length for w in wbar) - v.length
            for combo in product(*words_per_factor):
                for _ in range(2):
                    params = twisted.random_params(dim, rng)
                    z = twisted.parametrize_cell(v, wbar, params, words=list(combo))
                    assert twisted.stratum(z) == (v, wbar)


def test_gauge_invariance_of_stratum(S3):
    rng = random.Random(23)
    s1, s2 = S3.simple(0), S3.simple(1)
    w0 = S3.from_word((0, 1, 0))
    points = [
        twisted.parametrize_cell(s1, (w0, S3.multiply(s2, s1)), twisted.random_params(4, rng)),
        twisted.parametrize_cell(S3.identity, (s1, s2), twisted.random_params(2, rng)),
    ]
    for z in points:
        base = twisted.stratum(z)
        for _ in range(200):
            zp = twisted.perturb_gauge(z, rng)
            assert twisted.gauge_eq(z, zp)
            assert twisted.stratum(zp) == base


def test_alpha_and_convolution():
    A1 = type_a_group(2)
    # n = 1: alpha and convolution are the same flag
    z1 = twisted.ZPoint((slk.y_gen(2, 1, 5),))
    assert twisted.alpha(z1) == (twisted.convolution(z1),)
    # the two-factor picture: coordinates (a, a + b)
    z = twisted.ZPoint((slk.y_gen(2, 1, 1), slk.y_gen(2, 1, 2)))
    flags = twisted.alpha(z)
    assert twisted.convolution(z) == flags[-1]
    assert [flag_coord(f) for f in flags] == [1, 3]


def test_alpha_separates_gauge_classes():
    """alpha is injective: equal images force equal gauge classes."""
    A1 = type_a_group(2)
    rng = random.Random(29)
    e, s = A1.identity, A1.simple(0)
    strata = [(v, wbar) for wbar in product((e, s), repeat=2)
              for v in A1.lower_interval(A1.m_star(wbar))]
    points = []
    for _ in range(100):
        v, wbar = rng.choice(strata)
        dim = sum(w.length for w in wbar) - v.length
        points.append(twisted.parametrize_cell(v, wbar, twisted.random_params(dim, rng)))
    images = [tuple(f.canonical() for f in twisted.alpha(z)) for z in points]
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            same_alpha = images[i] == images[j]
            assert same_alpha == twisted.gauge_eq(points[i], points[j])


def test_alpha_image_of_top_sl2_cell_is_exact_wedge():
    """The top SL2 cell hits exactly the rational points with 0 < a < b."""
    A1 = type_a_group(2)
    e, s = A1.identity, A1.simple(0)
    rng = random.Random(31)
    for _ in range(25):
        t1, t2 = twisted.random_params(2, rng)
        z = twisted.parametrize_cell(e, (s, s), [t1, t2])
        a, b = [flag_coord(f) for f in twisted.alpha(z)]
        assert 0 < a < b
        assert (a, b) == (t1, t1 + t2)
    # surjectivity onto a grid of chart points with 0 < a < b
    for a_num in range(1, 5):
        for b_num in range(a_num + 1, 6):
            a, b = Fraction(a_num, 3), Fraction(b_num, 3)
            z = twisted.parametrize_cell(e, (s, s), [a, b - a])
            assert [flag_coord(f) for f in twisted.alpha(z)] == [a, b]


def test_injectivity_on_parameter_grids(S3):
    """Distinct small-grid parameter vectors give distinct gauge classes."""
    A1 = type_a_group(2)
    grid = [Fraction(1), Fraction(1, 2), Fraction(2), Fraction(1, 3), Fraction(3)]
    cells = [
        (A1.identity, (A1.simple(0), A1.simple(0))),
        (S3.identity, (S3.simple(0), S3.simple(1))),
        (S3.simple(0), (S3.from_word((0, 1, 0)), S3.identity)),
        (S3.identity, (S3.from_word((0, 1)), S3.simple(1))),
    ]
    for v, wbar in cells:
        group = v.group
        dim = sum(w.length for w in wbar) - v.length
        assert dim <= 3
        seen = {}
        for params in product(grid, repeat=dim):
            z = twisted.parametrize_cell(v, wbar, list(params))
            key = tuple(f.canonical() for f in twisted.alpha(z))
            assert key not in seen, (params, seen[key])
            seen[key] = params


def test_degeneration_lands_in_closure_index_set(S3):
    """Zero substitutions only reach labels from the closure index set."""
    rng = random.Random(37)
    w0 = S3.from_word((0, 1, 0))
    s1 = S3.simple(0)
    for v, wbar in [
        (S3.identity, (w0, w0)),
        (s1, (w0, S3.multiply(S3.simple(1), s1))),
        (S3.identity, (S3.simple(0), S3.simple(1))),
    ]:
        group = v.group
        dim = sum(w.length for w in wbar) - v.length
        params = twisted.random_params(dim, rng)
        words = [w.word for w in wbar]
        vbar_words = None
        for drop in range(dim):
            degenerate = list(params)
            degenerate[drop] = Fraction(0)
            z = _build_unchecked(v, wbar, words, degenerate)
            v2, wbar2 = twisted.stratum(z)
            assert group.bruhat_leq(v, v2)
            assert all(group.bruhat_leq(b, a) for a, b in zip(wbar, wbar2))
            assert group.bruhat_leq(v2, group.m_star(wbar2))


def _build_unchecked(v, wbar, words, params):
    """mr products with one parameter possibly zero (leaves the open cell)."""
    from tnnflag.weyl import positive_tuple

    group = v.group
    k = group.rank + 1
    vbar = positive_tuple(v, wbar)
    factors = []
    pos = 0
    for vi, word in zip(vbar, words):
        sub = group.positive_subexpression(vi, word)
        out = ratlin.identity(k)
        for letter, t in zip(word, sub):
            if t is None:
                out = ratlin.mat_mul(out, slk.y_gen(k, letter + 1, params[pos]))
                pos += 1
            else:
                out = ratlin.mat_mul(out, slk.sdot(k, letter + 1))
        factors.append(out)
    return twisted.ZPoint(tuple(factors))


def test_phi_z_single_factor_reduces_to_phi_flag():
    z = twisted.ZPoint((slk.y_gen(2, 1, 3),))
    image = twisted.phi_Z(z)
    assert slk.FlagPoint(image.factors[0]) == slk.phi_flag(slk.FlagPoint(z.factors[0]))


def test_phi_z_k2_example():
    z = twisted.ZPoint((slk.y_gen(2, 1, 1), slk.y_gen(2, 1, 2)))
    image = twisted.phi_Z(z)
    v, wbar = twisted.stratum(image)
    assert v.length == 0 and [w.word for w in wbar] == [(0,), (0,)]
    assert twisted.gauge_eq(twisted.phi_Z(image), z)


def test_phi_z_checked_mode_flag():
    old = twisted.set_checked(False)
    try:
        z = twisted.ZPoint((slk.y_gen(2, 1, 1), slk.y_gen(2, 1, 2)))
        twisted.phi_Z(z)
    finally:
        twisted.set_checked(old)
    assert twisted.CHECKED == old


def _sl2_params_from_chart(image, v2, wbar2):
    """Recover positive parameters of an SL2 cell point from its chart coords.

    Each skipped letter contributes a lower elementary factor, so the
    parameters are the successive differences of the partial flag
    coordinates at the factors that carry one.
    """
    from tnnflag.weyl import positive_tuple

    coords = [flag_coord(f) for f in twisted.alpha(image)]
    vbar = positive_tuple(v2, wbar2)
    params = []
    prev = Fraction(0)
    for i, (vi, wi) in enumerate(zip(vbar, wbar2)):
        if wi.length == 1 and vi.length == 0:
            params.append(coords[i] - prev)
        prev = coords[i]
    return params


def test_duality_images_reproducible_in_sl2():
    """phi_Z images of positive points are again positively parametrized."""
    A1 = type_a_group(2)
    e, s = A1.identity, A1.simple(0)
    rng = random.Random(41)
    for v, wbar, dim in [(e, (s, s), 2), (s, (s, s), 1)]:
        for _ in range(8):
            z = twisted.parametrize_cell(v, wbar, twisted.random_params(dim, rng))
            image = twisted.phi_Z(z)
            v2, wbar2 = twisted.stratum(image)
            params = _sl2_params_from_chart(image, v2, wbar2)
            assert all(p > 0 for p in params)
            rebuilt = twisted.parametrize_cell(v2, wbar2, params)
            assert twisted.gauge_eq(rebuilt, image)


def test_double_bruhat_embed_examples(S3):
    A1 = type_a_group(2)
    # identity: (id, w0dot) with factor labels e and w0
    z = twisted.double_bruhat_embed(ratlin.identity(3))
    v, wbar = twisted.stratum(z)
    assert [w.word for w in wbar] == [(), (0, 1, 0)]
    assert v == S3.from_word((0, 1, 0))
    assert (v, wbar) == twisted.db_stratum_convention(S3, S3.identity, S3.identity)
    # k = 2: y(a) x(b) lands in the recorded stratum for (s, s)
    g = twisted.db_positive(2, (1,), (1,), [Fraction(1), Fraction(2)])
    assert slk.is_tnn(g)
    assert slk.double_bruhat_labels(g) == ((2, 1), (2, 1))
    s = A1.simple(0)
    assert twisted.stratum(twisted.double_bruhat_embed(g)) == twisted.db_stratum_convention(
        A1, s, s
    )


def test_db_positive_validation():
    with pytest.raises(ValueError):
        twisted.db_positive(2, (1,), (1,), [Fraction(1)])
    with pytest.raises(ValueError):
        twisted.db_positive(2, (1,), (1,), [Fraction(1), Fraction(-2)])


def test_generic_bounds(S3):
    e = S3.identity
    s1, s2 = S3.simple(0), S3.simple(1)
    w0 = S3.from_word((0, 1, 0))
    for v in S3.elements_up_to_length(3):
        for w in S3.elements_up_to_length(3):
            assert twisted.generic_bounds(e, v, w) == (w, v)
    assert twisted.generic_bounds(w0, e, w0) == (e, w0)
    # cross-check the defining brute-force min/max on all S3 triples
    for u in S3.elements_up_to_length(3):
        for v in S3.elements_up_to_length(3):
            for w in S3.elements_up_to_length(3):
                vp, wp = twisted.generic_bounds(u, v, w)
                assert vp == brute_circ_r(S3, w, S3.inverse(u))
                assert wp == brute_demazure(S3, v, u)


def test_zpoint_json_round_trip():
    z = twisted.ZPoint((slk.y_gen(2, 1, Fraction(3, 2)), slk.sdot(2, 1)))
    assert twisted.ZPoint.from_json(z.to_json()) == z
