import random

import pytest
from hypothesis import given, settings, strategies as st

from bridgekit.diagram import encode, is_reduced
from bridgekit.families import gen_kn
from bridgekit.plat import (
    BraidWord,
    IndexOutOfRange,
    ParseError,
    PlatPresentation,
    apply_generator,
    apply_word,
    component_count,
    destabilize,
    parse_braid,
    plat_closure,
    stabilize,
    standard_diagram,
)

from corpus import random_reduced, random_word
from oracles import extract, pl_twist, realize, standard_system


def plat(n, text):
    return PlatPresentation(n, parse_braid(text, 2 * n))


def test_standard_diagram():
    d1 = standard_diagram(1)
    assert d1.upper == ((0, 1),) and d1.lower == ()
    d3 = standard_diagram(3)
    assert len(d3.upper) == 3 and d3.crossing_count == 0
    with pytest.raises(ValueError):
        standard_diagram(0)


def test_parse_braid():
    assert parse_braid("").letters == ()
    assert parse_braid("2 -2").letters == ((2, 1), (2, -1))
    assert parse_braid("1, -3", 4).letters == ((1, 1), (3, -1))
    with pytest.raises(ParseError):
        parse_braid("0")
    with pytest.raises(ParseError):
        parse_braid("two")
    with pytest.raises(IndexOutOfRange):
        parse_braid("4", 4)


def test_inverse_pair_closes_to_standard():
    assert plat_closure(plat(2, "2 -2")) == standard_diagram(2)


def test_empty_word():
    assert plat_closure(plat(2, "")) == standard_diagram(2)


def test_s1_on_one_bow():
    # the bow flips over its own lower arc; canonical form moves it back up
    for s in (1, -1):
        assert encode(apply_generator(standard_diagram(1), 1, s)) == encode(standard_diagram(1))
        assert extract(pl_twist(standard_system(1), 1, s)) == standard_diagram(1)


def test_s2_on_two_bows():
    d = apply_generator(standard_diagram(2), 2, 1)
    assert encode(d) == encode(extract(pl_twist(standard_system(2), 2, 1)))
    assert d.endpoints() == {1: (1, 3), 2: (2, 4)}
    # taut already with no crossings: one arc runs below the loop
    assert d.crossing_count == 0
    assert component_count(d) == 1


def test_generator_out_of_range():
    with pytest.raises(IndexOutOfRange):
        apply_generator(standard_diagram(2), 4, 1)
    with pytest.raises(ValueError):
        apply_generator(standard_diagram(2), 1, 2)


def test_inverse_on_random_diagrams():
    rng = random.Random(21)
    for _ in range(1000):
        d = random_reduced(rng, n_max=4, len_max=8)
        k = rng.randint(1, 2 * d.n - 1)
        s = rng.choice((1, -1))
        assert encode(apply_generator(apply_generator(d, k, s), k, -s)) == encode(d)


def test_results_are_reduced():
    rng = random.Random(2)
    for _ in range(100):
        assert is_reduced(random_reduced(rng, n_min=2, len_max=14))


def test_labels_follow_the_strands():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(1, 4)
        w = random_word(rng, n, rng.randint(0, 10))
        d = apply_word(standard_diagram(n), w)
        # arc i starts on top at strands 2i-1, 2i; follow the permutation
        where = list(range(1, 2 * n + 1))
        for k, _ in w:
            where[k - 1], where[k] = where[k], where[k - 1]
        expect = {i // 2 + 1: [] for i in range(2 * n)}
        for pos, strand in enumerate(where, start=1):
            expect[(strand + 1) // 2].append(pos)
        assert d.endpoints() == {lab: tuple(sorted(v)) for lab, v in expect.items()}


def test_stabilize():
    p = stabilize(plat(1, ""))
    assert p.n == 2 and p.word == BraidWord(4, ((2, 1),))
    q = stabilize(plat(2, "1 -3"))
    assert q.word.letters == ((1, 1), (3, -1), (4, 1))


def test_destabilize():
    got = destabilize(plat_closure(plat(2, "2")))
    assert got is not None and encode(got) == encode(standard_diagram(1))
    assert destabilize(standard_diagram(2)) is None
    assert destabilize(plat_closure(gen_kn(4))) is None


def test_destabilize_stabilized():
    rng = random.Random(4)
    found = 0
    for _ in range(20):
        n = rng.randint(1, 3)
        p = PlatPresentation.from_letters(n, random_word(rng, n, rng.randint(0, 6)))
        got = destabilize(plat_closure(stabilize(p)))
        if got is not None:
            assert got.n == n
            assert component_count(got) == component_count(plat_closure(p))
            found += 1
    assert found == 20


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.data())
def test_braid_relations(n, data):
    m = 2 * n
    d = data.draw(st.integers(0, 2**32).map(lambda s: random_reduced(random.Random(s), n, 6, n)))
    k = data.draw(st.integers(1, m - 1))
    s = data.draw(st.sampled_from((1, -1)))
    if k + 1 <= m - 1:
        a = apply_word(d, [(k, s), (k + 1, s), (k, s)])
        b = apply_word(d, [(k + 1, s), (k, s), (k + 1, s)])
        assert encode(a) == encode(b)
    far = [g for g in range(1, m) if abs(g - k) >= 2]
    if far:
        g = data.draw(st.sampled_from(far))
        t = data.draw(st.sampled_from((1, -1)))
        assert encode(apply_word(d, [(k, s), (g, t)])) == encode(apply_word(d, [(g, t), (k, s)]))
