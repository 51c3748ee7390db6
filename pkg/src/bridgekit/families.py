"""Concrete plats and diagrams: the knots K_n, the quotient family, and baselines.

Over/under conventions.  A moving strand ("weft") passing *over* a fixed
strand goes through the upper hemisphere.  With the sign convention of
:func:`bridgekit.plat.apply_generator` that is ``s_k^+1`` when the weft moves
from position ``k+1`` to ``k`` and ``s_k^-1`` when it moves from ``k`` to
``k+1``.  A left-handed half-twist is ``s_k^-1``.
"""

from __future__ import annotations

import warnings
from importlib import resources

from .diagram import ChordDiagram
from .plat import BraidWord, PlatPresentation, standard_diagram


class HypothesisWarning(UserWarning):
    """Parameters outside the range where the destabilization result applies."""


def _pass(pos: int, target: int, over) -> list[tuple[int, int]]:
    """Letters moving the strand at ``pos`` to ``target``.

    ``over(t)`` says whether the ``t``-th fixed strand crossed (counting from
    0 at the start of the pass) is passed over.
    """
    letters = []
    t = 0
    while pos != target:
        if target < pos:
            letters.append((pos - 1, 1 if over(t) else -1))
            pos -= 1
        else:
            letters.append((pos, -1 if over(t) else 1))
            pos += 1
        t += 1
    return letters


def kn_word(n: int) -> BraidWord:
    """The braid of K_n on ``2n`` strands.

    One thread, starting as the left end of the rightmost top bow, crosses
    the other strands in five passes (wefts), alternately leftwards and
    rightwards.  Passes 1, 4 and 5 go over two strands, under two, and so
    on; passes 2 and 3 go entirely under and entirely over.  The exceptional
    ends: pass 1 opens with a single under at the far left, pass 2 turns
    two strands short of the right edge, passes 4 and 5 turn one short, and
    pass 4 flips its second crossing.
    """
    if n < 4:
        raise ValueError(f"K_n needs n >= 4, got n = {n}")
    m = 2 * n
    w = []
    # pass 1: from q(2n-1) to the far left; crossing t meets position 2n-2-t
    w += _pass(m - 1, 1, lambda t: (m - 2 - t) % 4 in (2, 3))
    w += _pass(1, m - 2, lambda t: False)
    w += _pass(m - 2, 1, lambda t: True)
    # pass 4 counts its pattern from the right end: under, under, over, over, ...
    span = m - 2
    w += _pass(1, m - 1, lambda t: ((span - 1 - t) % 4 in (2, 3)) != (t == 1))
    w += _pass(m - 1, 2, lambda t: t % 4 < 2)
    return BraidWord(m, tuple(w))


def gen_kn(n: int) -> PlatPresentation:
    return PlatPresentation(n, kn_word(n))


def _full_twist(first: int, strands: int) -> list[tuple[int, int]]:
    gens = list(range(first, first + strands - 1))
    return [(g, 1) for _ in range(strands) for g in gens]


def gen_quotient(p1: int, p2: int, p3: int, p4: int, q: int, k: int) -> PlatPresentation:
    """A ``(2k+5)``-bridge plat for the knot K_{p1,p2,p3,p4,q,k}.

    Layout on ``N = 4k+10`` strands, top to bottom: ``q`` full twists on the
    ``2k+1`` middle strands, boxes of ``p_i`` left-handed half-twists on the
    strand pairs starting at 2, 4, N-4 and N-2, and a closing pass carrying
    strand 1 over to the right edge so the closure is connected.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"k must be a non-negative integer, got {k!r}")
    bad = [f"|2*{p}+1| < 5" for p in (p1, p2, p3, p4) if abs(2 * p + 1) < 5]
    if q % 2:
        bad.append(f"q = {q} is odd")
    if abs(q) < 12:
        bad.append(f"|q| = {abs(q)} < 12")
    if bad:
        warnings.warn("destabilization hypotheses fail: " + "; ".join(bad),
                      HypothesisWarning, stacklevel=2)
    m = 4 * k + 10
    centre = m // 2
    twist = _full_twist(centre - k, 2 * k + 1)
    w = []
    for _ in range(abs(q)):
        w += twist if q > 0 else [(g, -s) for g, s in reversed(twist)]
    for g, p in zip((2, 4, m - 4, m - 2), (p1, p2, p3, p4)):
        w += [(g, -1 if p > 0 else 1)] * abs(p)
    w += [(g, 1) for g in range(1, m)]
    return PlatPresentation(m // 2, BraidWord(m, tuple(w)))


def fig8_example() -> ChordDiagram:
    """A 4-bridge knot diagram where G(1,2,upper) is 2-connected and G(2,3,upper) is not.

    Provenance: the closure of the 8-strand plat
    ``-1 1 2 -7 6 -7 5 7 4 7 -1 5 -6 3 2 -2 6 3 -2 -1 -3 2 -7 -2 4 7 5 1 4 1``,
    relabelled with the default arc numbering and stored in ``data/fig8.json``.
    It has 16 crossings and was picked by search for these two verdicts.
    """
    from .io import loads

    text = resources.files("bridgekit").joinpath("data/fig8.json").read_text()
    return loads(text)


def standard_unlink(n: int) -> ChordDiagram:
    return standard_diagram(n)


__all__ = ["HypothesisWarning", "kn_word", "gen_kn", "gen_quotient", "fig8_example",
           "standard_unlink"]
