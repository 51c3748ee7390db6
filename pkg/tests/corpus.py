"""Seeded random inputs shared by the tests."""

from __future__ import annotations

import random

from bridgekit.diagram import (
    LOWER,
    UPPER,
    ChordDiagram,
    Crossing,
    DiagramError,
    Puncture,
    validate,
)
from bridgekit.plat import PlatPresentation, plat_closure


def random_word(rng: random.Random, n: int, length: int):
    return [(rng.randint(1, 2 * n - 1), rng.choice((1, -1))) for _ in range(length)]


def random_plat(rng: random.Random, n_max=4, len_max=10, n_min=1) -> PlatPresentation:
    n = rng.randint(n_min, n_max)
    return PlatPresentation.from_letters(n, random_word(rng, n, rng.randint(0, len_max)))


def random_reduced(rng: random.Random, n_max=4, len_max=10, n_min=1) -> ChordDiagram:
    return plat_closure(random_plat(rng, n_max, len_max, n_min))


def _insert(d: ChordDiagram, pos: int, count: int):
    """Boundary with ``count`` fresh crossings inserted before ``pos``; old -> new map."""
    top = max((p.id for p in d.boundary if isinstance(p, Crossing)), default=0)
    pts = list(d.boundary[:pos]) + [Crossing(top + i + 1) for i in range(count)] + list(d.boundary[pos:])
    shift = lambda a: a if a < pos else a + count
    return pts, shift


def add_bigon(rng: random.Random, d: ChordDiagram) -> ChordDiagram | None:
    """Push a finger of one chord across the loop; ``None`` if the try is invalid."""
    hemi = rng.choice((UPPER, LOWER))
    other = LOWER if hemi == UPPER else UPPER
    chords = d.chords(other)
    if not chords:
        return None
    u, v = rng.choice(chords)
    pos = rng.randint(0, d.size)
    pts, sh = _insert(d, pos, 2)
    x, y = pos, pos + 1
    u, v = sh(u), sh(v)
    kept = [(sh(a), sh(b)) for a, b in chords if (sh(a), sh(b)) != (u, v)]
    same = [(sh(a), sh(b)) for a, b in d.chords(hemi)] + [(x, y)]
    for split in (((u, x), (y, v)), ((u, y), (x, v))):
        new = kept + list(split)
        raw = {"n": d.n, "boundary": pts, "labels": d.labels,
               UPPER: same if hemi == UPPER else new,
               LOWER: new if hemi == UPPER else same}
        try:
            return validate(raw)
        except DiagramError:
            continue
    return None


def add_end_bigon(rng: random.Random, d: ChordDiagram) -> ChordDiagram | None:
    """Drag a puncture's chord end once around the loop next to it."""
    i = rng.randint(1, 2 * d.n)
    q = d.puncture_position(i)
    hemi = UPPER if d.partners(UPPER)[q] is not None else LOWER
    other = LOWER if hemi == UPPER else UPPER
    w = d.partners(hemi)[q]
    pos = q + rng.choice((0, 1))
    pts, sh = _insert(d, pos, 1)
    x = pos
    q, w = sh(q), sh(w)
    mine = [(sh(a), sh(b)) for a, b in d.chords(hemi) if {sh(a), sh(b)} != {q, w}] + [(x, w)]
    theirs = [(sh(a), sh(b)) for a, b in d.chords(other)] + [(q, x)]
    raw = {"n": d.n, "boundary": pts, "labels": d.labels,
           hemi: mine, other: theirs}
    try:
        return validate(raw)
    except DiagramError:
        return None


def random_unreduced(rng: random.Random, moves=6, **kw) -> ChordDiagram:
    """A reduced plat diagram with a few bigons and end-bigons added."""
    d = random_reduced(rng, **kw)
    added = 0
    tries = 0
    while added < moves and tries < 20 * moves:
        tries += 1
        e = (add_bigon if rng.random() < 0.6 else add_end_bigon)(rng, d)
        if e is not None:
            d = e
            added += 1
    return d


def is_puncture(p) -> bool:
    return isinstance(p, Puncture)
