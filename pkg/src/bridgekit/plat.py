"""Braid half-twists acting on bridge diagrams, and plat presentations.

The generator ``s_k`` is the half-twist of the punctured sphere supported in a
thin disk around the segment ``[q_k, q_(k+1)]`` of the loop.  With sign +1 the
puncture at ``q_k`` travels through the lower hemisphere (counterclockwise
rotation when the upper hemisphere is drawn above the loop).

Inside the support disk every chord end sitting on the segment is a short
stub leaving the disk through its top (upper chords) or bottom (lower chords).
After the twist the segment contents are rotated by a half turn, and each stub
is dragged half way around the annulus, which makes it cross the loop once:
top stubs on the left of the segment and bottom stubs on the right for a
positive twist, the other way round for a negative one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .diagram import (
    LOWER,
    UPPER,
    ChordDiagram,
    Crossing,
    Puncture,
    _build,
    canonical_form,
    validate,
)


class ParseError(ValueError):
    pass


class IndexOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for k, s in self.letters:
            if not 1 <= k <= self.strand_count - 1:
                raise IndexOutOfRange(f"generator s_{k} outside 1..{self.strand_count - 1}")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(k * s) for k, s in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strand_count, tuple((k, -s) for k, s in reversed(self.letters)))


@dataclass(frozen=True)
class PlatPresentation:
    n: int
    word: BraidWord

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("bridge number must be positive")
        if self.word.strand_count != 2 * self.n:
            raise ValueError(f"word on {self.word.strand_count} strands, expected {2 * self.n}")

    @classmethod
    def from_letters(cls, n, letters):
        return cls(n, BraidWord(2 * n, tuple(_as_letter(x) for x in letters)))

    def to_dict(self) -> dict:
        return {"n": self.n, "word": str(self.word)}


def _as_letter(x):
    if isinstance(x, int):
        if x == 0:
            raise ParseError("generator index 0 is not allowed")
        return (abs(x), 1 if x > 0 else -1)
    k, s = x
    return (int(k), int(s))


def parse_braid(text: str, strand_count: int | None = None) -> BraidWord:
    """Parse ``"2 -1 3"`` as ``s_2 s_1^-1 s_3``."""
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"not a signed integer: {tok!r}") from None
        if v == 0:
            raise ParseError("generator index 0 is not allowed")
        letters.append((abs(v), 1 if v > 0 else -1))
    if strand_count is None:
        strand_count = max((k for k, _ in letters), default=0) + 1
    return BraidWord(strand_count, tuple(letters))


def standard_diagram(n: int) -> ChordDiagram:
    """``n`` upper bows over the lower arcs, no crossings."""
    if n < 1:
        raise ValueError("standard diagram needs n >= 1")
    pts = tuple(Puncture(i) for i in range(1, 2 * n + 1))
    upper = tuple((2 * i, 2 * i + 1) for i in range(n))
    labels = tuple(i // 2 + 1 for i in range(2 * n))
    return ChordDiagram(n, pts, upper, (), labels)


def apply_generator(d: ChordDiagram, k: int, sign: int) -> ChordDiagram:
    """Image of ``d`` under ``s_k^sign``, reduced and in canonical form."""
    n = d.n
    if not 1 <= k <= 2 * n - 1:
        raise IndexOutOfRange(f"generator s_{k} outside 1..{2 * n - 1}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    pts = d.boundary
    size = len(pts)
    lo_pos = d.puncture_position(k)
    hi_pos = d.puncture_position(k + 1)
    seg = range(lo_pos, hi_pos + 1)
    up, lo = d.partners(UPPER), d.partners(LOWER)
    top = [p for p in seg if up[p] is not None]
    bottom = [p for p in seg if lo[p] is not None]

    # node keys: ("o", p) untouched, ("m", p) rotated segment point,
    # ("t", p) / ("b", p) the new crossing made by the stub at p
    next_id = max((p.id for p in pts if isinstance(p, Crossing)), default=0) + 1
    kind = {}
    for p in range(size):
        if p < lo_pos or p > hi_pos:
            kind["o", p] = pts[p]
    for p in seg:
        q = pts[p]
        if isinstance(q, Puncture):
            q = Puncture(k + 1 if q.index == k else k)
        kind["m", p] = q
    for p in top:
        kind["t", p] = Crossing(next_id)
        next_id += 1
    for p in bottom:
        kind["b", p] = Crossing(next_id)
        next_id += 1

    middle = [("m", p) for p in reversed(seg)]
    tops = [("t", p) for p in top]
    bottoms = [("b", p) for p in bottom]
    order = [("o", p) for p in range(lo_pos)]
    order += (tops + middle + bottoms) if sign > 0 else (bottoms + middle + tops)
    order += [("o", p) for p in range(hi_pos + 1, size)]

    new_upper, new_lower = set(), set()
    for a, b in d.upper:
        if a not in seg and b not in seg:
            new_upper.add((("o", a), ("o", b)))
    for a, b in d.lower:
        if a not in seg and b not in seg:
            new_lower.add((("o", a), ("o", b)))
    for p in top:
        e = up[p]
        outer = ("t", e) if e in seg else ("o", e)
        new_upper.add(tuple(sorted((("t", p), outer))))
        new_lower.add((("t", p), ("m", p)))
    for p in bottom:
        e = lo[p]
        outer = ("b", e) if e in seg else ("o", e)
        new_lower.add(tuple(sorted((("b", p), outer))))
        new_upper.add((("b", p), ("m", p)))

    where = {key: i for i, key in enumerate(order)}
    labels = d.arc_labels()
    labels = list(labels)
    labels[k - 1], labels[k] = labels[k], labels[k - 1]
    out = _build(
        n,
        [kind[key] for key in order],
        [(where[a], where[b]) for a, b in new_upper],
        [(where[a], where[b]) for a, b in new_lower],
        tuple(labels),
    )
    return canonical_form(out)


def apply_word(d: ChordDiagram, word) -> ChordDiagram:
    letters = word.letters if isinstance(word, BraidWord) else word
    for k, s in letters:
        d = apply_generator(d, k, s)
    return canonical_form(d)


def plat_closure(p: PlatPresentation) -> ChordDiagram:
    """Bridge diagram of the plat: top bows pushed down through the word."""
    d = standard_diagram(p.n)
    for k, s in p.word.letters:
        d = apply_generator(d, k, s)
    return canonical_form(d)


def stabilize(p: PlatPresentation) -> PlatPresentation:
    """Add one bridge: a new bow at the right, joined in by ``s_(2n)``."""
    word = BraidWord(2 * p.n + 2, p.word.letters + ((2 * p.n, 1),))
    return PlatPresentation(p.n + 1, word)


def component_count(d: ChordDiagram) -> int:
    """Number of link components of (upper arcs) + (lower arcs)."""
    ends = d.endpoints()
    parent = list(range(2 * d.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in ends.values():
        parent[find(a)] = find(b)
    for i in range(1, d.n + 1):
        parent[find(2 * i - 1)] = find(2 * i)
    return len({find(x) for x in range(1, 2 * d.n + 1)})


# --- destabilization ----------------------------------------------------------

def _gap_bow(d: ChordDiagram):
    """Find an upper arc that is a single chord spanning an empty gap."""
    size = d.size
    for j in range(1, d.n + 1):
        a = d.puncture_position(2 * j)
        b = d.puncture_position(2 * j + 1 if j < d.n else 1)
        if (b - a) % size != 1:
            continue
        chord = (min(a, b), max(a, b))
        for hemi in (UPPER, LOWER):
            if chord in d.chords(hemi):
                return j, hemi, chord
    return None


def _merge_gap(d: ChordDiagram, j, hemi, chord) -> ChordDiagram:
    n = d.n
    drop = set(chord)
    removed_label = d.arc_labels()[2 * j - 1]
    if j < n:
        def renumber(i):
            return i if i < 2 * j else i - 2
    else:
        def renumber(i):
            return 1 if i == 2 * n - 1 else i
    keep = [p for p in range(d.size) if p not in drop]
    where = {p: i for i, p in enumerate(keep)}
    pts = []
    for p in keep:
        q = d.boundary[p]
        pts.append(Puncture(renumber(q.index)) if isinstance(q, Puncture) else q)
    upper = [(where[a], where[b]) for a, b in d.upper if a not in drop]
    lower = [(where[a], where[b]) for a, b in d.lower if a not in drop]
    old = d.arc_labels()
    labels = [0] * (2 * n - 2)
    for idx in range(1, 2 * n + 1):
        if old[idx - 1] == removed_label:
            continue
        lab = old[idx - 1]
        labels[renumber(idx) - 1] = lab - (1 if lab > removed_label else 0)
    out = _build(n - 1, pts, upper, lower, tuple(labels))
    return canonical_form(validate(out))


def destabilize(d: ChordDiagram) -> ChordDiagram | None:
    """Try to remove one bridge; ``None`` when no elementary pattern is found.

    The pattern looked for is an upper arc consisting of a single chord that
    spans a gap with nothing in between.  The lower arcs on either side of it
    and the chord merge into one lower arc.  Before giving up, half-twists
    inside a single lower arc (which carry the lower arc system to itself)
    are tried, alone and in pairs, to expose such a chord.
    """
    if d.n < 2:
        raise ValueError("destabilization needs n >= 2")
    d = canonical_form(d)
    found = _gap_bow(d)
    if found:
        return _merge_gap(d, *found)
    moves = [(2 * a - 1, s) for a in range(1, d.n + 1) for s in (1, -1)]
    for m in moves:
        e = apply_generator(d, *m)
        found = _gap_bow(e)
        if found:
            return _merge_gap(e, *found)
    for m1, m2 in itertools.product(moves, repeat=2):
        if m1[0] == m2[0] and m1[1] == -m2[1]:
            continue
        e = apply_generator(apply_generator(d, *m1), *m2)
        found = _gap_bow(e)
        if found:
            return _merge_gap(e, *found)
    return None
