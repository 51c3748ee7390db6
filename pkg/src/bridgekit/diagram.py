"""Combinatorial bridge diagrams with the lower arcs lying in a fixed loop.

A diagram is a cyclic list of marked points on the loop ``l`` (punctures
``q1..q2n`` in order, plus transverse crossings of the upper arcs with ``l``)
together with two non-crossing chord matchings, one per hemisphere.  Chords
refer to marked points by their position in :attr:`ChordDiagram.boundary`.

Diagrams are stored rotated so that ``q1`` sits at position 0; the lower arc
``i`` is then the segment ``[q(2i-1), q(2i)]`` and gap ``i`` is the open
segment between ``q(2i)`` and ``q(2i+1)`` (gap ``n`` wraps back to ``q1``).
"""

from __future__ import annotations

import random
from collections.abc import Mapping
from dataclasses import dataclass, field

UPPER = "upper"
LOWER = "lower"
HEMISPHERES = (UPPER, LOWER)


class DiagramError(ValueError):
    """Base class for invalid diagram data."""


class MalformedIncidence(DiagramError):
    pass


class CrossingChords(DiagramError):
    pass


class ClosedComponent(DiagramError):
    pass


class BadPunctureOrder(DiagramError):
    pass


class DuplicateId(DiagramError):
    pass


@dataclass(frozen=True, slots=True)
class Puncture:
    index: int

    def __repr__(self):
        return f"q{self.index}"


@dataclass(frozen=True, slots=True)
class Crossing:
    id: int

    def __repr__(self):
        return f"x{self.id}"


Chord = tuple[int, int]


@dataclass(frozen=True)
class ChordDiagram:
    """A validated bridge diagram.

    ``labels[i-1]`` is the upper-arc label carried by puncture ``q_i``.  When
    ``labels`` is ``None`` arcs are numbered in increasing order of their
    smallest puncture index.
    """

    n: int
    boundary: tuple
    upper: tuple[Chord, ...]
    lower: tuple[Chord, ...]
    labels: tuple[int, ...] | None = None
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def crossing_count(self) -> int:
        return len(self.boundary) - 2 * self.n

    def chords(self, hemisphere: str) -> tuple[Chord, ...]:
        if hemisphere == UPPER:
            return self.upper
        if hemisphere == LOWER:
            return self.lower
        raise ValueError(f"unknown hemisphere {hemisphere!r}")

    def puncture_position(self, index: int) -> int:
        pos = self._cache.get("ppos")
        if pos is None:
            pos = {p.index: i for i, p in enumerate(self.boundary) if isinstance(p, Puncture)}
            self._cache["ppos"] = pos
        return pos[index]

    def partners(self, hemisphere: str) -> list:
        """Position -> partner position in ``hemisphere`` (``None`` if absent)."""
        key = "partners_" + hemisphere
        got = self._cache.get(key)
        if got is None:
            got = [None] * self.size
            for a, b in self.chords(hemisphere):
                got[a] = b
                got[b] = a
            self._cache[key] = got
        return got

    def arc_paths(self) -> dict[int, list[tuple[str, Chord]]]:
        """Upper arcs as chord paths, keyed by arc label.

        Each path starts at the arc's lower-indexed puncture.
        """
        got = self._cache.get("paths")
        if got is not None:
            return got
        up, lo = self.partners(UPPER), self.partners(LOWER)
        labels = self.arc_labels()
        paths = {}
        for start in range(1, 2 * self.n + 1):
            label = labels[start - 1]
            if label in paths:
                continue
            pos = self.puncture_position(start)
            hemi = UPPER if up[pos] is not None else LOWER
            path = []
            while True:
                partner = (up if hemi == UPPER else lo)[pos]
                path.append((hemi, (min(pos, partner), max(pos, partner))))
                pos = partner
                if isinstance(self.boundary[pos], Puncture):
                    break
                hemi = LOWER if hemi == UPPER else UPPER
            paths[label] = path
        self._cache["paths"] = paths
        return paths

    def arc_labels(self) -> tuple[int, ...]:
        if self.labels is not None:
            return self.labels
        got = self._cache.get("default_labels")
        if got is None:
            got = default_labels(self)
            self._cache["default_labels"] = got
        return got

    def chord_label(self, hemisphere: str, chord: Chord) -> int:
        """Label of the upper arc that contains ``chord``."""
        table = self._cache.get("chord_labels")
        if table is None:
            table = {}
            for label, path in self.arc_paths().items():
                for hemi, c in path:
                    table[hemi, c] = label
            self._cache["chord_labels"] = table
        return table[hemisphere, chord]

    def endpoints(self) -> dict[int, tuple[int, int]]:
        """Arc label -> the two puncture indices it joins."""
        out = {}
        for idx, lab in enumerate(self.arc_labels(), start=1):
            out.setdefault(lab, []).append(idx)
        return {lab: tuple(v) for lab, v in out.items()}

    def to_dict(self) -> dict:
        doc = {
            "version": 1,
            "n": self.n,
            "boundary": [
                {"type": "puncture", "index": p.index} if isinstance(p, Puncture)
                else {"type": "crossing", "id": p.id}
                for p in self.boundary
            ],
            "upper": [list(c) for c in self.upper],
            "lower": [list(c) for c in self.lower],
        }
        if self.labels is not None and self.labels != default_labels(self):
            doc["labels"] = list(self.labels)
        return doc


@dataclass(frozen=True)
class Bigon:
    hemisphere: str
    crossings: tuple[int, int]


@dataclass(frozen=True)
class EndBigon:
    hemisphere: str
    puncture: int
    crossing: int


@dataclass(frozen=True)
class ReductionTrace:
    moves: tuple
    initial_crossings: int
    final_crossings: int


def default_labels(d: ChordDiagram) -> tuple[int, ...]:
    # follow arcs from each puncture; number them by smallest puncture index
    up, lo = d.partners(UPPER), d.partners(LOWER)
    labels = [0] * (2 * d.n)
    nxt = 1
    for start in range(1, 2 * d.n + 1):
        if labels[start - 1]:
            continue
        pos = d.puncture_position(start)
        hemi = UPPER if up[pos] is not None else LOWER
        while True:
            pos = (up if hemi == UPPER else lo)[pos]
            if isinstance(d.boundary[pos], Puncture):
                break
            hemi = LOWER if hemi == UPPER else UPPER
        labels[start - 1] = nxt
        labels[d.boundary[pos].index - 1] = nxt
        nxt += 1
    return tuple(labels)


# --- validation ---------------------------------------------------------------

def _parse_point(p):
    if isinstance(p, (Puncture, Crossing)):
        return p
    if isinstance(p, Mapping):
        kind = p.get("type")
        if kind == "puncture":
            return Puncture(int(p["index"]))
        if kind == "crossing":
            return Crossing(int(p["id"]))
    raise MalformedIncidence(f"unrecognised marked point {p!r}")


def _norm_chords(raw, size, name):
    out = []
    for c in raw:
        if len(c) != 2:
            raise MalformedIncidence(f"{name} chord {c!r} does not have two endpoints")
        a, b = int(c[0]), int(c[1])
        if not (0 <= a < size and 0 <= b < size):
            raise MalformedIncidence(f"{name} chord {c!r} refers to a missing position")
        if a == b:
            raise MalformedIncidence(f"{name} chord {c!r} is a loop")
        out.append((min(a, b), max(a, b)))
    return out


def validate(raw) -> ChordDiagram:
    """Check candidate diagram data and return a normalised :class:`ChordDiagram`.

    ``raw`` is a ChordDiagram or a mapping with keys ``n``, ``boundary``,
    ``upper``, ``lower`` and optionally ``labels``.  The boundary is rotated
    so that ``q1`` comes first.
    """
    if isinstance(raw, ChordDiagram):
        n, boundary, upper, lower, labels = raw.n, raw.boundary, raw.upper, raw.lower, raw.labels
    else:
        n = raw["n"]
        boundary, upper, lower = raw["boundary"], raw["upper"], raw["lower"]
        labels = raw.get("labels")
    if not isinstance(n, int) or n < 1:
        raise MalformedIncidence(f"bridge number must be a positive integer, got {n!r}")
    pts = [_parse_point(p) for p in boundary]
    size = len(pts)
    upper = _norm_chords(upper, size, "upper")
    lower = _norm_chords(lower, size, "lower")

    seen_p, seen_c = set(), set()
    for p in pts:
        if isinstance(p, Puncture):
            if p.index in seen_p:
                raise DuplicateId(f"puncture q{p.index} occurs twice")
            seen_p.add(p.index)
        else:
            if p.id in seen_c:
                raise DuplicateId(f"crossing id {p.id} occurs twice")
            seen_c.add(p.id)
    if seen_p != set(range(1, 2 * n + 1)):
        raise BadPunctureOrder(f"expected punctures q1..q{2 * n}, got {sorted(seen_p)}")

    # punctures must appear as 1, 2, ..., 2n around the loop
    order = [p.index for p in pts if isinstance(p, Puncture)]
    shift = order.index(1)
    order = order[shift:] + order[:shift]
    if order != list(range(1, 2 * n + 1)):
        raise BadPunctureOrder(f"punctures appear in order {order} along the loop")

    for name, chords in ((UPPER, upper), (LOWER, lower)):
        if len(set(chords)) != len(chords):
            raise MalformedIncidence(f"repeated {name} chord")
    deg_u = [0] * size
    deg_l = [0] * size
    for a, b in upper:
        deg_u[a] += 1
        deg_u[b] += 1
    for a, b in lower:
        deg_l[a] += 1
        deg_l[b] += 1
    for i, p in enumerate(pts):
        if isinstance(p, Puncture):
            if deg_u[i] + deg_l[i] != 1:
                raise MalformedIncidence(f"{p!r} is the endpoint of {deg_u[i] + deg_l[i]} chords")
        elif deg_u[i] != 1 or deg_l[i] != 1:
            raise MalformedIncidence(
                f"{p!r} meets {deg_u[i]} upper and {deg_l[i]} lower chords")

    # rotate so that q1 is at position 0
    start = next(i for i, p in enumerate(pts) if p == Puncture(1))
    if start:
        pts = pts[start:] + pts[:start]
        rot = lambda a: (a - start) % size
        upper = [tuple(sorted((rot(a), rot(b)))) for a, b in upper]
        lower = [tuple(sorted((rot(a), rot(b)))) for a, b in lower]

    for name, chords in ((UPPER, upper), (LOWER, lower)):
        _check_noncrossing(chords, size, name)

    if labels is not None:
        labels = tuple(int(x) for x in labels)
    d = ChordDiagram(n, tuple(pts), tuple(sorted(upper)), tuple(sorted(lower)), labels)

    # every crossing must lie on some puncture-to-puncture path
    visited = 0
    up, lo = d.partners(UPPER), d.partners(LOWER)
    for i, p in enumerate(pts):
        if not isinstance(p, Puncture):
            continue
        pos = i
        hemi = UPPER if up[pos] is not None else LOWER
        steps = 0
        while True:
            pos = (up if hemi == UPPER else lo)[pos]
            if isinstance(pts[pos], Puncture):
                break
            visited += 1
            steps += 1
            if steps > size:
                raise ClosedComponent("chord path does not terminate")
            hemi = LOWER if hemi == UPPER else UPPER
    # each crossing is visited twice, once from each end of its arc
    if visited != 2 * (size - 2 * n):
        raise ClosedComponent("some chords form a closed loop")

    if labels is not None:
        if len(labels) != 2 * n:
            raise MalformedIncidence("labels must give one arc label per puncture")
        for lab, (a, b) in default_endpoint_pairs(d).items():
            if labels[a - 1] != labels[b - 1]:
                raise MalformedIncidence(f"q{a} and q{b} lie on one arc but carry different labels")
        if sorted(set(labels)) != list(range(1, n + 1)):
            raise MalformedIncidence("labels must be a permutation of 1..n over the arcs")
    return d


def default_endpoint_pairs(d: ChordDiagram) -> dict[int, tuple[int, int]]:
    pairs = {}
    for idx, lab in enumerate(default_labels(d), start=1):
        pairs.setdefault(lab, []).append(idx)
    return {k: tuple(v) for k, v in pairs.items()}


def _check_noncrossing(chords, size, name):
    partner = [None] * size
    for a, b in chords:
        partner[a] = b
        partner[b] = a
    stack = []
    for i in range(size):
        j = partner[i]
        if j is None:
            continue
        if j > i:
            stack.append(i)
        else:
            if not stack or stack[-1] != j:
                raise CrossingChords(f"{name} chords interleave near position {i}")
            stack.pop()


def _build(n, pts, upper, lower, labels) -> ChordDiagram:
    """Assemble a diagram from trusted parts (rotating ``q1`` to the front)."""
    size = len(pts)
    start = pts.index(Puncture(1))
    if start:
        pts = pts[start:] + pts[:start]
        upper = [((a - start) % size, (b - start) % size) for a, b in upper]
        lower = [((a - start) % size, (b - start) % size) for a, b in lower]
    upper = tuple(sorted((min(c), max(c)) for c in upper))
    lower = tuple(sorted((min(c), max(c)) for c in lower))
    return ChordDiagram(n, tuple(pts), upper, lower, labels)


# --- reduction ----------------------------------------------------------------

class _Work:
    """Mutable linked-list form of a diagram used while reducing."""

    def __init__(self, d: ChordDiagram):
        size = d.size
        self.pts = list(d.boundary)
        self.nxt = [(i + 1) % size for i in range(size)]
        self.prv = [(i - 1) % size for i in range(size)]
        self.alive = [True] * size
        self.part = {UPPER: list(d.partners(UPPER)), LOWER: list(d.partners(LOWER))}
        self.n = d.n
        self.labels = d.labels

    def adjacent(self, a, b):
        return self.nxt[a] == b or self.nxt[b] == a

    def reducible(self, hemi, a):
        """Return the move for the chord at ``a`` in ``hemi`` if it bounds a (end-)bigon."""
        b = self.part[hemi][a]
        if b is None or not self.adjacent(a, b):
            return None
        pa, pb = self.pts[a], self.pts[b]
        if isinstance(pa, Crossing) and isinstance(pb, Crossing):
            return ("bigon", hemi, a, b)
        if isinstance(pa, Crossing) or isinstance(pb, Crossing):
            return ("end", hemi, a, b)
        return None

    def unlink(self, x):
        p, q = self.prv[x], self.nxt[x]
        self.nxt[p] = q
        self.prv[q] = p
        self.alive[x] = False

    def apply(self, move):
        kind, hemi, a, b = move
        other = LOWER if hemi == UPPER else UPPER
        mine, theirs = self.part[hemi], self.part[other]
        if kind == "bigon":
            u, v = theirs[a], theirs[b]
            near = {self.prv[a], self.nxt[a], self.prv[b], self.nxt[b]} - {a, b}
            for x in (a, b):
                mine[x] = theirs[x] = None
                self.unlink(x)
            theirs[u], theirs[v] = v, u
            rec = Bigon(hemi, tuple(sorted((self.pts[a].id, self.pts[b].id))))
            touched = (u, v, *near)
        else:
            q, x = (a, b) if isinstance(self.pts[a], Puncture) else (b, a)
            u = theirs[x]
            near = (self.prv[x], self.nxt[x])
            mine[q] = mine[x] = theirs[x] = None
            self.unlink(x)
            theirs[q], theirs[u] = u, q
            rec = EndBigon(hemi, self.pts[q].index, self.pts[x].id)
            touched = (q, u, *near)
        return rec, touched

    def candidates_at(self, nodes):
        out = []
        for x in nodes:
            if not self.alive[x]:
                continue
            for hemi in HEMISPHERES:
                m = self.reducible(hemi, x)
                if m is not None:
                    out.append(m)
        return out

    def freeze(self) -> ChordDiagram:
        start = self.pts.index(Puncture(1))
        order = [start]
        x = self.nxt[start]
        while x != start:
            order.append(x)
            x = self.nxt[x]
        where = {x: i for i, x in enumerate(order)}
        upper, lower = [], []
        for hemi, acc in ((UPPER, upper), (LOWER, lower)):
            part = self.part[hemi]
            for x in order:
                y = part[x]
                if y is not None and where[x] < where[y]:
                    acc.append((where[x], where[y]))
        return ChordDiagram(self.n, tuple(self.pts[x] for x in order),
                            tuple(sorted(upper)), tuple(sorted(lower)), self.labels)


def reduce(d: ChordDiagram, rng: random.Random | None = None) -> tuple[ChordDiagram, ReductionTrace]:
    """Eliminate bigons and end-bigons until the diagram is taut.

    With ``rng`` given, the next move is drawn at random from all currently
    available moves (used to fuzz confluence); otherwise moves are taken in a
    fixed worklist order.
    """
    w = _Work(d)
    moves = []
    if rng is None:
        stack = w.candidates_at(range(d.size))
        while stack:
            m = stack.pop()
            _, hemi, a, b = m
            if not (w.alive[a] and w.alive[b]) or w.reducible(hemi, a) != m:
                continue
            rec, touched = w.apply(m)
            moves.append(rec)
            stack.extend(w.candidates_at(touched))
    else:
        while True:
            alive = [x for x in range(d.size) if w.alive[x]]
            avail = sorted(set(w.candidates_at(alive)))
            if not avail:
                break
            rec, _ = w.apply(rng.choice(avail))
            moves.append(rec)
    out = w.freeze() if moves else d
    return out, ReductionTrace(tuple(moves), d.crossing_count, out.crossing_count)


def is_reduced(d: ChordDiagram) -> bool:
    w = _Work(d)
    return not w.candidates_at(range(d.size))


# --- canonical form -----------------------------------------------------------

def _is_free(a, b, size):
    return b == a + 1 or (a == 0 and b == size - 1)


def canonical_form(d: ChordDiagram) -> ChordDiagram:
    """Reduce, move free chords to the upper hemisphere and renumber crossings."""
    got = d._cache.get("canonical")
    if got is not None:
        return got
    r, _ = reduce(d)
    size = r.size
    upper = list(r.upper)
    lower = []
    for a, b in r.lower:
        (upper if _is_free(a, b, size) else lower).append((a, b))
    pts = []
    k = 0
    for p in r.boundary:
        if isinstance(p, Crossing):
            k += 1
            pts.append(Crossing(k))
        else:
            pts.append(p)
    labels = r.labels
    out = ChordDiagram(r.n, tuple(pts), tuple(sorted(upper)), tuple(sorted(lower)), labels)
    out._cache["canonical"] = out
    d._cache["canonical"] = out
    return out


def encode(d: ChordDiagram) -> tuple:
    """Hashable canonical encoding."""
    c = canonical_form(d)
    kinds = tuple(p.index if isinstance(p, Puncture) else 0 for p in c.boundary)
    return (c.n, kinds, c.upper, c.lower, c.arc_labels())


def mirror(d: ChordDiagram) -> ChordDiagram:
    """Exchange the two hemispheres."""
    return ChordDiagram(d.n, d.boundary, d.lower, d.upper, d.labels)


def relabel_crossings(d: ChordDiagram, mapping) -> ChordDiagram:
    pts = tuple(Crossing(mapping[p.id]) if isinstance(p, Crossing) else p for p in d.boundary)
    return ChordDiagram(d.n, pts, d.upper, d.lower, d.labels)


def with_labels(d: ChordDiagram, labels) -> ChordDiagram:
    return validate(ChordDiagram(d.n, d.boundary, d.upper, d.lower, tuple(labels)))
