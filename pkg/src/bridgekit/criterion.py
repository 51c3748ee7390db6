"""The 2-connected condition on a bridge diagram.

For distinct gaps ``i, j`` and a hemisphere, the separating family collects
the chords of that hemisphere which have gap ``i`` on one side and gap ``j``
on the other.  Such chords are nested, so they come with a natural order.
The graph on the arc labels ``1..n`` joins two labels whenever the family has
adjacent chords (chords bordering a common face of the hemisphere) carrying
them.  If every such graph is 2-connected, the bridge sphere is strongly
irreducible, and for ``n >= 3`` therefore destabilized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import HEMISPHERES, LOWER, UPPER, ChordDiagram, Chord

CERTIFIED = "CertifiedStronglyIrreducible"
INCONCLUSIVE = "Inconclusive"


class CriterionOutOfScope(ValueError):
    pass


@dataclass(frozen=True)
class SeparatingFamily:
    i: int
    j: int
    hemisphere: str
    chords: tuple[tuple[Chord, int], ...]    # (chord, arc label), from gap i towards gap j

    @property
    def labels(self) -> list[int]:
        return [lab for _, lab in self.chords]


@dataclass(frozen=True)
class AdjacencyGraph:
    n: int
    edges: frozenset
    provenance: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbours(self, v) -> set[int]:
        return {w for e in self.edges if v in e for w in e if w != v}

    def has_edge(self, v, w) -> bool:
        return frozenset((v, w)) in self.edges


@dataclass(frozen=True)
class Witness:
    vertex: int
    components: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GraphRecord:
    i: int
    j: int
    hemisphere: str
    graph: AdjacencyGraph
    family: SeparatingFamily
    two_connected: bool
    witness: Witness | None


@dataclass(frozen=True)
class CriterionReport:
    n: int
    records: tuple[GraphRecord, ...]

    @property
    def certified(self) -> bool:
        return all(r.two_connected for r in self.records)

    @property
    def verdict(self) -> str:
        return CERTIFIED if self.certified else INCONCLUSIVE

    def record(self, i, j, hemisphere) -> GraphRecord:
        i, j = min(i, j), max(i, j)
        for r in self.records:
            if (r.i, r.j, r.hemisphere) == (i, j, hemisphere):
                return r
        raise KeyError((i, j, hemisphere))

    def failures(self) -> list[GraphRecord]:
        return [r for r in self.records if not r.two_connected]

    def summary(self) -> str:
        if self.certified:
            return (f"{CERTIFIED}: all {len(self.records)} graphs are 2-connected; "
                    f"the {self.n}-bridge sphere is strongly irreducible, hence destabilized")
        r = self.failures()[0]
        return (f"{INCONCLUSIVE}: {len(self.failures())} of {len(self.records)} graphs fail, "
                f"first at ({r.i},{r.j},{r.hemisphere})")


def _gap_bounds(d: ChordDiagram, i: int):
    """Positions of the punctures bounding gap ``i``; gap ``n`` ends at ``size``."""
    a = d.puncture_position(2 * i)
    b = d.puncture_position(2 * i + 1) if i < d.n else d.size
    return a, b


def _side_of_gap(chord: Chord, gap) -> int:
    """+1 if the open gap lies inside ``(a, b)``, -1 if on the outer side, 0 if split."""
    a, b = chord
    g0, g1 = gap
    if a <= g0 and g1 <= b:
        return 1
    if g0 >= b or g1 <= a:
        return -1
    return 0


def _check_args(d, i, j):
    if d.n < 3:
        raise CriterionOutOfScope(f"the criterion needs n >= 3, got n = {d.n}")
    if i == j:
        raise ValueError("gap indices must be distinct")
    for g in (i, j):
        if not 1 <= g <= d.n:
            raise ValueError(f"gap index {g} outside 1..{d.n}")


def separating_family(d: ChordDiagram, i: int, j: int, hemisphere: str) -> SeparatingFamily:
    _check_args(d, i, j)
    gi, gj = _gap_bounds(d, i), _gap_bounds(d, j)
    picked = []
    for c in d.chords(hemisphere):
        si, sj = _side_of_gap(c, gi), _side_of_gap(c, gj)
        if si and sj and si != sj:
            # size of the side holding gap i orders the nest outward from it
            a, b = c
            inner = b - a - 1
            near_i = inner if si == 1 else d.size - inner - 2
            picked.append((near_i, c))
    picked.sort()
    chords = tuple((c, d.chord_label(hemisphere, c)) for _, c in picked)
    return SeparatingFamily(i, j, hemisphere, chords)


def chords_adjacent(d: ChordDiagram, hemisphere: str, c: Chord, c2: Chord) -> bool:
    """True iff no third chord has ``c`` strictly on one side and ``c2`` on the other."""
    if c == c2:
        raise ValueError("chords must be distinct")

    def inside(e, x):
        return e[0] < x < e[1]

    for e in d.chords(hemisphere):
        if e == c or e == c2:
            continue
        s1 = inside(e, c[0])
        if s1 != inside(e, c[1]):
            continue
        s2 = inside(e, c2[0])
        if s2 != inside(e, c2[1]):
            continue
        if s1 != s2:
            return False
    return True


def graph(d: ChordDiagram, i: int, j: int, hemisphere: str,
          family: SeparatingFamily | None = None) -> AdjacencyGraph:
    """The graph on arc labels induced by adjacent chords of the family.

    Family members are nested; any chord between two consecutive members
    would itself separate the two gaps, so only consecutive members can be
    adjacent.  Each consecutive pair is still confirmed with
    :func:`chords_adjacent`.
    """
    if family is None:
        family = separating_family(d, i, j, hemisphere)
    edges = {}
    for (c1, l1), (c2, l2) in zip(family.chords, family.chords[1:]):
        if l1 == l2:
            continue
        e = frozenset((l1, l2))
        if e in edges:
            continue
        if chords_adjacent(d, hemisphere, c1, c2):
            edges[e] = (c1, c2)
    return AdjacencyGraph(d.n, frozenset(edges), edges)


def _components(vertices, edges):
    adj = {v: set() for v in vertices}
    for e in edges:
        a, b = tuple(e)
        if a in adj and b in adj:
            adj[a].add(b)
            adj[b].add(a)
    seen, comps = set(), []
    for v in sorted(adj):
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_two_connected(g: AdjacencyGraph) -> tuple[bool, Witness | None]:
    """Connected after deleting any single vertex; else a cut vertex and its split."""
    if g.n < 3:
        raise ValueError("2-connectedness is only checked on graphs with at least 3 vertices")
    for v in g.vertices:
        rest = [w for w in g.vertices if w != v]
        comps = _components(rest, g.edges)
        if len(comps) > 1:
            return False, Witness(v, tuple(comps))
    return True, None


def check(d: ChordDiagram) -> CriterionReport:
    """Evaluate every graph for ``i < j`` in both hemispheres."""
    if d.n < 3:
        raise CriterionOutOfScope(f"the criterion needs n >= 3, got n = {d.n}")
    records = []
    for i in range(1, d.n + 1):
        for j in range(i + 1, d.n + 1):
            for hemi in HEMISPHERES:
                fam = separating_family(d, i, j, hemi)
                g = graph(d, i, j, hemi, fam)
                ok, wit = is_two_connected(g)
                records.append(GraphRecord(i, j, hemi, g, fam, ok, wit))
    return CriterionReport(d.n, tuple(records))


def has_cycle(g: AdjacencyGraph, order) -> bool:
    """True iff ``order[0] - order[1] - ... - order[-1] - order[0]`` are all edges."""
    order = list(order)
    return all(g.has_edge(a, b) for a, b in zip(order, order[1:] + order[:1]))


__all__ = [
    "CERTIFIED", "INCONCLUSIVE", "UPPER", "LOWER", "CriterionOutOfScope", "SeparatingFamily",
    "AdjacencyGraph", "Witness", "GraphRecord", "CriterionReport", "separating_family",
    "chords_adjacent", "graph", "is_two_connected", "check", "has_cycle",
]
