"""The directed weight quiver on a sieving class, and its depth-2 subquiver.

Vertices are the class members; an arrow labelled (i, j) moves one summand
Lambda_i to Lambda_{i-1} and one summand Lambda_j to Lambda_{j+1}.  The arrow
exists out of a vertex with solution vector X exactly when some position in
the cyclic interval [j+1, i-1] of X is zero, and then the target's solution
vector is X plus the indicator of [i, j].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .cartan import AffineRank, RootVector, cyclic_interval, root_to_weight
from .maxweights import LevelKDominant, MaxWeightEntry


class LevelTooSmallError(ValueError):
    """Raised for operations that need level at least 2 (or 3)."""


class InsufficientMultiplicityError(ValueError):
    """Raised when a move needs a summand the weight does not have."""


class VertexNotFoundError(KeyError):
    """Raised when a vertex is not in the quiver."""


class Arrow(NamedTuple):
    src: int
    dst: int
    label: tuple[int, int]


@dataclass(frozen=True)
class WeightQuiver:
    """Quiver on a sieving class; vertices ordered by (height of beta, coeffs)."""

    rank: AffineRank
    base: LevelKDominant
    vertices: tuple[MaxWeightEntry, ...]
    arrows: tuple[Arrow, ...]

    def vertex_id(self, v) -> int:
        coeffs = v.coeffs if isinstance(v, LevelKDominant) else tuple(v)
        for i, entry in enumerate(self.vertices):
            if entry.weight.coeffs == coeffs:
                return i
        raise VertexNotFoundError(f"vertex {coeffs} not in quiver")


@dataclass(frozen=True)
class TQuiver:
    """The depth at most 2 subquiver, with per-vertex tag sets in {0,...,5}."""

    rank: AffineRank
    base: LevelKDominant
    vertices: tuple[MaxWeightEntry, ...]
    arrows: tuple[Arrow, ...]
    tags: dict[int, frozenset[int]]

    def vertex_id(self, v) -> int:
        coeffs = v.coeffs if isinstance(v, LevelKDominant) else tuple(v)
        for i, entry in enumerate(self.vertices):
            if entry.weight.coeffs == coeffs:
                return i
        raise VertexNotFoundError(f"vertex {coeffs} not in quiver")

    def tagged(self, s: int) -> set[tuple[int, ...]]:
        return {
            self.vertices[i].weight.coeffs for i, ts in self.tags.items() if s in ts
        }


def move(w: LevelKDominant, i: int, j: int) -> LevelKDominant:
    """Replace Lambda_i + Lambda_j by Lambda_{i-1} + Lambda_{j+1} inside w.

    Fixes w exactly when j = i - 1 mod e.
    """
    e = len(w.coeffs)
    i, j = i % e, j % e
    need = 2 if i == j else 1
    if w.coeffs[i] < need or w.coeffs[j] < need:
        raise InsufficientMultiplicityError(
            f"weight {w.coeffs} has no move ({i},{j})"
        )
    c = list(w.coeffs)
    c[i] -= 1
    c[j] -= 1
    c[(i - 1) % e] += 1
    c[(j + 1) % e] += 1
    return LevelKDominant(tuple(c))


def has_arrow(x: Iterable[int], i: int, j: int, rank: AffineRank) -> bool:
    """Whether the arrow (i, j) leaves a vertex with solution vector x.

    Requires j != i - 1 mod e; true iff x vanishes somewhere on [j+1, i-1],
    equivalently min(x + interval indicator of [i, j]) = 0.
    """
    xs = tuple(x)
    if (j - (i - 1)) % rank.e == 0:
        raise ValueError(f"({i},{j}) is a loop label (j = i - 1 mod e)")
    return any(xs[h] == 0 for h in cyclic_interval(j + 1, i - 1, rank))


def _entry_for(base: LevelKDominant, member: LevelKDominant, x: tuple[int, ...]):
    rank = base.rank
    return MaxWeightEntry(
        member, x, RootVector(x), base.to_weight() - root_to_weight(x, rank)
    )


def _canonical(base, rank, xmap, raw_arrows) -> tuple[tuple, tuple]:
    ordering = sorted(xmap, key=lambda c: (sum(xmap[c]), c))
    ids = {c: i for i, c in enumerate(ordering)}
    vertices = tuple(
        _entry_for(base, LevelKDominant(c), xmap[c]) for c in ordering
    )
    arrows = tuple(
        sorted(Arrow(ids[s], ids[d], lab) for (s, d, lab) in raw_arrows)
    )
    return vertices, arrows


def _label_pairs(w: LevelKDominant, rank: AffineRank):
    e = rank.e
    support = w.support()
    for i in support:
        for j in support:
            if i == j and w.coeffs[i] < 2:
                continue
            if (j - (i - 1)) % e == 0:
                continue
            yield i, j


def build_quiver(base: LevelKDominant) -> WeightQuiver:
    """BFS construction of the full weight quiver from the base vertex.

    The base gets X = 0; following an arrow adds the label's interval
    indicator to X.  The visited vertex set always equals the sieving class.
    """
    if base.level < 2:
        raise LevelTooSmallError(f"need level >= 2, got {base.level}")
    rank = base.rank
    xmap: dict[tuple[int, ...], tuple[int, ...]] = {base.coeffs: (0,) * rank.e}
    raw_arrows: set[tuple[tuple[int, ...], tuple[int, ...], tuple[int, int]]] = set()
    frontier = [base]
    while frontier:
        nxt = []
        for src in frontier:
            x = xmap[src.coeffs]
            for i, j in _label_pairs(src, rank):
                if not has_arrow(x, i, j, rank):
                    continue
                dst = move(src, i, j)
                x_dst = tuple(
                    xi + b
                    for xi, b in zip(
                        x, _interval_bits(i, j, rank)
                    )
                )
                if dst.coeffs not in xmap:
                    xmap[dst.coeffs] = x_dst
                    nxt.append(dst)
                raw_arrows.add((src.coeffs, dst.coeffs, (i, j)))
        frontier = nxt
    vertices, arrows = _canonical(base, rank, xmap, raw_arrows)
    return WeightQuiver(rank, base, vertices, arrows)


def _interval_bits(i: int, j: int, rank: AffineRank) -> tuple[int, ...]:
    bits = [0] * rank.e
    for h in cyclic_interval(i, j, rank):
        bits[h] = 1
    return tuple(bits)


def successors(q: WeightQuiver, v) -> set[LevelKDominant]:
    """Targets of the arrows with source v."""
    vid = q.vertex_id(v)
    return {q.vertices[a.dst].weight for a in q.arrows if a.src == vid}


def _add_vec(x, bits):
    return tuple(a + b for a, b in zip(x, bits))


def t_subquiver(base: LevelKDominant) -> TQuiver:
    """The tagged subquiver reached by the six depth <= 2 constructions.

    Tag s marks the vertices of the s-th construction; a vertex can carry
    several tags.  Arrows are exactly those the constructions traverse.
    """
    if base.level < 2:
        raise LevelTooSmallError(f"need level >= 2, got {base.level}")
    rank = base.rank
    e = rank.e
    m = base.coeffs
    i0 = [i for i in range(e) if m[i] >= 1]
    i1 = [i for i in range(e) if m[i] >= 2]
    i2 = [i for i in range(e) if m[i] >= 3]
    i3 = [i for i in range(e) if m[i] >= 4]

    zero = (0,) * e
    xmap: dict[tuple[int, ...], tuple[int, ...]] = {base.coeffs: zero}
    tags: dict[tuple[int, ...], set[int]] = {}
    raw_arrows = set()

    def record(src: LevelKDominant, i: int, j: int, tag: int) -> LevelKDominant:
        i, j = i % e, j % e
        assert has_arrow(xmap[src.coeffs], i, j, rank)
        dst = move(src, i, j)
        x_dst = _add_vec(xmap[src.coeffs], _interval_bits(i, j, rank))
        prev = xmap.setdefault(dst.coeffs, x_dst)
        assert prev == x_dst
        tags.setdefault(dst.coeffs, set()).add(tag)
        raw_arrows.add((src.coeffs, dst.coeffs, (i, j)))
        return dst

    # (1) pairs of distinct summands, skipping the wrap-around interval
    for i in i0:
        for j in i0:
            if i != j and (j - (i - 1)) % e != 0:
                record(base, i, j, 0)
    # (2) doubled summands, one step
    first = {i: record(base, i, i, 1) for i in i1}
    # (2-1) then spread to both neighbours
    if rank.ell >= 3:
        for i in i1:
            record(first[i], i - 1, i + 1, 2)
    # (2-2) tripled summands, one-sided spreads
    if rank.ell >= 2:
        for i in i2:
            record(first[i], i, i + 1, 3)
            record(first[i], i - 1, i, 3)
    # (2-3) quadrupled summands, the same move twice
    for i in i3:
        record(first[i], i, i, 4)
    # (2-4) two distinct doubled summands
    if rank.ell >= 2:
        for i in i1:
            for j in i1:
                if i != j:
                    record(first[i], j, j, 5)

    vertices, arrows = _canonical(base, rank, xmap, raw_arrows)
    ordering = {entry.weight.coeffs: vid for vid, entry in enumerate(vertices)}
    tagmap = {ordering[c]: frozenset(ts) for c, ts in tags.items()}
    return TQuiver(rank, base, vertices, arrows, tagmap)


def t_beta_sets(base: LevelKDominant) -> dict[int, set[RootVector]]:
    """Closed forms for the beta sets of the six constructions."""
    rank = base.rank
    e = rank.e
    m = base.coeffs
    i0 = [i for i in range(e) if m[i] >= 1]
    i1 = [i for i in range(e) if m[i] >= 2]
    i2 = [i for i in range(e) if m[i] >= 3]
    i3 = [i for i in range(e) if m[i] >= 4]

    def alpha(*indices: int) -> RootVector:
        c = [0] * e
        for i in indices:
            c[i % e] += 1
        return RootVector(tuple(c))

    sets: dict[int, set[RootVector]] = {s: set() for s in range(6)}
    for i in i0:
        for j in i0:
            if i != j and (j - (i - 1)) % e != 0:
                sets[0].add(RootVector(_interval_bits(i, j, rank)))
    sets[1] = {alpha(i) for i in i1}
    if rank.ell >= 3:
        sets[2] = {alpha(i, i, i - 1, i + 1) for i in i1}
    if rank.ell >= 2:
        sets[3] = {alpha(i, i, i + 1) for i in i2} | {alpha(i, i, i - 1) for i in i2}
    sets[4] = {alpha(i, i) for i in i3}
    if rank.ell >= 2:
        sets[5] = {alpha(i, j) for i in i1 for j in i1 if i != j}
    return sets
