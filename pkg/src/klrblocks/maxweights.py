"""Dominant maximal weights via the sieving equivalence class.

For a level-k dominant weight Lambda, the class members Lambda' are exactly
the level-k dominant weights with ev(Lambda') = ev(Lambda) mod e, and each one
determines a unique nonnegative solution X (with min X = 0) of A X^t = Y^t,
where Y_i = <h_i, Lambda - Lambda'>.  The dominant maximal weights are then
Lambda - sum_i x_i alpha_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cartan import (
    AffineRank,
    RootVector,
    WeightCoeffs,
    apply_cartan,
    root_to_weight,
    rotate_tuple,
)


class NoSolutionError(ValueError):
    """Raised when the linear system has no nonnegative integer solution."""


@dataclass(frozen=True)
class LevelKDominant:
    """A level-k dominant weight with implicit delta coefficient zero."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ValueError("need at least 2 coefficients (ell >= 1)")
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"coefficients must be nonnegative, got {self.coeffs}")
        if sum(self.coeffs) < 1:
            raise ValueError("level must be >= 1")

    @property
    def level(self) -> int:
        return sum(self.coeffs)

    @property
    def rank(self) -> AffineRank:
        return AffineRank(len(self.coeffs) - 1)

    def sigma(self, shift: int) -> "LevelKDominant":
        return LevelKDominant(rotate_tuple(self.coeffs, shift))

    def to_weight(self) -> WeightCoeffs:
        return WeightCoeffs(self.coeffs, 0)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c > 0]


@dataclass(frozen=True)
class MaxWeightEntry:
    """One dominant maximal weight, indexed by its class member.

    `x` solves A x = <h, Lambda - weight> with min x = 0, `beta` is the
    corresponding root vector, and `max_weight` = Lambda - beta on the
    Lambda/delta basis (its delta coefficient is -x_0).
    """

    weight: LevelKDominant
    x: tuple[int, ...]
    beta: RootVector
    max_weight: WeightCoeffs


def ev(w: LevelKDominant) -> int:
    """The sieving statistic: sum over i >= 1 of coeffs[i] * i, mod e."""
    e = len(w.coeffs)
    return sum(i * c for i, c in enumerate(w.coeffs)) % e


def _weak_compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`, lex order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _weak_compositions(total - head, parts - 1):
            yield (head,) + tail


def equiv_class(w: LevelKDominant) -> list[LevelKDominant]:
    """All level-k dominant weights equivalent to w, sorted lexicographically."""
    target = ev(w)
    e = len(w.coeffs)
    members = [
        LevelKDominant(c)
        for c in _weak_compositions(w.level, e)
        if sum(i * ci for i, ci in enumerate(c)) % e == target
    ]
    members.sort(key=lambda m: m.coeffs)
    return members


def _solve_pinned(rank: AffineRank, rhs: tuple[int, ...], x0: int) -> tuple[int, ...]:
    """Solve A x = rhs with x_0 pinned, by exact elimination on rows 1..ell.

    The kernel of A is spanned by the all-ones vector, so pinning x_0 makes
    the solution unique over the rationals.  Raises NoSolutionError when the
    solution is not integral.
    """
    e = rank.e
    ell = rank.ell
    a = cartan_rows(rank)
    # Rows 1..ell in the unknowns x_1..x_ell, moving the x_0 column to the rhs.
    mat = [
        [Fraction(a[r][c]) for c in range(1, e)] + [Fraction(rhs[r] - a[r][0] * x0)]
        for r in range(1, e)
    ]
    for col in range(ell):
        piv = next((r for r in range(col, ell) if mat[r][col] != 0), None)
        if piv is None:
            raise NoSolutionError("singular subsystem; this should not happen")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [v * inv for v in mat[col]]
        for r in range(ell):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * p for v, p in zip(mat[r], mat[col])]
    xs = [mat[r][ell] for r in range(ell)]
    if any(v.denominator != 1 for v in xs):
        raise NoSolutionError(f"no integral solution for rhs {rhs}")
    x = (x0,) + tuple(int(v) for v in xs)
    if apply_cartan(rank, x) != tuple(rhs):
        raise NoSolutionError(f"inconsistent system for rhs {rhs}")
    return x


@lru_cache(maxsize=None)
def cartan_rows(rank: AffineRank) -> tuple[tuple[int, ...], ...]:
    from .cartan import cartan_matrix

    return tuple(tuple(row) for row in cartan_matrix(rank))


def solve_x(base: LevelKDominant, target: LevelKDominant) -> tuple[int, ...]:
    """The unique nonnegative X with min X = 0 and A X^t = <h, base - target>^t.

    Raises NoSolutionError when target is not equivalent to base.
    """
    if len(base.coeffs) != len(target.coeffs):
        raise ValueError("base and target must have the same rank")
    if base.level != target.level:
        raise NoSolutionError("base and target have different levels")
    rank = base.rank
    y = tuple(b - t for b, t in zip(base.coeffs, target.coeffs))
    x = _solve_pinned(rank, y, 0)
    m = min(x)
    return tuple(v - m for v in x)


def max_plus(base: LevelKDominant) -> list[MaxWeightEntry]:
    """One entry per class member, in the class's lexicographic order."""
    rank = base.rank
    entries = []
    for member in equiv_class(base):
        x = solve_x(base, member)
        beta = RootVector(x)
        max_weight = base.to_weight() - root_to_weight(x, rank)
        entries.append(MaxWeightEntry(member, x, beta, max_weight))
    return entries


@lru_cache(maxsize=None)
def p_lambda_set(base: LevelKDominant) -> frozenset[tuple[int, ...]]:
    """The set of X-vectors of the class of `base` (membership test for beta)."""
    return frozenset(entry.x for entry in max_plus(base))
