"""Representation type of a block, for level at least 3.

After reducing beta to an orbit representative beta0 + m*delta, the type is
read off finite lists attached to the base weight: interval sums between
cyclically consecutive occupied indices, and small corrections at doubled,
tripled and quadrupled summands.  Three of the tame families disappear in a
specific field characteristic; the parameter t enters only for beta = delta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cartan import RootVector, cyclic_interval
from .maxweights import LevelKDominant
from .quiver import LevelTooSmallError
from .weyl import OrbitStatus, orbit_representative


class TClass(enum.Enum):
    """Which exceptional value (if any) the deformation parameter t takes."""

    TWO = "two"            # t = 2, only meaningful for ell = 1
    MINUS_TWO = "minustwo"  # t = -2, only meaningful for ell = 1
    SIGN_ELL = "signell"    # t = (-1)^(ell+1), only meaningful for ell >= 2
    OTHER = "other"


class RepType(enum.IntEnum):
    """Representation type; the order is badness, used only for reporting."""

    ZERO = 0
    FINITE = 1
    TAME = 2
    WILD = 3

    def __str__(self) -> str:  # "Finite", "Tame", ...
        return self.name.capitalize()


@dataclass(frozen=True)
class FieldParams:
    char_p: int = 0
    t_class: TClass = TClass.OTHER

    def __post_init__(self) -> None:
        if self.char_p < 0 or self.char_p == 1:
            raise ValueError("char_p must be 0 or a prime")
        if self.char_p > 1 and any(
            self.char_p % d == 0 for d in range(2, int(self.char_p**0.5) + 1)
        ):
            raise ValueError(f"char_p = {self.char_p} is not prime")

    def check_rank(self, ell: int) -> None:
        if ell == 1 and self.t_class is TClass.SIGN_ELL:
            raise ValueError("t class 'signell' only applies for ell >= 2")
        if ell >= 2 and self.t_class in (TClass.TWO, TClass.MINUS_TWO):
            raise ValueError("t classes 'two'/'minustwo' only apply for ell = 1")


@dataclass(frozen=True)
class ScriptSets:
    """The finite set and the five tame sets of the classification."""

    finite: frozenset[RootVector]
    tame: tuple[frozenset[RootVector], ...]  # indexed 1..5 at positions 0..4

    def tame_union(self) -> frozenset[RootVector]:
        out: set[RootVector] = set()
        for s in self.tame:
            out |= s
        return frozenset(out)


def _alpha_sum(e: int, *indices: int) -> RootVector:
    c = [0] * e
    for i in indices:
        c[i % e] += 1
    return RootVector(tuple(c))


def script_sets(base: LevelKDominant, char_p: int = 0) -> ScriptSets:
    """Build the finite/tame beta sets of the main classification for `base`.

    Uses the cyclic enumeration i_1 < ... < i_h of occupied indices, with
    i_0 = i_h and i_{h+1} = i_1.
    """
    if base.level < 3:
        raise LevelTooSmallError(
            f"classification needs level >= 3, got {base.level}; levels 1 and 2 "
            "are settled in prior work"
        )
    rank = base.rank
    e = rank.e
    m = base.coeffs
    occupied = base.support()
    h = len(occupied)

    def nxt(j: int) -> int:
        return occupied[(j + 1) % h]

    def prv(j: int) -> int:
        return occupied[(j - 1) % h]

    finite: set[RootVector] = {RootVector((0,) * e)}
    t1: set[RootVector] = set()
    t2: set[RootVector] = set()
    t3: set[RootVector] = set()
    t4: set[RootVector] = set()
    t5: set[RootVector] = set()

    # alpha_i at a doubled summand is representation-finite
    for i in occupied:
        if m[i] >= 2:
            finite.add(_alpha_sum(e, i))

    if h >= 2:
        for j in range(h):
            i, nx = occupied[j], nxt(j)
            if (nx - (i - 1)) % e == 0:  # interval would be all of I
                continue
            beta = RootVector(
                tuple(
                    1 if p in set(cyclic_interval(i, nx, rank)) else 0
                    for p in range(e)
                )
            )
            if m[i] == 1 and m[nx] == 1:
                finite.add(beta)
            elif m[i] == 1 or m[nx] == 1:
                t1.add(beta)

    for j, i in enumerate(occupied):
        before_ok = (prv(j) - (i - 1)) % e != 0
        after_ok = (nxt(j) - (i + 1)) % e != 0
        if rank.ell >= 3 and m[i] == 2 and before_ok and after_ok and char_p != 2:
            t2.add(_alpha_sum(e, i, i, i - 1, i + 1))
        if rank.ell >= 2 and m[i] == 3 and char_p != 3:
            if after_ok:
                t3.add(_alpha_sum(e, i, i, i + 1))
            if before_ok:
                t3.add(_alpha_sum(e, i, i, i - 1))
        if m[i] == 4 and char_p != 2:
            t4.add(_alpha_sum(e, i, i))

    if rank.ell >= 2:
        for i in occupied:
            for j in occupied:
                if i != j and m[i] == 2 and m[j] == 2 and (j - i) % e not in (1, e - 1):
                    t5.add(_alpha_sum(e, i, j))

    return ScriptSets(
        frozenset(finite),
        (frozenset(t1), frozenset(t2), frozenset(t3), frozenset(t4), frozenset(t5)),
    )


def classify(
    base: LevelKDominant,
    beta: RootVector,
    params: FieldParams = FieldParams(),
    cap: int | None = None,
) -> RepType:
    """Representation type of the block of `base` labelled by `beta`.

    Any beta in the positive root cone is accepted; it is first reduced to
    its orbit representative.  A vanishing block reports Zero.
    """
    if base.level < 3:
        raise LevelTooSmallError(
            f"classification needs level >= 3, got {base.level}; levels 1 and 2 "
            "are settled in prior work"
        )
    rank = base.rank
    params.check_rank(rank.ell)

    result = orbit_representative(base, beta, cap)
    if result.status is OrbitStatus.ZERO:
        return RepType.ZERO
    beta0, m = result.beta0, result.m

    if beta0.is_zero():
        if m == 0:
            return RepType.FINITE
        if m == 1:
            is_k_lambda_i = len(base.support()) == 1
            if is_k_lambda_i and params.t_class is TClass.OTHER:
                return RepType.TAME
        return RepType.WILD

    if m >= 1:
        return RepType.WILD

    sets = script_sets(base, params.char_p)
    if beta0 in sets.finite:
        return RepType.FINITE
    if beta0 in sets.tame_union():
        return RepType.TAME
    return RepType.WILD
