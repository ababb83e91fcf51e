"""Affine type A Cartan datum: matrix, pairings, root/weight conversions.

All index arithmetic is cyclic modulo the quantum characteristic e = ell + 1.
Every coefficient is an exact integer; there is no floating point anywhere in
this package.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AffineRank:
    """Index data for affine type A with indices I = {0, ..., ell} mod e."""

    ell: int

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")

    @property
    def e(self) -> int:
        """Quantum characteristic e = ell + 1."""
        return self.ell + 1

    def reduce(self, i: int) -> int:
        return i % self.e

    @property
    def indices(self) -> range:
        return range(self.e)


@dataclass(frozen=True)
class WeightCoeffs:
    """A weight written on the Lambda_0..Lambda_ell basis plus a delta part.

    Coefficients may be negative (reflections of non-dominant weights need
    that); dominance is the predicate `is_dominant`, not an invariant.
    """

    lam: tuple[int, ...]
    delta: int = 0

    @property
    def level(self) -> int:
        return sum(self.lam)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.lam)

    def __add__(self, other: "WeightCoeffs") -> "WeightCoeffs":
        return WeightCoeffs(
            tuple(a + b for a, b in zip(self.lam, other.lam)),
            self.delta + other.delta,
        )

    def __sub__(self, other: "WeightCoeffs") -> "WeightCoeffs":
        return WeightCoeffs(
            tuple(a - b for a, b in zip(self.lam, other.lam)),
            self.delta - other.delta,
        )

    def scale(self, c: int) -> "WeightCoeffs":
        return WeightCoeffs(tuple(c * a for a in self.lam), c * self.delta)


@dataclass(frozen=True)
class RootVector:
    """An element of the positive root cone, as coefficients on alpha_0..alpha_ell."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.coeffs):
            raise ValueError(f"root vector must be nonnegative, got {self.coeffs}")

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


@dataclass(frozen=True)
class IntervalVector:
    """0/1 indicator of a cyclic index interval [i, j]."""

    bits: tuple[int, ...]

    def __iter__(self):
        return iter(self.bits)


def cartan_matrix(rank: AffineRank) -> list[list[int]]:
    """The affine Cartan matrix: 2 on the diagonal, -1 at distance 1 mod e.

    For ell = 1 the two off-diagonal entries are -2.
    """
    e = rank.e
    if rank.ell == 1:
        return [[2, -2], [-2, 2]]
    a = [[0] * e for _ in range(e)]
    for i in range(e):
        a[i][i] = 2
        a[i][(i + 1) % e] = -1
        a[i][(i - 1) % e] = -1
    return a


def apply_cartan(rank: AffineRank, x: tuple[int, ...]) -> tuple[int, ...]:
    """Compute A @ x for the affine Cartan matrix, without materializing A."""
    e = rank.e
    if rank.ell == 1:
        return (2 * x[0] - 2 * x[1], 2 * x[1] - 2 * x[0])
    return tuple(2 * x[i] - x[(i - 1) % e] - x[(i + 1) % e] for i in range(e))


def pairing(i: int, mu: WeightCoeffs) -> int:
    """<h_i, mu>: the coefficient of Lambda_i (delta pairs to zero)."""
    return mu.lam[i % len(mu.lam)]


def alpha_to_weight(i: int, rank: AffineRank) -> WeightCoeffs:
    """Expand alpha_i = 2 Lambda_i - Lambda_{i-1} - Lambda_{i+1} (+ delta if i = 0)."""
    e = rank.e
    i = rank.reduce(i)
    lam = [0] * e
    lam[i] += 2
    lam[(i - 1) % e] -= 1
    lam[(i + 1) % e] -= 1
    return WeightCoeffs(tuple(lam), 1 if i == 0 else 0)


def root_to_weight(beta: tuple[int, ...], rank: AffineRank) -> WeightCoeffs:
    """Expand sum_i beta_i alpha_i on the Lambda/delta basis.

    The Lambda part is A @ beta and the delta coefficient is beta_0.
    """
    return WeightCoeffs(apply_cartan(rank, beta), beta[0])


def delta_decompose(beta: RootVector) -> tuple[RootVector, int]:
    """Split beta = beta0 + m * delta with min(beta0) = 0 and m = min(beta)."""
    m = min(beta.coeffs)
    return RootVector(tuple(c - m for c in beta.coeffs)), m


def rotate_tuple(x: tuple[int, ...], shift: int) -> tuple[int, ...]:
    """Send the coefficient at index i to index i + shift mod e."""
    e = len(x)
    s = shift % e
    out = [0] * e
    for i, c in enumerate(x):
        out[(i + s) % e] = c
    return tuple(out)


def sigma_rotate(x, shift: int):
    """The rotation automorphism i -> i + shift on weights or root vectors."""
    if isinstance(x, WeightCoeffs):
        return WeightCoeffs(rotate_tuple(x.lam, shift), x.delta)
    if isinstance(x, RootVector):
        return RootVector(rotate_tuple(x.coeffs, shift))
    raise TypeError(f"cannot rotate object of type {type(x).__name__}")


def cyclic_interval(i: int, j: int, rank: AffineRank) -> list[int]:
    """The cyclic interval [i, j] = {i, i+1, ..., j} of indices mod e."""
    e = rank.e
    i, j = i % e, j % e
    if i <= j:
        return list(range(i, j + 1))
    return list(range(0, j + 1)) + list(range(i, e))


def interval_delta(i: int, j: int, rank: AffineRank) -> IntervalVector:
    """Indicator vector of the cyclic interval [i, j]; all-ones iff j = i - 1 mod e."""
    bits = [0] * rank.e
    for h in cyclic_interval(i, j, rank):
        bits[h] = 1
    return IntervalVector(tuple(bits))
