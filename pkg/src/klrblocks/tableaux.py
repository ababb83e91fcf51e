"""Charged multipartition combinatorics and graded block dimensions.

The graded dimension between two idempotents e(nu), e(nu') of a block with
content beta is the sum over multipartitions with that residue content and
over pairs of standard tableaux with residue sequences nu, nu' of
q^(deg S + deg T).  Degrees are the usual addable-minus-removable statistics
accumulated along the growth sequence of a tableau.

Node coordinates in the public API are 1-based (component, row, column),
with the residue of a node in row a, column b of the s-th component equal to
charge_s + b - a mod e.  Components with smaller index sit above components
with larger index; "below" always refers to this stacked picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import RootVector

DEFAULT_MAX_HEIGHT = 14

Partition = tuple[int, ...]


class NodeNotRemovableError(ValueError):
    pass


class ContentMismatchError(ValueError):
    pass


class EnumerationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of partitions (weakly decreasing positive rows)."""

    components: tuple[Partition, ...]

    def __post_init__(self) -> None:
        for comp in self.components:
            if any(a < b for a, b in zip(comp, comp[1:])) or any(
                r <= 0 for r in comp
            ):
                raise ValueError(f"not a partition: {comp}")

    @property
    def n(self) -> int:
        return sum(sum(comp) for comp in self.components)

    @property
    def k(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ChargedShape:
    """A multipartition together with one charge per component and the modulus."""

    mp: Multipartition
    charges: tuple[int, ...]
    e: int

    def __post_init__(self) -> None:
        if len(self.charges) != self.mp.k:
            raise ValueError("need one charge per component")

    def residue(self, s: int, a: int, b: int) -> int:
        """Residue of the node in row a, column b (1-based) of component s (1-based)."""
        return (self.charges[s - 1] + b - a) % self.e


@dataclass(frozen=True)
class StandardTableau:
    """A standard tableau recorded through its growth sequence of nodes."""

    shape: ChargedShape
    nodes: tuple[tuple[int, int, int], ...]  # (s, a, b), 1-based, in filling order
    residue_seq: tuple[int, ...]
    degree: int


class LaurentPoly:
    """Integer Laurent polynomial in q; exact arithmetic, zero terms dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None) -> None:
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def q_power(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def at_one(self) -> int:
        """Evaluation at q = 1 (a tableau-pair count, hence nonnegative here)."""
        return sum(self.terms.values())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms):
            c = self.terms[exp]
            if exp == 0:
                body = str(abs(c))
            else:
                if exp == 1:
                    qp = "q"
                elif exp > 0:
                    qp = f"q^{exp}"
                else:
                    qp = f"q^{{{exp}}}"
                body = qp if abs(c) == 1 else f"{abs(c)}{qp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    __repr__ = __str__


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest first (reverse lexicographic)."""
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def extend(remaining: int, cap: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(out)


def multipartitions(k: int, n: int) -> list[Multipartition]:
    """All k-multipartitions of n, in a fixed lexicographic order."""
    out: list[Multipartition] = []

    def split(idx: int, remaining: int, prefix: tuple[Partition, ...]) -> None:
        if idx == k - 1:
            for p in partitions_of(remaining):
                out.append(Multipartition(prefix + (p,)))
            return
        for here in range(remaining, -1, -1):
            for p in partitions_of(here):
                split(idx + 1, remaining - here, prefix + (p,))

    split(0, n, ())
    return out


def _addable(comp: Partition) -> list[tuple[int, int]]:
    """Addable node positions (row, col), 0-based, of one partition."""
    nodes = []
    for r, width in enumerate(comp):
        if r == 0 or comp[r - 1] > width:
            nodes.append((r, width))
    nodes.append((len(comp), 0))
    return nodes


def _removable(comp: Partition) -> list[tuple[int, int]]:
    """Removable node positions (row, col), 0-based, of one partition."""
    return [
        (r, width - 1)
        for r, width in enumerate(comp)
        if r + 1 == len(comp) or comp[r + 1] < width
    ]


def _res(charges: tuple[int, ...], e: int, s: int, r: int, c: int) -> int:
    """Residue of 0-based node (component s, row r, column c)."""
    return (charges[s] + c - r) % e


def content_counts(shape: ChargedShape) -> tuple[int, ...]:
    """How many nodes of each residue the charged shape has."""
    counts = [0] * shape.e
    for s, comp in enumerate(shape.mp.components):
        for r, width in enumerate(comp):
            for c in range(width):
                counts[_res(shape.charges, shape.e, s, r, c)] += 1
    return tuple(counts)


def _d_statistic(
    components: tuple[Partition, ...],
    charges: tuple[int, ...],
    e: int,
    node: tuple[int, int, int],
) -> int:
    """Addable minus removable nodes of the node's residue strictly below it."""
    s, r, c = node
    omega = _res(charges, e, s, r, c)
    total = 0
    for s2 in range(s, len(components)):
        comp = components[s2]
        for r2, c2 in _addable(comp):
            if (s2 > s or r2 > r) and _res(charges, e, s2, r2, c2) == omega:
                total += 1
        for r2, c2 in _removable(comp):
            if (s2 > s or r2 > r) and _res(charges, e, s2, r2, c2) == omega:
                total -= 1
    return total


def d_below(shape: ChargedShape, p: tuple[int, int, int]) -> int:
    """The degree statistic of a removable node p = (component, row, column), 1-based."""
    s, a, b = p
    comps = shape.mp.components
    if not (
        1 <= s <= len(comps) and (a - 1, b - 1) in _removable(comps[s - 1])
    ):
        raise NodeNotRemovableError(f"node {p} is not removable from {comps}")
    return _d_statistic(comps, shape.charges, shape.e, (s - 1, a - 1, b - 1))


def _content_of_mp(mp: Multipartition, charges: tuple[int, ...], e: int):
    counts = [0] * e
    for s, comp in enumerate(mp.components):
        for r, width in enumerate(comp):
            for c in range(width):
                counts[_res(charges, e, s, r, c)] += 1
    return tuple(counts)


def enumerate_with_content(
    k: int,
    charges: tuple[int, ...],
    beta: RootVector,
    max_height: int = DEFAULT_MAX_HEIGHT,
) -> list[Multipartition]:
    """All k-multipartitions whose residue multiset equals beta, fixed order."""
    if beta.height > max_height:
        raise EnumerationLimitError(
            f"|beta| = {beta.height} exceeds the enumeration bound {max_height}"
        )
    e = len(beta.coeffs)
    return [
        mp
        for mp in multipartitions(k, beta.height)
        if _content_of_mp(mp, charges, e) == beta.coeffs
    ]


def _grow(
    components: tuple[Partition, ...], s: int, r: int
) -> tuple[Partition, ...]:
    comp = components[s]
    if r == len(comp):
        new = comp + (1,)
    else:
        new = comp[:r] + (comp[r] + 1,) + comp[r + 1 :]
    return components[:s] + (new,) + components[s + 1 :]


def _tableau_walks(
    charges: tuple[int, ...], e: int, remaining: list[int]
) -> list[tuple[tuple[Partition, ...], tuple[int, ...], int, tuple]]:
    """All standard fillings using exactly the prescribed residue counts.

    Returns (final shape, residue sequence, degree, node sequence) tuples.
    """
    k = len(charges)
    results = []
    empty = ((),) * k

    def walk(components, seq, deg, nodes):
        if all(v == 0 for v in remaining):
            results.append((components, tuple(seq), deg, tuple(nodes)))
            return
        for s in range(k):
            for r, c in _addable(components[s]):
                res = _res(charges, e, s, r, c)
                if remaining[res] == 0:
                    continue
                remaining[res] -= 1
                grown = _grow(components, s, r)
                d = _d_statistic(grown, charges, e, (s, r, c))
                seq.append(res)
                nodes.append((s + 1, r + 1, c + 1))
                walk(grown, seq, deg + d, nodes)
                nodes.pop()
                seq.pop()
                remaining[res] += 1

    walk(empty, [], 0, [])
    return results


def std_tableaux(shape: ChargedShape) -> list[StandardTableau]:
    """All standard tableaux of the charged shape, with degrees and residues."""
    beta = content_counts(shape)
    walks = _tableau_walks(shape.charges, shape.e, list(beta))
    out = [
        StandardTableau(shape, nodes, seq, deg)
        for comps, seq, deg, nodes in walks
        if comps == shape.mp.components
    ]
    out.sort(key=lambda t: t.nodes)
    return out


@lru_cache(maxsize=None)
def _degree_table(
    charges: tuple[int, ...], beta_coeffs: tuple[int, ...]
) -> dict[tuple[Partition, ...], dict[tuple[int, ...], LaurentPoly]]:
    """Per shape with the given content: residue sequence -> sum of q^deg."""
    e = len(beta_coeffs)
    table: dict[tuple[Partition, ...], dict[tuple[int, ...], LaurentPoly]] = {}
    for comps, seq, deg, _ in _tableau_walks(charges, e, list(beta_coeffs)):
        by_seq = table.setdefault(comps, {})
        by_seq[seq] = by_seq.get(seq, LaurentPoly.zero()) + LaurentPoly.q_power(deg)
    return table


def residue_content(nu: tuple[int, ...], e: int) -> tuple[int, ...]:
    counts = [0] * e
    for r in nu:
        counts[r % e] += 1
    return tuple(counts)


def graded_dim(
    charges: tuple[int, ...],
    beta: RootVector,
    nu: tuple[int, ...],
    nu_prime: tuple[int, ...],
    max_height: int = DEFAULT_MAX_HEIGHT,
) -> LaurentPoly:
    """Graded dimension between the idempotents of residue sequences nu, nu'."""
    if beta.height > max_height:
        raise EnumerationLimitError(
            f"|beta| = {beta.height} exceeds the enumeration bound {max_height}"
        )
    e = len(beta.coeffs)
    nu = tuple(r % e for r in nu)
    nu_prime = tuple(r % e for r in nu_prime)
    for seq in (nu, nu_prime):
        if residue_content(seq, e) != beta.coeffs:
            raise ContentMismatchError(f"residue sequence {seq} has content != beta")
    total = LaurentPoly.zero()
    for by_seq in _degree_table(charges, beta.coeffs).values():
        left = by_seq.get(nu)
        right = by_seq.get(nu_prime)
        if left and right:
            total = total + left * right
    return total


def graded_dim_total(
    charges: tuple[int, ...],
    beta: RootVector,
    max_height: int = DEFAULT_MAX_HEIGHT,
) -> LaurentPoly:
    """The full graded dimension: sum over shapes of (sum of q^deg)^2."""
    if beta.height > max_height:
        raise EnumerationLimitError(
            f"|beta| = {beta.height} exceeds the enumeration bound {max_height}"
        )
    total = LaurentPoly.zero()
    for by_seq in _degree_table(charges, beta.coeffs).values():
        all_tabs = LaurentPoly.zero()
        for poly in by_seq.values():
            all_tabs = all_tabs + poly
        total = total + all_tabs * all_tabs
    return total


def charges_of(base_coeffs: tuple[int, ...]) -> tuple[int, ...]:
    """The canonical (weakly increasing) charge expression of a dominant weight."""
    out: list[int] = []
    for i, c in enumerate(base_coeffs):
        out.extend([i] * c)
    return tuple(out)


@lru_cache(maxsize=None)
def _content_set(charges: tuple[int, ...], e: int, n: int) -> frozenset[tuple[int, ...]]:
    return frozenset(
        _content_of_mp(mp, charges, e) for mp in multipartitions(len(charges), n)
    )


def block_is_nonzero(
    base_coeffs: tuple[int, ...], beta: RootVector, max_height: int = DEFAULT_MAX_HEIGHT
) -> bool:
    """Whether some multipartition has residue content beta (block nonvanishing)."""
    if beta.height > max_height:
        raise EnumerationLimitError(
            f"|beta| = {beta.height} exceeds the enumeration bound {max_height}"
        )
    charges = charges_of(base_coeffs)
    return beta.coeffs in _content_set(charges, len(beta.coeffs), beta.height)
