"""Exact arithmetic with monomials and monomial ideals in k[a,b,c,d].

Monomials are exponent vectors over the four variables a, b, c, d.  A
monomial ideal is stored by its minimal generating set (which is unique),
so equality of `MonomialIdeal` values is equality of ideals.  The module
covers the constructions needed for tetrahedral curves: intersections of
powers of edge ideals, basic double links ``g*I + (F)``, graded components
``(I_d)``, truncations ``I_{>=d}``, and Hilbert-function data for the
quotient ring.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    BoundTooSmallError,
    FNotInIdealError,
    GDividesFError,
)

VARIABLES = "abcd"
NVARS = 4

# Edge i of the tetrahedron (0-based) joins these two vertices; opposite
# edges are at positions (0,5), (1,4), (2,3).
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def variable_index(g: int | str) -> int:
    """Accept a variable as an index 0..3 or as one of the letters a..d."""
    if isinstance(g, str):
        if g not in VARIABLES:
            raise ValueError(f"unknown variable {g!r}")
        return VARIABLES.index(g)
    if not 0 <= g < NVARS:
        raise ValueError(f"variable index out of range: {g}")
    return g


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial in a, b, c, d given by its exponent vector."""

    exps: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.exps) != NVARS or any(e < 0 for e in self.exps):
            raise ValueError(f"bad exponent vector {self.exps}")

    @classmethod
    def of(cls, *exps: int) -> "Monomial":
        return cls(tuple(exps))

    @classmethod
    def one(cls) -> "Monomial":
        return cls((0, 0, 0, 0))

    @classmethod
    def variable(cls, g: int | str) -> "Monomial":
        i = variable_index(g)
        return cls(tuple(1 if j == i else 0 for j in range(NVARS)))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse the ``a^2*b*d^3`` form (zero exponents omitted, ``1`` allowed)."""
        text = text.strip()
        exps = [0, 0, 0, 0]
        if text in ("1", ""):
            return cls(tuple(exps))
        for factor in text.split("*"):
            factor = factor.strip()
            if "^" in factor:
                var, _, power = factor.partition("^")
                exps[variable_index(var.strip())] += int(power)
            else:
                exps[variable_index(factor)] += 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(s <= o for s, o in zip(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(s + o for s, o in zip(self.exps, other.exps)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(s - o for s, o in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(s, o) for s, o in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        if self.degree == 0:
            return "1"
        parts = []
        for var, e in zip(VARIABLES, self.exps):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def degrevlex_key(m: Monomial) -> tuple:
    """Sort key for degree-reverse-lexicographic order with a > b > c > d.

    Larger key means larger monomial.
    """
    e = m.exps
    return (sum(e), -e[3], -e[2], -e[1], -e[0])


def display_key(m: Monomial) -> tuple:
    """Generator-list order: ascending degree, descending degrevlex within."""
    e = m.exps
    return (sum(e), e[3], e[2], e[1], e[0])


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Drop every monomial divisible by another one; keep the minimal set."""
    ms = sorted(set(monomials), key=display_key)
    if len(ms) > 400:
        return _minimalize_bulk(ms)
    kept: list[Monomial] = []
    for m in ms:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return kept


def _minimalize_bulk(ms: list[Monomial]) -> list[Monomial]:
    # ms is deduplicated, so "divisible by a different element" marks exactly
    # the non-minimal ones.
    E = np.array([m.exps for m in ms], dtype=np.int32)
    div = (E[:, None, :] <= E[None, :, :]).all(axis=2)
    np.fill_diagonal(div, False)
    redundant = div.any(axis=0)
    return [m for m, r in zip(ms, redundant) if not r]


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    """A monomial ideal, normalized to its minimal sorted generating set.

    Minimal generating sets are unique, so equality of values is equality
    of ideals (also across subclasses)."""

    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(minimalize(self.generators))
        object.__setattr__(self, "generators", gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    @classmethod
    def of(cls, *texts: str) -> "MonomialIdeal":
        return cls(tuple(Monomial.parse(t) for t in texts))

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls((Monomial.one(),))

    @classmethod
    def zero(cls) -> "MonomialIdeal":
        return cls(())

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree == 0

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def min_generator_degree(self) -> int:
        return min(g.degree for g in self.generators)

    @property
    def max_generator_degree(self) -> int:
        return max(g.degree for g in self.generators)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def scaled(self, m: Monomial) -> "MonomialIdeal":
        """The ideal m * I."""
        return MonomialIdeal(tuple(m * g for g in self.generators))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.generators + other.generators)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection via pairwise lcms of the generators."""
        return MonomialIdeal(
            tuple(u.lcm(v) for u in self.generators for v in other.generators)
        )

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(self.generator_strings()) + ")" if self.generators else "(0)"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    return ideal.contains(m)


def edge_power_ideal(edge: tuple[int, int], n: int) -> MonomialIdeal:
    """(x, y)^n for the two variables of an edge: generated by x^i y^(n-i)."""
    x, y = edge
    gens = []
    for i in range(n + 1):
        e = [0, 0, 0, 0]
        e[x], e[y] = i, n - i
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(tuple(gens))


@functools.lru_cache(maxsize=None)
def _ideal_of_entries(entries: tuple[int, ...]) -> MonomialIdeal:
    ideal = MonomialIdeal.unit()
    for edge, a in zip(EDGES, entries):
        if a > 0:
            ideal = ideal.intersect(edge_power_ideal(edge, a))
    return ideal


def ideal_of_tuple(t: Sequence[int]) -> MonomialIdeal:
    """The saturated ideal of a tetrahedral curve: the intersection of the
    powers (x,y)^a_i over the six coordinate lines.  Factors with a_i = 0 are
    skipped; the empty intersection is the unit ideal."""
    entries = tuple(t)
    if len(entries) != 6 or any(a < 0 for a in entries):
        raise ValueError(f"need six non-negative weights, got {entries}")
    return _ideal_of_entries(entries)


def basic_double_link(ideal: MonomialIdeal, g: int | str, F: Monomial) -> MonomialIdeal:
    """Minimal generators of g*I + (F) for a variable g and F in I."""
    gi = variable_index(g)
    if F.exps[gi] > 0:
        raise GDividesFError(f"{VARIABLES[gi]} divides {F}; (g, F) is not a regular sequence")
    if not ideal.contains(F):
        raise FNotInIdealError(f"{F} is not in {ideal}")
    xg = Monomial.variable(gi)
    return MonomialIdeal(tuple(xg * m for m in ideal.generators) + (F,))


@functools.lru_cache(maxsize=64)
def monomials_of_degree(d: int) -> tuple[Monomial, ...]:
    """All monomials of total degree d in four variables."""
    out = []
    for e0, e1, e2 in itertools.product(range(d + 1), repeat=3):
        rest = d - e0 - e1 - e2
        if rest >= 0:
            out.append(Monomial((e0, e1, e2, rest)))
    return tuple(out)


def component_ideal(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """(I_d): the ideal generated by the degree-d monomials of I."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    gens = tuple(m for m in monomials_of_degree(d) if ideal.contains(m))
    return MonomialIdeal(gens)


def truncate(ideal: MonomialIdeal, d: int) -> MonomialIdeal:
    """I_{>=d}: the ideal generated by all elements of I of degree at least d."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    high = tuple(g for g in ideal.generators if g.degree > d)
    return MonomialIdeal(high + component_ideal(ideal, d).generators)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function of R/I up to a bound, with derived invariants.

    `values[d]` is dim_k (R/I)_d.  `degree` is the stabilized first
    difference (the degree of the scheme for a curve ideal), and `h_vector`
    the finitely supported second difference.
    """

    values: tuple[int, ...]
    h_vector: tuple[int, ...]
    degree: int


@functools.lru_cache(maxsize=8)
def _monomial_grid(upto: int) -> tuple[np.ndarray, np.ndarray]:
    """Exponent array and degree array of all monomials of degree <= upto."""
    axes = np.indices((upto + 1,) * NVARS).reshape(NVARS, -1).T
    deg = axes.sum(axis=1)
    keep = deg <= upto
    return axes[keep].astype(np.int32), deg[keep].astype(np.int64)


def hilbert_data(ideal: MonomialIdeal, upto: int) -> HilbertData:
    """Count standard monomials of R/I in degrees 0..upto.

    Raises BoundTooSmallError if the first differences have not stabilized
    by `upto`; callers should pass roughly regularity + 3.
    """
    if upto < 0:
        raise ValueError("upto must be non-negative")
    exps, deg = _monomial_grid(upto)
    member = np.zeros(len(exps), dtype=bool)
    for g in ideal.generators:
        member |= (exps >= np.array(g.exps, dtype=np.int32)).all(axis=1)
    values = np.bincount(deg[~member], minlength=upto + 1)[: upto + 1]
    first = np.diff(values, prepend=0)
    if upto < 1 or first[-1] != first[-2]:
        raise BoundTooSmallError(
            f"Hilbert function of {ideal} not stabilized by degree {upto}"
        )
    second = np.diff(first, prepend=0)
    nz = np.nonzero(second)[0]
    h = tuple(int(x) for x in second[: nz[-1] + 1]) if len(nz) else ()
    return HilbertData(
        values=tuple(int(v) for v in values),
        h_vector=h,
        degree=int(first[-1]),
    )
