"""Tetrahedral 6-tuples, the tetrahedron symmetry action, and the reduction
calculus by basic double linkage.

A tetrahedral curve is encoded by six non-negative weights on the edges
(a,b), (a,c), (a,d), (b,c), (b,d), (c,d) of the coordinate tetrahedron.
Each vertex v determines a reduction: when the three edges at v dominate
the opposite triangle, the curve is a basic double link ``G*I + (F)`` of
the curve with those three edge weights lowered by one, where G is the
vertex variable and F collects the edge weights at v.  Iterating along
facets of maximal weight drives every curve down to the trivial curve or
to a minimal one, and the shape of that chain decides ACM-ness,
componentwise linearity, and regularity.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum

from .exceptions import (
    IsMinimalError,
    IsTrivialError,
    NotApplicableError,
    TrivialCurveError,
)
from .monomials import EDGES, Monomial, VARIABLES

OPPOSITE = (5, 4, 3, 2, 1, 0)  # opposite edge pairs: (1,6), (2,5), (3,4)


@dataclass(frozen=True, order=True)
class TetTuple:
    """Six non-negative edge weights of a tetrahedral curve."""

    entries: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        if len(self.entries) != 6 or any(a < 0 for a in self.entries):
            raise ValueError(f"need six non-negative weights, got {self.entries}")

    @classmethod
    def of(cls, *entries: int) -> "TetTuple":
        return cls(tuple(entries))

    @classmethod
    def parse(cls, text: str) -> "TetTuple":
        """Parse the comma-separated form, e.g. "3,3,3,1,2,4"."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise ValueError(f"need six comma-separated weights, got {text!r}")
        try:
            entries = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"non-integer weight in {text!r}") from None
        return cls(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return 6

    @property
    def is_trivial(self) -> bool:
        return not any(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.entries)

    def __repr__(self) -> str:
        return f"TetTuple({self})"


TRIVIAL = TetTuple((0, 0, 0, 0, 0, 0))

_EDGE_INDEX = {frozenset(e): i for i, e in enumerate(EDGES)}
VERTEX_PERMUTATIONS: tuple[tuple[int, ...], ...] = tuple(
    itertools.permutations(range(4))
)


@functools.lru_cache(maxsize=32)
def _edge_map(pi: tuple[int, ...]) -> tuple[int, ...]:
    """For each edge position i, the position the weight moves to under pi."""
    return tuple(_EDGE_INDEX[frozenset((pi[x], pi[y]))] for x, y in EDGES)


def permute(t: TetTuple, pi: tuple[int, ...]) -> TetTuple:
    """Apply a vertex permutation: the weight at edge {x,y} moves to {pi(x),pi(y)}."""
    em = _edge_map(pi)
    out = [0] * 6
    for i, a in enumerate(t.entries):
        out[em[i]] = a
    return TetTuple(tuple(out))


def canonicalize(t: TetTuple) -> tuple[TetTuple, tuple[int, ...]]:
    """Lexicographically smallest tuple in the 24-element orbit, with a
    permutation that achieves it."""
    best, best_pi = t, (0, 1, 2, 3)
    for pi in VERTEX_PERMUTATIONS:
        cand = permute(t, pi)
        if cand < best:
            best, best_pi = cand, pi
    return best, best_pi


class ReductionType(Enum):
    """The four reduction systems; each is attached to one vertex of the
    tetrahedron (A to a, ..., D to d) and uses that vertex variable as G."""

    A = 0
    B = 1
    C = 2
    D = 3

    @property
    def vertex(self) -> int:
        return self.value

    def permuted(self, pi: tuple[int, ...]) -> "ReductionType":
        return ReductionType(pi[self.value])


def _facet_positions(v: int) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(EDGES) if v in e)


def _triangle_rows(v: int) -> tuple[tuple[int, int, int], ...]:
    """Inequality rows for vertex v: edges (v,x), (v,y) against edge (x,y)."""
    others = [u for u in range(4) if u != v]
    rows = []
    for x, y in itertools.combinations(others, 2):
        rows.append(
            (
                _EDGE_INDEX[frozenset((v, x))],
                _EDGE_INDEX[frozenset((v, y))],
                _EDGE_INDEX[frozenset((x, y))],
            )
        )
    return tuple(rows)


FACET_POSITIONS = tuple(_facet_positions(v) for v in range(4))
TRIANGLE_ROWS = tuple(_triangle_rows(v) for v in range(4))


def facet_weights(t: TetTuple) -> tuple[int, int, int, int]:
    """The four facet weights (w_A, w_B, w_C, w_D)."""
    e = t.entries
    return tuple(sum(e[i] for i in pos) for pos in FACET_POSITIONS)


def reduction_applicable(t: TetTuple, ty: ReductionType) -> bool:
    """True when t is non-trivial and the three inequalities of system ty hold."""
    if t.is_trivial:
        return False
    e = t.entries
    return all(e[i] + e[j] >= e[k] for i, j, k in TRIANGLE_ROWS[ty.vertex])


def _reduction_form(t: TetTuple, v: int) -> Monomial:
    exps = [0, 0, 0, 0]
    for u in range(4):
        if u != v:
            exps[u] = t.entries[_EDGE_INDEX[frozenset((v, u))]]
    return Monomial(tuple(exps))


@dataclass(frozen=True)
class ReductionStep:
    """One basic double link: parent = G * I(child) + (F)."""

    type: ReductionType
    parent: TetTuple
    child: TetTuple
    F: Monomial
    G: int

    @property
    def weight(self) -> int:
        """deg F, the facet weight of the reduced facet on the parent."""
        return self.F.degree

    @property
    def G_name(self) -> str:
        return VARIABLES[self.G]


def apply_reduction(t: TetTuple, ty: ReductionType) -> ReductionStep:
    """Reduce the facet of type ty, lowering its three edge weights by one."""
    if not reduction_applicable(t, ty):
        raise NotApplicableError(f"reduction {ty.name} not applicable to ({t})")
    v = ty.vertex
    child = list(t.entries)
    for i in FACET_POSITIONS[v]:
        child[i] = max(0, child[i] - 1)
    return ReductionStep(
        type=ty, parent=t, child=TetTuple(tuple(child)), F=_reduction_form(t, v), G=v
    )


def is_minimal(t: TetTuple) -> bool:
    """True when t is non-trivial and admits none of the four reductions."""
    if t.is_trivial:
        return False
    return not any(reduction_applicable(t, ty) for ty in ReductionType)


def minimal_by_weight_test(t: TetTuple) -> bool:
    """The numerical minimality test: after moving a maximal weight to the
    last edge, a_1 > max(a_3+a_5, a_2+a_4) and a_6 > max(a_4+a_5, a_2+a_3).

    Checked over every normalization with the maximum in last position;
    must agree with `is_minimal`.
    """
    if t.is_trivial:
        return False
    top = max(t.entries)
    for pi in VERTEX_PERMUTATIONS:
        a1, a2, a3, a4, a5, a6 = permute(t, pi)
        if a6 != top:
            continue
        if a1 > max(a3 + a5, a2 + a4) and a6 > max(a4 + a5, a2 + a3):
            return True
    return False


def max_weight_reduction(t: TetTuple) -> ReductionStep:
    """Reduce an applicable facet of maximal weight, ties broken A < B < C < D."""
    if t.is_trivial:
        raise IsTrivialError("the trivial curve admits no reduction")
    if is_minimal(t):
        raise IsMinimalError(f"({t}) is minimal")
    weights = facet_weights(t)
    top = max(weights)
    for ty in ReductionType:
        if weights[ty.vertex] == top and reduction_applicable(t, ty):
            return apply_reduction(t, ty)
    # A non-minimal curve can always be reduced along a maximal-weight facet.
    raise AssertionError(f"no maximal-weight reduction found for ({t})")


def max_weight_choices(t: TetTuple) -> list[ReductionType]:
    """All applicable reductions along facets of maximal weight."""
    if t.is_trivial or is_minimal(t):
        return []
    weights = facet_weights(t)
    top = max(weights)
    return [
        ty
        for ty in ReductionType
        if weights[ty.vertex] == top and reduction_applicable(t, ty)
    ]


class TerminalKind(Enum):
    TRIVIAL = "trivial"
    MINIMAL = "minimal"


def ci_power_form(t: TetTuple) -> int | None:
    """r >= 1 when t is, up to symmetry, (0,r,r,r,r,0): the r-th power of a
    (2,2) complete intersection supported on two pairs of opposite edges."""
    e = t.entries
    for i, j in ((0, 5), (1, 4), (2, 3)):
        if e[i] == 0 and e[j] == 0:
            rest = [e[k] for k in range(6) if k not in (i, j)]
            r = rest[0]
            if r >= 1 and all(x == r for x in rest):
                return r
    return None


@dataclass(frozen=True)
class ReductionTrace:
    """The maximal-weight reduction chain from a curve down to its terminal.

    `steps` runs top first; `chain` is the full curve sequence including the
    terminal.  `first_ci_power` records the topmost chain element of
    complete-intersection-power shape, as (chain index, r); that element is
    the base of the Betti-table assembly for ACM curves that are not
    componentwise linear.
    """

    steps: tuple[ReductionStep, ...]
    terminal: TetTuple
    terminal_kind: TerminalKind
    first_ci_power: tuple[int, int] | None

    @property
    def chain(self) -> tuple[TetTuple, ...]:
        return tuple(s.parent for s in self.steps) + (self.terminal,)

    @property
    def is_acm(self) -> bool:
        return self.terminal_kind is TerminalKind.TRIVIAL


def reduction_trace(t: TetTuple) -> ReductionTrace:
    """Iterate maximal-weight reductions down to the trivial or a minimal curve."""
    steps: list[ReductionStep] = []
    first_ci = None
    cur = t
    index = 0
    while not cur.is_trivial and not is_minimal(cur):
        if first_ci is None:
            r = ci_power_form(cur)
            if r is not None:
                first_ci = (index, r)
        steps.append(max_weight_reduction(cur))
        cur = steps[-1].child
        index += 1
    kind = TerminalKind.TRIVIAL if cur.is_trivial else TerminalKind.MINIMAL
    return ReductionTrace(
        steps=tuple(steps), terminal=cur, terminal_kind=kind, first_ci_power=first_ci
    )


def is_acm(t: TetTuple) -> bool:
    """A curve is arithmetically Cohen-Macaulay iff it reduces to the trivial
    curve (the trivial curve itself is treated as its own kind)."""
    if t.is_trivial:
        return False
    return reduction_trace(t).is_acm


def is_cwl(t: TetTuple) -> bool:
    """Componentwise linearity: every non-ACM curve is componentwise linear;
    an ACM curve is iff its reduction chain avoids CI-power curves."""
    if t.is_trivial:
        raise TrivialCurveError("componentwise linearity is undefined for the trivial curve")
    trace = reduction_trace(t)
    if trace.terminal_kind is TerminalKind.MINIMAL:
        return True
    return trace.first_ci_power is None


def schwartau_status(t: TetTuple) -> tuple[bool, bool]:
    """(is_schwartau, componentwise_linear).

    A Schwartau curve has a_2 = a_5 = 0; it fails componentwise linearity
    exactly when a_1, a_3, a_4, a_6 are all positive and a_1+a_6 = a_3+a_4.
    """
    a1, a2, a3, a4, a5, a6 = t
    is_schwartau = a2 == 0 and a5 == 0
    if is_schwartau:
        fails = a1 > 0 and a3 > 0 and a4 > 0 and a6 > 0 and a1 + a6 == a3 + a4
        return True, not fails
    return False, is_cwl(t)


def degree_of_tuple(t: TetTuple) -> int:
    """deg C = sum a_i (a_i + 1) / 2; additive with deg F along reductions."""
    return sum(a * (a + 1) // 2 for a in t)


def buchsbaum_minimal_r(t: TetTuple) -> int | None:
    """r when t is, up to symmetry, the minimal arithmetically Buchsbaum
    curve (r, 0, r-1, r-1, 0, r); otherwise None."""
    if t.is_trivial:
        return None
    r = max(t.entries)
    model = TetTuple((r, 0, r - 1, r - 1, 0, r))
    if canonicalize(t)[0] == canonicalize(model)[0]:
        return r
    return None


def regularity_closed_form(t: TetTuple) -> int:
    """Castelnuovo-Mumford regularity read off the tuple: 2r+1 for CI-power
    curves, a_1+a_6 (max edge plus its opposite) for minimal curves, and the
    maximal facet weight otherwise."""
    if t.is_trivial:
        raise TrivialCurveError("regularity is undefined for the trivial curve")
    r = ci_power_form(t)
    if r is not None:
        return 2 * r + 1
    if is_minimal(t):
        i = max(range(6), key=lambda k: t.entries[k])
        return t.entries[i] + t.entries[OPPOSITE[i]]
    return max(facet_weights(t))


@dataclass(frozen=True)
class ClassificationReport:
    """Aggregated classification flags for one tuple."""

    trivial: bool
    acm: bool
    minimal: bool
    buchsbaum_minimal_r: int | None
    schwartau: bool
    componentwise_linear: bool
    linear_resolution: bool
    ci_power_r: int | None
    degree: int
    regularity: int | None
