"""Closed-form graded Betti tables of tetrahedral curves.

The table of any curve is assembled from its maximal-weight reduction
chain: each step contributes one generator in degree (facet weight of the
chain element) plus the accumulated shift and one first syzygy one degree
higher, and everything sits on top of a base resolution that is shifted by
the number of steps.  The base is the terminal minimal curve (non-ACM
case), the unit ideal contributing a single shifted generator (ACM
componentwise-linear case), or the topmost chain element of CI-power shape
(0,r,r,r,r,0) (ACM non-componentwise-linear case), whose mapping cone is
the one step where minimality fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .exceptions import (
    EnumerationCapError,
    IsACMError,
    NotMinimalError,
    TrivialCurveError,
)
from .koszul import BettiTable
from .tuples import (
    ClassificationReport,
    ReductionType,
    TetTuple,
    TerminalKind,
    apply_reduction,
    buchsbaum_minimal_r,
    canonicalize,
    ci_power_form,
    degree_of_tuple,
    facet_weights,
    is_minimal,
    max_weight_choices,
    reduction_applicable,
    reduction_trace,
    regularity_closed_form,
    FACET_POSITIONS,
    OPPOSITE,
)


def minimal_curve_betti(t: TetTuple) -> BettiTable:
    """Linear resolution of a minimal curve.  With the maximal weight moved
    to a_6 (so a_1 sits on the opposite edge), the ranks are

        b1 = (a1+1)(a6+1) - S,  b2 = 2 a1 a6 + a1 + a6 - 2S,  b3 = a1 a6 - S,

    where S = sum a_i(a_i+1)/2 over the four other edges, in degrees
    a1+a6, a1+a6+1, a1+a6+2."""
    if not is_minimal(t):
        raise NotMinimalError(f"({t}) is not a minimal curve")
    i = max(range(6), key=lambda k: t.entries[k])
    a6, a1 = t.entries[i], t.entries[OPPOSITE[i]]
    rest = [t.entries[k] for k in range(6) if k not in (i, OPPOSITE[i])]
    s = sum(a * (a + 1) // 2 for a in rest)
    d = a1 + a6
    return BettiTable.from_dict(
        {
            (0, d): (a1 + 1) * (a6 + 1) - s,
            (1, d + 1): 2 * a1 * a6 + a1 + a6 - 2 * s,
            (2, d + 2): a1 * a6 - s,
        }
    )


def ci_power_betti(r: int) -> BettiTable:
    """Pure non-linear resolution of the r-th power of the (2,2) complete
    intersection: r+1 generators in degree 2r, r syzygies in degree 2r+2."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return BettiTable.from_dict({(0, 2 * r): r + 1, (1, 2 * r + 2): r})


class BaseKind(Enum):
    TRIVIAL = "trivial"
    MINIMAL_CURVE = "minimal"
    CI_POWER = "ci-power"


@dataclass(frozen=True)
class ResolutionRecipe:
    """Assembly plan for a Betti table from a reduction chain: a base table
    shifted by the number of steps, plus one generator/syzygy pair per step
    at (F degree + shift, F degree + shift + 1)."""

    base_kind: BaseKind
    base: TetTuple
    base_betti: BettiTable
    steps: tuple[tuple[int, int], ...]  # (F_degree, shift_applied), top first

    def assemble(self) -> BettiTable:
        table = self.base_betti.shifted(len(self.steps))
        for f_degree, shift in self.steps:
            table = table + BettiTable.from_dict(
                {(0, f_degree + shift): 1, (1, f_degree + shift + 1): 1}
            )
        return table


def recipe_from_chain(chain: tuple[TetTuple, ...]) -> ResolutionRecipe:
    """Build the assembly plan for an explicit maximal-weight reduction
    chain (top curve first, trivial or minimal terminal last)."""
    terminal = chain[-1]
    if terminal.is_trivial:
        base_index, base_kind, base_betti = (
            len(chain) - 1,
            BaseKind.TRIVIAL,
            BettiTable.from_dict({(0, 0): 1}),
        )
        for k, element in enumerate(chain):
            r = ci_power_form(element)
            if r is not None:
                base_index, base_kind, base_betti = k, BaseKind.CI_POWER, ci_power_betti(r)
                break
    else:
        base_index, base_kind, base_betti = (
            len(chain) - 1,
            BaseKind.MINIMAL_CURVE,
            minimal_curve_betti(terminal),
        )
    steps = tuple(
        (max(facet_weights(chain[j])), j) for j in range(base_index)
    )
    return ResolutionRecipe(
        base_kind=base_kind, base=chain[base_index], base_betti=base_betti, steps=steps
    )


def resolution_recipe(t: TetTuple) -> ResolutionRecipe:
    if t.is_trivial:
        raise TrivialCurveError("the trivial curve has no resolution recipe")
    return recipe_from_chain(reduction_trace(t).chain)


def betti_table(t: TetTuple) -> BettiTable:
    """Graded Betti table of a non-trivial tetrahedral curve."""
    return resolution_recipe(t).assemble()


def has_linear_resolution(t: TetTuple) -> bool:
    if t.is_trivial:
        raise TrivialCurveError("linearity is undefined for the trivial curve")
    return betti_table(t).is_linear


_FIXED_LINEAR_ACM_FAMILIES = (
    ("b", TetTuple((1, 1, 0, 1, 0, 0))),
    ("c", TetTuple((1, 1, 1, 1, 1, 1))),
    ("d", TetTuple((2, 1, 0, 1, 0, 1))),
    ("e", TetTuple((2, 1, 1, 1, 1, 2))),
)


def acm_linear_family(t: TetTuple) -> tuple[str, int | None] | None:
    """Match t against the five families of ACM curves with linear
    resolution: fat lines (r,0,0,0,0,0), three concurrent non-coplanar
    lines, (1,1,1,1,1,1), (2,1,0,1,0,1), and (2,1,1,1,1,2), all up to
    symmetry.  Returns (family tag, r) or None."""
    if t.is_trivial:
        return None
    nonzero = [a for a in t if a > 0]
    if len(nonzero) == 1:
        return ("a", nonzero[0])
    canon = canonicalize(t)[0]
    for tag, model in _FIXED_LINEAR_ACM_FAMILIES:
        if canon == canonicalize(model)[0]:
            return (tag, None)
    return None


def ascent_candidates(
    t: TetTuple, required_F_degree: int | None = None
) -> set[tuple[TetTuple, ReductionType]]:
    """All (parent, type) with apply_reduction(parent, type).child == t and,
    when a degree is given, deg F equal to it.  Facet entries of the parent
    are a_i + 1 where a_i > 0 and independently 0 or 1 where a_i = 0."""
    out: set[tuple[TetTuple, ReductionType]] = set()
    for ty in ReductionType:
        positions = FACET_POSITIONS[ty.vertex]
        zero_positions = [i for i in positions if t.entries[i] == 0]
        for bits in range(1 << len(zero_positions)):
            parent = list(t.entries)
            for i in positions:
                if t.entries[i] > 0:
                    parent[i] += 1
            for k, i in enumerate(zero_positions):
                if bits & (1 << k):
                    parent[i] = 1
            p = TetTuple(tuple(parent))
            if p == t or not reduction_applicable(p, ty):
                continue
            step = apply_reduction(p, ty)
            if step.child != t:
                continue
            if required_F_degree is not None and step.weight != required_F_degree:
                continue
            out.add((p, ty))
    return out


_ASCENT_LEVEL_CAP = 10


def enumerate_linear_in_class(minimal: TetTuple) -> set[TetTuple]:
    """Canonical orbits of all curves with linear resolution in the even
    liaison class of a minimal non-ACM curve, found by ascending basic
    double links whose F degree is forced by linearity.

    The ascent is provably finite; a safety cap aborts runaway levels."""
    if not minimal.is_trivial and reduction_trace(minimal).is_acm:
        raise IsACMError(f"({minimal}) is arithmetically Cohen-Macaulay")
    if not is_minimal(minimal):
        raise NotMinimalError(f"({minimal}) is not a minimal curve")
    found = {canonicalize(minimal)[0]}
    level = set(found)
    generator_degree = minimal_curve_betti(minimal).min_generator_degree
    rounds = 0
    while level:
        rounds += 1
        if rounds > _ASCENT_LEVEL_CAP:
            raise EnumerationCapError(
                f"linear-resolution ascent from ({minimal}) exceeded "
                f"{_ASCENT_LEVEL_CAP} levels"
            )
        next_level: set[TetTuple] = set()
        for t in level:
            for parent, _ in ascent_candidates(t, generator_degree + 1):
                canon = canonicalize(parent)[0]
                if canon not in found and betti_table(parent).is_linear:
                    found.add(canon)
                    next_level.add(canon)
        level = next_level
        generator_degree += 1
    return found


def gin_betti_prediction(t: TetTuple) -> BettiTable:
    """Betti table of the reverse-lex generic initial ideal: identical to
    the curve's table when componentwise linear; otherwise r extra
    generators and syzygies appear one above the least generator degree,
    with r taken from the CI-power curve in the reduction chain."""
    if t.is_trivial:
        raise TrivialCurveError("gin is undefined for the trivial curve")
    trace = reduction_trace(t)
    table = recipe_from_chain(trace.chain).assemble()
    if trace.terminal_kind is TerminalKind.MINIMAL or trace.first_ci_power is None:
        return table
    r = trace.first_ci_power[1]
    p = table.min_generator_degree
    return table + BettiTable.from_dict({(0, p + 1): r, (1, p + 1): r})


def classify(t: TetTuple) -> ClassificationReport:
    """Full classification of one tuple; the trivial curve is reported only
    as trivial."""
    if t.is_trivial:
        return ClassificationReport(
            trivial=True,
            acm=False,
            minimal=False,
            buchsbaum_minimal_r=None,
            schwartau=True,
            componentwise_linear=False,
            linear_resolution=False,
            ci_power_r=None,
            degree=0,
            regularity=None,
        )
    trace = reduction_trace(t)
    acm = trace.is_acm
    cwl = True if not acm else trace.first_ci_power is None
    return ClassificationReport(
        trivial=False,
        acm=acm,
        minimal=is_minimal(t),
        buchsbaum_minimal_r=buchsbaum_minimal_r(t) if is_minimal(t) else None,
        schwartau=t.entries[1] == 0 and t.entries[4] == 0,
        componentwise_linear=cwl,
        linear_resolution=recipe_from_chain(trace.chain).assemble().is_linear,
        ci_power_r=ci_power_form(t),
        degree=degree_of_tuple(t),
        regularity=regularity_closed_form(t),
    )


def all_max_weight_chains(t: TetTuple):
    """Yield every maximal-weight reduction chain (all tie-break choices)."""
    choices = max_weight_choices(t)
    if not choices:
        yield (t,)
        return
    for ty in choices:
        child = apply_reduction(t, ty).child
        for rest in all_max_weight_chains(child):
            yield (t,) + rest
