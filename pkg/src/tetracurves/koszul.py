"""Brute-force graded Betti numbers of monomial ideals in k[a,b,c,d].

For a monomial ideal I and a multidegree m, the faces of the upper Koszul
complex are the squarefree divisors t of m with m/t in I, and

    beta_{i, deg m}(I)  =  rank H~_{i-1}(K(I, m); Q),

where i = 0 counts minimal generators of I.  Candidate multidegrees run
over the box below the componentwise maximum of the generators.  Complexes
on at most four vertices are torsion-free, so ranks over Q are exact and
characteristic-independent; boundary ranks are computed in exact rational
arithmetic.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .monomials import Monomial, MonomialIdeal, NVARS

_VERTEX_BITS = tuple(1 << v for v in range(NVARS))
_SUBSET_VERTICES = tuple(
    tuple(v for v in range(NVARS) if s & (1 << v)) for s in range(1 << NVARS)
)


@dataclass(frozen=True)
class SimplicialComplex4:
    """A simplicial complex on vertex set {a,b,c,d}, stored as its face set.

    The void complex (no faces) and the empty complex ({}) are distinct:
    the empty complex has reduced homology of rank one in dimension -1.
    """

    faces: frozenset[frozenset[int]]

    def __post_init__(self):
        for f in self.faces:
            for v in f:
                if not f - {v} in self.faces:
                    raise ValueError(f"face set not downward closed at {set(f)}")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "SimplicialComplex4":
        closed: set[frozenset[int]] = set()
        for f in faces:
            f = frozenset(f)
            for k in range(len(f) + 1):
                closed.update(frozenset(c) for c in itertools.combinations(f, k))
        return cls(frozenset(closed))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def mask(self) -> int:
        out = 0
        for f in self.faces:
            out |= 1 << sum(_VERTEX_BITS[v] for v in f)
        return out


def upper_koszul(ideal: MonomialIdeal, m: Monomial) -> SimplicialComplex4:
    """Faces are the sets of variables t dividing m with m / prod(t) in I."""
    faces = []
    for s in range(1 << NVARS):
        vs = _SUBSET_VERTICES[s]
        if any(m.exps[v] == 0 for v in vs):
            continue
        quotient = Monomial(
            tuple(e - (1 if v in vs else 0) for v, e in enumerate(m.exps))
        )
        if ideal.contains(quotient):
            faces.append(frozenset(vs))
    return SimplicialComplex4(frozenset(faces))


def _exact_rank(rows: list[list[int]]) -> int:
    if not rows or not rows[0]:
        return 0
    m = [[Fraction(x) for x in row] for row in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _homology_from_masks(face_masks: frozenset[int]) -> tuple[int, int, int, int]:
    """Reduced rational homology ranks in dimensions -1, 0, 1, 2."""
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for s in face_masks:
        vs = _SUBSET_VERTICES[s]
        by_dim.setdefault(len(vs) - 1, []).append(vs)
    for faces in by_dim.values():
        faces.sort()

    def boundary_rank(k: int) -> int:
        upper = by_dim.get(k, [])
        lower = {f: idx for idx, f in enumerate(by_dim.get(k - 1, []))}
        if not upper or not lower:
            return 0
        rows = []
        for face in upper:
            row = [0] * len(lower)
            for j in range(len(face)):
                sub = face[:j] + face[j + 1 :]
                row[lower[sub]] = (-1) ** j
            rows.append(row)
        return _exact_rank(rows)

    ranks = []
    for k in range(-1, 3):
        dim_ck = len(by_dim.get(k, []))
        ranks.append(dim_ck - boundary_rank(k) - boundary_rank(k + 1))
    return tuple(ranks)


def reduced_homology_ranks(complex4: SimplicialComplex4) -> dict[int, int]:
    """Ranks of reduced simplicial homology over Q, dimensions -1 through 2."""
    masks = frozenset(
        sum(_VERTEX_BITS[v] for v in f) for f in complex4.faces
    )
    r = _homology_from_masks(masks)
    return {-1: r[0], 0: r[1], 1: r[2], 2: r[3]}


@functools.lru_cache(maxsize=None)
def _homology_of_complex_mask(mask: int) -> tuple[int, int, int, int]:
    faces = frozenset(s for s in range(1 << NVARS) if mask & (1 << s))
    return _homology_from_masks(faces)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers of an ideal: (homological index i, internal
    degree j) -> rank, with i = 0 at the minimal generators."""

    entries: tuple[tuple[int, int, int], ...]

    @classmethod
    def from_dict(cls, data: Mapping[tuple[int, int], int]) -> "BettiTable":
        items = tuple(
            (i, j, r) for (i, j), r in sorted(data.items()) if r != 0
        )
        if any(r < 0 for _, _, r in items):
            raise ValueError("negative Betti number")
        return cls(items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): r for i, j, r in self.entries}

    def rank(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _, _ in self.entries)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j, _ in self.entries)

    @property
    def min_generator_degree(self) -> int:
        return min(j for i, j, _ in self.entries if i == 0)

    @property
    def max_generator_degree(self) -> int:
        return max(j for i, j, _ in self.entries if i == 0)

    @property
    def is_linear(self) -> bool:
        """All generators in one degree d and every entry on the strand j = d + i."""
        d = self.min_generator_degree
        return all(j == d + i for i, j, _ in self.entries)

    def shifted(self, s: int) -> "BettiTable":
        return BettiTable(tuple((i, j + s, r) for i, j, r in self.entries))

    def __add__(self, other: "BettiTable") -> "BettiTable":
        out = self.as_dict()
        for (i, j), r in other.as_dict().items():
            out[(i, j)] = out.get((i, j), 0) + r
        return BettiTable.from_dict(out)

    def json_entries(self) -> list[list[int]]:
        return [[i, j, r] for i, j, r in self.entries]

    def to_json(self) -> str:
        return json.dumps({"entries": self.json_entries()})

    @classmethod
    def from_json(cls, text: str) -> "BettiTable":
        data = json.loads(text)
        return cls.from_dict({(i, j): r for i, j, r in data["entries"]})

    def render_resolution(self, target: str = "J") -> str:
        """The paper-style one-line display 0 -> ... -> target -> 0."""
        blocks = []
        for i in range(self.projective_dimension, -1, -1):
            terms = [
                f"R(-{j})" + (f"^{r}" if r > 1 else "")
                for _, j, r in sorted(
                    (e for e in self.entries if e[0] == i),
                    key=lambda e: -e[1],
                )
            ]
            blocks.append(" (+) ".join(terms) if terms else "0")
        return "0 -> " + " -> ".join(blocks) + f" -> {target} -> 0"


def betti_table_oracle(ideal: MonomialIdeal) -> BettiTable:
    """Betti table of a proper non-zero monomial ideal by Koszul homology,
    summing homology ranks of the upper Koszul complex over all candidate
    multidegrees below the componentwise maximum of the generators."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("Betti oracle needs a proper non-zero ideal")
    gens = np.array([g.exps for g in ideal.generators], dtype=np.int32)
    shape = tuple(int(x) + 1 for x in gens.max(axis=0))

    member = np.zeros(shape, dtype=bool)
    for g in ideal.generators:
        member[tuple(slice(e, None) for e in g.exps)] = True

    masks = np.zeros(shape, dtype=np.int32)
    for s in range(1 << NVARS):
        e = [1 if s & b else 0 for b in _VERTEX_BITS]
        if any(ei >= si for ei, si in zip(e, shape)):
            continue
        dst = tuple(slice(ei, None) for ei in e)
        src = tuple(slice(None, si - ei) for si, ei in zip(shape, e))
        masks[dst] |= member[src].astype(np.int32) << s

    degrees = np.indices(shape).sum(axis=0).ravel()
    masks = masks.ravel()

    table: dict[tuple[int, int], int] = {}
    unique, inverse = np.unique(masks, return_inverse=True)
    for idx, mask in enumerate(unique):
        ranks = _homology_of_complex_mask(int(mask))
        if not any(ranks):
            continue
        degree_counts = np.bincount(degrees[inverse == idx])
        for i, r in enumerate(ranks):
            if r == 0:
                continue
            for j, count in enumerate(degree_counts):
                if count:
                    table[(i, j)] = table.get((i, j), 0) + r * int(count)
    return BettiTable.from_dict(table)


@functools.lru_cache(maxsize=None)
def cached_betti_oracle(ideal: MonomialIdeal) -> BettiTable:
    """Memoized oracle; ideals are hashable by their minimal generators."""
    return betti_table_oracle(ideal)
