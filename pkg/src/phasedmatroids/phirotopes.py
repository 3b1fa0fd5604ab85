"""Phirotopes: alternating phase-valued maps on r-subsets of a ground set.

Values are stored once per sorted r-subset; evaluation on arbitrary ordered
tuples computes the sign of the sorting permutation on the fly.  Validation
checks the combinatorial complex Grassmann-Pluecker relations: for every
(r+1)-subset X and (r-1)-subset Y the alternating term multiset must contain
zero in its hypersum.  Y-subsets overlapping X are not skipped; since the map
is alternating, reorderings of Y change all terms by a common sign, which
never affects zero membership, so quantifying over sorted Y loses nothing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import (
    IndexOutOfRangeError,
    InvalidPhirotopeError,
    NotAMatroidError,
    RankDeficientError,
)
from .matrices import ComplexMatrix, all_maximal_minors
from .phases import (
    DEFAULT_TOLERANCE,
    ZERO,
    Phase,
    Tolerance,
    circular_distance,
    phase_of,
    zero_in_hypersum_batch,
)


def sort_with_sign(indices: Sequence[int]):
    """Sort a tuple and return (sorted tuple, sign of the sorting permutation).

    The sign is computed by insertion-sort inversion counting; repeated
    entries return sign 0.
    """
    items = list(indices)
    inversions = 0
    for k in range(1, len(items)):
        x = items[k]
        j = k - 1
        while j >= 0 and items[j] > x:
            items[j + 1] = items[j]
            j -= 1
            inversions += 1
        items[j + 1] = x
    for a, b in zip(items, items[1:]):
        if a == b:
            return tuple(items), 0
    return tuple(items), (-1) ** (inversions % 2)


@dataclass(frozen=True)
class UnderlyingMatroid:
    """A matroid given by its set of bases (r-subsets of [n])."""

    ground_size: int
    rank: int
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "bases", frozenset(tuple(sorted(b)) for b in self.bases))
        if not self.bases:
            raise NotAMatroidError("a matroid needs at least one basis")

    @classmethod
    def from_bases(cls, ground_size: int, rank: int, bases: Iterable, check: bool = True):
        m = cls(ground_size, rank, frozenset(tuple(sorted(b)) for b in bases))
        if check:
            m.check_exchange()
        return m

    @property
    def is_uniform(self) -> bool:
        return len(self.bases) == math.comb(self.ground_size, self.rank)

    def is_basis(self, subset) -> bool:
        return tuple(sorted(subset)) in self.bases

    def check_exchange(self):
        """Verify the basis-exchange axiom (desk-scale sizes only).

        Uniform matroids satisfy it trivially and are short-circuited.
        """
        if self.is_uniform:
            return
        bases = [set(b) for b in self.bases]
        for b1 in bases:
            for b2 in bases:
                for x in b1 - b2:
                    if not any(self.is_basis((b1 - {x}) | {y}) for y in b2 - b1):
                        raise NotAMatroidError(
                            f"exchange fails for {sorted(b1)}, {sorted(b2)}, element {x}")


@dataclass(frozen=True)
class Rephasing:
    """One nonzero phase per ground element, acting multiplicatively."""

    rho: tuple

    def __post_init__(self):
        rho = tuple(self.rho)
        if any(p.is_zero for p in rho):
            raise ValueError("rephasing entries must be nonzero phases")
        object.__setattr__(self, "rho", rho)

    def __len__(self):
        return len(self.rho)

    def __getitem__(self, k: int) -> Phase:
        """Phase for 1-based ground element k."""
        return self.rho[k - 1]

    def inverse(self) -> "Rephasing":
        return Rephasing(tuple(p.inverse() for p in self.rho))

    @classmethod
    def identity(cls, n: int) -> "Rephasing":
        return cls(tuple(Phase(0.0) for _ in range(n)))


class Phirotope:
    """A rank-r phirotope on ground set [n], stored on sorted r-subsets.

    Construction validates the Grassmann-Pluecker relations unless
    ``validate=False``; deferred validation exists for performance-sensitive
    paths whose output is valid by construction, and for building deliberately
    invalid fixtures.
    """

    def __init__(self, ground_size: int, rank: int,
                 values: Mapping[tuple, Phase],
                 tolerance: Tolerance = DEFAULT_TOLERANCE,
                 validate: bool = True):
        if not (1 <= rank <= ground_size):
            raise ValueError("need 1 <= rank <= ground size")
        self.n = ground_size
        self.r = rank
        self.tolerance = tolerance
        self._bases = list(itertools.combinations(range(1, ground_size + 1), rank))
        self._index = {b: i for i, b in enumerate(self._bases)}
        vals = {}
        for b in self._bases:
            if b not in values:
                raise ValueError(f"missing value for basis {b}")
            vals[b] = values[b]
        self.values = vals
        if all(p.is_zero for p in vals.values()):
            raise ValueError("a phirotope is not identically zero")
        if validate:
            violations = self.check_gp()
            if violations:
                raise InvalidPhirotopeError(violations)

    def sorted_bases(self):
        """All sorted r-subsets of [n] in lexicographic order."""
        return list(self._bases)

    def value(self, basis) -> Phase:
        return self.values[tuple(sorted(basis))]

    def evaluate(self, indices: Sequence[int]) -> Phase:
        """Alternating evaluation on an arbitrary ordered r-tuple."""
        idx = tuple(indices)
        if len(idx) != self.r:
            raise ValueError(f"need {self.r} indices, got {len(idx)}")
        for k in idx:
            if not (1 <= k <= self.n):
                raise IndexOutOfRangeError(f"index {k} outside [1, {self.n}]")
        srt, sign = sort_with_sign(idx)
        if sign == 0:
            return ZERO
        return self.values[srt].times_sign(sign)

    def unit_vector(self) -> np.ndarray:
        """Values as unit complex numbers (0 for zero) in lex basis order."""
        return np.array([self.values[b].unit() for b in self._bases], dtype=complex)

    def check_gp(self):
        """All (X, Y) pairs violating the Grassmann-Pluecker relations.

        X ranges over sorted (r+1)-subsets and Y over sorted (r-1)-subsets of
        [n]; the result is lexicographically sorted and empty iff the map is a
        valid phirotope.
        """
        n, r = self.n, self.r
        if n < r + 1:
            return []
        v = self.unit_vector()
        xsubs = list(itertools.combinations(range(1, n + 1), r + 1))
        ysubs = list(itertools.combinations(range(1, n + 1), r - 1))
        # first factor: (-1)^k * phi(X minus its k-th element), k = 1..r+1
        drop_idx = np.empty((len(xsubs), r + 1), dtype=int)
        drop_sgn = np.empty((len(xsubs), r + 1))
        for ix, x in enumerate(xsubs):
            for k in range(r + 1):
                drop_idx[ix, k] = self._index[x[:k] + x[k + 1:]]
                drop_sgn[ix, k] = (-1) ** (k + 1)
        # second factor, precomputed per (element, Y): phi(element, *Y)
        elem_idx = np.zeros((n + 1, len(ysubs)), dtype=int)
        elem_sgn = np.zeros((n + 1, len(ysubs)))
        for iy, y in enumerate(ysubs):
            yset = set(y)
            for e in range(1, n + 1):
                if e in yset:
                    continue  # repeated index, term vanishes (sign stays 0)
                srt, sign = sort_with_sign((e,) + y)
                elem_idx[e, iy] = self._index[srt]
                elem_sgn[e, iy] = sign
        first = drop_sgn * v[drop_idx]                       # (nX, r+1)
        xelems = np.asarray(xsubs)                           # (nX, r+1)
        second = elem_sgn[xelems] * v[elem_idx[xelems]]      # (nX, r+1, nY)
        terms = first[:, None, :] * second.transpose(0, 2, 1)
        flat = terms.reshape(-1, r + 1)
        ok = zero_in_hypersum_batch(flat, self.tolerance.eps)
        bad = np.nonzero(~ok)[0]
        return [(xsubs[i // len(ysubs)], ysubs[i % len(ysubs)]) for i in sorted(bad)]

    def __eq__(self, other):
        if not isinstance(other, Phirotope):
            return NotImplemented
        return self.n == other.n and self.r == other.r and self.values == other.values

    def isclose(self, other: "Phirotope", tol: Optional[Tolerance] = None) -> bool:
        if self.n != other.n or self.r != other.r:
            return False
        tol = tol or self.tolerance
        return all(self.values[b].isclose(other.values[b], tol) for b in self._bases)

    def max_angular_distance(self, other: "Phirotope") -> float:
        """Largest circular distance between corresponding nonzero values;
        infinity on a zero/nonzero mismatch."""
        worst = 0.0
        for b in self._bases:
            p, q = self.values[b], other.values[b]
            if p.is_zero != q.is_zero:
                return math.inf
            if not p.is_zero:
                worst = max(worst, circular_distance(p.angle, q.angle))
        return worst

    def __repr__(self):
        return f"Phirotope(n={self.n}, r={self.r})"


def from_matrix(m: ComplexMatrix, tolerance: Tolerance = DEFAULT_TOLERANCE) -> Phirotope:
    """The phirotope of a full-row-rank matrix: basis -> phase of its minor.

    The output satisfies the Grassmann-Pluecker relations by construction
    (minors of an actual matrix satisfy the classical relations), so
    construction-time validation is skipped.
    """
    minors = all_maximal_minors(m)
    values = {b: phase_of(d) for b, d in minors.items()}
    if all(p.is_zero for p in values.values()):
        raise RankDeficientError("matrix has no nonzero maximal minor")
    return Phirotope(m.cols, m.rows, values, tolerance, validate=False)


def rephase(phi: Phirotope, rho: Rephasing) -> Phirotope:
    """Multiply each value by the product of rho over its basis."""
    if len(rho) != phi.n:
        raise ValueError("rephasing length must equal the ground size")
    values = {}
    for b, p in phi.values.items():
        q = p
        for k in b:
            q = q * rho[k]
        values[b] = q
    return Phirotope(phi.n, phi.r, values, phi.tolerance, validate=False)


def scale_global(phi: Phirotope, alpha: Phase) -> Phirotope:
    """Multiply every value by a nonzero phase; same phased matroid."""
    if alpha.is_zero:
        raise ValueError("global phase must be nonzero")
    values = {b: alpha * p for b, p in phi.values.items()}
    return Phirotope(phi.n, phi.r, values, phi.tolerance, validate=False)


def underlying_matroid(phi: Phirotope, check: bool = True) -> UnderlyingMatroid:
    """The matroid whose bases are the supports of the nonzero values."""
    bases = frozenset(b for b, p in phi.values.items() if not p.is_zero)
    m = UnderlyingMatroid(phi.n, phi.r, bases)
    if check:
        m.check_exchange()
    return m


def is_uniform(phi: Phirotope) -> bool:
    """True iff no value is zero (every r-subset is a basis)."""
    return all(not p.is_zero for p in phi.values.values())
