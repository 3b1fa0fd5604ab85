"""Phase arithmetic on the unit circle together with the zero phase.

A phase is either the zero phase or a point of the unit circle, stored as a
normalized angle in [0, 2*pi).  The hypersum of a finite phase set is the set
of phases reachable by strictly positive linear combinations; it is computed
symbolically (empty / finite / open arc / full circle) from the angular order
statistics of the input.  The triangular-equation solver recovers the one
unknown positive norm in gamma = ph(s1*alpha - s2*beta).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DegenerateTriangleError, InfeasibleTriangleError

TAU = 2.0 * math.pi

#: Absolute magnitude below which a complex number is treated as zero.
ZERO_MAGNITUDE_CUTOFF = 1e-12


@dataclass(frozen=True)
class Tolerance:
    """Angular comparison tolerance in radians."""

    eps: float = 1e-9

    def __post_init__(self):
        if not (0.0 < self.eps < math.pi / 4):
            raise ValueError(f"tolerance must lie in (0, pi/4), got {self.eps}")


DEFAULT_TOLERANCE = Tolerance()


def _normalize(angle: float) -> float:
    a = math.fmod(angle, TAU)
    if a < 0.0:
        a += TAU
    if a >= TAU:  # fmod rounding can land exactly on 2*pi
        a = 0.0
    return a


def circular_distance(a: float, b: float) -> float:
    """Shortest angular distance between two angles, in [0, pi]."""
    d = abs(_normalize(a) - _normalize(b))
    return min(d, TAU - d)


@dataclass(frozen=True)
class Phase:
    """A point of S^1 (stored as an angle in [0, 2*pi)) or the zero phase.

    The zero phase is represented by ``angle=None``; use :data:`ZERO` rather
    than constructing it by hand.  Products involving the zero phase are zero;
    nonzero products add angles mod 2*pi.
    """

    angle: Optional[float]

    @property
    def is_zero(self) -> bool:
        return self.angle is None

    @classmethod
    def from_angle(cls, angle: float) -> "Phase":
        return cls(_normalize(angle))

    @classmethod
    def from_angle_over_pi(cls, x: float) -> "Phase":
        return cls(_normalize(x * math.pi))

    @property
    def angle_over_pi(self) -> float:
        if self.angle is None:
            raise ValueError("zero phase has no angle")
        return self.angle / math.pi

    def unit(self) -> complex:
        """The phase as a complex number (0 for the zero phase)."""
        if self.angle is None:
            return 0j
        return cmath.exp(1j * self.angle)

    def __mul__(self, other: "Phase") -> "Phase":
        if self.angle is None or other.angle is None:
            return ZERO
        return Phase(_normalize(self.angle + other.angle))

    def __neg__(self) -> "Phase":
        if self.angle is None:
            return ZERO
        return Phase(_normalize(self.angle + math.pi))

    def inverse(self) -> "Phase":
        if self.angle is None:
            raise ZeroDivisionError("zero phase has no inverse")
        return Phase(_normalize(-self.angle))

    def times_sign(self, sign: int) -> "Phase":
        return self if sign >= 0 else -self

    def isclose(self, other: "Phase", tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return circular_distance(self.angle, other.angle) < tol.eps

    def is_real(self, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        """True iff this is the zero phase or within tolerance of +1 / -1."""
        if self.is_zero:
            return True
        return (
            circular_distance(self.angle, 0.0) < tol.eps
            or circular_distance(self.angle, math.pi) < tol.eps
        )

    def __repr__(self):
        if self.angle is None:
            return "Phase.ZERO"
        return f"Phase({self.angle / math.pi:.6g}*pi)"


ZERO = Phase(None)
ONE = Phase(0.0)
MINUS_ONE = Phase(math.pi)


def phase_of(z: complex) -> Phase:
    """Phase of a complex scalar; magnitudes below the cutoff map to zero."""
    if abs(z) < ZERO_MAGNITUDE_CUTOFF:
        return ZERO
    return Phase(_normalize(cmath.phase(z)))


@dataclass(frozen=True)
class HypersumSet:
    """Symbolic value of the hypersum of a finite phase set.

    ``variant`` is one of ``"empty"``, ``"finite"``, ``"arc"`` and ``"full"``.
    For arcs the set is the open arc from ``start`` to ``end`` counterclockwise
    (``end - start`` in (0, pi] mod 2*pi), excluding both endpoints, plus the
    zero phase iff ``includes_zero``.  The full circle always contains zero.
    """

    variant: str
    phases: tuple = ()
    start: Optional[float] = None
    end: Optional[float] = None
    includes_zero: bool = False

    @classmethod
    def empty(cls):
        return cls("empty")

    @classmethod
    def finite(cls, phases: Iterable[Phase]):
        return cls("finite", phases=tuple(phases))

    @classmethod
    def arc(cls, start: float, end: float, includes_zero: bool = False):
        return cls("arc", start=_normalize(start), end=_normalize(end),
                   includes_zero=includes_zero)

    @classmethod
    def full(cls):
        return cls("full")


def _distinct_sorted_angles(angles: Sequence[float], eps: float) -> list[float]:
    """Cluster angles within eps (circularly) and return one representative each."""
    if not angles:
        return []
    srt = sorted(_normalize(a) for a in angles)
    out = [srt[0]]
    for a in srt[1:]:
        if a - out[-1] > eps:
            out.append(a)
    # first and last may be the same cluster across the 0/2*pi seam
    if len(out) > 1 and TAU - (out[-1] - out[0]) <= eps:
        out.pop()
    return out


def hypersum(phases: Iterable[Phase], tol: Tolerance = DEFAULT_TOLERANCE) -> HypersumSet:
    """Hypersum of a finite phase multiset.

    The multiset is treated as a set of distinct phases under tolerance.  Zero
    elements contribute nothing to a strictly positive combination, so they are
    absorbed, except that a multiset of only zeros sums to {zero}.
    """
    items = list(phases)
    if not items:
        return HypersumSet.empty()
    nonzero = [p for p in items if not p.is_zero]
    if not nonzero:
        return HypersumSet.finite([ZERO])
    angles = _distinct_sorted_angles([p.angle for p in nonzero], tol.eps)
    if len(angles) == 1:
        return HypersumSet.finite([Phase(angles[0])])
    if len(angles) == 2 and circular_distance(angles[0] + math.pi, angles[1]) < tol.eps:
        mu = Phase(angles[0])
        return HypersumSet.finite([mu, ZERO, -mu])
    gaps = [angles[i + 1] - angles[i] for i in range(len(angles) - 1)]
    gaps.append(TAU - (angles[-1] - angles[0]))
    gi = max(range(len(gaps)), key=gaps.__getitem__)
    if gaps[gi] < math.pi - tol.eps:
        # nonzero phases do not fit in a closed half-circle
        return HypersumSet.full()
    start = angles[(gi + 1) % len(angles)]
    span = min(TAU - gaps[gi], math.pi)
    return HypersumSet.arc(start, start + span, includes_zero=False)


def contains_zero(hs: HypersumSet) -> bool:
    """True iff the zero phase belongs to the symbolic hypersum set."""
    if hs.variant == "empty":
        return False
    if hs.variant == "finite":
        return any(p.is_zero for p in hs.phases)
    if hs.variant == "arc":
        return hs.includes_zero
    return True  # full circle


def zero_in_hypersum(phases: Iterable[Phase], tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Shortcut for ``contains_zero(hypersum(phases))``."""
    return contains_zero(hypersum(phases, tol))


def zero_in_hypersum_batch(units: np.ndarray, eps: float) -> np.ndarray:
    """Vectorized ``zero_in_hypersum`` over the rows of a complex array.

    ``units`` has shape (rows, m); each entry is a unit complex number or 0.
    Returns a boolean array of length rows.  Used by the Grassmann-Pluecker
    checker, where every row is the term multiset of one (X, Y) pair.
    """
    rows, m = units.shape
    out = np.zeros(rows, dtype=bool)
    nz = np.abs(units) > 0.5
    cnt = nz.sum(axis=1)
    out[cnt == 0] = True  # nonempty all-zero multiset sums to {zero}
    ang = np.where(nz, np.mod(np.angle(units), TAU), np.inf)
    ang.sort(axis=1)
    for c in range(2, m + 1):
        rows_c = np.nonzero(cnt == c)[0]
        if rows_c.size == 0:
            continue
        a = ang[rows_c, :c]
        gaps = np.empty((rows_c.size, c))
        gaps[:, :-1] = np.diff(a, axis=1)
        gaps[:, -1] = TAU - (a[:, -1] - a[:, 0])
        maxgap = gaps.max(axis=1)
        full = maxgap < math.pi - eps
        # remaining rows fit in a closed half-circle: zero is present only for
        # an exact antipodal pair of distinct phases
        big = gaps > eps
        nclusters = big.sum(axis=1)
        # representative of each of the two clusters: first angle, and the
        # first angle separated from it by more than eps
        antip = np.zeros(rows_c.size, dtype=bool)
        two = (~full) & (nclusters == 2)
        if two.any():
            a2 = a[two]
            sep = (a2 - a2[:, :1]) > eps
            other = np.where(sep, a2, np.inf).min(axis=1)
            d = np.abs(other - a2[:, 0])
            d = np.minimum(d, TAU - d)
            antip[two] = np.abs(d - math.pi) < eps
        out[rows_c] = full | antip
    return out


@dataclass(frozen=True)
class TriangleEquation:
    """gamma = ph(s1*alpha - s2*beta) with exactly one of s1, s2 unknown.

    All three phases are nonzero and alpha != +/-beta; the known side is a
    positive real, the unknown side is ``None``.
    """

    gamma: Phase
    alpha: Phase
    beta: Phase
    s1: Optional[float] = None
    s2: Optional[float] = None

    def __post_init__(self):
        if self.gamma.is_zero or self.alpha.is_zero or self.beta.is_zero:
            raise ValueError("triangular equations need nonzero phases")
        if (self.s1 is None) == (self.s2 is None):
            raise ValueError("exactly one of s1, s2 must be unknown")
        known = self.s1 if self.s1 is not None else self.s2
        if known <= 0.0:
            raise ValueError("the known side must be positive")


def triangle_solve(eq: TriangleEquation, tol: Tolerance = DEFAULT_TOLERANCE):
    """Solve a triangular equation for its unknown positive norm.

    Returns ``(solved_unknown, residual_norm)`` where the residual norm is the
    positive t with s1*alpha - s2*beta = t*gamma.  The 2x2 real linear system
    in (unknown, t) is solved by direct elimination; no trigonometric closed
    form is used.

    Raises :class:`DegenerateTriangleError` when alpha = +/-beta (the equation
    violates its own invariant) and :class:`InfeasibleTriangleError` when no
    strictly positive solution exists, including the singular limits
    gamma = +/-beta (unknown s2) and gamma = +/-alpha (unknown s1).
    """
    a, b, g = eq.alpha.angle, eq.beta.angle, eq.gamma.angle
    if circular_distance(a, b) < tol.eps or circular_distance(a + math.pi, b) < tol.eps:
        raise DegenerateTriangleError("alpha = +/-beta")
    ua = (math.cos(a), math.sin(a))
    ub = (math.cos(b), math.sin(b))
    ug = (math.cos(g), math.sin(g))
    if eq.s2 is None:
        # s1*ua = s2*ub + t*ug: columns (ub, ug), rhs s1*ua
        c1, c2, rhs, scale = ub, ug, ua, eq.s1
    else:
        # s2*ub = s1*ua - t*ug: columns (ua, -ug), rhs s2*ub
        c1, c2, rhs, scale = ua, (-ug[0], -ug[1]), ub, eq.s2
    det = c1[0] * c2[1] - c1[1] * c2[0]
    if abs(det) < tol.eps:
        raise InfeasibleTriangleError(
            "gamma is (anti)parallel to the known side: no positive solution")
    rx, ry = scale * rhs[0], scale * rhs[1]
    s = (rx * c2[1] - ry * c2[0]) / det
    t = (c1[0] * ry - c1[1] * rx) / det
    if s <= 0.0 or t <= 0.0:
        raise InfeasibleTriangleError(f"solved norms not positive: s={s:.6g}, t={t:.6g}")
    s1 = eq.s1 if eq.s1 is not None else s
    s2 = eq.s2 if eq.s2 is not None else s
    check = s1 * complex(ua[0], ua[1]) - s2 * complex(ub[0], ub[1])
    resid = circular_distance(cmath.phase(check), g)
    if resid > 10 * tol.eps and resid > 1e-7:
        raise InfeasibleTriangleError(f"solution fails phase check (residual {resid:.3g})")
    return s, t
