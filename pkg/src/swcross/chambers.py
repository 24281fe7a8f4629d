"""Walls and chambers for b_plus = 1.

A period point is represented by any positive-square vector on its ray;
every predicate here depends only on signs of exact pairings, so positive
rescaling never changes an answer.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ConeError, ContractError, PreconditionError
from .manifold import CharClass, FourManifoldData


class Component(enum.Enum):
    H0 = 1
    MINUS_H0 = -1

    def __str__(self):
        return "H0" if self is Component.H0 else "-H0"


class Chamber(enum.Enum):
    WALL = "wall"
    H0_PLUS = "C(H0,+)"
    H0_MINUS = "C(H0,-)"
    MINUS_H0_PLUS = "C(-H0,+)"
    MINUS_H0_MINUS = "C(-H0,-)"

    def __str__(self):
        return self.value

    @property
    def component(self) -> Component | None:
        if self is Chamber.WALL:
            return None
        return Component.H0 if self in (Chamber.H0_PLUS, Chamber.H0_MINUS) else Component.MINUS_H0

    @property
    def side(self) -> str | None:
        if self is Chamber.WALL:
            return None
        return "+" if self in (Chamber.H0_PLUS, Chamber.MINUS_H0_PLUS) else "-"


_CHAMBERS = {
    (Component.H0, "+"): Chamber.H0_PLUS,
    (Component.H0, "-"): Chamber.H0_MINUS,
    (Component.MINUS_H0, "+"): Chamber.MINUS_H0_PLUS,
    (Component.MINUS_H0, "-"): Chamber.MINUS_H0_MINUS,
}


def chamber_of(component: Component, side: str) -> Chamber:
    return _CHAMBERS[(component, side)]


def _rational_vector(v: Sequence, n: int, what: str) -> tuple[Fraction, ...]:
    out = tuple(Fraction(x) for x in v)
    if len(out) != n:
        raise ContractError(f"{what} has {len(out)} coordinates, expected b2 = {n}")
    return out


@dataclass(frozen=True)
class PeriodDirection:
    """A ray in the positive cone, given by any vector on it."""

    omega: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(Fraction(x) for x in self.omega))


@dataclass(frozen=True)
class ChamberQuery:
    omega: PeriodDirection
    b: tuple[Fraction, ...]
    cc: CharClass

    def __post_init__(self):
        if not isinstance(self.omega, PeriodDirection):
            object.__setattr__(self, "omega", PeriodDirection(self.omega))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))


def _omega(m: FourManifoldData, omega) -> tuple[Fraction, ...]:
    vec = omega.omega if isinstance(omega, PeriodDirection) else omega
    vec = _rational_vector(vec, m.b2, "omega")
    sq = m.square(vec)
    if sq <= 0:
        raise ConeError(f"omega = {tuple(str(x) for x in vec)} has Q(omega, omega) = {sq} <= 0")
    return vec


def component_of(m: FourManifoldData, omega) -> Component:
    vec = _omega(m, omega)
    if m.square(m.ref_pos) <= 0:
        raise ConeError("ref_pos does not have positive square")
    # Two positive-square vectors never pair to zero when b_plus = 1.
    return Component.H0 if m.pair(vec, m.ref_pos) > 0 else Component.MINUS_H0


def wall_pairing(m: FourManifoldData, cc: CharClass, b: Sequence, omega) -> Fraction:
    """``(c - b) . omega``."""
    vec = _omega(m, omega)
    diff = [ci - bi for ci, bi in zip(cc.c, _rational_vector(b, m.b2, "b"))]
    return Fraction(m.pair(diff, vec))


def classify(m: FourManifoldData, q: ChamberQuery) -> Chamber:
    s = wall_pairing(m, q.cc, q.b, q.omega)
    if s == 0:
        return Chamber.WALL
    # C_{H,+} is where (c - b).omega < 0.
    return chamber_of(component_of(m, q.omega), "+" if s < 0 else "-")


def c_good_sufficient(m: FourManifoldData, cc: CharClass, b: Sequence) -> bool:
    """Metric-independent criterion: c - b nonzero with nonnegative square."""
    diff = [ci - bi for ci, bi in zip(cc.c, _rational_vector(b, m.b2, "b"))]
    if not any(diff):
        return False
    return m.square(diff) >= 0


def c_good_at(m: FourManifoldData, cc: CharClass, b: Sequence, omega) -> bool:
    """c-goodness for the metric whose self-dual ray is ``omega``."""
    return wall_pairing(m, cc, b, omega) != 0


@dataclass(frozen=True)
class ConstancyReport:
    predicted_sign: int
    samples: int
    observed_signs: frozenset[int]
    chamber: Chamber

    @property
    def constant(self) -> bool:
        return self.observed_signs == frozenset({self.predicted_sign})


def sample_positive_cone(m: FourManifoldData, count: int, rng: random.Random,
                         spread: int = 6) -> list[tuple[Fraction, ...]]:
    """Random rational vectors in the H0 half of the positive cone.

    Candidates ``k * ref_pos + x / d`` with random integer ``k``, ``x`` and
    ``d`` are kept when they have positive square and pair positively with
    ``ref_pos``.
    """
    out = []
    ref = m.ref_pos
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise RuntimeError("positive-cone sampler made no progress")
        k = rng.randint(0, spread)
        d = rng.randint(1, spread)
        vec = tuple(Fraction(k * ref[i]) + Fraction(rng.randint(-spread, spread), d) for i in range(m.b2))
        if m.square(vec) > 0 and m.pair(vec, ref) > 0:
            out.append(vec)
    return out


def zero_twist_chamber_constancy(m: FourManifoldData, cc: CharClass, samples: int = 100,
                                 seed: int = 0) -> ConstancyReport:
    """Check that ``sign(c . omega)`` is constant over H0 when c != 0 and c^2 >= 0.

    The predicted sign is ``sign(c . ref_pos)``; the sign seen on every
    sample is recorded alongside it.
    """
    if not any(cc.c):
        raise PreconditionError("c is zero; H0 x {0} meets the wall")
    if cc.square < 0:
        raise PreconditionError(f"c^2 = {cc.square} < 0; the wall c-perp cuts H0 x {{0}}")
    predicted = m.pair(cc.c, m.ref_pos)
    if predicted == 0:
        raise PreconditionError("c pairs to zero with ref_pos")
    pred_sign = 1 if predicted > 0 else -1
    rng = random.Random(seed)
    observed = set()
    for vec in sample_positive_cone(m, samples, rng):
        s = m.pair(cc.c, vec)
        observed.add(0 if s == 0 else (1 if s > 0 else -1))
    return ConstancyReport(
        predicted_sign=pred_sign,
        samples=samples,
        observed_signs=frozenset(observed),
        chamber=chamber_of(Component.H0, "+" if pred_sign < 0 else "-"),
    )
