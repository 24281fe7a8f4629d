"""Invariants of rational surfaces (p_g = q = 0) from linear systems.

Supported surfaces are P^2, with basis ``h``, and the blow-up of P^2 in
``r`` points, with basis ``(L, E_1, ..., E_r)`` and intersection form
``diag(1, -1, ..., -1)``.  A divisor class ``dL - sum m_i E_i`` is written
``(d; m_1, ..., m_r)``; on P^2 it is just the degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import ContractError, LatticeInconsistencyError, ParityError
from .exterior import Orientation1
from .manifold import CharClass, FourManifoldData, make_char_class
from .wallcrossing import SWForm

NAIVE_NOTE = "naive criterion: d >= 0, m_i >= 0 and d(d+3)/2 - sum m_i(m_i+1)/2 >= 0"


class SurfaceKind(enum.Enum):
    P2 = "P2"
    BLOWUP_P2 = "BlowupP2"


@dataclass(frozen=True)
class RationalSurface:
    kind: SurfaceKind
    r: int = 0

    def __post_init__(self):
        if not isinstance(self.kind, SurfaceKind):
            object.__setattr__(self, "kind", SurfaceKind(self.kind))
        if self.kind is SurfaceKind.P2 and self.r != 0:
            raise ContractError("P2 has no blown-up points")
        if self.kind is SurfaceKind.BLOWUP_P2 and self.r < 1:
            raise ContractError(f"blow-up needs r >= 1 points, got {self.r}")

    @classmethod
    def p2(cls) -> "RationalSurface":
        return cls(SurfaceKind.P2)

    @classmethod
    def blowup(cls, r: int) -> "RationalSurface":
        return cls(SurfaceKind.BLOWUP_P2, r)

    @property
    def b2(self) -> int:
        return 1 + self.r

    @property
    def canonical(self) -> tuple[int, ...]:
        return (-3,) + (1,) * self.r

    @property
    def Q(self) -> list[list[int]]:
        return [[(1 if i == 0 else -1) if i == j else 0 for j in range(self.b2)] for i in range(self.b2)]

    @property
    def name(self) -> str:
        return "P2" if self.kind is SurfaceKind.P2 else f"P2#{self.r}(-P2)"

    def to_manifold(self) -> FourManifoldData:
        ref = (1,) + (0,) * self.r
        return FourManifoldData(name=self.name, b1=0, b_plus=1, b_minus=self.r, Q=self.Q, ref_pos=ref)


@dataclass(frozen=True)
class DivisorClass:
    """``dL - sum m_i E_i``, stored as degree and multiplicities."""

    degree: int
    multiplicities: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degree", int(self.degree))
        object.__setattr__(self, "multiplicities", tuple(int(v) for v in self.multiplicities))

    def vector(self) -> tuple[int, ...]:
        return (self.degree,) + tuple(-v for v in self.multiplicities)

    @classmethod
    def from_vector(cls, v) -> "DivisorClass":
        v = [int(x) for x in v]
        return cls(v[0], tuple(-x for x in v[1:]))

    def __str__(self):
        if not self.multiplicities:
            return f"({self.degree})"
        return f"({self.degree}; {', '.join(map(str, self.multiplicities))})"


def _check_surface(s: RationalSurface, m: DivisorClass) -> None:
    if s.kind not in (SurfaceKind.P2, SurfaceKind.BLOWUP_P2):
        raise ContractError(f"unsupported surface kind {s.kind}")
    if len(m.multiplicities) != s.r:
        raise ContractError(f"divisor has {len(m.multiplicities)} multiplicities, surface has r = {s.r}")


def serre_dual(s: RationalSurface, m: DivisorClass) -> DivisorClass:
    """The class ``K - m``."""
    _check_surface(s, m)
    return DivisorClass.from_vector([k - x for k, x in zip(s.canonical, m.vector())])


def expected_dimension(s: RationalSurface, m: DivisorClass) -> int:
    """``d(d+3)/2 - sum m_i(m_i+1)/2``: projective dimension count of |m|."""
    _check_surface(s, m)
    d = m.degree
    return d * (d + 3) // 2 - sum(v * (v + 1) // 2 for v in m.multiplicities)


def linear_system_dimension(s: RationalSurface, m: DivisorClass) -> int | None:
    """Projective dimension of |m| on P^2 (``h^0 - 1``); ``None`` when empty."""
    _check_surface(s, m)
    if s.kind is not SurfaceKind.P2:
        raise ContractError("exact linear-system dimensions are only available on P2")
    k = m.degree
    return (k + 1) * (k + 2) // 2 - 1 if k >= 0 else None


def dou_nonempty(s: RationalSurface, m: DivisorClass, serre_dual_side: bool = False) -> bool:
    """Whether the Douady space of ``m`` (or of ``K - m``) is nonempty.

    On P^2 this is exact.  On blow-ups it is the naive count recorded in
    :data:`NAIVE_NOTE`.
    """
    _check_surface(s, m)
    if serre_dual_side:
        m = serre_dual(s, m)
    if s.kind is SurfaceKind.P2:
        return m.degree >= 0
    if m.degree < 0 or any(v < 0 for v in m.multiplicities):
        return False
    return expected_dimension(s, m) >= 0


def divisor_of_class(s: RationalSurface, cc: CharClass) -> DivisorClass:
    """``m = (c + K) / 2``."""
    if len(cc.c) != s.b2:
        raise ContractError(f"class has {len(cc.c)} coordinates, surface has b2 = {s.b2}")
    twice = [ci + ki for ci, ki in zip(cc.c, s.canonical)]
    if any(v % 2 for v in twice):
        raise ParityError(f"c + K = {tuple(twice)} is not divisible by 2")
    return DivisorClass.from_vector([v // 2 for v in twice])


def douady_model(s: RationalSurface, cc: CharClass, side: str) -> DivisorClass:
    """Divisor class whose Douady space models the moduli space on one side.

    ``side="+"`` ((c - b).omega < 0) gives m = (c + K)/2; ``side="-"`` gives
    the Serre-dual class K - m.
    """
    m = divisor_of_class(s, cc)
    if side == "+":
        return m
    if side == "-":
        return serre_dual(s, m)
    raise ContractError(f"side must be '+' or '-', got {side!r}")


def sw_values(s: RationalSurface, cc: CharClass) -> SWForm:
    """SW(+-) for the component containing the Kahler ray.

    With m = (c + K)/2 and w_c >= 0: SW(+) = 1, SW(-) = 0 when |m| is
    nonempty, else SW(+) = 0, SW(-) = -1.  Negative index gives (0, 0).
    """
    m = douady_model(s, cc, "+")
    notes = (NAIVE_NOTE,) if s.kind is SurfaceKind.BLOWUP_P2 else ()
    mv = m.vector()
    m_minus_k = [a - b for a, b in zip(mv, s.canonical)]
    mm_k = sum(s.Q[i][i] * mv[i] * m_minus_k[i] for i in range(s.b2))
    if mm_k != cc.w_c:
        raise LatticeInconsistencyError(f"m(m - K) = {mm_k} differs from w_c = {cc.w_c}")
    if cc.w_c < 0:
        return SWForm(b1=0, plus={}, minus={}, notes=notes)
    if dou_nonempty(s, m):
        return SWForm(b1=0, plus={0: 1}, minus={}, notes=notes)
    return SWForm(b1=0, plus={}, minus={0: -1}, notes=notes)


def p2_table(cmin: int, cmax: int) -> list[tuple[int, int, int, int]]:
    """Rows ``(c, w_c, SW(+), SW(-))`` for odd ``c`` in ``[cmin, cmax]``."""
    s = RationalSurface.p2()
    man = s.to_manifold()
    rows = []
    for c in range(cmin, cmax + 1):
        if c % 2 == 0:
            continue
        cc = make_char_class(man, (c,))
        sw = sw_values(s, cc)
        rows.append((c, cc.w_c, sw.value("+", 0), sw.value("-", 0)))
    return rows


@dataclass(frozen=True)
class BlowupSolution:
    divisor: DivisorClass
    c: tuple[int, ...]
    w_c: int


@dataclass(frozen=True)
class BlowupEnumeration:
    r: int
    w: int
    solutions: tuple[BlowupSolution, ...]
    d_max: int
    bound_exceeded: bool
    notes: tuple[str, ...] = field(default=(NAIVE_NOTE,))


def _blowup_target(d: int, w: int) -> int:
    # sum m_i(m_i+1)/2 must equal d(d+3)/2 - w/2
    return d * (d + 3) // 2 - w // 2


def enumerate_blowup_classes(r: int, w: int, count: int, d_max: int = 64) -> BlowupEnumeration:
    """First ``count`` solutions ``(d; m_1..m_r)`` of w/2 = d(d+3)/2 - sum m_i(m_i+1)/2.

    Solutions are listed in lexicographic order of ``(d, m_1, ..., m_r)``
    with ``0 <= d <= d_max``.  ``bound_exceeded`` is set when fewer than
    ``count`` solutions exist below the bound.
    """
    if r < 1:
        raise ContractError(f"r must be positive, got {r}")
    if w < 0 or w % 2:
        raise ContractError(f"w must be a nonnegative even integer, got {w}")
    s = RationalSurface.blowup(r)
    man = s.to_manifold()
    found: list[BlowupSolution] = []
    for d in range(d_max + 1):
        need = count - len(found)
        if need <= 0:
            break
        target = _blowup_target(d, w)
        if target < 0:
            continue
        rows, _ = _kernels.triangular_solutions(r, target, need)
        for row in np.asarray(rows).tolist():
            div = DivisorClass(d, tuple(row))
            c = tuple(2 * x - k for x, k in zip(div.vector(), s.canonical))
            cc = make_char_class(man, c)
            if cc.w_c != w:
                raise LatticeInconsistencyError(f"{div}: w_c = {cc.w_c}, expected {w}")
            found.append(BlowupSolution(divisor=div, c=c, w_c=cc.w_c))
    return BlowupEnumeration(
        r=r, w=w, solutions=tuple(found), d_max=d_max, bound_exceeded=len(found) < count
    )


def count_blowup_solutions(r: int, w: int, d_max: int) -> int:
    """Number of solutions with ``d <= d_max``."""
    total = 0
    for d in range(d_max + 1):
        target = _blowup_target(d, w)
        if target >= 0:
            total += int(_kernels.triangular_count(r, target))
    return total


def kahler_orientation() -> Orientation1:
    """H^1 = 0 carries the standard (empty) orientation."""
    return Orientation1(1)
