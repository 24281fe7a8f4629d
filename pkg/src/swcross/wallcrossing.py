"""The class u_c, the abelian Spin^c form sigma, and the wall-crossing check.

``sigma`` is computed two ways: by pairing ``lambda ^ exp(-u_c)`` with the
orientation generator, and by the single-term coefficient formula that keeps
only the divided power ``u_c^k / k!`` with ``2k = b1 - deg lambda``.  The two
must agree on every input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import ContractError, IntegralityError
from .exterior import (
    ExtElement,
    Orientation1,
    basis_monomials,
    divided_power,
    format_monomial,
    pair_top,
    truncated_exp,
    wedge,
)
from .manifold import CharClass, FourManifoldData, cij_tensor


@dataclass(frozen=True)
class UcClass:
    """``u_c = sum_{i<j} (c_ij / 2) l_i ^ l_j`` with the index of its Dirac family."""

    u: ExtElement
    delta_c: int
    w_c: int

    @property
    def b1(self) -> int:
        return self.u.b1


def build_uc(m: FourManifoldData, cc: CharClass) -> UcClass:
    cij = cij_tensor(m, cc)
    terms = {}
    for i, j in itertools.combinations(range(m.b1), 2):
        v = cij[i, j]
        if v:
            terms[(1 << i) | (1 << j)] = v // 2
    return UcClass(u=ExtElement(m.b1, terms), delta_c=cc.delta_c, w_c=cc.w_c)


def _lambda_degree(lam: ExtElement, b1: int) -> int | None:
    if lam.b1 != b1:
        raise ContractError(f"lambda lives on b1={lam.b1} generators, manifold has b1={b1}")
    if not lam.is_homogeneous():
        raise ContractError(f"lambda must be homogeneous, got degrees {sorted(lam.degrees())}")
    degs = lam.degrees()
    return next(iter(degs)) if degs else None


def _admissible(r: int, b1: int, w_c: int) -> bool:
    return (b1 - r) % 2 == 0 and 0 <= r <= min(b1, w_c)


def _require_b_plus_one(m: FourManifoldData) -> None:
    if m.b_plus != 1:
        raise ContractError(f"wall crossing requires b_plus = 1, got {m.b_plus}")
    m.require_valid()


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    return value.numerator


def sigma_eval(m: FourManifoldData, cc: CharClass, o: Orientation1, lam: ExtElement,
               uc: UcClass | None = None) -> int:
    """``<lambda ^ exp(-u_c), l_O1>`` on admissible degrees, zero elsewhere."""
    _require_b_plus_one(m)
    r = _lambda_degree(lam, m.b1)
    if r is None or not _admissible(r, m.b1, cc.w_c):
        return 0
    if uc is None:
        uc = build_uc(m, cc)
    return _as_int(pair_top(wedge(lam, truncated_exp(uc.u, -1)), o), "sigma")


def sigma_eval_coefficient_formula(m: FourManifoldData, cc: CharClass, o: Orientation1,
                                   lam: ExtElement, uc: UcClass | None = None) -> int:
    """``(-1)^k <lambda ^ u_c^k / k!, l_O1>`` with ``k = (b1 - deg lambda) / 2``."""
    _require_b_plus_one(m)
    r = _lambda_degree(lam, m.b1)
    if r is None or not _admissible(r, m.b1, cc.w_c):
        return 0
    if uc is None:
        uc = build_uc(m, cc)
    k = (m.b1 - r) // 2
    value = pair_top(wedge(lam, divided_power(uc.u, k)), o)
    return _as_int((-1) ** k * value, "sigma")


def sigma_table(m: FourManifoldData, cc: CharClass, o: Orientation1,
                degrees: str = "parity") -> dict[int, int]:
    """sigma on basis monomials, keyed by mask.

    ``degrees="parity"`` lists every monomial of degree congruent to b1
    mod 2 (values beyond ``w_c`` are zero); ``"all"`` lists every monomial.
    """
    _require_b_plus_one(m)
    uc = build_uc(m, cc)
    exp_neg = truncated_exp(uc.u, -1)
    out = {}
    for mask in basis_monomials(m.b1):
        r = mask.bit_count()
        if degrees == "parity" and (m.b1 - r) % 2:
            continue
        if _admissible(r, m.b1, cc.w_c):
            lam = ExtElement(m.b1, {mask: 1})
            out[mask] = _as_int(pair_top(wedge(lam, exp_neg), o), "sigma")
        else:
            out[mask] = 0
    return out


@dataclass(frozen=True)
class SWForm:
    """The invariant as a function {+, -} -> Lambda^* H^1.

    ``plus`` and ``minus`` map monomial masks to integers; evaluating on a
    basis monomial ``lambda`` of H_1 reads off the coefficient of the dual
    monomial.  ``component`` is ``+1`` for H0 and ``-1`` for -H0.
    """

    b1: int
    plus: Mapping[int, int] = field(default_factory=dict)
    minus: Mapping[int, int] = field(default_factory=dict)
    component: int = 1
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "plus", {int(k): int(v) for k, v in self.plus.items() if v})
        object.__setattr__(self, "minus", {int(k): int(v) for k, v in self.minus.items() if v})
        if self.component not in (1, -1):
            raise ContractError(f"component must be +1 (H0) or -1 (-H0), got {self.component}")

    def value(self, side: str, mask: int) -> int:
        table = self.plus if side == "+" else self.minus
        return table.get(mask, 0)

    def normalized(self) -> "SWForm":
        """Re-express for H0 using SW_{-H0}(+-) = -SW_{H0}(-+)."""
        if self.component == 1:
            return self
        return SWForm(
            b1=self.b1,
            plus={k: -v for k, v in self.minus.items()},
            minus={k: -v for k, v in self.plus.items()},
            component=1,
            notes=self.notes,
        )

    def for_component(self, component: int) -> "SWForm":
        base = self.normalized()
        if component == 1:
            return base
        return SWForm(
            b1=self.b1,
            plus={k: -v for k, v in base.minus.items()},
            minus={k: -v for k, v in base.plus.items()},
            component=-1,
            notes=self.notes,
        )


@dataclass(frozen=True)
class Discrepancy:
    monomial: int
    sw_plus: int
    sw_minus: int
    sigma: int
    reason: str = "difference"

    def describe(self) -> str:
        return (
            f"{format_monomial(self.monomial)}: SW(+) - SW(-) = {self.sw_plus - self.sw_minus}, "
            f"sigma = {self.sigma} ({self.reason})"
        )


@dataclass(frozen=True)
class WallCrossingReport:
    checked: int
    discrepancies: tuple[Discrepancy, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def verify_wall_crossing(sw: SWForm, m: FourManifoldData, cc: CharClass,
                         o: Orientation1) -> WallCrossingReport:
    """Compare SW(+) - SW(-) with sigma on every basis monomial.

    Coefficients of ``sw`` in degrees of the wrong parity (``r`` not
    congruent to ``w_c`` mod 2) are reported as well.
    """
    if sw.b1 != m.b1:
        raise ContractError(f"SW form has b1={sw.b1}, manifold has b1={m.b1}")
    form = sw.normalized()
    sig = sigma_table(m, cc, o, degrees="all")
    found = []
    for mask in basis_monomials(m.b1):
        p, q, s = form.value("+", mask), form.value("-", mask), sig[mask]
        if p - q != s:
            found.append(Discrepancy(mask, p, q, s))
        elif (p or q) and (mask.bit_count() - cc.w_c) % 2:
            found.append(Discrepancy(mask, p, q, s, reason="support in wrong parity"))
    return WallCrossingReport(checked=len(sig), discrepancies=tuple(found))
