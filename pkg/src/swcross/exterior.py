"""Exact exterior algebra on finitely many degree-one generators.

A basis monomial ``l_{i1} ^ ... ^ l_{ir}`` (``i1 < ... < ir``) is encoded as
an integer bitmask with bit ``i - 1`` set for each generator ``l_i``; its
degree is the popcount.  Coefficients are :class:`fractions.Fraction`, so
intermediate quotients such as ``u^k / k!`` stay exact, and every value that
must be integral is checked before it leaves this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .errors import ContractError, DimensionError, IntegralityError

MAX_GENERATORS = 64
_INT64_SAFE = 1 << 62


def mask_from_indices(indices: Iterable[int], b1: int) -> int:
    """Bitmask for a strictly increasing sequence of 1-based generator indices."""
    mask = 0
    prev = 0
    for i in indices:
        i = int(i)
        if i <= prev or i > b1:
            raise ContractError(
                f"generator indices must be strictly increasing in [1, {b1}], got {tuple(indices)}"
            )
        mask |= 1 << (i - 1)
        prev = i
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def degree(mask: int) -> int:
    return mask.bit_count()


def format_monomial(mask: int) -> str:
    """ASCII rendering: ``1`` for the unit, ``l1^l3`` otherwise."""
    if mask == 0:
        return "1"
    return "^".join(f"l{i}" for i in indices_from_mask(mask))


def basis_monomials(b1: int, deg: int | None = None) -> Iterator[int]:
    """Basis masks ordered by degree, then lexicographically by index tuple."""
    degrees = range(b1 + 1) if deg is None else [deg]
    for r in degrees:
        if r < 0 or r > b1:
            continue
        for combo in itertools.combinations(range(b1), r):
            yield sum(1 << i for i in combo)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, float):
        raise ContractError("floating-point coefficients are not accepted; use int or Fraction")
    return Fraction(value)


class ExtElement:
    """An element of the exterior algebra on ``b1`` generators.

    Instances are immutable.  ``terms`` maps monomial masks to nonzero
    Fraction coefficients.  ``x ^ y`` is the wedge product, ``k * x`` scalar
    multiplication.
    """

    __slots__ = ("b1", "_terms", "_hash")

    def __init__(self, b1: int, terms: Mapping[int, object] | None = None):
        b1 = int(b1)
        if not 0 <= b1 <= MAX_GENERATORS:
            raise ContractError(f"b1 must lie in [0, {MAX_GENERATORS}], got {b1}")
        clean: dict[int, Fraction] = {}
        if terms:
            limit = 1 << b1
            for mask, coeff in terms.items():
                mask = int(mask)
                if mask < 0 or mask >= limit:
                    raise ContractError(f"monomial mask {mask:#x} exceeds b1={b1}")
                q = _as_fraction(coeff)
                if q:
                    clean[mask] = clean.get(mask, Fraction(0)) + q
                    if not clean[mask]:
                        del clean[mask]
        self.b1 = b1
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, b1: int, terms: dict[int, Fraction]) -> "ExtElement":
        obj = cls.__new__(cls)
        obj.b1 = b1
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, b1: int) -> "ExtElement":
        return cls(b1)

    @classmethod
    def one(cls, b1: int) -> "ExtElement":
        return cls(b1, {0: 1})

    @classmethod
    def scalar(cls, b1: int, value) -> "ExtElement":
        return cls(b1, {0: value})

    @classmethod
    def generator(cls, b1: int, i: int) -> "ExtElement":
        return cls(b1, {mask_from_indices([i], b1): 1})

    @classmethod
    def monomial(cls, b1: int, indices: Iterable[int], coeff=1) -> "ExtElement":
        return cls(b1, {mask_from_indices(indices, b1): coeff})

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, monomial) -> Fraction:
        """Coefficient of a monomial given as a mask or an index tuple."""
        if not isinstance(monomial, (int, np.integer)):
            monomial = mask_from_indices(monomial, self.b1)
        return self._terms.get(int(monomial), Fraction(0))

    def degrees(self) -> frozenset[int]:
        return frozenset(m.bit_count() for m in self._terms)

    def is_homogeneous(self, deg: int | None = None) -> bool:
        """True when the support sits in a single degree (``deg`` if given).

        The zero element counts as homogeneous of every degree.
        """
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return deg is None or deg in degs

    def is_integral(self) -> bool:
        return all(q.denominator == 1 for q in self._terms.values())

    def integer_terms(self) -> dict[int, int]:
        if not self.is_integral():
            raise IntegralityError(f"element is not integral: {self!r}")
        return {m: q.numerator for m, q in self._terms.items()}

    def component(self, deg: int) -> "ExtElement":
        return ExtElement._from_clean(
            self.b1, {m: q for m, q in self._terms.items() if m.bit_count() == deg}
        )

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "ExtElement") -> None:
        if not isinstance(other, ExtElement):
            raise TypeError(f"expected ExtElement, got {type(other).__name__}")
        if other.b1 != self.b1:
            raise DimensionError(f"b1 mismatch: {self.b1} vs {other.b1}")

    def __add__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        self._check(other)
        out = dict(self._terms)
        for m, q in other._terms.items():
            v = out.get(m, 0) + q
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return ExtElement._from_clean(self.b1, out)

    def __neg__(self):
        return ExtElement._from_clean(self.b1, {m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, ExtElement):
            return NotImplemented
        s = _as_fraction(scalar)
        if not s:
            return ExtElement.zero(self.b1)
        return ExtElement._from_clean(self.b1, {m: q * s for m, q in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = _as_fraction(scalar)
        if not s:
            raise ZeroDivisionError("division of an ExtElement by zero")
        return self * (1 / s)

    def __xor__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.b1 == other.b1 and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.b1, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        if not self._terms:
            return f"ExtElement(b1={self.b1}, 0)"
        parts = []
        for m in sorted(self._terms, key=lambda k: (k.bit_count(), indices_from_mask(k))):
            parts.append(f"{self._terms[m]}*{format_monomial(m)}")
        return f"ExtElement(b1={self.b1}, {' + '.join(parts)})"


@dataclass(frozen=True)
class Orientation1:
    """Orientation of H^1: the generator is ``sign * l_1 ^ ... ^ l_b1``."""

    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ContractError(f"orientation sign must be +1 or -1, got {self.sign!r}")

    def flipped(self) -> "Orientation1":
        return Orientation1(-self.sign)


def _common_denominator(coeffs: list[Fraction]) -> int:
    d = 1
    for q in coeffs:
        d = math.lcm(d, q.denominator)
    return d


def wedge(x: ExtElement, y: ExtElement) -> ExtElement:
    """Exterior product.

    Coefficients are scaled to integers over a common denominator; when the
    largest possible accumulated value fits in int64 the compiled kernel is
    used, otherwise products are accumulated with Python integers.
    """
    x._check(y)
    b1 = x.b1
    if not x._terms or not y._terms:
        return ExtElement.zero(b1)
    xmasks = list(x._terms)
    ymasks = list(y._terms)
    xq = list(x._terms.values())
    yq = list(y._terms.values())
    dx = _common_denominator(xq)
    dy = _common_denominator(yq)
    xn = [q.numerator * (dx // q.denominator) for q in xq]
    yn = [q.numerator * (dy // q.denominator) for q in yq]
    denom = dx * dy
    xm_arr = np.array(xmasks, dtype=np.uint64)
    ym_arr = np.array(ymasks, dtype=np.uint64)

    bound = max(map(abs, xn)) * max(map(abs, yn)) * min(len(xn), len(yn))
    out: dict[int, Fraction] = {}
    if bound < _INT64_SAFE:
        masks, coeffs = _kernels.wedge_int64(
            xm_arr, np.array(xn, dtype=np.int64), ym_arr, np.array(yn, dtype=np.int64)
        )
        for m, v in zip(masks.tolist(), coeffs.tolist()):
            out[m] = Fraction(v, denom)
        return ExtElement._from_clean(b1, out)

    prod_masks, signs = _kernels.shuffle_table(xm_arr, ym_arr)
    acc: dict[int, int] = {}
    ny = len(yn)
    for k, (m, s) in enumerate(zip(prod_masks.tolist(), signs.tolist())):
        if s:
            acc[m] = acc.get(m, 0) + s * xn[k // ny] * yn[k % ny]
    for m, v in acc.items():
        if v:
            out[m] = Fraction(v, denom)
    return ExtElement._from_clean(b1, out)


def _require_degree_two_integral(u: ExtElement) -> None:
    if not u.is_homogeneous(2):
        raise ContractError(f"expected a homogeneous degree-2 element, got degrees {sorted(u.degrees())}")
    if not u.is_integral():
        raise ContractError("expected an integral degree-2 element")


def _divided_powers(u: ExtElement, k_max: int) -> list[ExtElement]:
    # gamma_j = (u ^ gamma_{j-1}) / j, exactly.
    out = [ExtElement.one(u.b1)]
    for j in range(1, k_max + 1):
        if 2 * j > u.b1 or not out[-1]:
            out.append(ExtElement.zero(u.b1))
            continue
        out.append(wedge(u, out[-1]) / j)
    return out


def divided_power(u: ExtElement, k: int) -> ExtElement:
    """``u^k / k!`` for an integral degree-2 element ``u``.

    Zero once ``2k`` exceeds ``b1``.  The result is checked to be integral.
    """
    _require_degree_two_integral(u)
    if k < 0:
        raise ContractError(f"divided power index must be nonnegative, got {k}")
    if 2 * k > u.b1:
        return ExtElement.zero(u.b1)
    result = _divided_powers(u, k)[k]
    if not result.is_integral():
        raise IntegralityError(f"u^{k}/{k}! is not integral for u = {u!r}")
    return result


def truncated_exp(u: ExtElement, sign: int = 1) -> ExtElement:
    """``exp(sign * u)``; the series stops at ``k = b1 // 2``."""
    _require_degree_two_integral(u)
    if sign not in (1, -1):
        raise ContractError(f"sign must be +1 or -1, got {sign!r}")
    total = ExtElement.zero(u.b1)
    for gamma in _divided_powers(sign * u, u.b1 // 2):
        total = total + gamma
    if not total.is_integral():
        raise IntegralityError(f"exp({sign}*u) is not integral for u = {u!r}")
    return total


def pair_top(x: ExtElement, o: Orientation1 | int = 1) -> Fraction:
    """Evaluate against the orientation generator: ``sign * coeff of l_1^...^l_b1``."""
    sign = o.sign if isinstance(o, Orientation1) else Orientation1(int(o)).sign
    return sign * x.coefficient((1 << x.b1) - 1)
