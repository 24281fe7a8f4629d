"""Direct images of powers of the hyperplane class over a Fredholm family.

Given the Chern classes ``c_1, c_2, ...`` of an index bundle of rank
``delta``, the polynomials ``p_k`` satisfy ``p_{delta-1} = 1`` and
``p_k = -sum_{i=1}^{k-delta+1} c_i p_{k-i}``; equivalently
``sum_j p_{delta-1+j}`` is the inverse of the total Chern class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ContractError
from .exterior import ExtElement, divided_power, wedge
from .manifold import CharClass, FourManifoldData
from .wallcrossing import UcClass, build_uc


@dataclass(frozen=True)
class ChernInput:
    """Chern data of an index bundle: rank ``delta`` and ``classes[i-1] = c_i``."""

    delta: int
    classes: tuple[ExtElement, ...]
    b1: int

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        for i, ci in enumerate(self.classes, start=1):
            if ci.b1 != self.b1:
                raise ContractError(f"c_{i} lives on b1={ci.b1}, expected {self.b1}")
            if not ci.is_homogeneous(2 * i):
                raise ContractError(f"c_{i} must be homogeneous of degree {2 * i}")

    def chern(self, i: int) -> ExtElement:
        if 1 <= i <= len(self.classes):
            return self.classes[i - 1]
        return ExtElement.zero(self.b1)

    def total(self) -> ExtElement:
        out = ExtElement.one(self.b1)
        for ci in self.classes:
            out = out + ci
        return out


def default_k_max(inp: ChernInput) -> int:
    return inp.delta - 1 + inp.b1 // 2


def segre_polynomials(inp: ChernInput, k_max: int | None = None) -> dict[int, ExtElement]:
    """``{k: p_k}`` for ``k = delta - 1, ..., k_max``."""
    if k_max is None:
        k_max = default_k_max(inp)
    start = inp.delta - 1
    if k_max < start:
        raise ContractError(f"k_max = {k_max} is below delta - 1 = {start}")
    p = {start: ExtElement.one(inp.b1)}
    for k in range(start + 1, k_max + 1):
        acc = ExtElement.zero(inp.b1)
        for i in range(1, k - start + 1):
            ci = inp.chern(i)
            if ci and p[k - i]:
                acc = acc + wedge(ci, p[k - i])
        p[k] = -acc
    return p


def series_inverse_residual(inp: ChernInput, p: dict[int, ExtElement]) -> ExtElement:
    """``(1 + sum c_i) ^ (sum_j p_{delta-1+j}) - 1``; zero when the recursion holds."""
    start = inp.delta - 1
    total_p = ExtElement.zero(inp.b1)
    for k in sorted(p):
        if k >= start:
            total_p = total_p + p[k]
    return wedge(inp.total(), total_p) - ExtElement.one(inp.b1)


def dirac_chern_classes(uc: UcClass, k_max: int | None = None) -> ChernInput:
    """``c_k = u_c^k / k!`` for the Dirac family of a b_plus = 1 manifold."""
    top = uc.b1 // 2 if k_max is None else k_max
    classes = [divided_power(uc.u, k) for k in range(1, top + 1)]
    while classes and not classes[-1]:
        classes.pop()
    return ChernInput(delta=uc.delta_c, classes=tuple(classes), b1=uc.b1)


@dataclass(frozen=True)
class ChernCharacter:
    """Graded pieces of ch(index D_A): rank, degree 2 and degree 4."""

    rank: int
    degree2: ExtElement
    degree4: ExtElement


def chern_character_expansion(m: FourManifoldData, cc: CharClass) -> ChernCharacter:
    m.require_valid()
    uc = build_uc(m, cc)
    terms = {}
    for h, i, j, k in itertools.combinations(range(m.b1), 4):
        v = m.l4[h, i, j, k]
        if v:
            terms[(1 << h) | (1 << i) | (1 << j) | (1 << k)] = v
    rank = cc.delta_c
    if 8 * rank != cc.square - m.signature:
        raise ContractError("rank piece disagrees with (c^2 - sigma) / 8")
    return ChernCharacter(rank=rank, degree2=uc.u, degree4=ExtElement(m.b1, terms))


def closed_form_dirac_segre(u: ExtElement, delta: int, k_max: int) -> dict[int, ExtElement]:
    """``p_{delta-1+k} = (-1)^k u^k / k!``."""
    return {delta - 1 + k: (-1) ** k * divided_power(u, k) for k in range(k_max - delta + 2)}

