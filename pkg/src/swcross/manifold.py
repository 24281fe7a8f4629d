"""Topological data of a closed oriented 4-manifold and its characteristic classes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from . import lattice
from .errors import CharacteristicError, ContractError, LatticeInconsistencyError, ParityError, ValidationError


def _int_array(data, shape) -> np.ndarray:
    if data is None:
        return np.zeros(shape, dtype=object)
    arr = np.array(data, dtype=object)
    if arr.size == 0:
        arr = arr.reshape(shape) if int(np.prod(shape)) == 0 else arr
    if arr.shape != tuple(shape):
        raise ContractError(f"expected array of shape {tuple(shape)}, got {arr.shape}")
    out = np.empty(shape, dtype=object)
    for idx in np.ndindex(*shape):
        v = arr[idx]
        if isinstance(v, (bool, float)) or int(v) != v:
            raise ContractError(f"non-integer entry {v!r} at {idx}")
        out[idx] = int(v)
    return out


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class FourManifoldData:
    """Cohomological skeleton of a closed oriented 4-manifold.

    ``Q`` is the intersection form on H^2/Tors in a basis ``h_1..h_b2``,
    ``t[i, j, k] = <l^i u l^j u h_k, [X]>`` and ``l4[h, i, j, k]`` the
    quadruple cup products of the H^1 basis.  Indices are 0-based in the
    arrays.  ``ref_pos`` is a positive-square class selecting the component
    H0 of the positive cone.
    """

    name: str
    b1: int
    b_plus: int
    b_minus: int
    Q: np.ndarray
    t: np.ndarray = None
    l4: np.ndarray = None
    ref_pos: tuple[int, ...] = None
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if int(self.b1) < 0 or int(self.b_minus) < 0 or int(self.b_plus) < 0:
            raise ContractError("Betti numbers must be nonnegative")
        object.__setattr__(self, "b1", int(self.b1))
        object.__setattr__(self, "b_plus", int(self.b_plus))
        object.__setattr__(self, "b_minus", int(self.b_minus))
        Q = np.array(self.Q, dtype=object)
        if Q.ndim != 2 or Q.shape[0] != Q.shape[1]:
            raise ContractError(f"Q must be a square matrix, got shape {Q.shape}")
        b2 = Q.shape[0]
        object.__setattr__(self, "Q", _int_array(Q, (b2, b2)))
        object.__setattr__(self, "t", _int_array(self.t, (self.b1, self.b1, b2)))
        object.__setattr__(self, "l4", _int_array(self.l4, (self.b1,) * 4))
        if self.ref_pos is None:
            raise ContractError("ref_pos is required")
        ref = tuple(int(v) for v in self.ref_pos)
        if len(ref) != b2:
            raise ContractError(f"ref_pos has length {len(ref)}, expected b2 = {b2}")
        object.__setattr__(self, "ref_pos", ref)

    @property
    def b2(self) -> int:
        return self.Q.shape[0]

    @property
    def signature(self) -> int:
        return self.b_plus - self.b_minus

    @property
    def euler(self) -> int:
        return 2 - 2 * self.b1 + self.b2

    @cached_property
    def Q_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self.Q.tolist())

    def pair(self, x: Sequence, y: Sequence):
        return lattice.bilinear(self.Q_rows, x, y)

    def square(self, x: Sequence):
        return lattice.bilinear(self.Q_rows, x, x)

    @cached_property
    def violations(self) -> tuple[str, ...]:
        return tuple(_violations(self))

    def require_valid(self) -> None:
        if self.violations:
            raise ValidationError(self.violations)

    def __eq__(self, other):
        if not isinstance(other, FourManifoldData):
            return NotImplemented
        return (
            self.name == other.name
            and (self.b1, self.b_plus, self.b_minus) == (other.b1, other.b_plus, other.b_minus)
            and self.Q.shape == other.Q.shape
            and np.array_equal(self.Q, other.Q)
            and np.array_equal(self.t, other.t)
            and np.array_equal(self.l4, other.l4)
            and self.ref_pos == other.ref_pos
        )

    __hash__ = None


def _violations(m: FourManifoldData):
    Q = m.Q_rows
    b2 = m.b2
    if m.b_plus < 1:
        yield f"b_plus: must be positive, got {m.b_plus}"
    if m.b_plus + m.b_minus != b2:
        yield f"Q: size {b2} differs from b_plus + b_minus = {m.b_plus + m.b_minus}"
    if not lattice.is_symmetric(Q):
        yield "Q: intersection form is not symmetric"
    else:
        sig = lattice.signature(Q)
        if sig is None:
            yield "Q: intersection form is degenerate"
        else:
            if sig != (m.b_plus, m.b_minus):
                yield f"Q: signature {sig} does not match (b_plus, b_minus) = ({m.b_plus}, {m.b_minus})"
            det = lattice.determinant(Q)
            if abs(det) != 1:
                yield f"Q: determinant {det} is not +-1 (intersection forms are unimodular)"

    t = m.t
    for i in range(m.b1):
        for j in range(i, m.b1):
            for k in range(b2):
                if t[i, j, k] != -t[j, i, k]:
                    yield (
                        f"t: not antisymmetric in its first two slots at "
                        f"(i={i + 1}, j={j + 1}, k={k + 1})"
                    )
                    break

    l4 = m.l4
    if m.b1 >= 1:
        bad = None
        for idx in np.ndindex(*l4.shape):
            if l4[idx] == 0:
                continue
            if len(set(idx)) < 4:
                bad = f"l4: nonzero entry with a repeated index at {tuple(i + 1 for i in idx)}"
                break
            base = tuple(sorted(idx))
            expected = _perm_sign([base.index(i) for i in idx]) * l4[base]
            if l4[idx] != expected:
                bad = f"l4: not totally antisymmetric at {tuple(i + 1 for i in idx)}"
                break
        if bad:
            yield bad
        if m.b_plus == 1 and any(v != 0 for v in l4.flat):
            yield "l4: quadruple products must vanish when b_plus = 1"

    if len(m.ref_pos) == b2 and lattice.is_symmetric(Q):
        if m.square(m.ref_pos) <= 0:
            yield f"ref_pos: Q(ref_pos, ref_pos) = {m.square(m.ref_pos)} is not positive"


def validate(m: FourManifoldData) -> list[str]:
    """List of violated invariants; empty when ``m`` is a valid description."""
    return list(m.violations)


@dataclass(frozen=True)
class CharClass:
    """A characteristic vector ``c`` together with its index data.

    ``w_c = (c^2 - 3 sigma - 2 e) / 4`` is the expected dimension of the
    moduli space and ``delta_c = (c^2 - sigma) / 8`` the index of the Dirac
    family.
    """

    c: tuple[int, ...]
    square: int
    w_c: int
    delta_c: int
    label: str = ""


def make_char_class(m: FourManifoldData, c: Sequence[int], label: str = "") -> CharClass:
    m.require_valid()
    c = tuple(int(v) for v in c)
    if len(c) != m.b2:
        raise ContractError(f"class has {len(c)} coordinates, expected b2 = {m.b2}")
    if not lattice.is_characteristic(m.Q_rows, c):
        bad = next(
            k for k in range(m.b2)
            if (m.pair(c, [int(i == k) for i in range(m.b2)]) - m.Q_rows[k][k]) % 2
        )
        raise CharacteristicError(
            f"c = {c} is not characteristic: Q(c, h_{bad + 1}) != Q(h_{bad + 1}, h_{bad + 1}) mod 2"
        )
    sq = m.square(c)
    if (sq - m.signature) % 8:
        raise LatticeInconsistencyError(
            f"c^2 - sigma = {sq - m.signature} is not divisible by 8 for c = {c}"
        )
    four_w = sq - 3 * m.signature - 2 * m.euler
    if four_w % 4:
        raise LatticeInconsistencyError(f"c^2 - 3 sigma - 2 e = {four_w} is not divisible by 4")
    return CharClass(c=c, square=sq, w_c=four_w // 4, delta_c=(sq - m.signature) // 8, label=label)


def cij_tensor(m: FourManifoldData, cc: CharClass) -> np.ndarray:
    """``c_ij = <c u l^i u l^j, [X]>``: antisymmetric, entries even."""
    m.require_valid()
    b1 = m.b1
    out = np.zeros((b1, b1), dtype=object)
    for i, j in itertools.product(range(b1), repeat=2):
        out[i, j] = sum(ck * m.t[i, j, k] for k, ck in enumerate(cc.c) if ck)
    for i, j in itertools.combinations(range(b1), 2):
        if out[i, j] % 2:
            raise ParityError(
                f"c_{i + 1}{j + 1} = {out[i, j]} is odd; the tensor t is inconsistent with c characteristic"
            )
    return out
