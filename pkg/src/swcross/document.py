"""Manifold description documents.

A document is a YAML (or JSON) mapping::

    name: T2xS2-like
    b1: 2
    b_plus: 1
    b_minus: 1
    Q: [[0, 1], [1, 0]]
    t:                         # sparse; t[j][i][k] = -t[i][j][k] is filled in
      - {i: 1, j: 2, k: 1, value: 2}
    l4: []                     # optional, totally antisymmetric completion
    ref_pos: [1, 1]
    surface: {kind: P2}        # optional: P2 or BlowupP2 with r

Indices in ``t`` and ``l4`` are 1-based.  :func:`emit_document` writes the
canonical JSON form, which parses back to an equal object.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import yaml

from .errors import ContractError, InputError
from .kahler import RationalSurface, SurfaceKind
from .manifold import FourManifoldData, _perm_sign

_KEYS = ("name", "b1", "b_plus", "b_minus", "Q", "t", "l4", "ref_pos", "surface")
_REQUIRED = ("name", "b1", "b_plus", "b_minus", "Q", "ref_pos")


@dataclass(frozen=True)
class ManifoldDocument:
    manifold: FourManifoldData
    surface: RationalSurface | None = None

    def __eq__(self, other):
        if not isinstance(other, ManifoldDocument):
            return NotImplemented
        return self.manifold == other.manifold and self.surface == other.surface


def _int(value, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{key}: expected an integer, got {value!r}")
    return value


def _int_list(value, key: str) -> list[int]:
    if not isinstance(value, list):
        raise InputError(f"{key}: expected a list of integers, got {value!r}")
    return [_int(v, f"{key}[{n}]") for n, v in enumerate(value)]


def _entries(raw, key: str, fields: tuple[str, ...]) -> list[dict]:
    if raw is None:
        return []
    if not isinstance(raw, list):
        raise InputError(f"{key}: expected a list of entries")
    out = []
    for n, entry in enumerate(raw):
        where = f"{key}[{n}]"
        if not isinstance(entry, dict):
            raise InputError(f"{where}: expected a mapping with keys {', '.join(fields)}")
        extra = set(entry) - set(fields)
        missing = set(fields) - set(entry)
        if extra or missing:
            raise InputError(
                f"{where}: keys must be exactly {', '.join(fields)}"
                + (f"; unknown {sorted(extra)}" if extra else "")
                + (f"; missing {sorted(missing)}" if missing else "")
            )
        out.append({f: _int(entry[f], f"{where}.{f}") for f in fields})
    return out


def _check_range(value: int, hi: int, key: str) -> int:
    if not 1 <= value <= hi:
        raise InputError(f"{key}: index {value} out of range [1, {hi}]")
    return value - 1


def _parse_t(raw, b1: int, b2: int) -> np.ndarray:
    t = np.zeros((b1, b1, b2), dtype=object)
    seen = set()
    for n, e in enumerate(_entries(raw, "t", ("i", "j", "k", "value"))):
        where = f"t[{n}]"
        i = _check_range(e["i"], b1, f"{where}.i")
        j = _check_range(e["j"], b1, f"{where}.j")
        k = _check_range(e["k"], b2, f"{where}.k")
        v = e["value"]
        if i == j:
            if v:
                raise InputError(f"{where}: diagonal entry i = j = {i + 1} must be zero, got {v}")
            continue
        key = (min(i, j), max(i, j), k)
        if key in seen:
            raise InputError(f"{where}: duplicate entry for (i, j, k) = ({i + 1}, {j + 1}, {k + 1})")
        seen.add(key)
        t[i, j, k] = v
        t[j, i, k] = -v
    return t


def _parse_l4(raw, b1: int) -> np.ndarray:
    l4 = np.zeros((b1,) * 4, dtype=object)
    seen = set()
    for n, e in enumerate(_entries(raw, "l4", ("h", "i", "j", "k", "value"))):
        where = f"l4[{n}]"
        idx = tuple(_check_range(e[f], b1, f"{where}.{f}") for f in ("h", "i", "j", "k"))
        v = e["value"]
        if len(set(idx)) < 4:
            if v:
                raise InputError(f"{where}: entry with a repeated index must be zero, got {v}")
            continue
        base = tuple(sorted(idx))
        if base in seen:
            raise InputError(f"{where}: duplicate entry for indices {tuple(i + 1 for i in base)}")
        seen.add(base)
        # value is given at idx; fill every permutation of the sorted base
        base_value = _perm_sign([base.index(i) for i in idx]) * v
        for perm in itertools.permutations(range(4)):
            target = tuple(base[p] for p in perm)
            l4[target] = _perm_sign(perm) * base_value
    return l4


def _parse_surface(raw) -> RationalSurface | None:
    if raw is None:
        return None
    if not isinstance(raw, dict) or "kind" not in raw:
        raise InputError("surface: expected a mapping with key 'kind'")
    extra = set(raw) - {"kind", "r"}
    if extra:
        raise InputError(f"surface: unknown keys {sorted(extra)}")
    try:
        kind = SurfaceKind(raw["kind"])
    except ValueError:
        raise InputError(f"surface.kind: expected 'P2' or 'BlowupP2', got {raw['kind']!r}") from None
    r = _int(raw.get("r", 0), "surface.r")
    try:
        return RationalSurface(kind, r)
    except ContractError as exc:
        raise InputError(f"surface: {exc}") from None


def document_from_mapping(data) -> ManifoldDocument:
    if not isinstance(data, dict):
        raise InputError("document: top level must be a mapping")
    unknown = set(data) - set(_KEYS)
    if unknown:
        raise InputError(f"document: unknown keys {sorted(unknown)}")
    for key in _REQUIRED:
        if key not in data:
            raise InputError(f"{key}: required key is missing")
    name = data["name"]
    if not isinstance(name, str):
        raise InputError(f"name: expected a string, got {name!r}")
    b1 = _int(data["b1"], "b1")
    b_plus = _int(data["b_plus"], "b_plus")
    b_minus = _int(data["b_minus"], "b_minus")
    for key, v in (("b1", b1), ("b_plus", b_plus), ("b_minus", b_minus)):
        if v < 0:
            raise InputError(f"{key}: must be nonnegative, got {v}")
    Q_raw = data["Q"]
    if not isinstance(Q_raw, list):
        raise InputError("Q: expected a row-major list of integer rows")
    Q = [_int_list(row, f"Q[{n}]") for n, row in enumerate(Q_raw)]
    b2 = len(Q)
    if any(len(row) != b2 for row in Q):
        raise InputError(f"Q: expected a square {b2}x{b2} matrix")
    ref = _int_list(data["ref_pos"], "ref_pos")
    if len(ref) != b2:
        raise InputError(f"ref_pos: length {len(ref)} differs from b2 = {b2}")
    t = _parse_t(data.get("t"), b1, b2)
    l4 = _parse_l4(data.get("l4"), b1)
    surface = _parse_surface(data.get("surface"))
    try:
        manifold = FourManifoldData(
            name=name, b1=b1, b_plus=b_plus, b_minus=b_minus,
            Q=np.array(Q, dtype=object).reshape(b2, b2), t=t, l4=l4, ref_pos=tuple(ref),
        )
    except ContractError as exc:
        raise InputError(f"document: {exc}") from None
    if surface is not None:
        if b1 != 0 or Q != surface.Q:
            raise InputError(f"surface: {surface.kind.value} requires b1 = 0 and Q = {surface.Q}")
    return ManifoldDocument(manifold=manifold, surface=surface)


def parse_document(text: str) -> ManifoldDocument:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise InputError(f"document: not valid YAML/JSON ({exc})") from None
    return document_from_mapping(data)


def load_document(path) -> ManifoldDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read document ({exc.strerror})") from None
    return parse_document(text)


def document_to_mapping(doc: ManifoldDocument) -> dict:
    m = doc.manifold
    t_entries = []
    for i, j in itertools.combinations(range(m.b1), 2):
        for k in range(m.b2):
            v = m.t[i, j, k]
            if v:
                t_entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "value": int(v)})
    l4_entries = []
    for h, i, j, k in itertools.combinations(range(m.b1), 4):
        v = m.l4[h, i, j, k]
        if v:
            l4_entries.append({"h": h + 1, "i": i + 1, "j": j + 1, "k": k + 1, "value": int(v)})
    out = {
        "name": m.name,
        "b1": m.b1,
        "b_plus": m.b_plus,
        "b_minus": m.b_minus,
        "Q": [list(row) for row in m.Q_rows],
        "t": t_entries,
        "l4": l4_entries,
        "ref_pos": list(m.ref_pos),
    }
    if doc.surface is not None:
        out["surface"] = {"kind": doc.surface.kind.value, "r": doc.surface.r}
    return out


def emit_document(doc: ManifoldDocument) -> str:
    """Canonical JSON: fixed key order, entries with increasing indices."""
    mapping = document_to_mapping(doc)
    lines = ["{"]
    items = list(mapping.items())
    for n, (key, value) in enumerate(items):
        sep = "," if n < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            inner = ",\n".join("    " + json.dumps(v, sort_keys=False) for v in value)
            lines.append(f"  {json.dumps(key)}: [\n{inner}\n  ]{sep}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value)}{sep}")
    lines.append("}")
    return "\n".join(lines) + "\n"
