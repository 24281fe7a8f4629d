"""Plain-text tables with exact values and stable layout."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import ExtElement, format_monomial, indices_from_mask


def render_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, ExtElement):
        return render_element(v)
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(render_value(x) for x in v) + ")"
    return str(v)


def render_element(x: ExtElement) -> str:
    """``-3*l1^l2 + l3^l4``; terms ordered by degree, then index tuple."""
    if not x:
        return "0"
    parts = []
    for mask in sorted(x.terms, key=lambda m: (m.bit_count(), indices_from_mask(m))):
        q = x.terms[mask]
        mono = format_monomial(mask)
        mag = abs(q)
        if mask == 0:
            body = render_value(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{render_value(mag)}*{mono}"
        if not parts:
            parts.append(("-" if q < 0 else "") + body)
        else:
            parts.append(("- " if q < 0 else "+ ") + body)
    return " ".join(parts)


@dataclass
class ReportTable:
    headers: list[str]
    rows: list[list] = field(default_factory=list)
    title: str = ""
    footer: list[str] = field(default_factory=list)

    def add(self, *row) -> None:
        self.rows.append(list(row))

    def render(self) -> str:
        cells = [list(self.headers)] + [[render_value(v) for v in row] for row in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.headers))]
        lines = []
        if self.title:
            lines.append(f"# {self.title}")
        for r in cells:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
        lines.extend(f"# {f}" for f in self.footer)
        return "\n".join(lines) + "\n"
