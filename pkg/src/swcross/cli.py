"""Command-line interface.

Exit status: 0 on success, 1 when an input violates a mathematical
contract (validation failure, non-characteristic class, discrepancy found),
2 on parse or usage errors.  Tables go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import __version__
from .chambers import ChamberQuery, c_good_at, c_good_sufficient, classify, component_of, wall_pairing, \
    zero_twist_chamber_constancy
from .document import emit_document, load_document
from .errors import InputError, SWCrossError, ValidationError
from .exterior import ExtElement, Orientation1, format_monomial
from .kahler import enumerate_blowup_classes, kahler_orientation, p2_table, sw_values, divisor_of_class
from .manifold import make_char_class, validate
from .report import ReportTable, render_element
from .segre import closed_form_dirac_segre, dirac_chern_classes, segre_polynomials
from .wallcrossing import build_uc, sigma_table, verify_wall_crossing

SEED_ENV = "SWCROSS_SEED"


def parse_int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_rational_vector(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals like 1/2, got {text!r}") from None


def _vec(v) -> str:
    return ",".join(str(x) for x in v)


def _emit(table: ReportTable) -> None:
    sys.stdout.write(table.render())


def _load_valid(path):
    doc = load_document(path)
    doc.manifold.require_valid()
    return doc


def _require_surface(doc, path):
    if doc.surface is None:
        raise InputError(f"{path}: surface: key is required for this command")
    return doc.surface


def cmd_validate(args) -> int:
    doc = load_document(args.file)
    problems = validate(doc.manifold)
    table = ReportTable(["check", "result"], title=f"validate {doc.manifold.name}")
    if problems:
        for p in problems:
            table.add("violation", p)
    else:
        table.add("all invariants", "valid")
    _emit(table)
    return 1 if problems else 0


def cmd_index(args) -> int:
    m = _load_valid(args.file).manifold
    cc = make_char_class(m, args.c)
    table = ReportTable(["quantity", "value"], title=f"index {m.name} c={_vec(args.c)}")
    table.add("c^2", cc.square)
    table.add("sigma", m.signature)
    table.add("euler", m.euler)
    table.add("w_c", cc.w_c)
    table.add("delta_c", cc.delta_c)
    if m.b_plus == 1:
        table.add("b1+2delta_c-2", m.b1 + 2 * cc.delta_c - 2)
    _emit(table)
    return 0


def cmd_sigma(args) -> int:
    m = _load_valid(args.file).manifold
    cc = make_char_class(m, args.c)
    o = Orientation1(args.orientation)
    values = sigma_table(m, cc, o, degrees="all" if args.all_degrees else "parity")
    table = ReportTable(["monomial", "degree", "sigma"],
                        title=f"sigma {m.name} c={_vec(args.c)} orientation={o.sign:+d} w_c={cc.w_c}")
    for mask, v in values.items():
        table.add(format_monomial(mask), mask.bit_count(), v)
    _emit(table)
    return 0


def cmd_segre(args) -> int:
    m = _load_valid(args.file).manifold
    cc = make_char_class(m, args.c)
    if m.b_plus != 1:
        raise SWCrossError(f"b_plus: the Dirac-family Chern classes require b_plus = 1, got {m.b_plus}")
    uc = build_uc(m, cc)
    inp = dirac_chern_classes(uc)
    k_max = args.k_max if args.k_max is not None else inp.delta - 1 + m.b1 // 2
    p = segre_polynomials(inp, k_max)
    closed = closed_form_dirac_segre(uc.u, inp.delta, k_max)
    table = ReportTable(["k", "p_k", "closed_form"], title=f"segre {m.name} c={_vec(args.c)} delta={inp.delta}")
    for k, pk in p.items():
        table.add(k, render_element(pk), "agrees" if closed.get(k, ExtElement.zero(m.b1)) == pk else "DIFFERS")
    _emit(table)
    return 0


def cmd_chamber(args) -> int:
    m = _load_valid(args.file).manifold
    cc = make_char_class(m, args.c)
    q = ChamberQuery(omega=args.omega, b=args.b, cc=cc)
    table = ReportTable(["quantity", "value"], title=f"chamber {m.name} c={_vec(args.c)}")
    table.add("(c-b).omega", wall_pairing(m, cc, args.b, args.omega))
    table.add("component", str(component_of(m, args.omega)))
    table.add("chamber", str(classify(m, q)))
    table.add("c_good_at", c_good_at(m, cc, args.b, args.omega))
    table.add("c_good_sufficient", c_good_sufficient(m, cc, args.b))
    _emit(table)
    return 0


def cmd_constancy(args) -> int:
    m = _load_valid(args.file).manifold
    cc = make_char_class(m, args.c)
    seed = int(os.environ.get(SEED_ENV, "0") or 0)
    rep = zero_twist_chamber_constancy(m, cc, samples=args.samples, seed=seed)
    table = ReportTable(["quantity", "value"], title=f"constancy {m.name} c={_vec(args.c)} seed={seed}")
    table.add("samples", rep.samples)
    table.add("predicted sign of c.omega", f"{rep.predicted_sign:+d}")
    table.add("observed signs", ",".join(f"{s:+d}" for s in sorted(rep.observed_signs)))
    table.add("constant", rep.constant)
    table.add("chamber of H0 x {0}", str(rep.chamber))
    _emit(table)
    return 0 if rep.constant else 1


def cmd_sw(args) -> int:
    doc = _load_valid(args.file)
    s = _require_surface(doc, args.file)
    cc = make_char_class(doc.manifold, args.c)
    sw = sw_values(s, cc)
    table = ReportTable(["c", "m", "w_c", "SW(+)", "SW(-)"], title=f"sw {doc.manifold.name}",
                        footer=list(sw.notes))
    table.add(cc.c, str(divisor_of_class(s, cc)), cc.w_c, sw.value("+", 0), sw.value("-", 0))
    _emit(table)
    return 0


def cmd_crosscheck(args) -> int:
    doc = _load_valid(args.file)
    s = _require_surface(doc, args.file)
    m = doc.manifold
    cc = make_char_class(m, args.c)
    sw = sw_values(s, cc)
    rep = verify_wall_crossing(sw, m, cc, kahler_orientation())
    table = ReportTable(["monomial", "SW(+)", "SW(-)", "sigma", "status"],
                        title=f"crosscheck {m.name} c={_vec(args.c)}",
                        footer=[f"checked {rep.checked} monomials, {len(rep.discrepancies)} discrepancies"])
    bad = {d.monomial: d for d in rep.discrepancies}
    for mask in sorted(set(sw.plus) | set(sw.minus) | {0} | set(bad)):
        d = bad.get(mask)
        sig = d.sigma if d else sw.value("+", mask) - sw.value("-", mask)
        table.add(format_monomial(mask), sw.value("+", mask), sw.value("-", mask), sig,
                  d.reason if d else "ok")
    _emit(table)
    return 0 if rep.ok else 1


def cmd_p2table(args) -> int:
    table = ReportTable(["c", "w_c", "SW(+)", "SW(-)"], title=f"P2 invariants, odd c in [{args.cmin}, {args.cmax}]")
    for row in p2_table(args.cmin, args.cmax):
        table.add(*row)
    _emit(table)
    return 0


def cmd_blowup(args) -> int:
    res = enumerate_blowup_classes(args.r, args.w, args.count, d_max=args.d_max)
    table = ReportTable(["d", "m", "c", "w_c"], title=f"blow-up of P2 in r={args.r} points, w={args.w}",
                        footer=[f"solutions: {len(res.solutions)}; bound d <= {res.d_max}; "
                                f"bound exceeded: {'yes' if res.bound_exceeded else 'no'}", *res.notes])
    for sol in res.solutions:
        table.add(sol.divisor.degree, sol.divisor.multiplicities, sol.c, sol.w_c)
    _emit(table)
    return 0


def cmd_normalize(args) -> int:
    doc = load_document(args.file)
    sys.stdout.write(emit_document(doc))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="swcross", description="Seiberg-Witten wall-crossing data for b+ = 1.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="manifold document (YAML or JSON)")
        p.set_defaults(func=func)
        return p

    def with_class(p):
        p.add_argument("--c", type=parse_int_vector, required=True,
                       help="characteristic class, comma separated (use --c=-5,1 for negatives)")
        return p

    with_file("validate", cmd_validate, "check the standing hypotheses")
    with_class(with_file("index", cmd_index, "w_c and delta_c"))
    p = with_class(with_file("sigma", cmd_sigma, "abelian Spin^c form on basis monomials"))
    p.add_argument("--orientation", type=int, choices=(1, -1), default=1)
    p.add_argument("--all-degrees", action="store_true", help="include degrees of the wrong parity")
    p = with_class(with_file("segre", cmd_segre, "Segre polynomials of the Dirac family"))
    p.add_argument("--k-max", type=int, default=None)
    p = with_class(with_file("chamber", cmd_chamber, "classify (omega, b)"))
    p.add_argument("--omega", type=parse_rational_vector, required=True)
    p.add_argument("--b", type=parse_rational_vector, required=True)
    p = with_class(with_file("constancy", cmd_constancy, "sample the chamber of H0 x {0}"))
    p.add_argument("--samples", type=int, default=100)
    with_class(with_file("sw", cmd_sw, "SW(+-) of a rational surface"))
    with_class(with_file("crosscheck", cmd_crosscheck, "compare SW(+) - SW(-) with sigma"))
    p = sub.add_parser("p2table", help="invariant table of P2")
    p.add_argument("--cmin", type=int, default=-9)
    p.add_argument("--cmax", type=int, default=9)
    p.set_defaults(func=cmd_p2table)
    p = sub.add_parser("blowup", help="enumerate classes on a blow-up of P2")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--d-max", type=int, default=64)
    p.set_defaults(func=cmd_blowup)
    with_file("normalize", cmd_normalize, "print the canonical form of a document")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"swcross: error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        for v in exc.violations:
            print(f"swcross: invalid: {v}", file=sys.stderr)
        return 1
    except SWCrossError as exc:
        print(f"swcross: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
