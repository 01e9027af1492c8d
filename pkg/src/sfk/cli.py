"""Command-line surface: sfk class|singular|verify|strata|fock.

Every invocation is deterministic; identical inputs produce byte-identical
output.  Exit codes: 0 success, 1 failed verification suite, 2 input or
validation error, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import charclass
from .errors import ConsistencyError
from .exactnum import QSqrt2
from .oscillator import NS, EVEN_VIRASORO, ModeOp, apply_mode, phi_inv
from .relations import SUITES
from .singular import (
    ExpansionResult,
    find_singular,
    koschorke_expand,
    rectangular_singular,
    verify_singular,
)
from .strata import (
    IndexSeq,
    RationalSubspace,
    enumerate_strata,
    exact_type,
    j_min,
    n_k,
    n_odd,
)
from .superalgebra import COORD_F, COORD_R, HalfInt, SuperPolynomial
from .symfunc import Partition

TEXT, LATEX, JSON = "text", "latex", "json"


# -- LaTeX rendering ------------------------------------------------------

def latex_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q.numerator < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_scalar(c: QSqrt2) -> str:
    if c.is_rational():
        return latex_fraction(c.rat)
    if not c.rat:
        if c.rt2 == 1:
            return "\\sqrt{2}"
        if c.rt2 == -1:
            return "-\\sqrt{2}"
        return f"{latex_fraction(c.rt2)}\\sqrt{{2}}"
    rt2 = "\\sqrt{2}" if abs(c.rt2) == 1 else f"{latex_fraction(abs(c.rt2))}\\sqrt{{2}}"
    sign = "+" if c.rt2 > 0 else "-"
    return f"\\left({latex_fraction(c.rat)}{sign}{rt2}\\right)"


def latex_monomial(mono) -> str:
    if not mono.even and not mono.odd:
        return "1"
    names = ("x", "y") if mono.coord == COORD_F else ("p", "\\tilde{p}")
    factors = []
    for n, e in mono.even:
        factors.append(f"{names[0]}_{{{n}}}" + (f"^{{{e}}}" if e > 1 else ""))
    for m in mono.odd:
        if mono.coord == COORD_F:
            factors.append(f"y_{{{2 * m + 1}/2}}")
        else:
            factors.append(f"\\tilde{{p}}_{{{m}}}")
    return " ".join(factors)


def latex_polynomial(p: SuperPolynomial) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms():
        mono_tex = latex_monomial(mono)
        if mono_tex == "1":
            text = latex_scalar(coeff)
        elif coeff == QSqrt2(1):
            text = mono_tex
        elif coeff == QSqrt2(-1):
            text = f"-{mono_tex}"
        else:
            text = f"{latex_scalar(coeff)} {mono_tex}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return out


def latex_class(cls) -> str:
    if cls.is_zero():
        return "0"
    pieces = []
    for (even, odd), coeff in cls.sorted_terms():
        factors = []
        for i, e in even:
            factors.append(f"c_{{{i}}}" + (f"^{{{e}}}" if e > 1 else ""))
        for m in odd:
            factors.append(f"c_{{{2 * m + 1}/2}}")
        body = " ".join(factors) if factors else "1"
        if body == "1":
            text = str(coeff)
        elif coeff == 1:
            text = body
        elif coeff == -1:
            text = f"-{body}"
        else:
            text = f"{coeff} {body}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        out += f" - {text[1:]}" if text.startswith("-") else f" + {text}"
    return out


# -- small input helpers ----------------------------------------------------

def load_json_file(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def load_vector(path: str) -> SuperPolynomial:
    return SuperPolynomial.from_json(load_json_file(path))


def load_subspace(path: str) -> RationalSubspace:
    data = load_json_file(path)
    basis = data["basis"] if isinstance(data, dict) else data
    rows = [[Fraction(str(x)) for x in row] for row in basis]
    if not rows:
        raise ValueError("matrix file holds no basis vectors")
    ambient = (
        data.get("ambient_dim", len(rows[0]))
        if isinstance(data, dict)
        else len(rows[0])
    )
    return RationalSubspace(ambient, rows)


def parse_class_expr(text: str) -> charclass.ClassPolynomial:
    """Parse the text rendering of a class polynomial.

    Terms are separated by top-level + and -; a term is an optional integer
    coefficient and '*'-separated symbols c<i>, c<odd>/2 with optional
    ^exponent, e.g. '2*c1^2*c3/2 - c2'.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty class expression")
    total = charclass.ClassPolynomial.zero()
    term = ""
    terms = []
    sign = 1
    for ch in text:
        if ch in "+-":
            if term.strip():
                terms.append((sign, term.strip()))
            sign = 1 if ch == "+" else -1
            term = ""
        else:
            term += ch
    if term.strip():
        terms.append((sign, term.strip()))
    if not terms:
        raise ValueError(f"cannot parse class expression {text!r}")
    for sign, body in terms:
        factor = charclass.ClassPolynomial.one() * sign
        for piece in body.split("*"):
            piece = piece.strip()
            if not piece:
                raise ValueError(f"empty factor in {body!r}")
            if piece.lstrip("-").isdigit():
                factor = factor * int(piece)
                continue
            if not piece.startswith("c"):
                raise ValueError(f"cannot parse factor {piece!r}")
            symbol = piece[1:]
            exponent = 1
            if "^" in symbol:
                symbol, exp_text = symbol.split("^", 1)
                exponent = int(exp_text)
            if symbol.endswith("/2"):
                numerator = int(symbol[:-2])
                if numerator % 2 == 0:
                    raise ValueError(f"odd symbol needs an odd numerator: {piece!r}")
                base = charclass.ClassPolynomial.odd_symbol((numerator - 1) // 2)
            else:
                base = charclass.ClassPolynomial.even_symbol(int(symbol))
            for _ in range(exponent):
                factor = factor * base
        total = total + factor
    return total


def emit(args, text: str) -> None:
    data = text if text.endswith("\n") else text + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(data)
    else:
        sys.stdout.write(data)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def render_class(args, cls) -> str:
    if args.format == JSON:
        return dump_json(cls.to_json())
    if args.format == LATEX:
        return latex_class(cls)
    return str(cls)


def render_polynomial(args, poly: SuperPolynomial) -> str:
    if args.format == JSON:
        return dump_json(poly.to_json())
    if args.format == LATEX:
        return latex_polynomial(poly)
    return str(poly)


def expansion_rows(result: ExpansionResult):
    from .singular import koschorke_pairs

    weights = sorted({pair.weight().twice for pair in result.coefficients})
    rows = []
    for twice in weights:
        for pair in koschorke_pairs(HalfInt(twice)):
            coeff = result.coefficients.get(pair)
            if coeff:
                rows.append((pair, coeff))
    return rows


# -- command handlers ---------------------------------------------------------

def cmd_class(args) -> int:
    if args.class_cmd == "even":
        cls = charclass.even_koschorke(args.p, args.q)
    elif args.class_cmd == "giambelli":
        cls = charclass.generalized_koschorke(Partition.parse(args.partition), args.k)
    elif args.class_cmd == "odd":
        cls = charclass.odd_koschorke(args.p)
    elif args.class_cmd == "odd-sigma":
        cls = charclass.odd_sigma_class(IndexSeq.parse(args.j).entries)
    elif args.class_cmd == "dodd":
        cls = charclass.d_odd(parse_class_expr(args.expr))
    else:  # dev-check
        report = charclass.d_ev_kernel_check(parse_class_expr(args.expr))
        if args.format == JSON:
            emit(args, dump_json({
                "in_kernel": report.ok,
                "image": report.image.to_json(),
            }))
        else:
            image = render_polynomial(args, report.image)
            emit(args, f"in_kernel: {'true' if report.ok else 'false'}\nimage: {image}")
        return 0
    emit(args, render_class(args, cls))
    return 0


def cmd_singular(args) -> int:
    if args.singular_cmd == "find":
        alg = args.algebra
        w = HalfInt.parse(args.weight)
        vectors = find_singular(alg, w)
        if args.format == JSON:
            emit(args, dump_json({
                "algebra": alg,
                "weight": str(w),
                "dimension": len(vectors),
                "basis": [v.to_json() for v in vectors],
            }))
        else:
            lines = [f"weight: {w}", f"dimension: {len(vectors)}"]
            lines += [render_polynomial(args, v) for v in vectors]
            emit(args, "\n".join(lines))
        return 0
    if args.singular_cmd == "verify":
        vector = load_vector(args.file)
        report = verify_singular(args.algebra, vector)
        if args.format == JSON:
            emit(args, dump_json({
                "algebra": report.algebra,
                "weight": str(report.weight),
                "singular": report.ok,
                "images": [
                    {"op": str(op), "image": image.to_json()}
                    for op, image in report.images
                ],
            }))
        else:
            lines = [f"singular: {'true' if report.ok else 'false'}"]
            for op, image in report.images:
                lines.append(f"{op}: {render_polynomial(args, image)}")
            emit(args, "\n".join(lines))
        return 0
    if args.singular_cmd == "rect":
        vector = rectangular_singular(args.r)
        report = verify_singular("virasoro_even", vector)
        if args.format == JSON:
            emit(args, dump_json({
                "r": args.r,
                "vector": vector.to_json(),
                "singular": report.ok,
            }))
        else:
            emit(
                args,
                f"{render_polynomial(args, vector)}\n"
                f"singular: {'true' if report.ok else 'false'}",
            )
        if not report.ok:
            raise ConsistencyError(f"rectangular vector r={args.r} failed verification")
        return 0
    # expand
    vector = load_vector(args.file)
    if vector.coord == COORD_F:
        if not args.via_phi_inv:
            raise ValueError(
                "expand works in R coordinates; pass --via-phi-inv to convert"
            )
        vector = phi_inv(vector)
    result = koschorke_expand(vector)
    rows = expansion_rows(result)
    if args.format == JSON:
        emit(args, dump_json([
            {
                "lambda": list(pair.lam.parts),
                "J": list(pair.J),
                "coeff": coeff.to_json(),
            }
            for pair, coeff in rows
        ]))
    else:
        lines = [
            f"lambda=({pair.lam}) J=({','.join(str(j) for j in pair.J)}): {coeff}"
            for pair, coeff in rows
        ]
        lines.append(f"residual: {render_polynomial(args, result.residual)}")
        emit(args, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    max_mode = HalfInt.parse(args.max_mode)
    max_weight = HalfInt.parse(args.max_weight)
    report = suite(max_mode, max_weight)
    if args.format == JSON:
        emit(args, dump_json({
            "suite": report.suite,
            "ok": report.ok,
            "checked": report.checked,
            "failures": report.failures,
        }))
    else:
        emit(args, report.summary())
    return 0 if report.ok else 1


def cmd_strata(args) -> int:
    if args.strata_cmd == "exact-type":
        J = exact_type(load_subspace(args.file))
        emit(args, dump_json(list(J.entries)) if args.format == JSON else str(J))
        return 0
    if args.strata_cmd == "nk":
        value = n_k(IndexSeq.parse(args.j), args.k)
        emit(args, dump_json(value) if args.format == JSON else str(value))
        return 0
    if args.strata_cmd == "nodd":
        value = n_odd(IndexSeq.parse(args.j))
        emit(args, dump_json(value) if args.format == JSON else str(value))
        return 0
    if args.strata_cmd == "jmin":
        J = j_min(Partition.parse(args.partition), args.k)
        emit(args, dump_json(list(J.entries)) if args.format == JSON else str(J))
        return 0
    # enumerate
    levels = enumerate_strata(
        Partition.parse(args.partition),
        args.k,
        args.max_excess,
        args.max_entry,
        args.max_len,
    )
    if args.format == JSON:
        emit(args, dump_json({
            "bounds": {
                "max_excess": args.max_excess,
                "max_entry": args.max_entry,
                "max_len": args.max_len,
            },
            "levels": {
                str(level): [list(J.entries) for J in seqs]
                for level, seqs in levels.items()
            },
        }))
    else:
        lines = [
            f"bounds: entries <= {args.max_entry}, length <= {args.max_len}"
        ]
        for level in sorted(levels):
            seqs = " | ".join(str(J) for J in levels[level]) or "-"
            lines.append(f"level {level}: {seqs}")
        emit(args, "\n".join(lines))
    return 0


def cmd_fock(args) -> int:
    context = NS if args.context == "ns" else EVEN_VIRASORO
    op = ModeOp.parse(args.op, context)
    vector = load_vector(args.file)
    image = apply_mode(op, vector)
    emit(args, render_polynomial(args, image))
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfk",
        description="Exact workbench for super Fock spaces, singular vectors, "
        "Koschorke-type classes, and degeneracy-stratum combinatorics.",
    )
    parser.add_argument("--format", choices=(TEXT, LATEX, JSON), default=TEXT)
    parser.add_argument("--output", metavar="FILE", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p_class = sub.add_parser("class", help="Koschorke-type characteristic classes")
    class_sub = p_class.add_subparsers(dest="class_cmd", required=True)
    p = class_sub.add_parser("even", help="det(c_{p-i+j}) of size q")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p = class_sub.add_parser("giambelli", help="det(c_{lam_a+b-a}) of size k")
    p.add_argument("--partition", required=True)
    p.add_argument("-k", type=int, required=True)
    p = class_sub.add_parser("odd", help="ordered product c_{1/2}...c_{(2p-1)/2}")
    p.add_argument("-p", type=int, required=True)
    p = class_sub.add_parser("odd-sigma", help="ordered product over J")
    p.add_argument("--j", required=True)
    p = class_sub.add_parser("dodd", help="odd lowering derivation of an expression")
    p.add_argument("expr")
    p = class_sub.add_parser("dev-check", help="even kernel condition via L_1")
    p.add_argument("expr")
    p_class.set_defaults(handler=cmd_class)

    p_sing = sub.add_parser("singular", help="singular vectors and expansions")
    sing_sub = p_sing.add_subparsers(dest="singular_cmd", required=True)
    p = sing_sub.add_parser("find", help="kernel of the positive modes at a weight")
    p.add_argument("--algebra", choices=("virasoro_even", "ns"), required=True)
    p.add_argument("--weight", required=True)
    p = sing_sub.add_parser("verify", help="full positive-mode sweep on a vector file")
    p.add_argument("--algebra", choices=("virasoro_even", "ns"), required=True)
    p.add_argument("file")
    p = sing_sub.add_parser("rect", help="rectangular bosonic singular vector")
    p.add_argument("-r", type=int, required=True)
    p = sing_sub.add_parser("expand", help="tensor-basis expansion of a vector file")
    p.add_argument("file")
    p.add_argument("--via-phi-inv", action="store_true")
    p_sing.set_defaults(handler=cmd_singular)

    p_verify = sub.add_parser("verify", help="exact relation suites")
    p_verify.add_argument("suite", choices=tuple(SUITES))
    p_verify.add_argument("--max-mode", default="4")
    p_verify.add_argument("--max-weight", default="6")
    p_verify.set_defaults(handler=cmd_verify)

    p_strata = sub.add_parser("strata", help="degeneracy-stratum combinatorics")
    strata_sub = p_strata.add_subparsers(dest="strata_cmd", required=True)
    p = strata_sub.add_parser("exact-type", help="exact type of a subspace file")
    p.add_argument("file")
    p = strata_sub.add_parser("nk", help="codimension value N_k(J)")
    p.add_argument("--j", required=True)
    p.add_argument("-k", type=int, required=True)
    p = strata_sub.add_parser("nodd", help="odd degree sum over J")
    p.add_argument("--j", required=True)
    p = strata_sub.add_parser("jmin", help="minimizing type for (lam, k)")
    p.add_argument("--partition", required=True)
    p.add_argument("-k", type=int, required=True)
    p = strata_sub.add_parser("enumerate", help="dominating types by excess level")
    p.add_argument("--partition", required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--max-excess", type=int, required=True)
    p.add_argument("--max-entry", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p_strata.set_defaults(handler=cmd_strata)

    p_fock = sub.add_parser("fock", help="apply a mode operator to a vector file")
    fock_sub = p_fock.add_subparsers(dest="fock_cmd", required=True)
    p = fock_sub.add_parser("apply", help="apply a[n]/b[r]/L[n]/G[r]")
    p.add_argument("op")
    p.add_argument("file")
    p.add_argument("--context", choices=("ns", "even"), default="ns")
    p_fock.set_defaults(handler=cmd_fock)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
