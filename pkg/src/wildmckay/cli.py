"""Command-line front end: verification suites with deterministic reports.

Exit codes: 0 when everything requested passed, 1 when a verification ran
and failed, 2 on input or validation problems (unknown flags, malformed
files, budget exceeded, tame-completeness guards).  JSON and CSV output is
byte-identical across runs for a fixed command line; text output is for
humans.  Exact values are printed as numerator/denominator or term lists;
decimals appear only for requested real evaluations and carry the
precision used.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .localfields import (
    PartialEnumerationError,
    algebra_mass_sum,
    crossvalidate_fixtures,
    enumerate_tame_etale_algebras,
    enumerate_tame_field_classes,
    load_fixtures,
    skipped_wild_strata,
    tame_enumeration_is_complete,
)
from .massformulas import bhargava_mass, mass_series_via_exp, recover_N_from_M, serre_mass
from .mckay import verify_wild_mckay
from .numutil import format_rational, is_prime, parse_rational
from .padic import (
    BudgetExceededError,
    HenselMismatchError,
    PolySystem,
    SmoothnessError,
    count_points_mod,
    monomial_integral,
    null_set_fraction,
    smooth_measure_check,
)
from .qexpr import PoleError, QExpr, QFrac, is_infinite
from .stringy import MalformedSubsetError, SncLogPairData, stringy_count_snc, stringy_point_contribution

__all__ = ["main", "run_to_string"]

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2

DEFAULT_PRECISION = Fraction(1, 10**12)


class InputError(ValueError):
    """Bad command-line input; maps to exit code 2."""


# ---------------------------------------------------------------------------
# Value rendering
# ---------------------------------------------------------------------------


def _expr_payload(value) -> object:
    if is_infinite(value):
        return "Infinite"
    if isinstance(value, QExpr):
        return {"pretty": str(value), "terms": value.to_json()}
    if isinstance(value, QFrac):
        return {"pretty": str(value), "num": value.num.to_json(), "den": value.den.to_json()}
    if isinstance(value, Fraction):
        return format_rational(value)
    return value


def _eval_payload(value, q0: Fraction, precision: Fraction) -> object:
    if is_infinite(value):
        return "Infinite"
    frac = QFrac(value)
    if frac.num.has_integer_exponents() and frac.den.has_integer_exponents():
        return {"q": format_rational(q0), "exact": format_rational(frac.evaluate(q0))}
    approx = frac.evaluate(q0, precision=precision)
    return {
        "q": format_rational(q0),
        "approx": f"{float(approx):.15g}",
        "precision": format_rational(precision),
    }


def _cell(value) -> str:
    if isinstance(value, dict):
        if "pretty" in value:
            return value["pretty"]
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return json.dumps(value)
    return str(value)


def _write_text(report: dict, rows: list[dict] | None, stream) -> None:
    for line in report.get("_lines", ()):
        stream.write(line + "\n")
    for key, value in report.items():
        if key == "_lines":
            continue
        stream.write(f"{key}: {_cell(value)}\n")
    if "_lines" in report:
        return
    if rows:
        header = list(rows[0].keys())
        table = [header] + [[_cell(row.get(k)) for k in header] for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        stream.write("\n")
        for r in table:
            stream.write("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n")


def _write_json(report: dict, rows: list[dict] | None, stream) -> None:
    payload = {k: v for k, v in report.items() if k != "_lines"}
    if rows is not None:
        payload["rows"] = rows
    json.dump(payload, stream, sort_keys=True, indent=2)
    stream.write("\n")


def _write_csv(report: dict, rows: list[dict] | None, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    if rows:
        header = list(rows[0].keys())
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(row.get(k)) for k in header])
    else:
        scalars = [(k, v) for k, v in report.items() if k != "_lines"]
        writer.writerow([k for k, _ in scalars])
        writer.writerow([_cell(v) for _, v in scalars])


_WRITERS = {"text": _write_text, "json": _write_json, "csv": _write_csv}


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------


def _prime(value: str) -> int:
    p = int(value)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _rational(value: str) -> Fraction:
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _precision(value: str) -> Fraction:
    prec = Fraction(value)
    if prec <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return prec


def _rational_list(value: str) -> list[Fraction]:
    value = value.strip()
    if not value:
        return []
    return [parse_rational(part) for part in value.split(",")]


# ---------------------------------------------------------------------------
# Handlers: each returns (exit_code, report, rows)
# ---------------------------------------------------------------------------


def _cmd_mass_serre(args):
    mass = serre_mass(args.n, args.f)
    report = {"command": "mass serre", "n": args.n, "f": args.f, "mass": _expr_payload(mass)}
    return EXIT_OK, report, None


def _cmd_mass_bhargava(args):
    mass = bhargava_mass(args.n)
    report = {"command": "mass bhargava", "n": args.n, "mass": _expr_payload(mass)}
    return EXIT_OK, report, None


def _cmd_mass_expcheck(args):
    series = mass_series_via_exp(args.nmax)
    rows = []
    all_match = True
    for n in range(1, args.nmax + 1):
        lhs = series.coefficient(n)
        rhs = bhargava_mass(n)
        match = lhs == QFrac(rhs)
        all_match &= match
        laurent = lhs.as_laurent()
        rows.append(
            {
                "n": n,
                "exponential": str(lhs if laurent is None else laurent),
                "partition_formula": str(rhs),
                "match": match,
            }
        )
    report = {"command": "mass expcheck", "nmax": args.nmax, "all_match": all_match}
    return (EXIT_OK if all_match else EXIT_VERIFICATION_FAILED), report, rows


def _cmd_mass_invert(args):
    recovered = recover_N_from_M(mass_series_via_exp(args.nmax))
    rows = []
    all_match = True
    for (f, m), value in sorted(recovered.items()):
        expected = serre_mass(m, f)
        match = value == QFrac(expected)
        all_match &= match
        laurent = value.as_laurent()
        rows.append(
            {
                "f": f,
                "m": m,
                "recovered": str(value if laurent is None else laurent),
                "expected": str(expected),
                "match": match,
            }
        )
    report = {"command": "mass invert", "nmax": args.nmax, "all_match": all_match}
    return (EXIT_OK if all_match else EXIT_VERIFICATION_FAILED), report, rows


def _cmd_etale_enumerate(args):
    classes = enumerate_tame_field_classes(args.p, args.n)
    rows = [
        {
            "f": cls.f,
            "e": cls.e,
            "orbit": list(cls.orbit),
            "degree": cls.degree,
            "d": cls.disc_exponent,
            "aut": cls.aut_order,
        }
        for cls in classes
    ]
    algebras = enumerate_tame_etale_algebras(args.p, args.n)
    report = {
        "command": "etale enumerate",
        "p": args.p,
        "n": args.n,
        "field_classes": len(classes),
        "etale_algebras": len(algebras),
        "wild_strata_skipped": [list(stratum) for stratum in skipped_wild_strata(args.p, args.n)],
        "complete": tame_enumeration_is_complete(args.p, args.n),
    }
    code = EXIT_OK
    if args.fixtures:
        fixtures = [fx for fx in load_fixtures(args.fixtures) if fx.p == args.p and fx.n == args.n]
        fixture_report = crossvalidate_fixtures(fixtures)
        report["fixtures"] = fixture_report.to_json()
        if not fixture_report.ok:
            code = EXIT_VERIFICATION_FAILED
    return code, report, rows


def _cmd_etale_mass(args):
    mass = algebra_mass_sum(args.p, args.n)
    expected = bhargava_mass(args.n).evaluate(args.p)
    match = mass == expected
    report = {
        "command": "etale mass",
        "p": args.p,
        "n": args.n,
        "mass": format_rational(mass),
        "partition_formula_at_p": format_rational(expected),
        "match": match,
    }
    return (EXIT_OK if match else EXIT_VERIFICATION_FAILED), report, None


def _cmd_etale_crossvalidate(args):
    fixtures = load_fixtures(args.fixtures)
    result = crossvalidate_fixtures(fixtures)
    status = {label: "matched" for label in result.matched}
    status.update({label: "uncheckable (wild)" for label in result.uncheckable})
    reasons = dict(result.mismatches)
    rows = []
    for fixture in sorted(fixtures, key=lambda fx: (fx.p, fx.n, fx.label)):
        label = fixture.label
        rows.append(
            {
                "label": label,
                "p": fixture.p,
                "n": fixture.n,
                "e": fixture.e,
                "f": fixture.f,
                "d": fixture.disc_exponent,
                "aut": fixture.aut_order,
                "status": status.get(label, "mismatch"),
                "reason": reasons.get(label, ""),
            }
        )
    report = {
        "command": "etale crossvalidate",
        "fixtures": len(fixtures),
        "matched": len(result.matched),
        "uncheckable": len(result.uncheckable),
        "mismatches": len(result.mismatches),
        "ok": result.ok,
    }
    return (EXIT_OK if result.ok else EXIT_VERIFICATION_FAILED), report, rows


def _cmd_mckay_verify(args):
    result = verify_wild_mckay(args.p, args.n)
    rows = [
        {
            "factors": row["factors"],
            "d": row["d"],
            "v": row["v"],
            "w": row["w"],
            "aut": row["aut"],
            "term_num": row["term_num"],
            "term_den": row["term_den"],
        }
        for row in result.rows
    ]
    report = {
        "command": "mckay verify",
        "p": args.p,
        "n": args.n,
        "mass_side": format_rational(result.mass_side),
        "hilb_side": format_rational(result.hilb_side),
        "passed": result.passed,
    }
    if args.table:
        with open(args.table, "w", encoding="utf-8") as fh:
            json.dump(result.to_json(), fh, sort_keys=True, indent=2)
            fh.write("\n")
        report["table"] = args.table
    return (EXIT_OK if result.passed else EXIT_VERIFICATION_FAILED), report, rows


def _cmd_stringy_eval(args):
    data = SncLogPairData.load(args.input)
    value = stringy_count_snc(data)
    report = {
        "command": "stringy eval",
        "input": args.input,
        "value": _expr_payload(value),
    }
    if args.at_q is not None:
        report["evaluated"] = _eval_payload(value, args.at_q, args.precision)
    return EXIT_OK, report, None


def _cmd_stringy_point(args):
    value = stringy_point_contribution(args.a, args.c)
    report = {
        "command": "stringy point",
        "a": format_rational(args.a),
        "c": [format_rational(c) for c in args.c],
        "value": _expr_payload(value),
    }
    if args.at_q is not None:
        report["evaluated"] = _eval_payload(value, args.at_q, args.precision)
    return EXIT_OK, report, None


def _cmd_padic_count(args):
    system = PolySystem.load(args.input)
    result = count_points_mod(system, args.m, args.budget)
    report = {
        "command": "padic count",
        "input": args.input,
        "p": system.p,
        "n": system.num_vars,
        "d": system.dim,
        "m": args.m,
        "count": result.count,
        "normalized": format_rational(result.normalized),
    }
    return EXIT_OK, report, None


def _cmd_padic_measure(args):
    system = PolySystem.load(args.input)
    result = smooth_measure_check(system, args.mmax, args.budget)
    report = {
        "command": "padic measure",
        "input": args.input,
        "p": system.p,
        "d": system.dim,
        "m_max": args.mmax,
        "counts": result.counts,
        "residue_points": result.residue_point_count,
        "measure": format_rational(result.measure),
    }
    return EXIT_OK, report, None


def _cmd_padic_integral(args):
    partial, exact = monomial_integral(args.c, args.p, args.terms)
    report = {
        "command": "padic integral",
        "c": format_rational(args.c),
        "p": args.p,
        "terms": args.terms,
        "partial": f"{float(partial):.15g}",
        "exact": _expr_payload(exact),
    }
    if not is_infinite(exact):
        report["exact_at_p"] = _eval_payload(exact, Fraction(args.p), args.precision)
    return EXIT_OK, report, None


def _cmd_padic_nullset(args):
    system = PolySystem.load(args.input)
    fraction = null_set_fraction(system, args.m, args.budget)
    report = {
        "command": "padic nullset",
        "input": args.input,
        "p": system.p,
        "n": system.num_vars,
        "m": args.m,
        "fraction": format_rational(fraction),
        "fraction_approx": f"{float(fraction):.6g}",
    }
    return EXIT_OK, report, None


def _cmd_selftest(args):
    from . import selftest

    results = selftest.run_all(args.budget)
    rows = [
        {"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
        for r in results
    ]
    all_passed = all(r.passed for r in results)
    report = {
        "_lines": [r.line() for r in results],
        "command": "selftest",
        "criteria": len(results),
        "all_passed": all_passed,
    }
    return (EXIT_OK if all_passed else EXIT_VERIFICATION_FAILED), report, rows


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _add_eval_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--at-q", type=_rational, default=None, metavar="Q",
                        help="also evaluate at q = Q (rational, > 0)")
    parser.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION,
                        help="absolute precision for real evaluation (default 1e-12)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wildmckay",
        description="exact mass formulas, stringy counts and p-adic measures",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    mass = groups.add_parser("mass", help="symbolic mass formulas").add_subparsers(
        dest="action", required=True
    )
    p = mass.add_parser("serre", help="totally ramified mass q^(f(1-n))")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--f", type=_positive, default=1)
    _add_format(p)
    p.set_defaults(handler=_cmd_mass_serre)
    p = mass.add_parser("bhargava", help="etale algebra mass by partitions")
    p.add_argument("--n", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_mass_bhargava)
    p = mass.add_parser("expcheck", help="exponential identity vs partition formula")
    p.add_argument("--nmax", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_mass_expcheck)
    p = mass.add_parser("invert", help="recover totally ramified masses from the series")
    p.add_argument("--nmax", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_mass_invert)

    etale = groups.add_parser("etale", help="tame local-field enumeration").add_subparsers(
        dest="action", required=True
    )
    p = etale.add_parser("enumerate", help="field classes of degree n over Q_p")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--fixtures", default=None, help="JSON fixture file to cross-validate")
    _add_format(p)
    p.set_defaults(handler=_cmd_etale_enumerate)
    p = etale.add_parser("mass", help="enumerated mass vs partition formula at q=p")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=_positive, required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_etale_mass)
    p = etale.add_parser("crossvalidate", help="check database fixtures against the enumeration")
    p.add_argument("--fixtures", required=True)
    _add_format(p)
    p.set_defaults(handler=_cmd_etale_crossvalidate)

    mckay = groups.add_parser("mckay", help="wild McKay identity for S_n").add_subparsers(
        dest="action", required=True
    )
    p = mckay.add_parser("verify", help="mass side vs Hilbert-scheme count at q=p")
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--table", default=None, help="write the per-algebra breakdown JSON here")
    _add_format(p)
    p.set_defaults(handler=_cmd_mckay_verify)

    stringy = groups.add_parser("stringy", help="stringy point counts of SNC data").add_subparsers(
        dest="action", required=True
    )
    p = stringy.add_parser("eval", help="evaluate the stratum formula from a JSON file")
    p.add_argument("--input", required=True)
    _add_eval_flags(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_stringy_eval)
    p = stringy.add_parser("point", help="single-point weight q^a prod (q-1)/(q^(1-c)-1)")
    p.add_argument("--a", type=_rational, default=Fraction(0))
    p.add_argument("--c", type=_rational_list, default=[], help="comma-separated coefficients")
    _add_eval_flags(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_stringy_point)

    padic = groups.add_parser("padic", help="exact residue-ring measures").add_subparsers(
        dest="action", required=True
    )
    p = padic.add_parser("count", help="count solutions in (Z/p^m)^n")
    p.add_argument("--input", required=True, help="PolySystem JSON file")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_padic_count)
    p = padic.add_parser("measure", help="smooth measure check via lift counting")
    p.add_argument("--input", required=True)
    p.add_argument("--mmax", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_padic_measure)
    p = padic.add_parser("integral", help="monomial integral: truncation vs closed form")
    p.add_argument("--c", type=_rational, required=True)
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--terms", type=_positive, default=60)
    p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION)
    _add_format(p)
    p.set_defaults(handler=_cmd_padic_integral)
    p = padic.add_parser("nullset", help="box fraction of a null set")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_padic_nullset)

    p = groups.add_parser("selftest", help="run every acceptance criterion")
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None, stdout=None) -> int:
    stream = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_INPUT_ERROR
    try:
        code, report, rows = args.handler(args)
    except (SmoothnessError, HenselMismatchError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (
        InputError,
        BudgetExceededError,
        PartialEnumerationError,
        MalformedSubsetError,
        PoleError,
        FileNotFoundError,
        json.JSONDecodeError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _WRITERS[args.format](report, rows, stream)
    return code


def run_to_string(argv: list[str]) -> str:
    """Run the CLI capturing stdout; used by determinism checks and tests."""
    buffer = io.StringIO()
    main(argv, stdout=buffer)
    return buffer.getvalue()


if __name__ == "__main__":
    sys.exit(main())
