"""Command line front end: ``python -m ncalgebra <task> ...``.

Exit codes: 0 success, 1 usage or configuration error, 2 resource guard,
3 invariant violation (including a failed ``verify`` suite).
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from pathlib import Path

from . import __version__
from . import verify as suites
from .algebra import NcAlgebra
from .complexes import builder_of
from .coxeter import COMPOSITION_CONVENTION, GAMMA_CONVENTION, ConfigurationError, build_coxeter, parse_group
from .forms import forms_of
from .homology import DEFAULT_PRIME, ResourceError, homology
from .reps import (
    appendix_table,
    format_partition,
    multiplicity_vector,
    parse_partition,
    specht,
    sym_algebra,
    validate_partition,
)
from .tilde import hilbert_compare

CACHE_ENV = "NCALGEBRA_CACHE"
SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- formatting ----------------------------------------------------------------


def provenance(group: str | None, mode: str = "exact") -> dict:
    return {
        "tool": "ncalgebra",
        "version": __version__,
        "group": group,
        "gamma_convention": GAMMA_CONVENTION,
        "composition_convention": COMPOSITION_CONVENTION,
        "mode": mode,
    }


def dumps_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True) + "\n"


def dumps_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)  # RFC 4180: CRLF line ends, minimal quoting
    if header:
        w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def dumps_md(header: list[str], rows: list[list], caption: str | None = None) -> str:
    if not header:
        return (caption + "\n") if caption else ""
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(x) for x in row) + " |" for row in rows]
    if caption:
        lines += ["", caption]
    return "\n".join(lines) + "\n"


def poly_string(coeffs: list[int]) -> str:
    """2 + 14t + 36t²; zero coefficients are skipped."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "t" if k == 1 else "t" + str(k).translate(SUPERSCRIPT)
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def table_caption(group: str, poincare: list[int]) -> str:
    return f"{group}, P(t) = {poly_string(poincare)}"


# --- cache ---------------------------------------------------------------------


def cache_dir(args) -> Path | None:
    path = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def cached(args, key: dict, compute):
    """Content-addressed JSON cache keyed by the request and code version."""
    root = cache_dir(args)
    if root is None:
        return compute()
    blob = json.dumps({"version": __version__, **key}, sort_keys=True)
    path = root / (hashlib.sha256(blob.encode()).hexdigest() + ".json")
    if path.exists():
        return json.loads(path.read_text())
    value = compute()
    root.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(value, sort_keys=True))
    tmp.replace(path)
    return value


# --- argument helpers ----------------------------------------------------------


def _add_group_args(p):
    p.add_argument("--type", dest="family", help="A, B, D or I2")
    p.add_argument("--rank", type=int, help="rank, or m for I2(m)")
    p.add_argument("--group", help="shorthand such as A3, Sym4, I2(5)")


def _datum(args):
    if args.group:
        if args.family or args.rank is not None:
            raise UsageError("give either --group or --type/--rank, not both")
        family, rank = parse_group(args.group)
    else:
        if not args.family or args.rank is None:
            raise UsageError("a group is required: --type X --rank n, or --group NAME")
        family, rank = args.family.upper(), args.rank
    return build_coxeter(family, rank)


def _group_name(datum) -> str:
    return f"I2({datum.rank})" if datum.family == "I2" else f"{datum.family}{datum.rank}"


def _algebra(args) -> NcAlgebra:
    alg = NcAlgebra(_datum(args))
    if getattr(args, "allow_large", False):
        builder_of(alg).size_guard = None
    return alg


def _sym_n(value: int) -> int:
    if value < 2:
        raise UsageError("--sym needs N >= 2")
    return value


# --- tasks ---------------------------------------------------------------------


def cmd_group_info(args) -> str:
    datum = _datum(args)
    info = datum.describe()
    if args.format == "json":
        return dumps_json({"provenance": provenance(_group_name(datum)), "group": info})
    lines = [f"{k}: {v}" for k, v in info.items()]
    return "\n".join(lines) + "\n"


def cmd_algebra(args) -> str:
    alg = _algebra(args)
    group = _group_name(alg.datum)
    fmt = args.format
    if args.what == "dims":
        dims = alg.dims()
        if fmt == "json":
            return dumps_json({"provenance": provenance(group), "dims": dims})
        if fmt == "csv":
            return dumps_csv(["degree", "dim"], [[k, d] for k, d in enumerate(dims)])
        return ",".join(str(d) for d in dims) + "\n"
    degrees = [args.degree] if args.degree is not None else list(range(len(alg.dims())))
    for k in degrees:
        if not 0 <= k < len(alg.dims()):
            raise UsageError(f"degree {k} out of range 0..{len(alg.dims()) - 1}")
    if args.what == "basis":
        data = {str(k): [alg.word_label(w) for w in alg.basis(k)] for k in degrees}
        if fmt == "json":
            return dumps_json({"provenance": provenance(group), "basis": data})
        if fmt == "csv":
            return dumps_csv(["degree", "index", "word"], [[k, i, w] for k in degrees for i, w in enumerate(data[str(k)])])
        return "".join(f"{k}: {' '.join(data[str(k)])}\n" for k in degrees)
    # gram
    f = forms_of(alg)
    grams = {k: f.gram(k).entries for k in degrees}
    if fmt == "json":
        return dumps_json({"provenance": provenance(group), "gram": {str(k): g for k, g in grams.items()}})
    if fmt == "csv":
        if len(degrees) != 1:
            raise UsageError("csv output of gram needs a single --degree")
        return dumps_csv([], grams[degrees[0]])
    out = []
    for k in degrees:
        out.append(f"degree {k}:")
        out += [" ".join(f"{x:>3}" for x in row) for row in grams[k]]
    return "\n".join(out) + "\n"


def cmd_homology(args) -> str:
    alg = _algebra(args)
    b = builder_of(alg)
    coeff = {"int": "Z", "rat": "Q"}[args.coeff]
    cx = b.cocomplex_space(args.space) if args.dual else b.complex_space(args.space)
    res = homology(cx, coeff)
    variant = "cohomology" if args.dual else "homology"
    rows = [[k, res.betti[k], list(res.torsion.get(k, ()))] for k in res.degrees]
    if args.format == "json":
        return dumps_json(
            {
                "provenance": provenance(_group_name(alg.datum), res.mode),
                "space": args.space,
                "variant": variant,
                "coefficients": coeff,
                "degrees": [{"degree": k, "rank": r, "torsion": t} for k, r, t in rows],
            }
        )
    if args.format == "csv":
        return dumps_csv(["degree", "rank", "torsion"], [[k, r, " ".join(map(str, t))] for k, r, t in rows])
    sym = "H^" if args.dual else "H_"
    out = []
    for k, r, t in rows:
        parts = [f"{coeff}^{r}" if r else ""] + [f"{coeff}/{x}" for x in t]
        out.append(f"{sym}{k}({args.space}; {coeff}) = " + (" + ".join(p for p in parts if p) or "0"))
    return "\n".join(out) + "\n"


def cmd_multiplicity(args) -> str:
    n = _sym_n(args.sym)
    alg = sym_algebra(n)
    variant = "cohomology" if args.cohomology else "homology"
    modulus = DEFAULT_PRIME if args.modular else None
    if args.partition:
        lams = [validate_partition(parse_partition(args.partition), n)]
    else:
        from .reps import partitions

        lams = partitions(n)
    rows = []
    for lam in lams:
        vec = multiplicity_vector(alg, specht(n, lam, alg.datum), args.space, variant, modulus)
        rows.append({"partition": list(lam), "values": vec})
    mode = "exact" if modulus is None else f"modular certificate (p={modulus})"
    if args.format == "json":
        return dumps_json(
            {"provenance": provenance(f"Sym{n}", mode), "space": args.space, "variant": variant, "rows": rows}
        )
    width = max(len(r["values"]) for r in rows)
    sym = "H^" if args.cohomology else "H_"
    header = ["partition"] + [f"{sym}{k}" for k in range(width)]
    body = [[format_partition(tuple(r["partition"]))] + r["values"] for r in rows]
    if args.format == "csv":
        return dumps_csv(header, body)
    return dumps_md(header, body)


def cmd_tables(args) -> str:
    n = _sym_n(args.sym)
    modulus = DEFAULT_PRIME if args.modular else None
    if n >= 7 and modulus is None and not args.exact:
        raise UsageError("Sym7 and beyond need --modular (fast certificate) or --exact (slow)")
    key = {"task": "tables", "sym": n, "space": args.space, "modulus": modulus}
    data = cached(args, key, lambda: appendix_table(n, args.space, "cohomology", modulus, jobs=args.jobs).to_json())
    caption = table_caption(data["group"], data["poincare"])
    if args.format == "json":
        return dumps_json({"provenance": provenance(data["group"], data["mode"]), "caption": caption, **data})
    width = len(data["poincare"])
    header = [""] + [f"H^{k}" for k in range(width)]
    body = [[", ".join(format_partition(tuple(p)) for p in r["partitions"])] + r["values"] for r in data["rows"]]
    if args.format == "csv":
        return dumps_csv(header, body)
    notes = []
    if data["mode"] != "exact":
        notes.append(f"mode: {data['mode']}")
    if data["flagged_degrees"]:
        notes.append("degrees " + ", ".join(map(str, data["flagged_degrees"])) + " disagree with an earlier published computation")
    text = dumps_md(header, body, caption)
    return text + "".join(n_ + "\n" for n_ in notes)


def cmd_tilde(args) -> str:
    modulus = DEFAULT_PRIME if args.modular else None
    if args.rank < 2:
        raise UsageError("--rank must be at least 2")
    if args.maxdeg < 0:
        raise UsageError("--maxdeg must be non-negative")
    report = hilbert_compare(args.rank, args.maxdeg, modulus)
    group = f"Sym{args.rank}"
    if not args.compare_fk:
        report = {k: v for k, v in report.items() if k not in ("fk", "equal")}
    if args.format == "json":
        return dumps_json({"provenance": provenance(group, report["mode"]), "hilbert": report})
    header = ["degree", "tilde"] + (["fk"] if args.compare_fk else []) + (["expected"] if report["expected"] else [])
    body = []
    for k in range(args.maxdeg + 1):
        row = [k, report["tilde"][k]]
        if args.compare_fk:
            row.append(report["fk"][k])
        if report["expected"]:
            row.append(report["expected"][k] if k < len(report["expected"]) else 0)
        body.append(row)
    if args.format == "csv":
        return dumps_csv(header, body)
    tail = f"mode: {report['mode']}"
    if args.compare_fk:
        tail += f"; equal: {report['equal']}"
    return dumps_md(header, body, tail)


def cmd_verify(args) -> tuple[str, bool]:
    name = args.suite
    if name == "hilbert":
        results = suites.hilbert(args.rank or 3, args.maxdeg or 4)
        group = f"Sym{args.rank or 3}"
    else:
        datum = _datum(args)
        group = _group_name(datum)
        if name == "hopf":
            results = suites.hopf(datum, args.maxdeg or 4)
        else:
            fns = suites.SUITES if name == "all" else {name: suites.SUITES[name]}
            alg = _algebra(args)
            results = {}
            for sname, fn in fns.items():
                for check, ok in fn(alg).items():
                    results[f"{sname}: {check}" if name == "all" else check] = ok
    passed = all(results.values())
    if args.format == "json":
        return dumps_json({"provenance": provenance(group), "suite": name, "pass": passed, "checks": results}), passed
    lines = [f"{'PASS' if ok else 'FAIL'} {check}" for check, ok in results.items()]
    lines.append(f"suite {name} on {group}: {'pass' if passed else 'FAIL'}")
    return "\n".join(lines) + "\n", passed


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ncalgebra", description="Noncrossing algebras and the homology of reflection-arrangement spaces.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--cache-dir", help=f"result cache directory (default: ${CACHE_ENV}, unset disables caching)")
    sub = p.add_subparsers(dest="task", parser_class=_Parser)

    g = sub.add_parser("group", help="Coxeter group data")
    g.add_argument("what", choices=["info"])
    _add_group_args(g)
    g.add_argument("--format", choices=["text", "json"], default="text")

    a = sub.add_parser("algebra", help="dimensions, bases and Gram matrices of the noncrossing algebra")
    a.add_argument("what", choices=["dims", "basis", "gram"])
    _add_group_args(a)
    a.add_argument("--degree", type=int)
    a.add_argument("--format", choices=["text", "json", "csv"], default="text")

    h = sub.add_parser("homology", help="(co)homology of M, F, M/W, F/W")
    _add_group_args(h)
    h.add_argument("--space", required=True, choices=["M", "F", "M/W", "F/W"])
    h.add_argument("--dual", action="store_true", help="cohomology from the dual cochain complex")
    h.add_argument("--coeff", choices=["int", "rat"], default="int")
    h.add_argument("--allow-large", action="store_true", help="disable the size guard")
    h.add_argument("--format", choices=["text", "json", "csv"], default="text")

    m = sub.add_parser("multiplicity", help="multiplicities of Specht modules in (co)homology")
    m.add_argument("--sym", type=int, required=True)
    m.add_argument("--partition", help="e.g. 2,1")
    m.add_argument("--cohomology", action="store_true")
    m.add_argument("--space", choices=["F", "M"], default="F")
    m.add_argument("--modular", action="store_true")
    m.add_argument("--format", choices=["md", "json", "csv"], default="md")

    t = sub.add_parser("tables", help="multiplicity tables of the Milnor fibre cohomology")
    t.add_argument("--sym", type=int, required=True)
    t.add_argument("--space", choices=["F", "M"], default="F")
    t.add_argument("--format", choices=["md", "json", "csv"], default="md")
    t.add_argument("--modular", action="store_true", help="ranks mod a large prime, labelled as a certificate")
    t.add_argument("--exact", action="store_true", help="allow exact runs for Sym7 and beyond")
    t.add_argument("--jobs", type=int, default=1, help="worker processes")

    td = sub.add_parser("tilde", help="the covering quadratic algebra")
    td.add_argument("what", choices=["hilbert"])
    td.add_argument("--rank", type=int, required=True, help="n, for Sym(n) and the Fomin-Kirillov algebra E_n")
    td.add_argument("--maxdeg", type=int, required=True)
    td.add_argument("--compare-fk", action="store_true")
    td.add_argument("--modular", action="store_true")
    td.add_argument("--format", choices=["md", "json", "csv"], default="md")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=sorted(list(suites.SUITES) + ["all", "hopf", "hilbert"]))
    _add_group_args(v)
    v.add_argument("--maxdeg", type=int)
    v.add_argument("--allow-large", action="store_true")
    v.add_argument("--format", choices=["text", "json"], default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.task is None:
            raise UsageError("a task is required; see --help")
        ok = True
        if args.task == "group":
            text = cmd_group_info(args)
        elif args.task == "algebra":
            text = cmd_algebra(args)
        elif args.task == "homology":
            text = cmd_homology(args)
        elif args.task == "multiplicity":
            text = cmd_multiplicity(args)
        elif args.task == "tables":
            if args.jobs < 1:
                raise UsageError("--jobs must be positive")
            if args.modular and args.exact:
                raise UsageError("--modular and --exact are exclusive")
            text = cmd_tables(args)
        elif args.task == "tilde":
            text = cmd_tilde(args)
        else:
            text, ok = cmd_verify(args)
    except (UsageError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, AssertionError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
