"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 parse error (unreadable file,
bad JSON, schema violation or bad arguments).  Numbers are printed exactly;
rationals as "p/q".
"""
from __future__ import annotations

import argparse
import json
import sys

from . import hochschild as hh
from . import hopf
from . import nerve as nv
from . import setlaws as sl
from .complexes import ValidationReport, complex_from_json, homology_table, total_complex, validate
from .linalg import QQ, GF
from .simplicial import (check_identities, cyclic_failure_degree, duplicial_to_duchain,
                         hc_table_of_cyclic, moore_complex, pi_shriek)

DIM_CAP = 50_000

INPUT_KINDS = ("algebra", "bialgebra", "category", "complex", "sigma")


class InputError(Exception):
    """An input that cannot be used; kind is 'io', 'schema' or 'invariant'."""

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind

    @property
    def code(self):
        return 1 if self.kind == "invariant" else 2


def parse_field(s):
    if s in ("Q", "q", "QQ"):
        return "Q"
    try:
        p = int(s)
        GF(p)
    except ValueError:
        raise argparse.ArgumentTypeError(f"field must be Q or a prime, got {s!r}")
    return {"Fp": p}


def nonneg(s):
    n = int(s)
    if n < 0:
        raise argparse.ArgumentTypeError("top degree must be >= 0")
    return n


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError("io", f"cannot read {path}: {e.strerror or e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("schema", f"{path} is not JSON: {e}")


def guess_kind(obj):
    if not isinstance(obj, dict):
        return None
    if "comult" in obj:
        return "bialgebra"
    if "objects" in obj:
        return "category"
    if "mult" in obj:
        return "algebra"
    if "dims" in obj:
        return "complex"
    if "matrix" in obj:
        return "sigma"
    return None


def _schema(fn, *args):
    try:
        return fn(*args)
    except nv.CategoryError as e:
        kind = "invariant" if str(e).startswith("invalid category") else "schema"
        raise InputError(kind, str(e))
    except (KeyError, TypeError, ValueError, IndexError, ZeroDivisionError) as e:
        msg = f"missing key {e}" if isinstance(e, KeyError) else str(e)
        raise InputError("schema", msg)


def _invariants(rep, what):
    if not rep.ok:
        raise InputError("invariant", f"{what}: " + "; ".join(rep.lines()))


def load(path, kind, field=None, algebra=None):
    obj = read_json(path)
    if not isinstance(obj, dict):
        raise InputError("schema", f"{path}: expected a JSON object")
    if field is not None and kind in ("algebra", "bialgebra", "complex"):
        obj = dict(obj, field=field)
    if kind == "algebra":
        A = _schema(hh.algebra_from_json, obj)
        _invariants(hh.algebra_report(A), "algebra")
        return A
    if kind == "bialgebra":
        B = _schema(hopf.bialgebra_from_json, obj)
        _invariants(hh.algebra_report(B.algebra), "algebra")
        _invariants(hopf.bialgebra_report(B), "bialgebra")
        return B
    if kind == "category":
        return _schema(nv.category_from_json, obj)
    if kind == "complex":
        c = _schema(complex_from_json, obj)
        _invariants(validate(c, "duchain"), "complex")
        return c
    if kind == "sigma":
        s = _schema(hh.algebra_map_from_json, algebra, obj)
        _invariants(hh.algebra_map_report(algebra, s.matrix), "algebra map")
        return s
    raise ValueError(kind)


def validate_input(path, kind=None):
    """Schema and invariant check of an input file; violations are named io, schema or an invariant."""
    rep = ValidationReport()
    try:
        obj = read_json(path)
        kind = kind or guess_kind(obj)
        if kind is None or kind == "sigma":
            raise InputError("schema", "cannot tell the input kind (algebra, bialgebra, category, complex)")
        load(path, kind)
    except InputError as e:
        rep.fail(e.kind, 0, str(e))
    else:
        rep.notes.append(f"valid {kind}")
    return rep


# output

def emit(args, payload, lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for ln in lines:
            print(ln)


def table_rows(rows):
    return [{"degree": n, "dim": d, "truncated": tr} for n, d, tr in rows]


def table_lines(name, rows):
    out = [f"{'n':>3}  {name}"]
    for n, d, tr in rows:
        out.append(f"{n:>3}  {d}" + ("  (truncated)" if tr else ""))
    return out


def cap_top(top, dim0, d, label="C_n"):
    """Largest top <= requested with dim0 * d^top under the cap."""
    n = top
    while n > 0 and dim0 * d ** n > DIM_CAP:
        n -= 1
    if n < top:
        print(f"warning: {label} dimension {dim0 * d ** top} exceeds {DIM_CAP}; "
              f"top degree lowered from {top} to {n}", file=sys.stderr)
    return n


def _yes(b):
    return "yes" if b else "no"


# subcommands

def cmd_hochschild(args):
    A = load(args.algebra, "algebra", args.field)
    M = None
    if args.bimodule:
        obj = read_json(args.bimodule)
        M = _schema(hh.bimodule_from_json, A, obj)
        _invariants(hh.bimodule_report(A, M), "bimodule")
    top = cap_top(args.top, A.dim if M is None else M.dim, A.dim)
    x = hh.hochschild_cyclic_module(A, M, top)
    rows = homology_table(moore_complex(x))
    emit(args, {"command": "hochschild", "top": top, "HH": table_rows(rows)},
         [f"Hochschild homology of {A.name or args.algebra}"] + table_lines("HH_n", rows))
    return 0


def cmd_cyclic(args):
    A = load(args.algebra, "algebra", args.field)
    top = cap_top(args.top, A.dim, A.dim)
    x = hh.hochschild_cyclic_module(A, None, top)
    rows = hc_table_of_cyclic(x)
    emit(args, {"command": "cyclic", "top": top, "HC": table_rows(rows)},
         [f"cyclic homology of {A.name or args.algebra}"] + table_lines("HC_n", rows))
    return 0


def twisted_hc_table(x):
    """HC of a duplicial module through its cyclic quotient, with truncation flags."""
    m = duplicial_to_duchain(pi_shriek(x))
    m.exact_top = min(m.exact_top, x.top - 1)
    return homology_table(total_complex(m))


def cmd_twisted(args):
    A = load(args.algebra, "algebra", args.field)
    s = load(args.sigma, "sigma", algebra=A)
    top = cap_top(args.top, A.dim, A.dim)
    x = hh.twisted_module(A, s, top)
    fail = cyclic_failure_degree(x)
    rows = twisted_hc_table(x)
    verdict = "cyclic: yes" if fail is None else f"cyclic: no (t^(n+1) = 1 fails at degree {fail})"
    emit(args, {"command": "twisted", "top": top, "HC_sigma": table_rows(rows),
                "cyclic": fail is None, "failing_degree": fail},
         [verdict] + table_lines("HC_sigma_n", rows))
    return 0


def cmd_hopf(args):
    B = load(args.bialgebra, "bialgebra", args.field)
    hs = hopf.is_hopf_and_antipode(B)
    if not hs:
        emit(args, {"command": "hopf", "hopf": False, "reason": hs.reason, "galois_rank": hs.rank},
             [f"Hopf: no ({hs.reason})"])
        return 0
    f = B.field
    labels = B.algebra.labels
    S = hs.antipode.to_dense()
    S_cols = {labels[j]: {labels[i]: f.fmt(S[i][j]) for i in range(B.dim) if S[i][j]}
              for j in range(B.dim)}
    M, N = hopf.trivial_coefficients(B)
    sayd = hopf.sayd_check(hs, M, N)
    top = cap_top(args.top, 1, B.dim)
    y, eng = hopf.hopf_cyclic_module(hs, M, N, top)
    cyclic = check_identities(y, "cyclic").ok
    rows = hc_table_of_cyclic(y) if cyclic else twisted_hc_table(y)
    lines = ["Hopf: yes", "antipode:"]
    for j in range(B.dim):
        img = " + ".join(f"{c}*{i}" if c != "1" else i for i, c in S_cols[labels[j]].items()) or "0"
        lines.append(f"  S({labels[j]}) = {img}")
    lines.append(f"SAYD (trivial coefficients): {_yes(sayd)}")
    lines.append(f"cyclic: {_yes(cyclic)}")
    lines += table_lines("HC_n", rows)
    emit(args, {"command": "hopf", "hopf": True, "antipode": S_cols, "sayd": sayd,
                "cyclic": cyclic, "top": top, "HC": table_rows(rows)}, lines)
    return 0


def cmd_check_law(args):
    kw = {"ell": args.ell, "colours": args.colours, "grid": args.grid}
    if args.name in sl.STRUCTURES:
        rep = sl.check_laws(args.name, size=args.size, **kw)
        kind = "structure"
    else:
        if args.size > 3:
            raise sl.BoundExceeded(f"carrier of size {args.size} exceeds the bound 3")
        rep = sl.mixed_law_report(sl.mixed_law(args.name, **kw), args.size)
        kind = "mixed law"
    emit(args, {"command": "check-law", "name": args.name, "ok": rep.ok,
                "violations": [list(v) for v in rep.violations], "notes": rep.notes},
         [f"{kind} {args.name}: {'ok' if rep.ok else 'FAILED'}"] + rep.lines())
    return 0 if rep.ok else 1


def _plain(v):
    if isinstance(v, dict):
        return {str(k if not isinstance(k, frozenset) else sorted(k)): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def cmd_entwined(args):
    found = sl.entwined_enumerate(args.law, args.max_carrier, colours=args.colours, ell=args.ell)
    counts = {}
    for e in found:
        counts[e["n"]] = counts.get(e["n"], 0) + 1
    lines = [f"entwined algebras for {args.law}, carriers of size <= {args.max_carrier}: {len(found)}"]
    lines += [f"  size {n}: {counts.get(n, 0)}" for n in range(args.max_carrier + 1)]
    emit(args, {"command": "entwined-search", "law": args.law, "total": len(found),
                "by_size": {str(n): counts.get(n, 0) for n in range(args.max_carrier + 1)},
                "algebras": _plain(found)}, lines)
    return 0


def cmd_nerve(args):
    C = load(args.category, "category")
    v = nv.cyclic_iff_groupoid(C, args.top)
    cyclic = v.duplicial and v.cyclic_failure is None
    w = None if v.witness is None else "{" + ", ".join(map(str, v.witness.subcategory)) + "}"
    line = f"duplicial: {_yes(v.duplicial)}, cyclic: {_yes(cyclic)}"
    if w is not None:
        line += f", witness: {w}"
    lines = [line]
    if v.duplicial and not cyclic:
        lines.append(f"t^(n+1) = 1 fails at degree {v.cyclic_failure}")
    emit(args, {"command": "nerve", "duplicial": v.duplicial, "cyclic": cyclic,
                "groupoid": v.groupoid, "witness": None if v.witness is None else v.witness.subcategory,
                "failing_degree": v.cyclic_failure, "top": args.top}, lines)
    return 0


def cmd_validate(args):
    rep = validate_input(args.path, args.kind)
    code = 0
    if not rep.ok:
        code = 2 if any(v[0] in ("io", "schema") for v in rep.violations) else 1
    emit(args, {"command": "validate", "ok": rep.ok,
                "errors": [{"kind": k, "message": m} for k, _, m in rep.violations]},
         ["valid" if rep.ok else "invalid"] + [f"{k} error: {m}" for k, _, m in rep.violations])
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="duplicial", description="Exact duplicial and cyclic homology at desk scale.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--top", type=nonneg, default=4, help="top degree (default 4)")
    common.add_argument("--field", type=parse_field, default=None, help="Q or a prime; overrides the file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hochschild", parents=[common], help="Hochschild homology")
    s.add_argument("--algebra", required=True)
    s.add_argument("--bimodule")
    s.set_defaults(run=cmd_hochschild)

    s = sub.add_parser("cyclic", parents=[common], help="cyclic homology")
    s.add_argument("--algebra", required=True)
    s.set_defaults(run=cmd_cyclic)

    s = sub.add_parser("twisted", parents=[common], help="twisted cyclic homology")
    s.add_argument("--algebra", required=True)
    s.add_argument("--sigma", required=True, help='JSON {"matrix": [[...]]} of an algebra map')
    s.set_defaults(run=cmd_twisted)

    s = sub.add_parser("hopf", parents=[common], help="Hopf detection and Hopf-cyclic homology")
    s.add_argument("--bialgebra", required=True)
    s.set_defaults(run=cmd_hopf)

    s = sub.add_parser("check-law", parents=[common], help="monad, comonad and mixed-law checks")
    s.add_argument("name", help="one of " + ", ".join(sl.STRUCTURES + sl.LAW_NAMES + ("U/M", "L+/L+")))
    s.add_argument("--size", type=int, default=2)
    s.add_argument("--colours", type=int, default=2)
    s.add_argument("--ell", type=int, default=3)
    s.add_argument("--grid", type=int, default=2)
    s.set_defaults(run=cmd_check_law)

    s = sub.add_parser("entwined-search", parents=[common], help="enumerate entwined algebras")
    s.add_argument("law", choices=sorted(sl.ENUM_LIMIT))
    s.add_argument("--max-carrier", type=int, default=2)
    s.add_argument("--colours", type=int, default=2)
    s.add_argument("--ell", type=int, default=3)
    s.set_defaults(run=cmd_entwined)

    s = sub.add_parser("nerve", parents=[common], help="duplicial and cyclic structures on a nerve")
    s.add_argument("--category", required=True)
    s.set_defaults(run=cmd_nerve)

    s = sub.add_parser("validate", parents=[common], help="check an input file")
    s.add_argument("path")
    s.add_argument("--kind", choices=INPUT_KINDS[:4])
    s.set_defaults(run=cmd_validate)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InputError as e:
        print(f"{e.kind} error: {e}", file=sys.stderr)
        return e.code
    except (sl.BoundExceeded, KeyError) as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 2 if isinstance(e, KeyError) else 1


if __name__ == "__main__":
    sys.exit(main())
