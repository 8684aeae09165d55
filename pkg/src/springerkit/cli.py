"""
springerkit command line.

    springerkit green --type B --rank 2 --format json
    springerkit tau --type B --rank 2 --char "1|1"
    springerkit verify --suite all --type C --rank 3

Exit status: 0 ok, 1 a verification failed, 2 bad usage, 3 internal error.
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import partitions as P
from .poly import BiPoly, RatFunc, UniPoly, format_poly
from .weyl import WeylType, fmt_char, fmt_class, parse_char, weyl

SCHEMA = "1"
RANK_LIMIT = {"A": 6, "B": 6, "C": 6, "D": 5}


class UsageError(Exception):
    pass


# rendering

def _terms(p):
    if isinstance(p, UniPoly):
        return {(i, 0): c for i, c in enumerate(p.coeffs) if c}
    return p.terms


def render(v, fmt, var="q"):
    if isinstance(v, (UniPoly, BiPoly)):
        if fmt == "json":
            return v.to_json()
        return format_poly(_terms(v), (var, "y"), latex=fmt == "latex")
    if isinstance(v, RatFunc):
        if fmt == "json":
            return v.to_json()
        n, d = v.num, v.den
        if d[d.valuation()] < 0:
            # show 1 - q^2 rather than -1 + q^2
            n, d = -n, -d
        num, den = render(n, fmt, var), render(d, fmt, var)
        if v.is_poly() and v.den == UniPoly.const(1):
            return num
        if fmt == "latex":
            return "\\frac{%s}{%s}" % (num, den)
        return "(%s)/(%s)" % (num, den)
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return [v.numerator, v.denominator] if fmt == "json" else str(v)
    if isinstance(v, (list, tuple)) and fmt != "json":
        return "[" + ",".join(str(render(x, fmt, var)) for x in v) + "]"
    if isinstance(v, bool) and fmt != "json":
        return "yes" if v else "no"
    return v


class Table:
    def __init__(self, title, columns, rows, meta=None, var="q"):
        self.title = title
        self.columns = columns
        self.rows = rows
        self.meta = meta or {}
        self.var = var


def emit(table, fmt, args, out):
    cols = table.columns
    if fmt == "json":
        doc = {"schema": SCHEMA, "command": args.cmd, "type": args.family, "rank": args.rank}
        doc.update({k: render(v, fmt, table.var) for k, v in table.meta.items()})
        rows = [{c: render(r.get(c), fmt, table.var) for c in cols} for r in table.rows]
        # one row per line keeps large tables greppable
        head = json.dumps(doc)[:-1]
        body = ",\n  ".join(json.dumps(r, separators=(",", ":")) for r in rows)
        out.write('%s, "rows": [\n  %s\n]}\n' % (head, body) if rows else '%s, "rows": []}\n' % head)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in table.rows:
            w.writerow([render(r.get(c), fmt, table.var) for c in cols])
        out.write(buf.getvalue())
    elif fmt == "latex":
        out.write("%% %s\n" % table.title)
        for k, v in table.meta.items():
            out.write("%% %s: %s\n" % (k, render(v, "text", table.var)))
        out.write("\\begin{tabular}{%s}\n" % ("l" * len(cols)))
        out.write(" & ".join(c.replace("_", "\\_") for c in cols) + " \\\\\n\\hline\n")
        for r in table.rows:
            cells = []
            for c in cols:
                v = r.get(c)
                s = str(render(v, fmt, table.var))
                cells.append("$%s$" % s if isinstance(v, (UniPoly, BiPoly, RatFunc)) else s.replace("|", "\\mid "))
            out.write(" & ".join(cells) + " \\\\\n")
        out.write("\\end{tabular}\n")
    else:
        out.write(table.title + "\n")
        for k, v in table.meta.items():
            out.write("%s: %s\n" % (k, render(v, "text", table.var)))
        cells = [[str(render(r.get(c), "text", table.var)) for c in cols] for r in table.rows]
        width = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
        out.write("  ".join(c.ljust(w) for c, w in zip(cols, width)).rstrip() + "\n")
        for row in cells:
            out.write("  ".join(s.ljust(w) for s, w in zip(row, width)).rstrip() + "\n")


# argument helpers

def _type(args):
    try:
        wt = WeylType(args.family, args.rank)
    except ValueError as e:
        raise UsageError(str(e))
    if wt.rank > RANK_LIMIT[wt.family] and not args.force:
        raise UsageError("rank %d is expensive for type %s (|W| = %d); pass --force"
                         % (wt.rank, wt.family, wt.order))
    return wt


def _orbit(args, wt):
    from .springer import parse_orbit
    try:
        return parse_orbit(args.orbit, wt.family, wt.rank)
    except ValueError as e:
        raise UsageError(str(e))


def _char(args, W):
    try:
        x = parse_char(args.char, W.family)
    except ValueError as e:
        raise UsageError(str(e))
    if x not in W.char_index:
        raise UsageError("%s is not an irreducible character of %s" % (args.char, W.type))
    return x


def _levi(args, wt):
    s = args.levi or ""
    try:
        J = frozenset(int(x) for x in s.replace(",", ".").split(".") if x.strip())
    except ValueError:
        raise UsageError("--levi takes simple root indices like 1.3")
    if any(not 1 <= j <= wt.rank for j in J):
        raise UsageError("simple root indices run from 1 to %d" % wt.rank)
    return J


def _t(args, wt):
    from .cherednik import very_good
    if args.t is None or args.t < 1:
        raise UsageError("--t must be a positive integer")
    if not very_good(wt, args.t) and not getattr(args, "allow_bad", False):
        raise UsageError("t=%d is not very good for %s" % (args.t, wt))
    return args.t


# commands

def cmd_classes(args):
    wt = _type(args)
    W = weyl(wt)
    rows = [{"class": fmt_class(c), "size": s, "char_poly": p, "fixed_dim": W.fixed_dim(i)}
            for i, (c, s, p) in enumerate(zip(W.classes, W.sizes, W.char_polys))]
    return Table("conjugacy classes of W(%s)" % (wt,), ["class", "size", "char_poly", "fixed_dim"],
                 rows, {"order": W.order}, var="x"), 0


def cmd_chartable(args):
    wt = _type(args)
    W = weyl(wt)
    cols = ["char"] + [fmt_class(c) for c in W.classes]
    rows = []
    for x, row in zip(W.chars, W.table):
        r = {"char": fmt_char(x)}
        r.update(zip(cols[1:], row))
        rows.append(r)
    return Table("character table of W(%s)" % (wt,), cols, rows), 0


def cmd_orbits(args):
    from .springer import ComponentGroup, dim_springer_fiber, orbit_dim, orbits, symbol_of
    wt = _type(args)
    rows = []
    for o in orbits(wt):
        G = ComponentGroup(o)
        r = {"orbit": str(o), "dim": orbit_dim(o), "d_e": dim_springer_fiber(o), "A_order": G.order()}
        if wt.family != "A":
            r["symbol"] = str(symbol_of(o))
        rows.append(r)
    cols = ["orbit", "dim", "d_e", "A_order"] + (["symbol"] if wt.family != "A" else [])
    return Table("nilpotent orbits of type %s" % (wt,), cols, rows), 0


def cmd_correspondence(args):
    from .springer import ComponentGroup, springer_correspondence
    wt = _type(args)
    rows = []
    for d in springer_correspondence(wt):
        rows.append({"orbit": str(d.orbit), "phi": ComponentGroup(d.orbit).phi_vector(d.phi),
                     "char": fmt_char(d.char)})
    return Table("Springer correspondence for %s" % (wt,), ["orbit", "phi", "char"], rows), 0


def cmd_green(args):
    from .green import green_table
    from .springer import ComponentGroup
    wt = _type(args)
    T = green_table(wt)
    W = T.weyl
    rows = []
    for d in T.data:
        G = ComponentGroup(d.orbit)
        for x, p in zip(W.chars, T.P[d]):
            if p:
                rows.append({"orbit": str(d.orbit), "phi": G.phi_vector(d.phi),
                             "char": fmt_char(x), "multiplicity": p})
    return Table("graded multiplicities <Q_{e,phi}, chi> for %s" % (wt,),
                 ["orbit", "phi", "char", "multiplicity"], rows), 0


def cmd_tau(args):
    from .identities import tau_closed
    wt = _type(args)
    W = weyl(wt)
    xs = [_char(args, W)] if args.char else W.chars
    rows, bad = [], 0
    for x in xs:
        m = W.molien_tau(x)
        r = {"char": fmt_char(x), "molien": m}
        if wt.family != "A":
            c = tau_closed(wt, x)
            r["closed"] = c
            r["equal"] = c == m
            bad += c != m
        rows.append(r)
    cols = ["char", "molien"] + (["closed", "equal"] if wt.family != "A" else [])
    return Table("tau~(chi) for %s" % (wt,), cols, rows), 1 if bad else 0


def cmd_exterior(args):
    from .green import green_table
    from .identities import exterior_profile, pair_with_wedge
    from .springer import ComponentGroup
    wt = _type(args)
    T = green_table(wt)
    obs = [_orbit(args, wt)] if args.orbit else T.order
    rows = []
    for o in obs:
        G = ComponentGroup(o)
        prof = exterior_profile(T, o)
        for d in T.data_for(o):
            r = {"orbit": str(o), "phi": G.phi_vector(d.phi), "g": prof.g[d.phi],
                 "m": list(prof.exponents), "pi": [G.phi_vector(p) for p in prof.pis]}
            for i in range(wt.rank + 1):
                r["wedge%d" % i] = pair_with_wedge(T, d, i)
            rows.append(r)
    cols = ["orbit", "phi", "m", "pi"] + ["wedge%d" % i for i in range(wt.rank + 1)] + ["g"]
    return Table("<Q_{e,phi}, wedge^i V> for %s" % (wt,), cols, rows), 0


def cmd_arrangement(args):
    from .arrangements import (build_arrangement, characteristic_polynomial, f_J,
                               os_exponents, wJ_order)
    wt = _type(args)
    J = _levi(args, wt)
    A = build_arrangement(wt, J)
    chi = characteristic_polynomial(A)
    meta = {"levi": sorted(J), "ambient_dim": len(A.ambient), "hyperplanes": len(A.hyperplanes),
            "chi_J": chi, "exponents": os_exponents(wt, J), "W^J_order": wJ_order(wt, J),
            "f_J": f_J(wt, J)}
    rows = [{"normal": "(" + ", ".join(str(c) for c in h) + ")"} for h in A.hyperplanes]
    return Table("restricted arrangement A^J for %s" % (wt,), ["normal"], rows, meta, var="t"), 0


def cmd_decomp(args):
    from .arrangements import _wj_size, f_J, j_classes, verify_decomp
    wt = _type(args)
    t = _t(args, wt)
    W = weyl(wt)
    rows = []
    for J in j_classes(wt):
        f = f_J(wt, J)
        rows.append({"levi": sorted(J), "f_J": f, "f_J(t)": f(t), "index": W.order // _wj_size(wt, J)})
    rep = verify_decomp(wt, t)
    meta = {"t": t, "verified": rep.ok}
    if not rep.ok:
        meta["failures"] = rep.failures
    return (Table("S_t = sum_J f_J(t) Ind_{W_J} 1 for %s" % (wt,), ["levi", "f_J", "f_J(t)", "index"],
                  rows, meta, var="t"), 0 if rep.ok else 1)


def cmd_cherednik(args):
    from .arrangements import f_J, regular_in_levi
    from .cherednik import f_closed, f_solve
    from .green import green_table
    from .springer import ComponentGroup
    wt = _type(args)
    t = _t(args, wt)
    T = green_table(wt)
    F = f_solve(wt, t)
    rows, bad = [], 0
    for o in T.order:
        J = regular_in_levi(T, o)
        want = f_J(wt, J)(t) if J is not None else 0
        for d in T.data_for(o):
            f = F[d]
            r = {"orbit": str(o), "phi": ComponentGroup(o).phi_vector(d.phi), "f": f,
                 "f(1)": f(1), "levi": sorted(J) if J is not None else None, "f_J(t)": want}
            ok = f(1) == want
            if args.closed_form:
                c = f_closed(T, d, t)
                r["closed"] = c
                ok = ok and c == f
            r["ok"] = ok
            bad += not ok
            rows.append(r)
    cols = ["orbit", "phi", "f", "f(1)", "levi", "f_J(t)"] + (["closed"] if args.closed_form else []) + ["ok"]
    return Table("H = sum f_{e,phi}(q;t) Q_{e,phi} for %s, t=%d" % (wt, t), cols, rows, {"t": t}), 1 if bad else 0


SUITES = ("chartable", "correspondence", "green", "tau", "identities", "arrangements", "decomp", "cherednik")


def run_suite(name, wt):
    from .report import Report
    if name == "chartable":
        from .weyl import check_tables
        return check_tables(wt)
    if name == "correspondence":
        from .springer import check_bijection
        return Report("Springer bijection %s" % (wt,), [] if check_bijection(wt) else ["not a bijection"], 1)
    if name == "green":
        from .green import check_structure, green_table, verify_orthogonality
        T = green_table(wt)
        return Report("Green functions %s" % (wt,), check_structure(T) + verify_orthogonality(T), 2)
    if name == "tau":
        from .identities import tau_closed
        W = weyl(wt)
        rep = Report("closed tau %s" % (wt,))
        if wt.family == "A":
            return rep
        for x in W.chars:
            rep.checked += 1
            if tau_closed(wt, x) != W.molien_tau(x):
                rep.fail("closed tau differs for %s" % fmt_char(x))
        return rep
    if name == "identities":
        from .identities import run_all
        return run_all(wt)
    if name == "arrangements":
        from .arrangements import check_factorization, check_levi_exponents
        from .green import green_table
        return check_factorization(wt).merge(check_levi_exponents(green_table(wt)))
    from .cherednik import verify_f, verify_q1, very_good, falsification
    from .arrangements import verify_decomp
    h = max(weyl(wt).degrees)
    rep = Report("%s %s" % (name, wt))
    for t in range(1, 2 * h + 2):
        if not very_good(wt, t):
            if name == "cherednik":
                rep.checked += 1
                if not falsification(wt, t):
                    rep.fail("t=%d not very good but H looks like a representation" % t)
            continue
        if name == "decomp":
            rep.merge(verify_decomp(wt, t))
        else:
            rep.merge(verify_f(wt, t)).merge(verify_q1(wt, t))
    return rep


def cmd_verify(args):
    wt = _type(args)
    names = SUITES if args.suite == "all" else [args.suite]
    rows, bad = [], 0
    for s in names:
        rep = run_suite(s, wt)
        rows.append({"suite": s, "ok": rep.ok, "checks": rep.checked,
                     "failures": "; ".join(rep.failures[:5])})
        bad += not rep.ok
    return Table("verification for %s" % (wt,), ["suite", "ok", "checks", "failures"], rows,
                 {"passed": not bad}), 1 if bad else 0


COMMANDS = {
    "classes": (cmd_classes, "conjugacy classes with sizes and characteristic polynomials"),
    "chartable": (cmd_chartable, "character table"),
    "orbits": (cmd_orbits, "nilpotent orbits, dimensions, A(e), symbols"),
    "correspondence": (cmd_correspondence, "Springer correspondence (orbit, phi) -> character"),
    "green": (cmd_green, "graded multiplicities of the Green functions Q_{e,phi}"),
    "tau": (cmd_tau, "tau~(chi) by Molien sum and by the closed formula"),
    "exterior": (cmd_exterior, "exterior powers of V in Q_{e,phi}"),
    "arrangement": (cmd_arrangement, "restricted arrangement A^J"),
    "decomp": (cmd_decomp, "S_t decomposition into induced characters"),
    "cherednik": (cmd_cherednik, "coefficients f_{e,phi}(q;t) of H"),
    "verify": (cmd_verify, "run verification suites"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="springerkit", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)
    for name, (_, hlp) in COMMANDS.items():
        s = sub.add_parser(name, help=hlp)
        s.add_argument("--type", dest="family", required=True, choices=list("ABCD"), type=str.upper)
        s.add_argument("--rank", type=int, required=True)
        s.add_argument("--format", default="text", choices=["json", "csv", "latex", "text"])
        s.add_argument("--no-cache", action="store_true", help="do not read or write the table cache")
        s.add_argument("--force", action="store_true", help="allow large ranks")
        if name in ("tau",):
            s.add_argument("--char", help='character label such as "1|1" or "2|2:I"')
        if name in ("exterior",):
            s.add_argument("--orbit", help="partition such as 3.3.1.1 (very even D: 2.2.2.2:I)")
        if name in ("arrangement",):
            s.add_argument("--levi", default="", help="simple root indices, e.g. 1.3")
        if name in ("decomp", "cherednik"):
            s.add_argument("--t", type=int, required=True)
        if name == "cherednik":
            s.add_argument("--closed-form", action="store_true", help="also evaluate the product formula")
        if name == "verify":
            s.add_argument("--suite", default="all", choices=("all",) + SUITES)
    return p


def _threads():
    v = os.environ.get("SPRINGERKIT_THREADS")
    if v is None:
        return 1
    try:
        n = int(v)
    except ValueError:
        raise UsageError("SPRINGERKIT_THREADS must be an integer")
    if n < 1:
        raise UsageError("SPRINGERKIT_THREADS must be positive")
    return n


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        _threads()
        if args.no_cache:
            from .weyl import set_cache_enabled
            set_cache_enabled(False)
        fn = COMMANDS[args.cmd][0]
        table, status = fn(args)
    except UsageError as e:
        print("springerkit: error: %s" % e, file=sys.stderr)
        return 2
    except Exception as e:  # internal inconsistency
        print("springerkit: internal error: %s: %s" % (type(e).__name__, e), file=sys.stderr)
        return 3
    emit(table, args.format, args, out)
    return status


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
