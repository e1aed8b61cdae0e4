"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 input or parse error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .complexes import TAYLOR_CAP, betti_oracle, exactness_failures, oracle_totals, taylor_complex
from .decomposition import (depth, dimension, irreducible_decomposition, is_cohen_macaulay,
                            membership_counterexample, redundant_components)
from .errors import CapExceeded, MonomialError, ParseError
from .io import read_input
from .linalg import check_field
from .monomial import is_generic
from .resolution import (betti_numbers, check_upper_bound, hilbert_matches_standard_monomials,
                         hilbert_numerator, minimal_resolution, resolve_by_deformation)
from .scarf import axis_vertices, enumerate_labelings, facet_labeling, scarf_complex

VERBS = ("info", "scarf", "resolve", "taylor", "betti", "hilbert", "decompose", "labelings",
         "bounds", "verify")


class VerificationFailed(Exception):
    pass


def _field(text: str) -> int:
    if text.lower() == "q":
        return 0
    if text.lower().startswith("p:"):
        try:
            return check_field(int(text[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    raise argparse.ArgumentTypeError("field must be 'q' or 'p:<prime>'")


def _box(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("box must look like 4,4,4") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=0, help="q (default) or p:<prime>")
    common.add_argument("--cap", type=int, default=None,
                        help=f"subset enumeration cap (default {TAYLOR_CAP})")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    p = argparse.ArgumentParser(prog="monores", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")
    helps = {
        "info": "variable count, generator count, genericity",
        "scarf": "Scarf complex faces with labels",
        "resolve": "minimal (generic) or deformation resolution",
        "taylor": "Taylor complex ranks",
        "betti": "Betti numbers",
        "hilbert": "Hilbert series numerator",
        "decompose": "irreducible decomposition",
        "labelings": "labelings of a triangulation",
        "bounds": "upper bound report against cyclic polytopes",
        "verify": "run the fixture verification suite",
    }
    for verb in VERBS:
        sp = sub.add_parser(verb, parents=[common], help=helps[verb])
        if verb != "verify":
            sp.add_argument("input", help="file, bundled fixture name, or inline 'vars: x y; x^2; y^2'")
        if verb == "resolve":
            sp.add_argument("--deform", action="store_true", help="resolve through a generic deformation")
            sp.add_argument("--check", action="store_true", help="also verify exactness")
        if verb == "betti":
            sp.add_argument("--oracle", action="store_true", help="add the multigraded table")
        if verb == "hilbert":
            sp.add_argument("--verify-box", type=_box, default=None, metavar="A,B,C")
        if verb == "decompose":
            sp.add_argument("--verify", action="store_true", help="check membership on the box")
            sp.add_argument("--deform", action="store_true",
                            help="decompose a non-generic ideal through a deformation")
        if verb == "verify":
            sp.add_argument("--generic-count", type=int, default=200)
            sp.add_argument("--nongeneric-count", type=int, default=100)
    return p


def _emit(args, data, text: str):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _ideal(args):
    kind, payload = read_input(args.input)
    if kind != "ideal":
        raise ParseError(f"'{args.verb}' needs an ideal, got a triangulation")
    ideal, dropped = payload
    for m in dropped:
        print(f"note: dropped non-minimal generator {ideal.format(m)}", file=sys.stderr)
    return ideal


def _cap(args, default=TAYLOR_CAP):
    return default if args.cap is None else args.cap


def cmd_info(args):
    M = _ideal(args)
    data = {"vars": list(M.var_names), "n": M.n, "r": M.r, "generators": [list(g) for g in M],
            "generic": is_generic(M), "artinian": M.is_artinian}
    text = "\n".join([f"ideal     {M}", f"n         {M.n}", f"r         {M.r}",
                      f"generic   {data['generic']}", f"artinian  {data['artinian']}"])
    _emit(args, data, text)


def cmd_scarf(args):
    M = _ideal(args)
    sc = scarf_complex(M)
    rows = [{"face": [v + 1 for v in f], "label": list(sc.label(f))} for f in sc.faces]
    text = [f"Scarf complex of {M} (generic: {sc.generic})", f"f-vector {sc.f_vector()}"]
    text += [f"  {{{','.join(str(v) for v in r['face'])}}}  {M.format(r['label'])}" for r in rows]
    _emit(args, {"generic": sc.generic, "f_vector": sc.f_vector(), "faces": rows}, "\n".join(text))


def cmd_resolve(args):
    M = _ideal(args)
    if args.deform or not is_generic(M):
        if not args.deform:
            raise MonomialError("ideal is not generic; rerun with --deform")
        res = resolve_by_deformation(M)
    else:
        res = minimal_resolution(M)
    if args.check:
        bad = next(exactness_failures(res.labeled, args.field, _cap(args)), None)
        if bad is not None:
            raise VerificationFailed(f"not exact in multidegree {M.format(bad[0])}")
    fc = res.complex
    lines = [f"resolution of S/{M}  ({res.source}, minimal: {res.minimal})",
             "ranks " + ",".join(map(str, res.betti)), f"length {res.length}"]
    for j in range(fc.length, 0, -1):
        cols = ["{" + ",".join(str(v + 1) for v in f) + "}" for f in fc.basis[j]]
        lines.append(f"\nd{j}: S^{len(fc.basis[j])} -> S^{len(fc.basis[j - 1])}   columns {' '.join(cols)}")
        lines.append(fc.format_matrix(j))
    _emit(args, res.to_json(), "\n".join(lines))


def cmd_taylor(args):
    M = _ideal(args)
    fc = taylor_complex(M, _cap(args))
    _emit(args, {"ranks": fc.ranks}, "Taylor ranks " + ",".join(map(str, fc.ranks)))


def cmd_betti(args):
    M = _ideal(args)
    data = {}
    if is_generic(M):
        data["betti"] = betti_numbers(minimal_resolution(M))
        data["source"] = "scarf"
    lines = []
    if "betti" in data:
        lines.append("betti " + ",".join(map(str, data["betti"])))
    if args.oracle or "betti" not in data:
        table = betti_oracle(M, args.field, _cap(args))
        data["oracle_totals"] = oracle_totals(table)
        data["multigraded"] = [{"multidegree": list(b), "ranks": {str(j): v for j, v in r.items()}}
                               for b, r in table.items()]
        lines.append("oracle totals " + ",".join(map(str, data["oracle_totals"])))
        if args.oracle:
            for b, r in table.items():
                lines.append(f"  {M.format(b):>16}  " + "  ".join(f"b{j}={v}" for j, v in sorted(r.items())))
    _emit(args, data, "\n".join(lines))


def cmd_hilbert(args):
    M = _ideal(args)
    num = hilbert_numerator(M, allow_deformation=True)
    data = {"generic": is_generic(M), "numerator": num.to_json()}
    lines = [f"P = {num.format(M.var_names)}"]
    if args.verify_box is not None:
        if len(args.verify_box) != M.n:
            raise ParseError(f"box needs {M.n} entries")
        ok = hilbert_matches_standard_monomials(M, args.verify_box, num)
        data["box_check"] = ok
        lines.append(f"standard-monomial check on box {args.verify_box}: {'pass' if ok else 'FAIL'}")
        _emit(args, data, "\n".join(lines))
        if not ok:
            raise VerificationFailed("Hilbert series disagrees with standard monomials")
        return
    _emit(args, data, "\n".join(lines))


def cmd_decompose(args):
    M = _ideal(args)
    dec = irreducible_decomposition(M, via_deformation=args.deform)
    data = {"components": dec.to_json(), "D": dec.D, "irredundant": dec.irredundant}
    lines = [f"{M} = {dec.format()}"]
    if not dec.irredundant:
        lines.append("(specialized from a deformation; may be redundant)")
    if is_generic(M):
        data.update(dimension=dimension(M), depth=depth(M), cohen_macaulay=is_cohen_macaulay(M))
        lines.append(f"dim {data['dimension']}  depth {data['depth']}  "
                     f"Cohen-Macaulay {data['cohen_macaulay']}")
    failure = None
    if args.verify:
        bad = membership_counterexample(dec)
        red = redundant_components(dec) if dec.irredundant else []
        data["verified"] = bad is None and not red
        if bad is not None:
            failure = f"membership differs at {M.format(bad)}"
        elif red:
            failure = f"redundant component {red[0].format(M.var_names)}"
        lines.append("box check: " + ("pass" if failure is None else "FAIL " + failure))
    _emit(args, data, "\n".join(lines))
    if failure:
        raise VerificationFailed(failure)


def cmd_labelings(args):
    kind, payload = read_input(args.input)
    if kind == "triangulation":
        facets = payload
        n = len(facets[0])
        labs = enumerate_labelings(facets, n)
        names = [_var(s) for s in range(n)]
        data = {"count": len(labs)}
    else:
        M, _ = payload
        sc = scarf_complex(M)
        n = M.n
        labs = enumerate_labelings(sc.complex, n, axis_vertices(M))
        names = list(M.var_names)
        own = facet_labeling(M)
        data = {"count": len(labs), "realized": _lab_json(own, n)}
    data["labelings"] = [_lab_json(lab, n) for lab in labs]
    lines = [f"{len(labs)} labelings found"]
    for k, lab in enumerate(labs):
        lines.append(f"labeling {k + 1}:")
        for f, vals in lab.items():
            lines.append("  " + " ".join(f"{v + 1}->{names[s]}" for v, s in zip(f, vals)))
    _emit(args, data, "\n".join(lines))


def _var(s: int) -> str:
    return "abcdefghijklmnopqrstuvwxyz"[s] if s < 26 else f"v{s}"


def _lab_json(lab, n):
    return [{"facet": [v + 1 for v in f], "variables": list(vals)} for f, vals in lab.items()]


def cmd_bounds(args):
    M = _ideal(args)
    rep = check_upper_bound(M)
    lines = [f"n={rep.n} r={rep.r} betti {rep.betti} ({rep.source})"]
    if rep.face_numbers is None:
        lines.append("cyclic polytope bound needs r > n; nothing to check")
    else:
        lines.append(f"cyclic face numbers {rep.face_numbers}")
        for i, f, b, h in rep.checks:
            lines.append(f"  {i}-faces {f} <= {b}: {'ok' if h else 'VIOLATED'}")
    _emit(args, rep.to_json(), "\n".join(lines))
    if not rep.ok:
        raise VerificationFailed("upper bound violated")


def cmd_verify(args):
    from .verify import run_all
    results = run_all(args.seed, args.generic_count, args.nongeneric_count)
    color = sys.stdout.isatty() and "NO_COLOR" not in os.environ and not args.json
    if args.json:
        print(json.dumps([r.__dict__ for r in results], indent=2))
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            if color:
                status = ("\x1b[32m" if r.passed else "\x1b[31m") + status + "\x1b[0m"
            print(f"{r.key:>3}  {status}  {r.title:<45} {r.detail}")
    failed = [r for r in results if not r.passed]
    if failed:
        raise VerificationFailed(f"{len(failed)} check(s) failed, first: {failed[0].key} {failed[0].detail}")


def main(argv=None) -> int:
    logging.basicConfig(level=logging.ERROR, format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = globals()[f"cmd_{args.verb}"]
    try:
        handler(args)
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, MonomialError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
