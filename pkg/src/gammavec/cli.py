"""Command-line surface tying the modules together for batch use.

Subcommands: vectors, check, link analyze, extend, ortho {mu, invert,
covers, gamma-dimers}.  Exit codes: 0 success/pass, 1 check failure,
2 usage/parse error, 3 link-condition precondition failure.  Integers
serialize as decimal strings in JSON (pseudopowers overflow machine
words quickly); table output truncates integers over 30 digits.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import complexes, links, macaulay, orthopath, realize, vectors
from .errors import (
    LinkConditionError,
    NotReciprocalError,
    RangeGuardError,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _fmt_int_table(x):
    s = str(x)
    if len(s) > 30:
        return s[:30] + f"...({len(s)} digits)"
    return s


def _jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(_jsonable(payload), indent=2))
    elif fmt == "csv":
        for key, value in payload.items():
            if isinstance(value, (list, tuple)):
                print(f"{key}," + ",".join(str(v) for v in value))
            else:
                print(f"{key},{value}")
    else:  # table
        width = max((len(str(k)) for k in payload), default=0)
        for key, value in payload.items():
            if isinstance(value, (list, tuple)):
                value = " ".join(
                    _fmt_int_table(v) if isinstance(v, int) else str(v) for v in value
                )
            elif isinstance(value, int) and not isinstance(value, bool):
                value = _fmt_int_table(value)
            print(f"{str(key):<{width}}  {value}")


def _csv_ints(text):
    return tuple(int(tok) for tok in text.split(","))


def _load_complex(args):
    if args.generator:
        return complexes.generate(args.generator)
    if args.file:
        return complexes.load_facets(args.file)
    raise RangeGuardError("need --generator or --file")


def _scheme(spec, order):
    if spec == "chebyshev":
        return orthopath.chebyshev_scheme(order)
    with open(spec) as fh:
        return orthopath.WeightScheme.from_json(fh.read())


def _add_input_flags(p, complex_source=False):
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    if complex_source:
        p.add_argument("--generator", help="cross:d | simplexboundary:d | cycle:n")
        p.add_argument("--file", help="facet-list file (text or JSON)")
        p.add_argument("--guard-faces", type=int, default=2_000_000)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_vectors(args):
    if args.h:
        h = _csv_ints(args.h)
        d = len(h) - 1
        f = vectors.h_to_f(h, d)
    elif args.f:
        f = _csv_ints(args.f)
        d = len(f)
        h = vectors.f_to_h(f, d)
    elif args.g or args.gamma:
        if not args.d:
            raise RangeGuardError("--g/--gamma input needs --d")
        d = args.d
        if args.gamma:
            gamma = _csv_ints(args.gamma)
            h = vectors.mirror_h(vectors.gamma_to_h(gamma, d), d)
        else:
            h = vectors.mirror_h(
                vectors.g_to_h_half(_csv_ints(args.g)), d
            )
        f = vectors.h_to_f(h, d)
    else:
        K = _load_complex(args)
        f = K.f_vector(guard=args.guard_faces)
        d = len(f)
        h = vectors.f_to_h(f, d)
    palindromic = vectors.dehn_sommerville_check(h)
    payload = {
        "d": d,
        "f": list(f),
        "h": list(h),
        "g_trunc": list(vectors.h_to_g(h, "trunc")),
        "g_ext": list(vectors.h_to_g(h, "ext")),
        "dehn_sommerville": palindromic,
    }
    gamma = vectors.gamma_via_chebyshev(h, d)  # raises if not palindromic
    payload["gamma"] = list(gamma)
    payload["chebyshev_matrix_agree"] = gamma == vectors.h_half_to_gamma(
        h[: d // 2 + 1], d
    )
    _emit(payload, args.format)
    return EXIT_OK


def cmd_check(args):
    if args.mode == "fvector":
        if not args.f:
            raise RangeGuardError("check fvector needs --f")
        vec = _csv_ints(args.f)
        result = macaulay.check_f_vector(vec)
    else:
        if not args.h:
            raise RangeGuardError(f"check {args.mode} needs --h")
        vec = _csv_ints(args.h)
        result = (
            macaulay.check_cm_h(vec)
            if args.mode == "cm"
            else macaulay.check_sphere_g(vec)
        )
    payload = {"mode": args.mode, "vector": list(vec)}
    payload.update(result.to_json())
    _emit(payload, args.format)
    return EXIT_OK if result.ok else EXIT_FAIL


def cmd_link_analyze(args):
    K = _load_complex(args)
    K.f_vector(guard=args.guard_faces)  # trip the size guard before analysis
    d = K.dim + 1
    h = links.h_of(K)
    condition = complexes.check_link_condition(K)
    if not condition.ok:
        _emit(
            {
                "d": d,
                "link_condition": False,
                "violating_edges": [list(e) for e in condition.violations()],
            },
            args.format,
        )
        return EXIT_PRECONDITION
    report = links.triviality_diagnostics(K)
    identity_rows = []
    identities_ok = report.identities_ok and report.f1 == report.f1_formula
    for i in range(d + 1):
        lhs, rhs, ok = links.vertex_local_global_check(K, i)
        identity_rows.append({"kind": "vertex", "index": i, "lhs": lhs, "rhs": rhs, "ok": ok})
        identities_ok = identities_ok and ok
    for k in range(max(d - 1, 0)):
        lhs, rhs, ok = links.edge_local_global_check(K, k)
        identity_rows.append({"kind": "edge", "index": k, "lhs": lhs, "rhs": rhs, "ok": ok})
        identities_ok = identities_ok and ok
    contraction_checked = 0
    if report.f1 <= 200:
        for e in K.edges():
            _, _, ok = links.contraction_h_check(K, e)
            identities_ok = identities_ok and ok
            contraction_checked += 1
    interlacing = links.interlacing_bounds(K, verify_premise=False)
    payload = {
        "d": d,
        "h": list(h),
        "f1": report.f1,
        "f1_formula": report.f1_formula,
        "g": list(report.g),
        "identities": identity_rows,
        "contraction_edges_checked": contraction_checked,
        "premise_g_contract_nonneg": report.premise_verified,
        "interlacing_active": report.interlacing_active,
        "g1_linear": report.g1_linear,
        "interlacing": [
            {
                "k": r.k,
                "alpha": str(r.alpha),
                "beta": str(r.beta),
                "lower_ok": r.lower_ok,
                "upper_ok": r.upper_ok,
            }
            for r in interlacing.rows
        ],
        "rows": [
            {
                "k": r.k,
                "C_prev": r.c_prev,
                "C_k": r.c_k,
                "r_prev": str(r.r_prev),
                "r_k": str(r.r_k),
                "omega": r.omega_float,
                "bound_applicable": r.bound_applicable,
                "bound_ok": r.bound_ok,
                "trivial_by_m_vector": r.trivial_by_m_vector,
                "nontrivial_candidate": r.nontrivial_candidate,
                "skipped": r.skipped,
            }
            for r in report.rows
        ],
        "ok": identities_ok and report.ok and interlacing.ok,
    }
    _emit(payload, args.format)
    return EXIT_OK if payload["ok"] else EXIT_FAIL


def cmd_extend(args):
    prefix = _csv_ints(args.gamma)
    if args.strategy == "max":
        strategy = "max"
    elif args.strategy == "random":
        strategy = "random"
    elif args.strategy.startswith("fraction:"):
        strategy = ("fraction", Fraction(args.strategy.split(":", 1)[1]))
    elif args.strategy.startswith("given:"):
        strategy = ("given", _csv_ints(args.strategy.split(":", 1)[1]))
    else:
        raise RangeGuardError(f"unknown strategy {args.strategy!r}")
    result = realize.extend_gamma(prefix, args.d, args.mode, strategy, seed=args.seed)
    rows = [
        {
            "index": bound.index,
            "mode": bound.mode,
            "upper": None if bound.upper is None else bound.upper,
            "chosen": chosen,
            "slack": bound.slack,
            "unbounded": bound.unbounded,
        }
        for bound, chosen in result.steps
    ]
    payload = {
        "d": args.d,
        "mode": args.mode,
        "rows": rows,
        "gamma": list(result.gamma),
        "feasible": result.feasible,
        "failed_index": result.failed_index,
        "check_passes": result.check().ok if result.feasible else False,
    }
    _emit(payload, args.format)
    return EXIT_OK if result.feasible else EXIT_FAIL


def cmd_ortho(args):
    if args.ortho_cmd == "mu":
        ws = _scheme(args.scheme, args.N)
        mu = orthopath.mu_matrix(ws, args.N)
        payload = {
            "N": args.N,
            "entries": {
                f"mu[{r}][{k}]": str(mu[r][k])
                for r in range(args.N + 1)
                for k in range(r + 1)
            },
            "inverse_pair_ok": orthopath.inverse_pair_check(ws, args.N),
            "ratio_annotations": {
                f"{r},{s}": str(v)
                for (r, s), v in orthopath.mu_ratio_diagnostics(ws, args.N).items()
            },
        }
        _emit(payload, args.format)
        return EXIT_OK
    if args.ortho_cmd == "invert":
        z = tuple(Fraction(tok) for tok in args.z.split(","))
        ws = _scheme(args.scheme, len(z) - 1)
        out = orthopath.formal_h(z, ws)
        uni = orthopath.formal_unimodality_check(z, ws)
        payload = {
            "z": [str(v) for v in z],
            "q": [str(v) for v in out["q"]],
            "formal_h": [str(v) for v in out["h"]],
            "formal_g": [str(v) for v in out["g"]],
            "monotone": uni["monotone"],
            "printed_sufficient_condition": uni["printed_sufficient_condition"],
        }
        _emit(payload, args.format)
        return EXIT_OK
    if args.ortho_cmd == "covers":
        ws = _scheme(args.scheme, args.m)
        via_covers = orthopath.coefficient_via_covers(ws, args.m, args.r)
        family = orthopath.unitary_family(ws, args.m)
        direct = family[args.m][args.r]
        payload = {
            "m": args.m,
            "r": args.r,
            "coefficient_via_covers": str(via_covers),
            "coefficient_via_recursion": str(direct),
            "agree": via_covers == direct,
        }
        _emit(payload, args.format)
        return EXIT_OK if payload["agree"] else EXIT_FAIL
    if args.ortho_cmd == "gamma-dimers":
        h = _csv_ints(args.h)
        d = len(h) - 1
        via_covers = orthopath.gamma_via_covers(h, d)
        via_matrix = vectors.h_half_to_gamma(h[: d // 2 + 1], d)
        payload = {
            "h": list(h),
            "gamma": list(via_covers),
            "matrix_agree": via_covers == via_matrix,
        }
        _emit(payload, args.format)
        return EXIT_OK if payload["matrix_agree"] else EXIT_FAIL
    raise RangeGuardError(f"unknown ortho subcommand {args.ortho_cmd}")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser():
    top = argparse.ArgumentParser(
        prog="gammavec",
        description="Exact combinatorics of simplicial spheres and gamma vectors",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vectors", help="f/h/g/gamma transforms of a complex or vector")
    _add_input_flags(p, complex_source=True)
    p.add_argument("--h", help="comma-separated h-vector")
    p.add_argument("--f", help="comma-separated f-vector")
    p.add_argument("--g", help="comma-separated truncated g-vector (needs --d)")
    p.add_argument("--gamma", help="comma-separated gamma vector (needs --d)")
    p.add_argument("--d", type=int, help="ambient parameter for --g/--gamma")
    p.set_defaults(func=cmd_vectors)

    p = sub.add_parser("check", help="realizability checks")
    p.add_argument("mode", choices=("fvector", "cm", "sphere"))
    _add_input_flags(p)
    p.add_argument("--h", help="comma-separated h-vector")
    p.add_argument("--f", help="comma-separated f-vector")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("link", help="link-condition analysis")
    link_sub = p.add_subparsers(dest="link_cmd", required=True)
    pa = link_sub.add_parser("analyze", help="identities, inequalities, diagnostics")
    _add_input_flags(pa, complex_source=True)
    pa.set_defaults(func=cmd_link_analyze)

    p = sub.add_parser("extend", help="greedy gamma-vector extension")
    _add_input_flags(p)
    p.add_argument("--gamma", required=True, help="comma-separated prefix, gamma_0=1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=realize.MODES, default="sphere")
    p.add_argument("--strategy", default="max",
                   help="max | random | fraction:R | given:v1,v2,...")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("ortho", help="orthogonal polynomial / Motzkin tools")
    ortho_sub = p.add_subparsers(dest="ortho_cmd", required=True)
    pm = ortho_sub.add_parser("mu", help="Motzkin weight table")
    pm.add_argument("--N", type=int, required=True)
    pm.add_argument("--scheme", default="chebyshev", help="chebyshev | scheme JSON file")
    _add_input_flags(pm)
    pm.set_defaults(func=cmd_ortho)
    pi = ortho_sub.add_parser("invert", help="formal h from a generalized gamma z")
    pi.add_argument("--z", required=True, help="comma-separated rationals")
    pi.add_argument("--scheme", default="chebyshev")
    _add_input_flags(pi)
    pi.set_defaults(func=cmd_ortho)
    pc = ortho_sub.add_parser("covers", help="polynomial coefficient via cover sums")
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--r", type=int, required=True)
    pc.add_argument("--scheme", default="chebyshev")
    _add_input_flags(pc)
    pc.set_defaults(func=cmd_ortho)
    pg = ortho_sub.add_parser("gamma-dimers", help="gamma via monomer/dimer counting")
    pg.add_argument("--h", required=True)
    _add_input_flags(pg)
    pg.set_defaults(func=cmd_ortho)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except LinkConditionError as exc:
        print(json.dumps({"error": str(exc), "edge": list(exc.edge)}), file=sys.stderr)
        return EXIT_PRECONDITION
    except (NotReciprocalError, RangeGuardError, ValueError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


def entrypoint():
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
