"""Command-line front end.

Exit codes: 0 success, 1 internal error, 2 usage or parse error, 3 refusal
because a size cap would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import quotient_analysis as qa
from .cones import Cone, ConeError, dual_cone
from .repdata import RepresentationError
from .rootsystem import RootSystem, RootSystemError, build_root_system, parse_weight
from .verify import SUITES, run_suite
from .weylgroup import (
    DEFAULT_MAX_ORDER,
    WeylOrderError,
    enumerate_weyl,
    min_length_satisfying,
    minimal_coset_reps,
)

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _frac(x) -> str:
    return str(Fraction(x))


def _vec(v) -> list[str]:
    return [_frac(x) for x in v]


def _root_system(text: str) -> RootSystem:
    return build_root_system(text)


def _weight(rs: RootSystem, text: str | None, what: str = "--weight"):
    if text is None or not text.strip():
        raise UsageError(f"{what} is required")
    coords = parse_weight(text)
    if len(coords) != rs.rank:
        raise UsageError(f"{what} needs {rs.rank} coordinates, got {len(coords)}")
    return coords


def _weight_list(rs: RootSystem, text: str | None, what: str) -> list[tuple]:
    if text is None or not text.strip():
        raise UsageError(f"{what} needs at least one weight")
    return [_weight(rs, part, what) for part in text.split(":")]


def _nodes(rs: RootSystem, text: str | None) -> list[int]:
    if text is None or not text.strip():
        return []
    try:
        nodes = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse node list {text!r}") from exc
    for n in nodes:
        rs.check_node(n)
    return nodes


# ---------------------------------------------------------------------------
# text rendering


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                           (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            lines.append(f"{pad}- {_inline(v)}" if not isinstance(v, dict) else f"{pad}-\n{_text(v, indent + 1)}")
    else:
        lines.append(f"{pad}{_inline(obj)}")
    return "\n".join(lines)


def _inline(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "(" + ", ".join(_inline(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()) + "}"
    if v is None:
        return "none"
    return str(v)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(_text(payload))


def _emit_verify(payload: dict) -> None:
    for r in payload["suites"]:
        status = "PASS" if r["passed"] else "FAIL"
        print(f"{r['name']}: {r['checks']} checks, {r['failures']} failures -> {status}")
        for f in r["first_failures"]:
            print(f"  {f}")
    print("all passed" if payload["passed"] else "some suites failed")


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> dict:
    rs = _root_system(args.type)
    gens = _weight_list(rs, args.gens, "--gens")
    rep = qa.s_variety_report(rs, gens)
    return {"type": str(rs), **rep.to_json()}


def cmd_hv(args) -> dict:
    rs = _root_system(args.type)
    lam = _weight(rs, args.weight)
    out = {"type": str(rs), **qa.hv_report(rs, lam).to_json()}
    if args.witness:
        out["nullcone_witness"] = qa.nullcone_codim2_witness(rs, lam).to_json()
    return out


def cmd_sparse(args) -> dict:
    rs = _root_system(args.type)
    out: dict = {"type": str(rs)}
    if args.nodes is not None:
        res = qa.is_sparse(rs, _nodes(rs, args.nodes))
        out["nodes"] = sorted(_nodes(rs, args.nodes))
        out["sparse"] = res.sparse
        out["witness"] = res.witness.to_json() if res.witness else None
    if args.list or args.nodes is None:
        out["sparse_sets"] = [sorted(M.nodes) for M in qa.enumerate_sparse_sets(rs)]
    return out


def cmd_hm(args) -> dict:
    rs = _root_system(args.type)
    tau = _weight(rs, args.coweight, "--coweight")
    v = qa.hm_verdict(rs, tau)
    cone = qa.nonsimple_root_cone(rs, "coweight")
    return {"type": str(rs), "coweight": _vec(tau), **v.to_json(),
            "in_relative_interior": cone.interior_contains(tau)}


def cmd_cofree(args) -> dict:
    rs = _root_system(args.type)
    lam = _weight(rs, args.weight)
    v = qa.classify_cofree(rs, lam, convention=args.convention)
    return {"type": str(rs), "weight": _vec(lam), "convention": args.convention, **v.to_json()}


def cmd_contraction(args) -> dict:
    rs = _root_system(args.type)
    ws = _weight_list(rs, args.weights, "--weights")
    v = qa.check_contraction_hypotheses(rs, ws)
    return {"type": str(rs), "weights": [_vec(w) for w in ws], **v.to_json()}


def cmd_roots(args) -> dict:
    rs = _root_system(args.type)
    return {
        "type": str(rs),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "cartan_inverse": [_vec(row) for row in rs.cartan_inv],
        "bilinear_form": [_vec(row) for row in rs.bilinear_form],
        "positive_root_count": len(rs.positive_roots),
        "positive_roots": [list(c) for c in rs.positive_roots],
        "weyl_order": rs.weyl_order(),
        "half_sum_coroots": _vec(rs.half_sum_coroots),
    }


def cmd_weyl(args) -> dict:
    rs = _root_system(args.type)
    cap = args.max_weyl_order
    out: dict = {"type": str(rs), "order": rs.weyl_order()}
    if args.cosets is not None:
        I = _nodes(rs, args.cosets)
        reps = minimal_coset_reps(rs, I, cap)
        out["cosets"] = {"subset": sorted(I), "count": len(reps),
                         "words": [list(w.word) for w in reps.reps]}
    if args.min_length is not None:
        M = _nodes(rs, args.min_length)
        out["min_length"] = {"M": sorted(M), "value": min_length_satisfying(rs, M, cap),
                             "sparse": qa.is_sparse(rs, M).sparse}
    if args.list:
        elems = enumerate_weyl(rs, cap)
        out["elements"] = [list(w.word) for w in elems]
    if args.cosets is None and args.min_length is None and not args.list:
        elems = enumerate_weyl(rs, cap)
        lengths: dict[int, int] = {}
        for w in elems:
            lengths[w.length] = lengths.get(w.length, 0) + 1
        out["length_distribution"] = {str(k): lengths[k] for k in sorted(lengths)}
    return out


def cmd_cone(args) -> dict:
    vecs = [parse_weight(p) for p in args.gens.split(":")] if args.gens and args.gens.strip() else []
    if not vecs:
        raise UsageError("--gens needs at least one vector")
    dims = {len(v) for v in vecs}
    if len(dims) != 1:
        raise UsageError("generators have different lengths")
    dim = dims.pop()
    rs = None
    space = None
    if args.type:
        rs = _root_system(args.type)
        if rs.rank != dim:
            raise UsageError(f"{rs} has rank {rs.rank}, vectors have length {dim}")
        space = args.space
    c = Cone(dim, vecs, space)
    out = {"ambient_dim": dim, "space": space, "dim": c.dim, "rays": [list(r) for r in c.rays],
           "lineality": [list(x) for x in c.lineality], "facets": [list(f) for f in c.facets],
           "equations": [list(e) for e in c.equations]}
    if args.dual:
        d = dual_cone(c, rs)
        out["dual"] = {"space": d.space, "rays": [list(r) for r in d.rays],
                       "lineality": [list(x) for x in d.lineality]}
    if args.contains:
        x = parse_weight(args.contains)
        if len(x) != dim:
            raise UsageError("--contains vector has the wrong length")
        out["contains"] = c.contains(x)
        out["interior_contains"] = c.interior_contains(x)
    return out


def cmd_verify(args) -> dict:
    if args.list:
        return {"suites": list(SUITES)}
    if not args.suite:
        raise UsageError("name a suite (or 'all'); see --list")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; known: {', '.join(SUITES)}")
    results = [run_suite(n) for n in names]
    return {
        "suites": [{"name": r.name, "checks": r.checks, "failures": len(r.failures),
                    "passed": r.passed, "first_failures": r.failures[:5]} for r in results],
        "passed": all(r.passed for r in results),
    }


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="horoquot", description="U'-quotients of horospherical varieties")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-weyl-order", type=int, default=DEFAULT_MAX_ORDER)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="polynomiality/equidimensionality of C(S)//U'")
    s.add_argument("type")
    s.add_argument("--gens", required=True, help="weights separated by ':', e.g. 1,0,0:0,0,1")

    s = sub.add_parser("hv", parents=[common], help="HV-variety dimension formulas")
    s.add_argument("type")
    s.add_argument("--weight", required=True)
    s.add_argument("--witness", action="store_true", help="add the codimension-2 null-cone witness")

    s = sub.add_parser("sparse", parents=[common], help="sparse node sets")
    s.add_argument("type")
    s.add_argument("--nodes", help="test one set, e.g. 1,3")
    s.add_argument("--list", action="store_true", help="list every sparse set")

    s = sub.add_parser("hm", parents=[common], help="admissibility of a one-parameter subgroup")
    s.add_argument("type")
    s.add_argument("--coweight", required=True, help="fundamental-coweight coordinates")

    s = sub.add_parser("cofree", parents=[common], help="is R(lambda) U'-cofree?")
    s.add_argument("type")
    s.add_argument("--weight", required=True)
    s.add_argument("--convention", choices=("bourbaki", "vo"), default="bourbaki")

    s = sub.add_parser("contraction", parents=[common], help="check the contraction hypotheses")
    s.add_argument("type")
    s.add_argument("--weights", required=True)

    s = sub.add_parser("roots", parents=[common], help="Cartan data and positive roots")
    s.add_argument("type")

    s = sub.add_parser("weyl", parents=[common], help="Weyl group data")
    s.add_argument("type")
    s.add_argument("--cosets", help="node set I for minimal coset representatives")
    s.add_argument("--min-length", help="node set M for the minimal-length scan")
    s.add_argument("--list", action="store_true", help="list reduced words of all elements")

    s = sub.add_parser("cone", parents=[common], help="double description of a cone")
    s.add_argument("--gens", required=True)
    s.add_argument("--type", help="root system, to tag the vectors and dualize with its pairing")
    s.add_argument("--space", choices=("weight", "coweight"), default="weight")
    s.add_argument("--dual", action="store_true")
    s.add_argument("--contains", help="vector to test for membership")

    s = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    s.add_argument("suite", nargs="?")
    s.add_argument("--list", action="store_true")
    return p


COMMANDS = {
    "analyze": cmd_analyze, "hv": cmd_hv, "sparse": cmd_sparse, "hm": cmd_hm,
    "cofree": cmd_cofree, "contraction": cmd_contraction, "roots": cmd_roots,
    "weyl": cmd_weyl, "cone": cmd_cone, "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload = COMMANDS[args.command](args)
    except (UsageError, RootSystemError, RepresentationError, ConeError, qa.AnalysisError,
            qa.HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WeylOrderError, qa.ResourceLimitError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.command == "verify" and "passed" in payload and args.format == "text":
        _emit_verify(payload)
    else:
        _emit(payload, args.format)
    if args.command == "verify" and "passed" in payload and not payload["passed"]:
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
