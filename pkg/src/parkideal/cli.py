"""Command-line front end.

Exit codes: 0 success / suite passed, 1 verification failure, 2 usage,
parse or guard error.
"""

from __future__ import annotations

import argparse
import sys

from .exact_matrix import determinant
from .graph_enumeration import MAX_EDGES, EdgeGuardExceeded, tu_enumerate
from .monomial_ideal import (
    MAX_BOX,
    GuardExceeded,
    NotArtinianError,
    format_monomial,
    parse_ideal,
    std_count_enum,
    std_count_recursive,
    std_enumerate,
)
from .multigraph import (
    GraphFormatError,
    d_fold_product,
    degree,
    dumps_graph,
    laplacian_truncated,
    load_graph,
    signless_laplacian_truncated,
)
from .skeleton_ideals import one_skeleton, parking_ideal
from .verification import (
    SUITES,
    NotSubgraphError,
    SuiteConfig,
    check_equality,
    classify_subgraph_of_Ka1,
    run_suite,
)


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    verdict = check_equality(g)
    lines = [
        f"n: {g.n}",
        "degrees: " + " ".join(f"{i}:{degree(g, i)}" for i in range(g.n + 1)),
        f"det L~: {determinant(laplacian_truncated(g))}",
        f"det Q~: {verdict.det_q}",
        f"std count M_G: {std_count_recursive(parking_ideal(g))}",
        f"std count M_G^(1): {verdict.std_count}",
        "essential components:",
    ]
    for comp in verdict.per_component:
        vs = ",".join(map(str, comp.vertices))
        lines.append(f"  {{{vs}}}: dim {comp.std_count}, det {comp.det}")
    if one_skeleton(g).is_unit:
        lines.append("note: M_G^(1) is the unit ideal (a component has dimension 0)")
    rel = "equal" if verdict.equal else "strict"
    op = "=" if verdict.equal else ">"
    lines.append(f"verdict: {rel}, {verdict.std_count} {op} {verdict.det_q}")
    if args.format == "csv":
        text = "field,value\n" + "".join(
            f"{k},{v}\n"
            for k, v in [
                ("n", g.n),
                ("det_L", determinant(laplacian_truncated(g))),
                ("det_Q", verdict.det_q),
                ("std_count_M1", verdict.std_count),
                ("equal", verdict.equal),
            ]
        )
    else:
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0


def cmd_tu(args) -> int:
    g = load_graph(args.graph)
    rep = tu_enumerate(g, args.max_edges)
    det = determinant(signless_laplacian_truncated(g))
    _emit(args, rep.to_csv(det) if args.format == "csv" else rep.to_text(det) + "\n")
    return 0 if rep.weighted_sum == det else 1


def cmd_parking(args) -> int:
    g = load_graph(args.graph)
    pfs = std_enumerate(parking_ideal(g), args.max_box)
    if args.format == "csv":
        text = ",".join(f"a{i}" for i in range(1, g.n + 1)) + "\n"
        text += "".join(",".join(map(str, p)) + "\n" for p in pfs)
    else:
        text = "".join(" ".join(map(str, p)) + "\n" for p in pfs)
        text += f"# {len(pfs)} G-parking functions, det L~ = {determinant(laplacian_truncated(g))}\n"
    _emit(args, text)
    return 0


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    cls = classify_subgraph_of_Ka1(g)
    verdict = check_equality(g)
    lines = [f"predicted equal: {cls.equal_predicted}"]
    if cls.witness:
        lines.append(f"non-adjacent pair inside an essential component: {cls.witness}")
    if cls.zero_component:
        lines.append(f"zero-dimensional component: {cls.zero_component} (both sides 0)")
    lines.append(f"observed: {verdict.std_count} vs {verdict.det_q} ({'equal' if verdict.equal else 'strict'})")
    agree = cls.equal_predicted == verdict.equal
    lines.append("agreement: " + ("yes" if agree else "NO"))
    _emit(args, "\n".join(lines) + "\n")
    return 0 if agree else 1


def cmd_product(args) -> int:
    g1 = load_graph(args.graph1)
    g2 = load_graph(args.graph2)
    _emit(args, dumps_graph(d_fold_product(g1, g2, args.d)))
    return 0


def cmd_count(args) -> int:
    with open(args.ideal, encoding="utf-8") as fh:
        try:
            ideal = parse_ideal(fh.read())
        except ValueError as exc:
            raise UsageError(f"{args.ideal}: {exc}") from None
    rec = std_count_recursive(ideal)
    enum = std_count_enum(ideal, args.max_box)
    lines = [
        "generators: " + ", ".join(format_monomial(m) for m in ideal.gens),
        f"std count (recursive): {rec}",
        f"std count (enumeration): {enum}",
    ]
    _emit(args, "\n".join(lines) + "\n")
    return 0 if rec == enum else 1


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known suites: {', '.join(SUITES)}")
    cfg = SuiteConfig(
        seed=args.seed,
        samples=args.samples,
        n=args.n,
        a=args.a,
        threads=args.threads,
        max_edges=args.max_edges,
    )
    res = run_suite(args.suite, cfg)
    print(res.summary())
    out = args.out or f"{args.suite}-report.{'csv' if args.format == 'csv' else 'txt'}"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(res.to_csv() if args.format == "csv" else res.summary() + "\n")
    return 0 if res.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--max-edges", type=int, default=MAX_EDGES)
    common.add_argument("--max-box", type=int, default=MAX_BOX)
    common.add_argument("--out", default=None)
    common.add_argument("--format", choices=["csv", "text"], default="text")

    p = argparse.ArgumentParser(prog="parkideal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="determinants, counts and equality verdict")
    s.add_argument("graph")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("tu", parents=[common], help="spanning TU-subgraph census vs det Q~")
    s.add_argument("graph")
    s.set_defaults(func=cmd_tu)

    s = sub.add_parser("parking", parents=[common], help="list G-parking functions")
    s.add_argument("graph")
    s.set_defaults(func=cmd_parking)

    s = sub.add_parser("classify", parents=[common], help="classify a subgraph of K_(n+1)^(a,1)")
    s.add_argument("graph")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("product", parents=[common], help="d-fold product of two graphs")
    s.add_argument("graph1")
    s.add_argument("graph2")
    s.add_argument("--d", type=int, default=1)
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("count", parents=[common], help="standard monomials of an ideal file")
    s.add_argument("ideal")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help="one of: " + ", ".join(SUITES))
    s.add_argument("--samples", type=int, default=None)
    s.add_argument("--n", type=int, default=None)
    s.add_argument("--a", type=int, default=None)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (
        GraphFormatError,
        UsageError,
        GuardExceeded,
        EdgeGuardExceeded,
        NotArtinianError,
        NotSubgraphError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
