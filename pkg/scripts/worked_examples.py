"""Recompute the small worked examples: the two-component graph, the 4-cycle,
complete multigraphs and a d-fold product."""

from __future__ import annotations

from pathlib import Path

from parkideal.monomial_ideal import format_ideal
from parkideal.multigraph import Multigraph, complete_multigraph, d_fold_product, load_graph
from parkideal.skeleton_ideals import one_skeleton
from parkideal.verification import check_equality

DATA = Path(__file__).resolve().parent.parent / "data"


def report(name: str, g: Multigraph) -> None:
    v = check_equality(g)
    comps = ", ".join(f"{c.vertices}: {c.std_count}/{c.det}" for c in v.per_component)
    rel = "=" if v.equal else ">"
    print(f"{name}: {v.std_count} {rel} {v.det_q}   [{comps}]")


def main() -> None:
    report("two_components", load_graph(DATA / "two_components.json"))
    report("4-cycle", Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    for n in range(1, 5):
        for a, b in [(1, 1), (2, 1), (3, 2)]:
            report(f"K_{n + 1}^({a},{b})", complete_multigraph(n, a, b))
    g1, g2 = load_graph(DATA / "product_g1.json"), load_graph(DATA / "product_g2.json")
    prod = d_fold_product(g1, g2, 1)
    report("product", prod)
    print("M^(1) of the product:")
    print(format_ideal(one_skeleton(prod)))


if __name__ == "__main__":
    main()
