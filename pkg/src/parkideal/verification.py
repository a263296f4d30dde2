"""Checks that compare dim_K(R/M_G^(1)) with det of the truncated signless
Laplacian, classifiers for subgraphs of K_{n+1}^{a,1}, and randomized or
exhaustive suites driving them.

Nothing here proves anything; the suites corroborate or falsify at desk scale.
"""

from __future__ import annotations

import csv
import hashlib
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod
from typing import Callable, Sequence

from .exact_matrix import (
    Block,
    build_block_join,
    build_uniform_offdiag,
    determinant,
    is_positive_semidefinite,
)
from .graph_enumeration import MAX_EDGES, parking_functions, spanning_trees_count, tu_enumerate
from .monomial_ideal import (
    MonomialIdeal,
    add_pure_power,
    colon_pure_power,
    format_monomial,
    std_count,
    std_count_enum,
    std_count_recursive,
)
from .multigraph import (
    Multigraph,
    essential_components,
    is_essentially_connected,
    signless_laplacian_truncated,
)
from .skeleton_ideals import matrix_ideal, one_skeleton


class NotSubgraphError(ValueError):
    """Input is not a subgraph of any K_{n+1}^{a,1}."""


@dataclass
class ComponentVerdict:
    vertices: tuple[int, ...]
    std_count: int
    det: int

    @property
    def equal(self) -> bool:
        return self.std_count == self.det


@dataclass
class EqualityVerdict:
    std_count: int
    det_q: int
    per_component: list[ComponentVerdict]
    generators: tuple[tuple[int, ...], ...] = ()

    @property
    def equal(self) -> bool:
        return self.std_count == self.det_q


def check_equality(g: Multigraph, method: str = "recursive") -> EqualityVerdict:
    """Both sides of dim R/M_G^(1) = det Q~_G, in total and per essential component."""
    ideal = one_skeleton(g)
    parts = []
    for comp in essential_components(g):
        h = comp.graph
        sub = one_skeleton(h)
        parts.append(
            ComponentVerdict(
                comp.vertices,
                std_count(sub, method),
                determinant(signless_laplacian_truncated(h)),
            )
        )
    return EqualityVerdict(
        std_count(ideal, method),
        determinant(signless_laplacian_truncated(g)),
        parts,
        ideal.gens,
    )


# -- classification of subgraphs of K_{n+1}^{a,1} ---------------------------

@dataclass
class Classification:
    equal_predicted: bool
    witness: tuple[int, int] | None = None  # first non-adjacent pair, original labels
    zero_component: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.equal_predicted


def zero_components(g: Multigraph) -> list[tuple[int, ...]]:
    """Essential components whose 1-skeleton ideal is the unit ideal (dimension 0).

    These are a vertex of degree 0, or a pair joined only to each other.
    """
    out = []
    for comp in essential_components(g):
        h = comp.graph
        if one_skeleton(h).is_unit:
            out.append(comp.vertices)
    return out


def classify_subgraph_of_Ka1(g: Multigraph, literal: bool = False) -> Classification:
    """Predict equality for a subgraph of K_{n+1}^{a,1}: every essential component
    must induce a clique on its non-root vertices (rooted edges are free).

    A component with a zero-dimensional quotient makes both sides 0, so
    equality then holds whatever the other components look like; the
    prediction accounts for that unless ``literal`` is set.
    """
    for u, v, mult in g.inner_edges():
        if mult > 1:
            raise NotSubgraphError(
                f"inner pair ({u}, {v}) has multiplicity {mult}; not a subgraph of K_(n+1)^(a,1)"
            )
    witness = None
    for comp in essential_components(g):
        for u, v in combinations(comp.vertices, 2):
            if g.adj[u][v] == 0:
                witness = (u, v)
                break
        if witness:
            break
    if witness is None:
        return Classification(True)
    if not literal:
        zeros = zero_components(g)
        if zeros:
            return Classification(True, witness, zeros[0])
    return Classification(False, witness)


# -- normal form of an essentially connected graph ---------------------------

@dataclass
class NormalForm:
    order: tuple[int, ...]  # original labels, clique first
    clique_size: int
    b: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def cross(self) -> list[list[int]]:
        """cross[i][j]: entry between clique vertex i and outside vertex j."""
        k = self.clique_size
        return [list(row[k:]) for row in self.matrix[:k]]

    def cross_uniform(self) -> bool:
        cols = zip(*self.cross)
        return all(len(set(col)) == 1 for col in cols)


def normal_form(g: Multigraph) -> NormalForm:
    """Greedy maximal clique at the largest inner multiplicity, then the rest.

    Ties go to the smallest original labels.
    """
    n = g.n
    if n < 2:
        raise ValueError("normal form needs at least two non-root vertices")
    pairs = list(combinations(range(1, n + 1), 2))
    b = max(g.adj[u][v] for u, v in pairs)
    u, v = next(p for p in pairs if g.adj[p[0]][p[1]] == b)
    clique = [u, v]
    grown = True
    while grown:
        grown = False
        for w in range(1, n + 1):
            if w not in clique and all(g.adj[w][c] == b for c in clique):
                clique.append(w)
                grown = True
                break
    rest = [w for w in range(1, n + 1) if w not in clique]
    order = tuple(clique + rest)
    q = signless_laplacian_truncated(g)
    mat = tuple(tuple(q[i - 1][j - 1] for j in order) for i in order)
    return NormalForm(order, len(clique), b, mat)


def normal_form_conditions(nf: NormalForm) -> list[str]:
    """Names of the structural conditions the normal-form matrix fails (empty if all hold)."""
    H, k, b = nf.matrix, nf.clique_size, nf.b
    t = len(H)
    failed = []
    if not (b >= 1 and all(H[i][i] >= b for i in range(k))):
        failed.append("alpha_i >= b >= 1")
    for i in range(k):
        for j in range(k, t):
            if not (0 <= H[i][j] <= b and H[j][j] >= 1 and H[j][j] >= H[i][j]):
                failed.append(f"cross entry ({i}, {j}) bounds")
    for i in range(k, t):
        for j in range(k, t):
            if i != j and not (H[i][j] <= b and H[i][j] <= H[i][i]):
                failed.append(f"outer entry ({i}, {j}) bounds")
    for p, s in combinations(range(t), 2):
        if H[p][p] == H[p][s] == H[s][s]:
            failed.append(f"pair ({p}, {s}) isolated")
    for j in range(k, t):
        if all(H[i][j] == b for i in range(k)):
            failed.append(f"column {j} extends the clique")
    return failed


@dataclass
class CrossEntryCheck:
    applicable: bool
    uniform: bool
    strict: bool


def check_cross_entries(g: Multigraph) -> CrossEntryCheck:
    """Necessary condition for equality on an essentially connected graph in
    normal form: non-uniform cross entries in any outside column force
    dim > det. Applicable only when the normal-form conditions all hold and
    some vertex lies outside the clique."""
    if g.n < 2 or not is_essentially_connected(g):
        return CrossEntryCheck(False, True, False)
    nf = normal_form(g)
    if nf.clique_size == g.n or normal_form_conditions(nf):
        return CrossEntryCheck(False, True, False)
    verdict = check_equality(g)
    return CrossEntryCheck(True, nf.cross_uniform(), verdict.std_count > verdict.det_q)


# -- matrix families ---------------------------------------------------------

def matrix_sides(H) -> tuple[int, int]:
    return std_count_recursive(matrix_ideal(H)), determinant(H)


def verify_theorem_2_2(diag: Sequence[int], b: int) -> bool:
    count, det = matrix_sides(build_uniform_offdiag(diag, b))
    return count == det


def verify_theorem_2_3(blocks: Sequence[Block], cross: Sequence[int]) -> bool:
    count, det = matrix_sides(build_block_join(blocks, cross))
    return count == det


# -- instance generators -----------------------------------------------------

def random_multigraph(rng: random.Random, n: int, max_mult: int, max_edges: int | None = None) -> Multigraph:
    while True:
        edges = [
            (u, v, rng.randint(0, max_mult))
            for u, v in combinations(range(n + 1), 2)
        ]
        g = Multigraph.from_edges(n, edges)
        if max_edges is None or g.num_edges <= max_edges:
            return g


def random_gn(rng: random.Random, n: int, max_entry: int) -> tuple[tuple[int, ...], ...]:
    diag = [rng.randint(0, max_entry) for _ in range(n)]
    H = [[0] * n for _ in range(n)]
    for i in range(n):
        H[i][i] = diag[i]
        for j in range(i):
            H[i][j] = H[j][i] = rng.randint(0, min(diag[i], diag[j]))
    return tuple(map(tuple, H))


def random_psd_gn(rng: random.Random, n: int, max_entry: int) -> tuple[tuple[int, ...], ...]:
    while True:
        H = random_gn(rng, n, max_entry)
        if is_positive_semidefinite(H):
            return H


def random_uniform_instance(rng: random.Random, max_n: int = 5, max_value: int = 4) -> tuple[list[int], int]:
    n = rng.randint(1, max_n)
    b = rng.randint(0, max_value)
    return [rng.randint(b, max_value) for _ in range(n)], b


def random_block_join_instance(
    rng: random.Random, max_n: int = 5, max_value: int = 4
) -> tuple[list[Block], list[int]]:
    total = rng.randint(1, max_n)
    sizes = []
    while total:
        s = rng.randint(1, total)
        sizes.append(s)
        total -= s
    r = len(sizes)
    cross = sorted((rng.randint(0, max_value) for _ in range(r - 1)), reverse=True)
    blocks = []
    for i, s in enumerate(sizes):
        floor = 0 if r == 1 else (cross[0] if i == 0 else cross[i - 1])
        b = rng.randint(floor, max_value)
        lo = b if s > 1 else floor
        blocks.append(Block(tuple(rng.randint(lo, max_value) for _ in range(s)), b if s > 1 else None))
    return blocks, cross


def random_artinian_ideal(rng: random.Random, max_vars: int = 4, max_exp: int = 5) -> MonomialIdeal:
    n = rng.randint(1, max_vars)
    gens = [tuple(rng.randint(1, max_exp) if k == i else 0 for k in range(n)) for i in range(n)]
    for _ in range(rng.randint(0, 6)):
        gens.append(tuple(rng.randint(0, max_exp) for _ in range(n)))
    return MonomialIdeal(n, tuple(gens))


# -- scans -------------------------------------------------------------------

def fingerprint(g: Multigraph) -> str:
    """Sorted degree sequence plus a hash of the adjacency matrix.

    Identifies labeled graphs only; isomorphic relabelings get different
    fingerprints.
    """
    degs = "".join(f"{sum(r)}." for r in sorted(g.adj, key=sum))
    digest = hashlib.sha1(repr(g.adj).encode()).hexdigest()[:12]
    return f"{degs}{digest}"


def edge_hash(g: Multigraph) -> str:
    return hashlib.sha1(repr(g.edges()).encode()).hexdigest()[:12]


@dataclass
class ScanRow:
    fingerprint: str
    n: int
    edge_hash: str
    std_count: int
    det: int
    equal: bool
    classified: bool
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    generators: list[str] = field(default_factory=list)
    components: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)

    @property
    def agreement(self) -> bool:
        return self.equal == self.classified


@dataclass
class ScanReport:
    n: int
    a: int
    mode: str
    rows: list[ScanRow]
    partial: bool = False

    @property
    def disagreements(self) -> list[ScanRow]:
        return [r for r in self.rows if not r.agreement]

    def summary(self) -> str:
        eq = sum(r.equal for r in self.rows)
        lines = [
            f"scan n={self.n} a={self.a} mode={self.mode}",
            f"graphs: {len(self.rows)}{' (PARTIAL: budget exceeded)' if self.partial else ''}",
            f"equal: {eq}  strict: {len(self.rows) - eq}",
            f"disagreements: {len(self.disagreements)}",
        ]
        for r in self.disagreements:
            lines.append(
                f"  COUNTEREXAMPLE edges={r.edges} std={r.std_count} det={r.det} "
                f"classified={r.classified} components={r.components} gens={r.generators}"
            )
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fingerprint", "n", "edge_hash", "std_count", "det", "equal", "classified", "agreement"])
        for r in self.rows:
            w.writerow([r.fingerprint, r.n, r.edge_hash, r.std_count, r.det, r.equal, r.classified, r.agreement])
        return buf.getvalue()


def scan_row(g: Multigraph) -> ScanRow:
    v = check_equality(g)
    cls = classify_subgraph_of_Ka1(g)
    return ScanRow(
        fingerprint(g),
        g.n,
        edge_hash(g),
        v.std_count,
        v.det_q,
        v.equal,
        bool(cls),
        g.edges(),
        [format_monomial(m) for m in v.generators],
        [(c.vertices, c.std_count, c.det) for c in v.per_component],
    )


def subgraphs_of_Ka1(n: int, a: int):
    """Every subgraph of K_{n+1}^{a,1}: inner edge subsets times rooted multiplicities."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        inner = [(u, v, 1) for k, (u, v) in enumerate(pairs) if mask >> k & 1]
        for rooted in product(range(a + 1), repeat=n):
            yield Multigraph.from_edges(n, inner + [(0, i + 1, m) for i, m in enumerate(rooted)])


def random_subgraph_of_Ka1(rng: random.Random, n: int, a: int) -> Multigraph:
    edges = [(u, v, rng.randint(0, 1)) for u, v in combinations(range(1, n + 1), 2)]
    edges += [(0, i, rng.randint(0, a)) for i in range(1, n + 1)]
    return Multigraph.from_edges(n, edges)


def scan_family(
    n: int,
    a: int,
    mode: str = "exhaustive",
    budget: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> ScanReport:
    if mode == "exhaustive":
        if n > 5:
            raise ValueError("exhaustive scans are limited to n <= 5")
        graphs = []
        partial = False
        seen = set()
        for g in subgraphs_of_Ka1(n, a):
            if budget is not None and len(graphs) >= budget:
                partial = True
                break
            fp = fingerprint(g)
            if fp not in seen:
                seen.add(fp)
                graphs.append(g)
    elif mode == "random":
        if budget is None:
            raise ValueError("random scans need a budget")
        rng = random.Random(seed)
        graphs, seen = [], set()
        for _ in range(50 * budget):
            if len(graphs) >= budget:
                break
            g = random_subgraph_of_Ka1(rng, n, a)
            fp = fingerprint(g)
            if fp not in seen:
                seen.add(fp)
                graphs.append(g)
        partial = len(graphs) < budget
    else:
        raise ValueError(f"unknown scan mode {mode!r}")

    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(scan_row, graphs, chunksize=64))
    else:
        rows = [scan_row(g) for g in graphs]
    return ScanReport(n, a, mode, rows, partial)


# -- suites ------------------------------------------------------------------

@dataclass
class SuiteConfig:
    seed: int = 0
    samples: int | None = None
    n: int | None = None
    a: int | None = None
    threads: int = 1
    max_edges: int = MAX_EDGES


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    csv_rows: list[list] = field(default_factory=list)
    csv_header: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def summary(self) -> str:
        head = f"{self.name}: {'PASS' if self.passed else 'FAIL'} ({self.checked} checked, {len(self.failures)} failures)"
        return "\n".join([head, *self.notes, *("  " + f for f in self.failures[:20])])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.csv_header)
        w.writerows(self.csv_rows)
        return buf.getvalue()


def _result(name, rows, header, failures, notes=()):
    return SuiteResult(name, not failures, len(rows), failures, rows, header, list(notes))


def suite_thm11(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    for _ in range(cfg.samples or 300):
        H = random_psd_gn(rng, rng.randint(1, cfg.n or 4), 5)
        count, det = matrix_sides(H)
        rows.append([repr(H), count, det, count >= det])
        if count < det:
            failures.append(f"H={H}: dim {count} < det {det}")
    return _result("thm1.1", rows, ["H", "std_count", "det", "ok"], failures)


def suite_thm22(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    n = cfg.n or 5
    cases = [([4] * 3, 4), ([2, 2], 2)]
    cases += [random_uniform_instance(rng, n, 4) for _ in range(cfg.samples or 200)]
    rows, failures = [], []
    for diag, b in cases:
        count, det = matrix_sides(build_uniform_offdiag(diag, b))
        rows.append([repr(list(diag)), b, count, det, count == det])
        if count != det:
            failures.append(f"diag={diag} b={b}: dim {count} != det {det}")
    return _result("thm2.2", rows, ["diag", "b", "std_count", "det", "equal"], failures)


def suite_thm23(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    n = cfg.n or 5
    cases = [([Block((3, 3), 3), Block((3,), None)], [3])]  # all-b degenerate: 0 = 0
    cases += [random_block_join_instance(rng, n, 4) for _ in range(cfg.samples or 200)]
    rows, failures = [], []
    for blocks, cross in cases:
        H = build_block_join(blocks, cross)
        count, det = matrix_sides(H)
        desc = ";".join(f"{list(b.diag)}/{b.b}" for b in blocks)
        rows.append([desc, repr(cross), count, det, count == det])
        if count != det:
            failures.append(f"blocks={desc} cross={cross}: dim {count} != det {det}")
    return _result("thm2.3", rows, ["blocks", "cross", "std_count", "det", "equal"], failures)


def suite_lemma34(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    for _ in range(cfg.samples or 200):
        g = random_multigraph(rng, rng.randint(1, cfg.n or 5), 2)
        v = check_equality(g)
        ps = prod(c.std_count for c in v.per_component)
        pd = prod(c.det for c in v.per_component)
        # the per-component iff needs every factor nonzero; a zero factor forces 0 = 0
        predicted = all(c.equal for c in v.per_component) or any(c.std_count == 0 for c in v.per_component)
        ok = ps == v.std_count and pd == v.det_q and v.equal == predicted
        rows.append([repr(g.edges()), v.std_count, ps, v.det_q, pd, ok])
        if not ok:
            failures.append(f"edges={g.edges()}: totals ({v.std_count}, {v.det_q}) vs products ({ps}, {pd})")
    return _result("lemma3.4", rows, ["edges", "std_count", "prod_std", "det", "prod_det", "ok"], failures)


def suite_prop311(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    graphs = list(simple_connected_graphs(cfg.n or 4))
    graphs += [
        random_multigraph(rng, rng.randint(1, 5), 3, max_edges=min(14, cfg.max_edges))
        for _ in range(cfg.samples or 100)
    ]
    for g in graphs:
        rep = tu_enumerate(g, cfg.max_edges)
        det = determinant(signless_laplacian_truncated(g))
        rows.append([repr(g.edges()), repr(rep.census), rep.weighted_sum, det, rep.weighted_sum == det])
        if rep.weighted_sum != det:
            failures.append(f"edges={g.edges()}: weighted {rep.weighted_sum} != det {det}")
    return _result("prop3.11", rows, ["edges", "census", "weighted_sum", "det", "match"], failures)


def suite_thm39_scan(cfg: SuiteConfig) -> SuiteResult:
    if cfg.n is not None:
        plan = [(cfg.n, cfg.a or 1, "exhaustive", None)]
    else:
        plan = [(3, 1, "exhaustive", None), (3, 2, "exhaustive", None),
                (4, 1, "exhaustive", None), (4, 2, "exhaustive", None),
                (5, 1, "random", cfg.samples or 500)]
    rows, failures, notes = [], [], []
    for n, a, mode, budget in plan:
        rep = scan_family(n, a, mode, budget, cfg.seed, cfg.threads)
        notes.append(rep.summary())
        for r in rep.rows:
            rows.append([n, a, r.fingerprint, r.edge_hash, r.std_count, r.det, r.equal, r.classified, r.agreement])
        failures += [f"n={n} a={a} edges={r.edges} std={r.std_count} det={r.det}" for r in rep.disagreements]
        if rep.partial:
            failures.append(f"n={n} a={a}: partial scan")
    header = ["n", "a", "fingerprint", "edge_hash", "std_count", "det", "equal", "classified", "agreement"]
    return _result("thm3.9-scan", rows, header, failures, notes)


def suite_thm38(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    applicable = 0
    for _ in range(cfg.samples or 300):
        g = random_multigraph(rng, rng.randint(3, cfg.n or 5), 2)
        chk = check_cross_entries(g)
        if not chk.applicable:
            continue
        applicable += 1
        rows.append([repr(g.edges()), chk.uniform, chk.strict])
        if not chk.uniform and not chk.strict:
            failures.append(f"edges={g.edges()}: non-uniform cross entries but equality holds")
    return _result("thm3.8", rows, ["edges", "cross_uniform", "strict"], failures,
                   [f"applicable graphs: {applicable}"])


def suite_matrix_tree(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    for _ in range(cfg.samples or 200):
        g = random_multigraph(rng, rng.randint(1, cfg.n or 5), 3)
        pf = len(parking_functions(g))
        trees = spanning_trees_count(g)
        rows.append([repr(g.edges()), pf, trees, pf == trees])
        if pf != trees:
            failures.append(f"edges={g.edges()}: {pf} parking functions vs {trees} trees")
    return _result("matrix-tree", rows, ["edges", "parking_functions", "det_L", "equal"], failures)


def suite_oracle(cfg: SuiteConfig) -> SuiteResult:
    rng = random.Random(cfg.seed)
    rows, failures = [], []
    for _ in range(cfg.samples or 1000):
        I = random_artinian_ideal(rng)
        a, b = std_count_enum(I), std_count_recursive(I)
        rows.append(["count", str(I), a, b, a == b])
        if a != b:
            failures.append(f"{I}: enum {a} != recursive {b}")
    for _ in range((cfg.samples or 1000) // 2):
        I = random_artinian_ideal(rng)
        i = rng.randrange(I.nvars)
        r = rng.randint(1, 6)
        whole = std_count_enum(I)
        split = std_count_enum(colon_pure_power(I, i, r)) + std_count_enum(add_pure_power(I, i, r))
        rows.append([f"ses x{i + 1}^{r}", str(I), whole, split, whole == split])
        if whole != split:
            failures.append(f"{I} at x{i + 1}^{r}: {whole} != {split}")
    return _result("oracle", rows, ["kind", "ideal", "lhs", "rhs", "equal"], failures)


SUITES: dict[str, Callable[[SuiteConfig], SuiteResult]] = {
    "thm1.1": suite_thm11,
    "thm2.2": suite_thm22,
    "thm2.3": suite_thm23,
    "lemma3.4": suite_lemma34,
    "prop3.11": suite_prop311,
    "thm3.9-scan": suite_thm39_scan,
    "thm3.8": suite_thm38,
    "matrix-tree": suite_matrix_tree,
    "oracle": suite_oracle,
}


def run_suite(name: str, cfg: SuiteConfig | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known suites: {', '.join(SUITES)}")
    return SUITES[name](cfg or SuiteConfig())


def simple_connected_graphs(n: int):
    """All connected simple graphs on {0, ..., n} (labeled)."""
    pairs = list(combinations(range(n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for k, p in enumerate(pairs) if mask >> k & 1]
        if len(edges) < n:
            continue
        g = Multigraph.from_edges(n, edges)
        if _connected(g):
            yield g


def _connected(g: Multigraph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(g.n + 1):
            if g.adj[u][v] and v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n + 1
