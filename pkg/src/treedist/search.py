"""Conjecture verification over enumerated trees and counterexample searches.

Three conjectured inequalities between tree distance measures are checked
pairwise over complete isomorphism-class enumerations:

    1:  d_W  >= d_R      2:  d_E  >= d_Ig      3:  d_R  >= d_If1

Every verdict routes through the sigma-free reduction (compare absolute
index gaps), so no sigma choice can change an outcome.  The searches below
hunt for the structured collisions that refute the conjectures: equal-Wiener
tree pairs, equal-Randic caterpillar spine quadruples, and numerically
equienergetic non-cospectral tree pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph_core import (
    CaterpillarSpec,
    GraphError,
    Tree,
    bfs_distances,
    build_caterpillar,
    enumerate_trees,
)
from .indices import ifk_entropy, randic, wiener, wiener_edge_cut
from .spectral import Spectrum, TAU_ZERO, eigenvalues, is_cospectral

CONJECTURE_INDEX_PAIRS = {1: ("W", "R"), 2: ("E", "Ig"), 3: ("R", "If1")}

REVERIFY_OFF_TOL = 1e-12


@dataclass(frozen=True)
class SearchConfig:
    """Knobs shared by the verifier and the scans."""

    n_min: int = 4
    n_max: int = 10
    float_tol: float = 1e-9
    scan_limit: int = 100
    fixed_t: int = 4
    perfect_squares_only: bool = True
    equal_order_only: bool = False
    energy_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.n_min < 1:
            raise ValueError(f"n_min must be >= 1, got {self.n_min}")
        if self.n_min > self.n_max:
            raise ValueError(f"n_min {self.n_min} exceeds n_max {self.n_max}")
        if self.float_tol <= 0.0 or self.energy_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.scan_limit < 1:
            raise ValueError(f"scan_limit must be >= 1, got {self.scan_limit}")
        if self.fixed_t < 2:
            raise ValueError(f"fixed_t must be >= 2, got {self.fixed_t}")


@dataclass(frozen=True)
class ViolationRecord:
    """A decisive conjecture violation for one unordered tree pair."""

    conjecture: int
    n: int
    code_a: str
    code_b: str
    index_pair: tuple[str, str]
    values_a: tuple[float, float]
    values_b: tuple[float, float]
    gap_a: float
    gap_b: float
    margin: float


@dataclass(frozen=True)
class CollisionPair:
    """Two non-isomorphic trees sharing one index value (the collision kind)."""

    kind: str
    code_a: str
    code_b: str
    edges_a: tuple[tuple[int, int], ...]
    edges_b: tuple[tuple[int, int], ...]
    n_a: int
    n_b: int
    shared_value: float
    secondary_gaps: tuple[tuple[str, float], ...] = ()
    cospectral: bool | None = None
    exact: bool | None = None
    candidate: bool | None = None
    label_a: str | None = None
    label_b: str | None = None


def _ig_from_spectrum(spec: Spectrum, log_base: float = math.e) -> float:
    e_total = spec.abs_sum()
    weighted = sum(abs(v) * math.log(abs(v)) for v in spec.values if abs(v) > TAU_ZERO)
    return (math.log(e_total) - weighted / e_total) / math.log(log_base)


def _pair_values(trees: list[Tree], conjecture: int) -> tuple[list[float], list[float]]:
    """Per-tree values of the two indices compared by the given conjecture."""
    if conjecture == 1:
        a = [float(wiener(t.graph).value) for t in trees]
        b = [randic(t.graph).value for t in trees]
    elif conjecture == 2:
        spectra = [eigenvalues(t.graph) for t in trees]
        a = [s.abs_sum() for s in spectra]
        b = [_ig_from_spectrum(s) for s in spectra]
    elif conjecture == 3:
        a = [randic(t.graph).value for t in trees]
        b = [ifk_entropy(t.graph, 1).value for t in trees]
    else:
        raise ValueError(f"conjecture id must be 1, 2 or 3, got {conjecture}")
    return a, b


def verify_conjecture_detail(
    conjecture: int, n: int, cfg: SearchConfig | None = None
) -> tuple[list[ViolationRecord], list[ViolationRecord]]:
    """All pairs on ``n`` vertices: (decisive violations, borderline near-ties).

    A pair violates when its first-index gap is strictly smaller than its
    second-index gap; the verdict is decisive when the margin clears
    ``cfg.float_tol``, borderline otherwise.
    """
    cfg = cfg or SearchConfig()
    if conjecture not in CONJECTURE_INDEX_PAIRS:
        raise ValueError(f"conjecture id must be 1, 2 or 3, got {conjecture}")
    if n < 4:
        raise ValueError(f"conjecture checks need n >= 4, got {n}")
    trees = list(enumerate_trees(n))
    a_vals, b_vals = _pair_values(trees, conjecture)
    codes = [t.code_hex for t in trees]
    violations: list[ViolationRecord] = []
    borderline: list[ViolationRecord] = []
    for i in range(len(trees)):
        for j in range(i + 1, len(trees)):
            gap_a = abs(a_vals[i] - a_vals[j])
            gap_b = abs(b_vals[i] - b_vals[j])
            if gap_a >= gap_b:
                continue
            first, second = (i, j) if codes[i] <= codes[j] else (j, i)
            record = ViolationRecord(
                conjecture=conjecture,
                n=n,
                code_a=codes[first],
                code_b=codes[second],
                index_pair=CONJECTURE_INDEX_PAIRS[conjecture],
                values_a=(a_vals[first], b_vals[first]),
                values_b=(a_vals[second], b_vals[second]),
                gap_a=gap_a,
                gap_b=gap_b,
                margin=gap_b - gap_a,
            )
            if record.margin > cfg.float_tol:
                violations.append(record)
            else:
                borderline.append(record)
    key = lambda r: (-r.margin, r.code_a, r.code_b)
    violations.sort(key=key)
    borderline.sort(key=key)
    return violations, borderline


def verify_conjecture(conjecture: int, n: int, cfg: SearchConfig | None = None) -> list[ViolationRecord]:
    """Decisive violations of the conjecture over all tree pairs on ``n`` vertices."""
    return verify_conjecture_detail(conjecture, n, cfg)[0]


# ---------------------------------------------------------------------------
# Equal-Wiener pairs
# ---------------------------------------------------------------------------


def find_equal_wiener_pairs(n: int, cfg: SearchConfig | None = None) -> list[CollisionPair]:
    """All non-isomorphic tree pairs on ``n`` vertices with identical Wiener index.

    Each returned pair is re-verified with the independent edge-cut Wiener
    strategy and carries the gaps of the other indices.
    """
    cfg = cfg or SearchConfig()
    trees = list(enumerate_trees(n))
    by_wiener: dict[int, list[int]] = {}
    w_vals: list[int] = []
    for idx, t in enumerate(trees):
        w = int(wiener(t.graph).value)
        if w != wiener_edge_cut(t):
            raise AssertionError(f"Wiener strategies disagree on tree {t.code_hex}")
        w_vals.append(w)
        by_wiener.setdefault(w, []).append(idx)
    pairs: list[CollisionPair] = []
    for w, members in sorted(by_wiener.items()):
        if len(members) < 2:
            continue
        values = {}
        for idx in members:
            g = trees[idx].graph
            spec = eigenvalues(g)
            values[idx] = {
                "R": randic(g).value,
                "E": spec.abs_sum(),
                "Ig": _ig_from_spectrum(spec),
                "If1": ifk_entropy(g, 1).value,
            }
        for ii in range(len(members)):
            for jj in range(ii + 1, len(members)):
                a, b = members[ii], members[jj]
                if trees[a].code_hex > trees[b].code_hex:
                    a, b = b, a
                gaps = tuple(
                    (kind, abs(values[a][kind] - values[b][kind])) for kind in ("R", "E", "Ig", "If1")
                )
                pairs.append(
                    CollisionPair(
                        kind="wiener",
                        code_a=trees[a].code_hex,
                        code_b=trees[b].code_hex,
                        edges_a=trees[a].edges,
                        edges_b=trees[b].edges,
                        n_a=n,
                        n_b=n,
                        shared_value=float(w),
                        secondary_gaps=gaps,
                    )
                )
    pairs.sort(key=lambda p: (p.shared_value, p.code_a, p.code_b))
    return pairs


def smallest_equal_wiener_order(n_start: int = 4, n_stop: int = 16) -> tuple[int, list[CollisionPair]]:
    """First order in ``n_start..n_stop`` where an equal-Wiener pair exists."""
    for n in range(n_start, n_stop + 1):
        pairs = find_equal_wiener_pairs(n)
        if pairs:
            return n, pairs
    raise GraphError(f"no equal-Wiener tree pair up to n={n_stop}")


# ---------------------------------------------------------------------------
# Attachment family (equal-Wiener invariance)
# ---------------------------------------------------------------------------


def fig1_randic_gap(x: float, y: float) -> float:
    """Randic difference of the two-attachment family at end degrees x, y.

    Evaluates the local edge-weight difference around the four affected
    vertices; the limit for large x, y is 1/3 + 3/2 - 1/sqrt(6) - 3/sqrt(5).
    """
    if x < 1 or y < 1:
        raise ValueError(f"degrees must be >= 1, got x={x}, y={y}")
    plus = 1.0 / 3.0 + 1.0 / math.sqrt(3.0 * x) + 1.0 / math.sqrt(3.0 * y) + 1.5 + 1.0 / (2.0 * math.sqrt(y))
    minus = (
        1.0 / math.sqrt(6.0)
        + 1.0 / math.sqrt(2.0 * y)
        + 1.0 / math.sqrt(5.0 * y)
        + 3.0 / math.sqrt(5.0)
        + 1.0 / math.sqrt(5.0 * x)
    )
    return plus - minus


def check_wiener_preserving_attachment(
    t_a: Tree,
    t_b: Tree,
    attach_a: tuple[int, int],
    attach_b: tuple[int, int],
) -> bool:
    """Whether attaching arbitrary trees at the given points preserves Wiener equality.

    True iff each attachment vertex has the same distance sum as its
    counterpart and the two attachment vertices are equally far apart in
    both trees.  Under those conditions every cross term of the expanded
    Wiener sum matches, so any subtrees S and R hung at the two points keep
    W(T) = W(T').
    """
    if t_a.n != t_b.n:
        raise GraphError(f"attachment bases must have equal order, got {t_a.n} and {t_b.n}")
    if wiener(t_a.graph).value != wiener(t_b.graph).value:
        raise GraphError("attachment bases must have equal Wiener index")
    dist_a0 = bfs_distances(t_a.graph, attach_a[0])
    dist_b0 = bfs_distances(t_b.graph, attach_b[0])
    if sum(dist_a0) != sum(dist_b0):
        return False
    dist_a1 = bfs_distances(t_a.graph, attach_a[1])
    dist_b1 = bfs_distances(t_b.graph, attach_b[1])
    if sum(dist_a1) != sum(dist_b1):
        return False
    return dist_a0[attach_a[1]] == dist_b0[attach_b[1]]


# ---------------------------------------------------------------------------
# Caterpillar spine scan (equal Randic, different degree sequence)
# ---------------------------------------------------------------------------


def caterpillar_r_core(x: int, y: int, z: int, t: int) -> float:
    """Spine contribution to the Randic index of the caterpillar family."""
    return (
        (x - 1) / math.sqrt(x)
        + (y - 2) / math.sqrt(y)
        + (z - 2) / math.sqrt(z)
        + (t - 2) / math.sqrt(t)
        + 1.0 / math.sqrt(x * y)
        + 1.0 / math.sqrt(y * z)
        + 1.0 / math.sqrt(z * t)
    )


def caterpillar_r_core_exact(x: int, y: int, z: int, t: int) -> Fraction:
    """Exact rational spine contribution; requires all four degrees square."""
    roots = []
    for v in (x, y, z, t):
        r = math.isqrt(v)
        if r * r != v:
            raise ValueError(f"{v} is not a perfect square; exact form unavailable")
        roots.append(r)
    rx, ry, rz, rt = roots
    return (
        Fraction(x - 1, rx)
        + Fraction(y - 2, ry)
        + Fraction(z - 2, rz)
        + Fraction(t - 2, rt)
        + Fraction(1, rx * ry)
        + Fraction(1, ry * rz)
        + Fraction(1, rz * rt)
    )


def _spine_if1_weight(quad: tuple[int, int, int, int]) -> float:
    """Sum of d*ln(d) over the spine degrees (the If_1 separating statistic)."""
    return sum(d * math.log(d) for d in quad)


def _scan_values(limit: int, minimum: int, squares_only: bool) -> list[int]:
    if squares_only:
        return [k * k for k in range(1, math.isqrt(limit) + 1) if k * k >= minimum]
    return list(range(minimum, limit + 1))


def caterpillar_scan(cfg: SearchConfig | None = None) -> list[CollisionPair]:
    """Distinct spine quadruples with equal Randic core at the fixed last degree.

    Scans (x, y, z, t) with t = cfg.fixed_t and coordinates at most
    cfg.scan_limit (perfect squares only unless disabled).  Candidate pairs
    within cfg.float_tol are kept, isomorphic duplicates (reversed spines)
    are dropped via canonical codes, and all-square pairs are re-checked in
    exact rational arithmetic.
    """
    cfg = cfg or SearchConfig()
    t = cfg.fixed_t
    xs = _scan_values(cfg.scan_limit, 1, cfg.perfect_squares_only)
    yzs = _scan_values(cfg.scan_limit, 2, cfg.perfect_squares_only)
    quads = [(x, y, z, t) for x in xs for y in yzs for z in yzs]
    scored = sorted(zip((caterpillar_r_core(*q) for q in quads), quads))
    records: list[CollisionPair] = []
    for i in range(len(scored)):
        r_i, quad_i = scored[i]
        j = i + 1
        while j < len(scored) and scored[j][0] - r_i <= cfg.float_tol:
            quad_j = scored[j][1]
            j += 1
            record = _caterpillar_pair(quad_i, quad_j, cfg)
            if record is not None:
                records.append(record)
    records.sort(key=lambda p: (p.label_a or "", p.label_b or ""))
    return records


def _caterpillar_pair(
    quad_a: tuple[int, int, int, int], quad_b: tuple[int, int, int, int], cfg: SearchConfig
) -> CollisionPair | None:
    if quad_a > quad_b:
        quad_a, quad_b = quad_b, quad_a
    if cfg.equal_order_only and sum(quad_a) != sum(quad_b):
        return None
    tree_a = build_caterpillar(CaterpillarSpec(*quad_a))
    tree_b = build_caterpillar(CaterpillarSpec(*quad_b))
    if tree_a.code == tree_b.code:
        return None
    exact: bool | None = None
    try:
        exact = caterpillar_r_core_exact(*quad_a) == caterpillar_r_core_exact(*quad_b)
    except ValueError:
        exact = None
    spine_gap = abs(_spine_if1_weight(quad_a) - _spine_if1_weight(quad_b))
    return CollisionPair(
        kind="randic",
        code_a=tree_a.code_hex,
        code_b=tree_b.code_hex,
        edges_a=tree_a.edges,
        edges_b=tree_b.edges,
        n_a=tree_a.n,
        n_b=tree_b.n,
        shared_value=caterpillar_r_core(*quad_a),
        secondary_gaps=(("If1_spine", spine_gap),),
        exact=exact,
        label_a="C{}".format(quad_a),
        label_b="C{}".format(quad_b),
    )


# ---------------------------------------------------------------------------
# Equienergetic scan
# ---------------------------------------------------------------------------


def equienergetic_scan(cfg: SearchConfig | None = None) -> list[CollisionPair]:
    """Tree pairs with numerically equal energy, flagged cospectral or not.

    For each order in cfg.n_min..cfg.n_max, trees are sorted by energy and
    neighbours within cfg.energy_tol are paired.  Every pair is re-verified
    with the eigensolver at the tightened threshold; survivors carry the
    refined energy gap, an exact cospectrality flag, and the spectral
    entropy gap.  Non-cospectral survivors with a decisive entropy gap are
    marked as candidate refutations of the energy-entropy conjecture.
    """
    cfg = cfg or SearchConfig()
    records: list[CollisionPair] = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        trees = list(enumerate_trees(n))
        energies = [eigenvalues(t.graph).abs_sum() for t in trees]
        order = sorted(range(len(trees)), key=lambda i: (energies[i], trees[i].code_hex))
        for pos in range(len(order)):
            i = order[pos]
            nxt = pos + 1
            while nxt < len(order) and energies[order[nxt]] - energies[i] <= cfg.energy_tol:
                record = _equienergetic_pair(trees[i], trees[order[nxt]], cfg)
                nxt += 1
                if record is not None:
                    records.append(record)
    records.sort(key=lambda p: (p.n_a, p.shared_value, p.code_a, p.code_b))
    return records


def _equienergetic_pair(tree_a: Tree, tree_b: Tree, cfg: SearchConfig) -> CollisionPair | None:
    if tree_a.code_hex > tree_b.code_hex:
        tree_a, tree_b = tree_b, tree_a
    spec_a = eigenvalues(tree_a.graph, off_tol=REVERIFY_OFF_TOL)
    spec_b = eigenvalues(tree_b.graph, off_tol=REVERIFY_OFF_TOL)
    e_a, e_b = spec_a.abs_sum(), spec_b.abs_sum()
    energy_gap = abs(e_a - e_b)
    if energy_gap > cfg.energy_tol:
        return None
    cospectral = is_cospectral(tree_a.graph, tree_b.graph)
    ig_gap = abs(_ig_from_spectrum(spec_a) - _ig_from_spectrum(spec_b))
    return CollisionPair(
        kind="energy",
        code_a=tree_a.code_hex,
        code_b=tree_b.code_hex,
        edges_a=tree_a.edges,
        edges_b=tree_b.edges,
        n_a=tree_a.n,
        n_b=tree_b.n,
        shared_value=(e_a + e_b) / 2.0,
        secondary_gaps=(("E", energy_gap), ("Ig", ig_gap)),
        cospectral=cospectral,
        candidate=(not cospectral) and ig_gap > cfg.float_tol,
    )
