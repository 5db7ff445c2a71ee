"""Named verification suites producing machine-readable reports."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import gf2, model, pog, rozig, verify
from .lp import solve_lp

SUITES = ("table", "census", "spaces", "counts", "pq", "points")
DEFAULT_SEED = 20161
RANDOM_OBJECTIVES = 50


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    z: int
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def check(self, name: str, passed: bool, detail: object = "") -> None:
        self.checks.append(Check(name, bool(passed), str(detail)))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def suite_table(rep: Report) -> None:
    z = rep.z
    try:
        t = rozig.build_table(z)
        rep.check("table.invariants", True)
    except rozig.RozigError as exc:
        rep.check("table.invariants", False, exc)
        return
    try:
        rs = rozig.rotation_and_twist(t)
        rep.check("table.column_homogeneity", True)
    except rozig.RozigError as exc:
        rep.check("table.column_homogeneity", False, exc)
        return
    nshaded = sum(t.shaded)
    rep.check("table.twist_count", len(rs.twist) == z // 2 * nshaded, f"{len(rs.twist)} twisted edges")
    rep.check(
        "table.mirror_shading",
        all(t.shaded[k] == t.shaded[z - 1 - k] for k in range(1, z - 1)),
    )
    rep.data["shaded_columns"] = [k for k, s in enumerate(t.shaded) if s]


def suite_census(rep: Report) -> None:
    z = rep.z
    try:
        t = pog.build_triad(z)
    except (pog.TriadError, ValueError) as exc:
        rep.check("triad.valid", False, exc)
        return
    rep.check("triad.valid", True)
    g1, g2, g3 = t.g1, t.g2, t.g3
    rep.check("g1.euler_char_is_1", g1.euler_char == 1, g1.euler_char)
    rep.check("g1.non_orientable", not g1.orientable)
    rep.check("g2.euler_char_is_1", g2.euler_char == 1, g2.euler_char)
    rep.check("g1.zigzag_count_is_z", len(g1.zigzags) == z, len(g1.zigzags))
    rep.check("g3.is_complete_graph", len(g3.vertices) == z and all(len(w) == z - 1 for w in g3.vertices))
    got = {
        "v3": sum(1 for w in g1.vertices if len(w) == 3),
        "v4": sum(1 for w in g1.vertices if len(w) == 4),
        "f3": sum(1 for w in g1.faces if len(w) == 3),
        "f4": sum(1 for w in g1.faces if len(w) == 4),
    }
    exp = pog.expected_census(z)
    rep.check("g1.census_matches_formulas", got == exp, f"{got} vs {exp}")
    rep.data["census"] = {k: {str(a): b for a, b in v.items()} for k, v in pog.census(g1).items()}
    rep.data["g1"] = {"vertices": len(g1.vertices), "faces": len(g1.faces), "edges": t.m}


def suite_spaces(rep: Report) -> None:
    t = pog.build_triad(rep.z)
    ms = pog.map_spaces(t)
    for name, ok in pog.richness_report(t).items():
        rep.check(f"spaces.{name}", ok)
    polys = model.v12(t)
    span12 = gf2.span([gf2.EdgeVector.from_edges(p.edges, t.m) for p in polys], t.m)
    cyc3 = gf2.orth_complement(ms.v3)
    rep.check("spaces.v12_spans_kz_cycle_space", span12 == cyc3)
    rep.check("spaces.kz_cycle_space_dim", cyc3.dim == t.m - rep.z + 1, cyc3.dim)
    rep.data["dims"] = {
        "v1": ms.v1.dim, "v2": ms.v2.dim, "v3": ms.v3.dim,
        "gamma": ms.gamma, "cdef": list(ms.cdefs), "cycle_space_kz": cyc3.dim,
    }


def suite_counts(rep: Report) -> None:
    r = model.count_report(rep.z)
    rep.check("counts.s12_matches_formula", r["s12_count"] == r["predicted"] == r["s12_from_unifiers"])
    rep.check("counts.rows_within_11E", r["total_rows"] <= r["bound_11m"], f"{r['total_rows']} <= {r['bound_11m']}")
    try:
        model.build_p12(pog.build_triad(rep.z))
        rep.check("counts.p12_rows_short", True)
    except model.ModelError as exc:
        rep.check("counts.p12_rows_short", False, exc)
    rep.data["counts"] = r


def suite_pq(rep: Report) -> None:
    t = pog.build_triad(rep.z)
    p12 = model.build_p12(t)
    try:
        ct = model.complement_transform(model.build_p2prime(t))
        rep.check("pq.complement_equals_p12", ct.row_multiset() == p12.row_multiset())
    except model.ModelError as exc:
        rep.check("pq.complement_equals_p12", False, exc)
    polys = model.v12(t)
    bad = [p.index for p in polys if not model.pq_eliminates_fractional(p)]
    rep.check("pq.eliminates_fractional_slack", not bad, f"failing polygons {bad}" if bad else "")


def random_objectives(m: int, count: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(0, 1) for _ in range(m)] for _ in range(count)]


def suite_points(rep: Report, seed: int = DEFAULT_SEED, threads: int = 1) -> None:
    z = rep.z
    t = pog.build_triad(z)
    m = t.m
    if m > verify.POINTS_GUARD:
        raise pog.CapabilityError(f"|E| = {m} exceeds the enumeration guard {verify.POINTS_GUARD}")
    p12 = model.build_p12(t)
    pts = verify.enumerate_01_points(p12, threads)
    cuts = {c.bits for c in verify.enumerate_cuts(z)}
    rep.check("points.integer_points_are_cuts", pts == cuts, f"{len(pts)} points, {len(cuts)} cuts")
    if m <= verify.BOX_GUARD:
        box = verify.integer_box_scan(p12, 2, threads)
        rep.check("points.unit_bounds_implied", all(max(x) <= 1 for x in box) and len(box) == len(cuts))
    else:
        rep.skipped.append("points.unit_bounds_implied (box guard)")
    mismatches = 0
    objectives = []
    for e in range(m):
        obj = [0] * m
        obj[e] = 1
        objectives.append(obj)
    objectives += random_objectives(m, RANDOM_OBJECTIVES, seed)
    for obj in objectives:
        if verify.model_solve(p12, obj, pts).value != verify.maxcut_oracle(z, obj).value:
            mismatches += 1
    rep.check("points.model_solve_equals_oracle", mismatches == 0, f"{len(objectives)} objectives")
    ones = [1] * m
    maxcut = verify.maxcut_oracle(z, ones).value
    rep.check("points.strong_ojoin_complements_are_cuts", pog.strong_ojoin_cut_equivalence(t))
    mso = pog.min_strong_ojoin(t)
    rep.check("points.reformulation", mso == m - maxcut, f"{mso} = {m} - {maxcut}")
    lp_val = solve_lp(p12, ones).value
    rep.check("points.lp_dominates_integer", lp_val >= maxcut, f"{lp_val} >= {maxcut}")
    rep.data["maxcut_all_ones"] = maxcut
    rep.data["lp_all_ones"] = str(Fraction(lp_val))


def run(z: int, suite: str = "all", seed: int = DEFAULT_SEED, threads: int = 1) -> Report:
    rozig.check_z(z)
    rep = Report(z)
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        start = time.perf_counter()
        if name == "points":
            if pog.build_triad(z).m > verify.POINTS_GUARD:
                if suite == "all":
                    rep.skipped.append("points (enumeration guard)")
                    continue
            suite_points(rep, seed, threads)
        else:
            globals()[f"suite_{name}"](rep)
        rep.timings[name] = round(time.perf_counter() - start, 4)
    return rep
