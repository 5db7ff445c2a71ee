"""Graph ingestion, objective embedding into K_z, and model serialization."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from .model import InequalitySystem, Row
from .rozig import edge_id, num_edges

log = logging.getLogger(__name__)

MIN_Z = 6


class ParseError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class InputGraph:
    n: int
    edges: tuple[tuple[int, int], ...]


def parse_graph(text: str) -> InputGraph:
    """Read an edge list: optional ``p edge n m`` header, ``c``/``#`` comments,
    data lines ``i j`` or ``e i j`` with 1-based endpoints."""
    n: Optional[int] = None
    declared_m: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0].startswith("#") or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None or len(tok) != 4:
                raise ParseError(lineno, "expected a single header 'p edge n m'")
            try:
                n, declared_m = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError(lineno, "non-integer header field") from None
            if n < 1:
                raise ParseError(lineno, "vertex count must be positive")
            continue
        if tok[0] == "e":
            tok = tok[1:]
        if len(tok) != 2:
            raise ParseError(lineno, f"malformed edge line {raw.strip()!r}")
        try:
            i, j = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer endpoint in {raw.strip()!r}") from None
        if i == j:
            raise ParseError(lineno, f"self-loop on vertex {i}")
        if min(i, j) < 1 or (n is not None and max(i, j) > n):
            raise ParseError(lineno, f"endpoint out of range in {raw.strip()!r}")
        key = (min(i, j), max(i, j))
        if key in seen:
            log.warning("line %d: duplicate edge %s ignored", lineno, key)
            continue
        seen.add(key)
        edges.append(key)
    if n is None:
        n = max((max(e) for e in edges), default=0)
    if declared_m is not None and declared_m != len(edges):
        log.warning("header declares %d edges, read %d distinct", declared_m, len(edges))
    return InputGraph(n, tuple(sorted(edges)))


@dataclass(frozen=True)
class Embedding:
    z: int
    objective: tuple[int, ...]
    pendant: bool

    @property
    def offset(self) -> int:
        """Subtract from the K_z optimum to get the input graph's maxcut."""
        return 1 if self.pendant else 0


def embed_objective(g: InputGraph) -> Embedding:
    if g.n < 2:
        raise ValueError("need at least two vertices")
    pendant = g.n % 2 == 1
    edges = list(g.edges)
    z = g.n
    if pendant:
        z += 1
        edges.append((1, z))
    # isolated padding vertices leave the maxcut unchanged
    z = max(z, MIN_Z)
    obj = [0] * num_edges(z)
    for i, j in edges:
        obj[edge_id(i, j, z)] = 1
    return Embedding(z, tuple(obj), pendant)


# -- model export ----------------------------------------------------------


def default_objective(sys: InequalitySystem) -> tuple[tuple[int, ...], str]:
    """All-ones over the edge variables: maximise for P12, minimise otherwise."""
    m = sum(1 for n in sys.var_names if n.startswith(("x_", "xp_")))
    obj = (1,) * m + (0,) * (sys.num_vars - m)
    return obj, ("max" if sys.kind == "P12" else "min")


def _term(coef: int, name: str, first: bool) -> str:
    mag = abs(coef)
    body = name if mag == 1 else f"{mag} {name}"
    if first:
        return body if coef > 0 else f"- {body}"
    return f"+ {body}" if coef > 0 else f"- {body}"


def _expr(coeffs: Sequence[tuple[int, int]], names: Sequence[str], per_line: int = 0) -> str:
    parts = [_term(c, names[v], k == 0) for k, (v, c) in enumerate(coeffs) if c]
    if not per_line:
        return " ".join(parts) if parts else "0"
    lines = [" ".join(parts[k : k + per_line]) for k in range(0, len(parts), per_line)]
    return "\n   ".join(lines) if lines else "0"


def row_text(r: Row, names: Sequence[str]) -> str:
    return f"{_expr(r.coeffs, names)} {r.rel} {r.rhs}"


def _exported_rows(sys: InequalitySystem) -> list[Row]:
    # nonnegativity rows are expressed as bounds
    return [r for r in sys.rows if r.tag != "nonneg"]


def export_lp(
    sys: InequalitySystem,
    objective: Optional[Sequence[int]] = None,
    sense: Optional[str] = None,
    integer: bool = True,
) -> str:
    dobj, dsense = default_objective(sys)
    objective = dobj if objective is None else objective
    sense = sense or dsense
    names = sys.var_names
    rows = _exported_rows(sys)
    out = [f"\\ {sys.kind} model, z={sys.z}, {sys.num_vars} variables, {len(rows)} rows"]
    out.append("Maximize" if sense == "max" else "Minimize")
    obj_coeffs = [(v, c) for v, c in enumerate(objective) if c]
    out.append(f" obj: {_expr(obj_coeffs, names, per_line=8)}")
    out.append("Subject To")
    for r in rows:
        rel = "=" if r.rel == "=" else "<="
        out.append(f" {r.name}: {_expr(r.coeffs, names)} {rel} {r.rhs}")
    out.append("Bounds")
    for v, name in enumerate(names):
        lo, hi = sys.lower[v], sys.upper[v]
        if hi is None:
            out.append(f" {name} >= {lo}" if lo is not None else f" {name} free")
        else:
            out.append(f" {lo} <= {name} <= {hi}")
    if integer:
        out.append("General")
        ints = list(names)
        for k in range(0, len(ints), 8):
            out.append(" " + " ".join(ints[k : k + 8]))
    out.append("End")
    return "\n".join(out) + "\n"


def _mps_line(f1: str, f2: str, f3: str = "", f4: str = "", f5: str = "", f6: str = "") -> str:
    # fixed MPS columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61
    line = f" {f1:<2} {f2:<8}  {f3:<8}  {f4:>12}"
    if f5:
        line += f"   {f5:<8}  {f6:>12}"
    return line.rstrip()


def export_mps(
    sys: InequalitySystem,
    objective: Optional[Sequence[int]] = None,
    sense: Optional[str] = None,
    integer: bool = True,
) -> str:
    dobj, dsense = default_objective(sys)
    objective = dobj if objective is None else objective
    sense = sense or dsense
    names = sys.var_names
    rows = _exported_rows(sys)
    out = [f"NAME          {sys.kind}_Z{sys.z}", "OBJSENSE", "    MAX" if sense == "max" else "    MIN"]
    out.append("ROWS")
    out.append(_mps_line("N", "obj"))
    for r in rows:
        out.append(_mps_line("E" if r.rel == "=" else "L", r.name))
    out.append("COLUMNS")
    cols: list[list[tuple[str, int]]] = [[] for _ in range(sys.num_vars)]
    for v, c in enumerate(objective):
        if c:
            cols[v].append(("obj", c))
    for r in rows:
        for v, c in r.coeffs:
            cols[v].append((r.name, c))
    if integer:
        out.append(_mps_line("", "MARKER", "'MARKER'", "", "'INTORG'"))
    for v, entries in enumerate(cols):
        for rname, c in entries:
            out.append(_mps_line("", names[v], rname, str(c)))
    if integer:
        out.append(_mps_line("", "MARKER", "'MARKER'", "", "'INTEND'"))
    out.append("RHS")
    for r in rows:
        if r.rhs:
            out.append(_mps_line("", "RHS", r.name, str(r.rhs)))
    out.append("BOUNDS")
    for v, name in enumerate(names):
        lo, hi = sys.lower[v], sys.upper[v]
        if lo is None:
            out.append(_mps_line("FR", "BND", name))
            continue
        if lo != 0:
            out.append(_mps_line("LO", "BND", name, str(lo)))
        if hi is None:
            # integer columns default to [0, 1] in some readers
            out.append(_mps_line("PL", "BND", name))
        else:
            out.append(_mps_line("UP", "BND", name, str(hi)))
    out.append("ENDATA")
    return "\n".join(out) + "\n"


def system_to_dict(sys: InequalitySystem) -> dict:
    return {
        "kind": sys.kind,
        "z": sys.z,
        "num_vars": sys.num_vars,
        "var_names": list(sys.var_names),
        "lower": list(sys.lower),
        "upper": list(sys.upper),
        "rows": [
            {
                "name": r.name,
                "tag": r.tag,
                "coeffs": [[v, c] for v, c in r.coeffs],
                "rel": r.rel,
                "rhs": r.rhs,
            }
            for r in sys.rows
        ],
    }


def system_from_dict(d: dict) -> InequalitySystem:
    rows = tuple(
        Row(tuple((int(v), int(c)) for v, c in r["coeffs"]), r["rel"], int(r["rhs"]), r["name"], r["tag"])
        for r in d["rows"]
    )
    return InequalitySystem(
        d["kind"], int(d["num_vars"]), tuple(d["var_names"]), rows,
        tuple(d["lower"]), tuple(d["upper"]), int(d["z"]),
    )


def export_json(obj) -> str:
    if isinstance(obj, InequalitySystem):
        obj = system_to_dict(obj)
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"


def load_system_json(text: str) -> InequalitySystem:
    return system_from_dict(json.loads(text))


def _json_default(o):
    from fractions import Fraction

    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")
