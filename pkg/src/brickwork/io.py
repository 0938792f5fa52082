"""JSON input files and JSON-ready reports.

Loaders turn parsed JSON (plain dicts) into library objects and raise
``ValidationError`` naming the offending field.  Report builders return
dicts of strings, ints and lists only, so ``json.dumps(..., sort_keys=True)``
is byte-stable.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path as FilePath

from .algebra import Algebra, AlgebraPresentation, Quiver, Representation, build_algebra, format_element
from .ditalgebra import (CoefficientMatrices, MinDitData, Normalization, RankReport,
                         check_normal, column_label, dump_ditalgebra, load_ditalgebra)
from .errors import ValidationError
from .family import FamilyReport, Realization
from .fields import field_from_spec
from .linalg import Matrix
from .p1 import Decomposition, P1Morphism, P1Object, ProjMap
from .parsing import parse_poly, parse_ratfun, parse_scalar
from .poly import RatFunField, format_bipoly, format_poly, format_ratfun


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ValidationError(f"{path}: no such file") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def fixture_path(name: str) -> FilePath:
    return FilePath(str(resources.files("brickwork") / "data" / "fixtures" / name))


def schema(name: str) -> dict:
    with resources.files("brickwork").joinpath("data", "schemas", f"{name}.schema.json").open() as fh:
        return json.load(fh)


def load_fixture(name: str) -> dict:
    return read_json(fixture_path(name))


def _require(spec: dict, key: str, where: str):
    if not isinstance(spec, dict):
        raise ValidationError(f"{where}: expected a JSON object")
    if key not in spec:
        raise ValidationError(f"{where}: missing field {key!r}")
    return spec[key]


# algebras ----------------------------------------------------------------------

def load_algebra(spec: dict, field: str | None = None) -> Algebra:
    K = field_from_spec(field or spec.get("field", "Q"))
    vertices = list(_require(spec, "vertices", "algebra"))
    arrows = []
    for i, a in enumerate(_require(spec, "arrows", "algebra")):
        try:
            arrows.append((a["name"], a["src"], a["tgt"]))
        except (KeyError, TypeError):
            raise ValidationError(f"algebra.arrows[{i}]: needs name, src and tgt") from None
    Q = Quiver(vertices, arrows)
    relations = []
    for i, rel in enumerate(spec.get("relations", [])):
        terms = []
        for j, term in enumerate(rel):
            try:
                coef, names = term["coef"], term["path"]
            except (KeyError, TypeError):
                raise ValidationError(f"algebra.relations[{i}][{j}]: needs coef and path") from None
            try:
                terms.append((K(coef) if isinstance(coef, int) else _scalar(coef, K), Q.path(names)))
            except ValidationError as exc:
                raise ValidationError(f"algebra.relations[{i}][{j}]: {exc}") from None
        relations.append(terms)
    bound = spec.get("nilpotency_bound", 2)
    if not isinstance(bound, int):
        raise ValidationError("algebra.nilpotency_bound: expected an integer")
    return build_algebra(AlgebraPresentation(Q, relations, bound, K))


def _scalar(text, K):
    return parse_scalar(text, K)


def dump_algebra(alg: Algebra) -> dict:
    Q = alg.quiver
    pres = alg.presentation
    return {
        "field": alg.K.spec(),
        "vertices": list(Q.vertices),
        "arrows": [{"name": a.name, "src": a.source, "tgt": a.target} for a in Q.arrows],
        "relations": [[{"coef": str(c), "path": list(p.arrows)} for c, p in rel] for rel in pres.relations],
        "nilpotency_bound": pres.nilpotency_bound,
    }


def _vertex(alg: Algebra, key):
    for v in alg.vertices:
        if v == key or str(v) == str(key):
            return v
    raise ValidationError(f"unknown vertex {key!r}")


def _matrix(rows, K, nrows: int, ncols: int, parse, where: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != nrows or any(
            not isinstance(r, list) or len(r) != ncols for r in rows):
        raise ValidationError(f"{where}: expected a {nrows} x {ncols} matrix")
    try:
        return Matrix([[parse(e) for e in r] for r in rows], K, ncols=ncols)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def load_module(alg: Algebra, spec: dict) -> Representation:
    dims = {_vertex(alg, k): int(v) for k, v in _require(spec, "dims", "module").items()}
    dims = {v: dims.get(v, 0) for v in alg.vertices}
    K = alg.K
    maps = {}
    for name, rows in spec.get("maps", {}).items():
        if name not in alg.quiver.arrow:
            raise ValidationError(f"module.maps: unknown arrow {name!r}")
        a = alg.quiver.arrow[name]
        maps[name] = _matrix(rows, K, dims[a.target], dims[a.source],
                             lambda e: _scalar(e, K), f"module.maps.{name}")
    return Representation(alg, dims, maps, K)


def load_realization(alg: Algebra, spec: dict) -> Realization:
    K = alg.K
    try:
        h = parse_poly(spec.get("h", "1"), K)
    except ValidationError as exc:
        raise ValidationError(f"realization.h: {exc}") from None
    if not h:
        raise ValidationError("realization.h: must be nonzero")
    dims = {_vertex(alg, k): int(v) for k, v in _require(spec, "dims", "realization").items()}
    dims = {v: dims.get(v, 0) for v in alg.vertices}
    F = RatFunField(K)
    maps = {}
    for name, rows in spec.get("maps", {}).items():
        if name not in alg.quiver.arrow:
            raise ValidationError(f"realization.maps: unknown arrow {name!r}")
        a = alg.quiver.arrow[name]
        maps[name] = _matrix(rows, F, dims[a.target], dims[a.source],
                             lambda e: parse_ratfun(e, K), f"realization.maps.{name}")
    return Realization(alg, h, dims, maps)


def dump_realization(M: Realization) -> dict:
    return {
        "h": format_poly(M.h),
        "dims": {str(v): d for v, d in M.dims.items()},
        "maps": {a: [[format_ratfun(e) for e in r] for r in A.rows] for a, A in M.maps.items()},
    }


# P1 objects and morphisms --------------------------------------------------------

def _verts(alg, seq, where):
    try:
        return tuple(_vertex(alg, v) for v in seq)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def _projmap(alg, src, tgt, rows, K, where) -> ProjMap:
    if not isinstance(rows, list) or len(rows) != len(tgt) or any(
            not isinstance(r, list) or len(r) != len(src) for r in rows):
        raise ValidationError(f"{where}: expected a {len(tgt)} x {len(src)} array")
    try:
        entries = [[alg.parse_element(e, K) for e in r] for r in rows]
        return ProjMap(alg, src, tgt, entries, K)
    except ValidationError as exc:
        raise ValidationError(f"{where}: {exc}") from None


def load_p1_object(alg: Algebra, spec: dict, K=None, where: str = "object") -> P1Object:
    K = K or alg.K
    P1 = _verts(alg, _require(spec, "P1", where), f"{where}.P1")
    P2 = _verts(alg, _require(spec, "P2", where), f"{where}.P2")
    phi = _projmap(alg, P1, P2, spec.get("phi", [[] for _ in P2] if not P1 else None), K, f"{where}.phi")
    return P1Object(alg, P1, P2, phi, K)


def load_p1_morphism(alg: Algebra, spec: dict, K=None) -> P1Morphism:
    K = K or alg.K
    X = load_p1_object(alg, _require(spec, "source", "morphism"), K, "morphism.source")
    Y = load_p1_object(alg, _require(spec, "target", "morphism"), K, "morphism.target")
    u1 = _projmap(alg, X.P1, Y.P1, _require(spec, "u1", "morphism"), K, "morphism.u1")
    u2 = _projmap(alg, X.P2, Y.P2, _require(spec, "u2", "morphism"), K, "morphism.u2")
    return P1Morphism(X, Y, u1, u2)


def dump_projmap(f: ProjMap) -> list:
    return [[format_element(e) for e in row] for row in f.entries]


def dump_p1_object(X: P1Object) -> dict:
    return {"P1": list(X.P1), "P2": list(X.P2), "phi": dump_projmap(X.phi)}


def dump_p1_morphism(u: P1Morphism) -> dict:
    return {"source": dump_p1_object(u.source), "target": dump_p1_object(u.target),
            "u1": dump_projmap(u.u1), "u2": dump_projmap(u.u2)}


# reports -----------------------------------------------------------------------

def _str(x) -> str:
    return str(x)


def algebra_report(alg: Algebra, module: Representation | None = None, end_dim: int | None = None) -> dict:
    blocks = {}
    for s in alg.vertices:
        for t in alg.vertices:
            idx = alg.block(s, t)
            if idx:
                blocks[f"{t}->{s}"] = [alg.name(i) for i in idx]
    out = {"kind": "algebra-check", "field": alg.K.spec(), "dimension": alg.dim,
           "nilpotency_bound": alg.presentation.nilpotency_bound, "paths": blocks}
    if module is not None:
        out["module"] = {"dims": {str(v): d for v, d in module.dims.items()},
                         "end_dimension": end_dim, "brick": end_dim == 1}
    return out


def decomposition_report(u: P1Morphism, dec: Decomposition) -> dict:
    return {
        "kind": "p1-decomposition",
        "morphism": dump_p1_morphism(u),
        "gamma_terms": [{"vertex": t.t, "into_L": dump_p1_morphism(t.h), "out_of_R": dump_p1_morphism(t.g)}
                        for t in dec.gamma_terms],
        "s_terms": [{"vertex": t.t, "into_S": dump_p1_morphism(t.h), "out_of_S": dump_p1_morphism(t.g)}
                    for t in dec.s_terms],
        "recomposes": dec.recompose(u.source, u.target) == u,
    }


def family_report(report: FamilyReport) -> dict:
    out = {
        "kind": "family-report",
        "sampled": [_str(l) for l in report.sampled],
        "brick": list(report.brick),
        "end_dims": list(report.end_dims),
        "bricks_found": sum(report.brick),
        "generic_end_dim": report.generic_end_dim,
        "generic_brick": report.generic_brick,
        "all_sampled_bricks": report.all_bricks,
        "some_sampled_brick": report.some_brick,
        "exceptions": [_str(l) for l in report.exceptions],
        "max_exceptions": report.max_exceptions,
        "constant_family": report.constant_family,
    }
    if report.verdict is not None:
        out["verdict"] = report.verdict
        out["label"] = report.label
    return out


def _matrix_strings(M: Matrix, fmt) -> list:
    return [[fmt(e) for e in r] for r in M.rows]


def dit_analysis_report(d: MinDitData, cm: CoefficientMatrices, rank: RankReport, D_generic) -> dict:
    return {
        "kind": "dit-analysis",
        "c0": rank.c0,
        "c1": rank.c1,
        "rows": list(cm.rows),
        "columns": [column_label(c) for c in cm.columns],
        "C_xy": _matrix_strings(cm.Cxy, format_bipoly),
        "C_x": _matrix_strings(cm.Cx, format_ratfun),
        "exact_rank": rank.exact_rank,
        "generic_brick_flag": rank.generic_brick_flag,
        "sampled": [{"lambda": _str(l), "rank": r} for l, r in rank.sampled],
        "exceptional": [_str(l) for l in rank.exceptional],
        "sampled_agreement": rank.sampled_agreement,
        "solution_x": None if D_generic is None else _matrix_strings(D_generic, format_ratfun),
        "normal": _is_normal(cm),
        "notes": list(d.notes),
    }


def _is_normal(cm) -> bool:
    return check_normal(cm.Cxy)


def normalization_report(n: Normalization, cm_after: CoefficientMatrices) -> dict:
    return {
        "kind": "dit-normalization",
        "g": format_poly(n.g),
        "permutation": list(n.permutation),
        "exponents": list(n.exponents),
        "A": [[_kyx_str(p) for p in r] for r in n.A.rows],
        "scaled_A": _matrix_strings(n.scaled, format_bipoly),
        "C_xy": _matrix_strings(cm_after.Cxy, format_bipoly),
        "normalized": dump_ditalgebra(n.data),
    }


def _kyx_str(p) -> str:
    """A polynomial in x with coefficients in k(y), printed in x and y."""
    terms = []
    for i, c in enumerate(p.c):
        if not c:
            continue
        coeff = format_ratfun(c).replace("x", "y")
        mono = "" if i == 0 else ("*x" if i == 1 else f"*x^{i}")
        terms.append(f"({coeff}){mono}")
    return " + ".join(terms) if terms else "0"


def factor_report(d: MinDitData, row: int, terms: list, demands: list, q_name: str) -> dict:
    return {
        "kind": "dit-factorization",
        "row": row,
        "target": d.rows[row - 1],
        "q": q_name,
        "demands": [str(z) for z in demands],
        "terms": [{
            "through": t.through,
            "column": column_label(t.column),
            "sign": t.sign,
            "row": t.row,
            "p_on_demands": {str(z): format_ratfun(t.p(z)) for z in demands},
        } for t in terms],
        "verified": True,
    }
