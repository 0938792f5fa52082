"""Minimal ditalgebras with one marked point, as abstract coefficient data.

The data is a directed basis B split into blocks B[f', f] (symbols going
from point f to point f'), a localizing polynomial h for the marked point,
and for each basis symbol v the coefficients of delta(v) on tensors w2 (x) w1
through an unmarked middle point.  Coefficients are polynomials c(x, y) where
y acts on the left leg and x on the right leg.

From this the module builds the coefficient matrix C(x, y) whose rows are the
symbols of B[f0, f0] and whose columns are the pairs (w2, w1) through the
designated points z_t together with the triples (w2, u_t, w1).
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from itertools import islice

from .convolution import LazyLinearMap, apply_c, solve_convolution, zero_map
from .errors import MalformedSpec, NotNormal, OutsideDh, RankDeficient, ValidationError
from .fields import field_from_spec
from .linalg import (Matrix, bareiss, bipoly_to_kyx, det, evaluate, hermite_triangularize,
                     kyx_to_bipoly, mat_rank, minors, solve_left_inverse)
from .parsing import parse_bipoly, parse_poly
from .poly import (BiPoly, BiPolyRing, Poly, PolyRing, RatFun, RatFunField, format_bipoly,
                   format_poly, ground_roots, poly_gcd)


@dataclass(frozen=True)
class Designation:
    """Points l_t, r_t, z_t and the symbol u_t in B[r_t, l_t] for one vertex t."""
    t: int
    z: str
    l: str | None = None
    r: str | None = None
    u: str | None = None


@dataclass
class MinDitData:
    K: object
    h: Poly
    marked: str
    unmarked: list
    blocks: dict            # (left, right) -> [symbol]
    pairs: dict             # v -> {(w2, w1): BiPoly}
    designated: list        # [Designation]
    triples: dict | None = None     # v -> {(w3, w2, w1): BiPoly} when supplied
    columns: list | None = None     # explicit column order
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.ends = {}
        for (left, right), names in self.blocks.items():
            for n in names:
                if n in self.ends:
                    raise MalformedSpec(f"symbol {n!r} appears in two blocks")
                self.ends[n] = (left, right)

    @property
    def rows(self) -> list:
        return list(self.blocks.get((self.marked, self.marked), []))

    @property
    def c0(self) -> int:
        return len(self.rows)

    def block(self, left, right) -> list:
        return self.blocks.get((left, right), [])

    def pair(self, v, w2, w1) -> BiPoly:
        return self.pairs.get(v, {}).get((w2, w1), BiPoly({}, self.K))

    # triple coefficients ----------------------------------------------------

    def triple_components(self, v) -> dict:
        """All nonzero triple coefficients of v, supplied or derived via (delta x 1) delta."""
        if self.triples is not None:
            return dict(self.triples.get(v, {}))
        return _outer_left(self, v)

    def triple(self, v, w3, w2, w1) -> BiPoly:
        return self.triple_components(v).get((w3, w2, w1), BiPoly({}, self.K))

    def columns_default(self) -> list:
        """Triples (w2, t, w1) first, then pairs (w2, w1), without repeats."""
        cols, seen = [], set()
        m = self.marked
        for d in self.designated:
            if d.u is None:
                continue
            for w2 in self.block(m, d.r):
                for w1 in self.block(d.l, m):
                    key = (w2, d.u, w1)
                    if key not in seen:
                        seen.add(key)
                        cols.append(("triple", w2, d.t, w1))
        for z in dict.fromkeys(d.z for d in self.designated):
            for w2 in self.block(m, z):
                for w1 in self.block(z, m):
                    cols.append(("pair", w2, w1))
        return cols

    @property
    def column_keys(self) -> list:
        return list(self.columns) if self.columns is not None else self.columns_default()

    def u_of(self, t) -> str:
        for d in self.designated:
            if d.t == t:
                return d.u
        raise MalformedSpec(f"no designated vertex {t}")

    def coefficient(self, v, col) -> BiPoly:
        if col[0] == "pair":
            return self.pair(v, col[1], col[2])
        _, w2, t, w1 = col
        return self.triple(v, w2, self.u_of(t), w1)

    def admits(self, lam) -> bool:
        return bool(self.h(lam))


def _outer_left(d: MinDitData, v) -> dict:
    """(delta x 1) delta(v) restricted to tensors w3 (x) w2 (x) w1."""
    out = {}
    for (w2p, w1), c in d.pairs.get(v, {}).items():
        for (w3, w2), e in d.pairs.get(w2p, {}).items():
            key = (w3, w2, w1)
            out[key] = out.get(key, BiPoly({}, d.K)) + c * e
    return {k: c for k, c in out.items() if c}


def _outer_right(d: MinDitData, v) -> dict:
    """(1 x delta) delta(v) restricted to tensors w3 (x) w2 (x) w1."""
    out = {}
    for (w3, w1p), c in d.pairs.get(v, {}).items():
        for (w2, w1), e in d.pairs.get(w1p, {}).items():
            key = (w3, w2, w1)
            out[key] = out.get(key, BiPoly({}, d.K)) + c * e
    return {k: c for k, c in out.items() if c}


def coassociativity_defects(d: MinDitData) -> list:
    """Components where (delta x 1) delta and (1 x delta) delta disagree."""
    bad = []
    for v in d.rows:
        left, right = _outer_left(d, v), _outer_right(d, v)
        for key in sorted(set(left) | set(right)):
            zero = BiPoly({}, d.K)
            if left.get(key, zero) != right.get(key, zero):
                bad.append((v, key))
    return bad


# loading and dumping -----------------------------------------------------------

def _split_key(key: str, n: int, what: str) -> tuple:
    parts = tuple(p.strip() for p in key.split(","))
    if len(parts) != n or not all(parts):
        raise MalformedSpec(f"{what} key {key!r} should name {n} symbols separated by commas")
    return parts


def load_ditalgebra(spec: dict, K=None) -> MinDitData:
    """Validate a ditalgebra spec dictionary and build MinDitData."""
    if not isinstance(spec, dict):
        raise MalformedSpec("ditalgebra spec must be a JSON object")
    try:
        K = K or field_from_spec(spec.get("field", "Q"))
    except ValidationError as exc:
        raise MalformedSpec(f"field: {exc}") from None
    for key in ("h", "points", "basis"):
        if key not in spec:
            raise MalformedSpec(f"missing field {key!r}")
    try:
        h = parse_poly(spec["h"], K)
    except ValidationError as exc:
        raise MalformedSpec(f"h: {exc}") from None
    if not h:
        raise MalformedSpec("h: localizing polynomial must be nonzero")
    points = spec["points"]
    marked = points.get("marked")
    unmarked = list(points.get("unmarked", []))
    if not isinstance(marked, str):
        raise MalformedSpec("points.marked must name exactly one marked point")
    allpts = [marked] + unmarked
    if len(set(allpts)) != len(allpts):
        raise MalformedSpec("points: repeated point name")
    blocks = {}
    for key, names in spec["basis"].items():
        try:
            left, right = (p.strip() for p in key.split("|"))
        except ValueError:
            raise MalformedSpec(f"basis key {key!r} must have the form \"target|source\"") from None
        if left not in allpts or right not in allpts:
            raise MalformedSpec(f"basis key {key!r} names an unknown point")
        blocks[(left, right)] = list(names)
    try:
        d = MinDitData(K, h.monic(), marked, unmarked, blocks, {}, [])
    except MalformedSpec:
        raise
    ends = d.ends

    def coeff(text, where):
        try:
            return parse_bipoly(text, K)
        except ValidationError as exc:
            raise MalformedSpec(f"{where}: {exc}") from None

    def check_vars(c, left, right, where):
        if c.deg_y > 0 and left != marked:
            raise MalformedSpec(f"{where}: y acts on the left leg, which is not the marked point")
        if c.deg_x > 0 and right != marked:
            raise MalformedSpec(f"{where}: x acts on the right leg, which is not the marked point")

    for v, comps in spec.get("delta", {}).items():
        if v not in ends:
            raise MalformedSpec(f"delta: unknown symbol {v!r}")
        vl, vr = ends[v]
        out = {}
        for key, text in comps.items():
            w2, w1 = _split_key(key, 2, f"delta.{v}")
            for w in (w2, w1):
                if w not in ends:
                    raise MalformedSpec(f"delta.{v}: unknown symbol {w!r}")
            (l2, r2), (l1, r1) = ends[w2], ends[w1]
            if l2 != vl or r1 != vr or r2 != l1:
                raise MalformedSpec(f"delta.{v}: {w2} (x) {w1} does not run from {vr} to {vl}")
            if r2 == marked:
                raise MalformedSpec(f"delta.{v}: components through the marked point are not stored")
            c = coeff(text, f"delta.{v}.{key}")
            check_vars(c, vl, vr, f"delta.{v}.{key}")
            if c:
                out[(w2, w1)] = c
        d.pairs[v] = out

    des = spec.get("designated", {})
    zs = list(des.get("z", []))
    ls, rs, us = (list(des.get(k, [])) for k in ("l", "r", "u"))
    n = len(zs)
    for name, lst in (("l", ls), ("r", rs), ("u", us)):
        if lst and len(lst) != n:
            raise MalformedSpec(f"designated.{name} must have one entry per vertex ({n})")
    for t in range(n):
        l = ls[t] if ls else None
        r = rs[t] if rs else None
        u = us[t] if us else None
        for nm, p in (("z", zs[t]), ("l", l), ("r", r)):
            if p is not None and p not in unmarked:
                raise MalformedSpec(f"designated.{nm}[{t}] = {p!r} is not an unmarked point")
        if (u is None) != (l is None) or (u is None) != (r is None):
            raise MalformedSpec(f"designated vertex {t + 1}: l, r and u must be given together")
        if u is not None and ends.get(u) != (r, l):
            raise MalformedSpec(f"designated.u[{t}] = {u!r} is not in B[{r}, {l}]")
        d.designated.append(Designation(t + 1, zs[t], l, r, u))

    if "triples" in spec and spec["triples"] is not None:
        d.triples = {}
        for v, comps in spec["triples"].items():
            if v not in ends:
                raise MalformedSpec(f"triples: unknown symbol {v!r}")
            out = {}
            for key, text in comps.items():
                w3, w2, w1 = _split_key(key, 3, f"triples.{v}")
                for w in (w3, w2, w1):
                    if w not in ends:
                        raise MalformedSpec(f"triples.{v}: unknown symbol {w!r}")
                c = coeff(text, f"triples.{v}.{key}")
                if c:
                    out[(w3, w2, w1)] = c
            d.triples[v] = out
    if "columns" in spec and spec["columns"] is not None:
        d.columns = [_parse_column(c, d) for c in spec["columns"]]
    if "rows" in spec and spec["rows"] is not None:
        rows = list(spec["rows"])
        if sorted(rows) != sorted(d.rows):
            raise MalformedSpec("rows must list the symbols of B[f0, f0]")
        blocks[(marked, marked)] = rows

    defects = coassociativity_defects(d)
    if defects:
        msg = f"coassociativity fails on {len(defects)} component(s), first {defects[0]}"
        if d.triples is None:
            raise MalformedSpec(msg)
        warnings.warn(msg + "; using the supplied triples", stacklevel=2)
        d.notes.append(msg)
    return d


def _parse_column(c, d: MinDitData):
    if not isinstance(c, list) or len(c) not in (2, 3):
        raise MalformedSpec(f"column {c!r} must be [w2, w1] or [w2, t, w1]")
    if len(c) == 2:
        col = ("pair", c[0], c[1])
    else:
        col = ("triple", c[0], int(c[1]), c[2])
        d.u_of(col[2])
    for w in (col[1], col[-1]):
        if w not in d.ends:
            raise MalformedSpec(f"column {c!r}: unknown symbol {w!r}")
    return col


def dump_ditalgebra(d: MinDitData) -> dict:
    out = {
        "field": d.K.spec(),
        "h": format_poly(d.h),
        "points": {"marked": d.marked, "unmarked": list(d.unmarked)},
        "basis": {f"{l}|{r}": list(names) for (l, r), names in d.blocks.items()},
        "delta": {v: {f"{w2},{w1}": format_bipoly(c) for (w2, w1), c in comps.items()}
                  for v, comps in d.pairs.items() if comps},
        "designated": {
            "z": [x.z for x in d.designated],
            "l": [x.l for x in d.designated] if any(x.u for x in d.designated) else [],
            "r": [x.r for x in d.designated] if any(x.u for x in d.designated) else [],
            "u": [x.u for x in d.designated] if any(x.u for x in d.designated) else [],
        },
        "rows": d.rows,
    }
    if d.triples is not None:
        out["triples"] = {v: {",".join(k): format_bipoly(c) for k, c in comps.items()}
                          for v, comps in d.triples.items() if comps}
    if d.columns is not None:
        out["columns"] = [column_label(c) for c in d.columns]
    return out


def column_label(col) -> list:
    return [col[1], col[2]] if col[0] == "pair" else [col[1], col[2], col[3]]


# lambda- and x-forms of compositions ------------------------------------------

def compose_lambda(d: MinDitData, term: tuple, lam) -> dict:
    """c^v_term(lam, lam) for every v in B[f0, f0]; term is (w2, w1) or (w2, t, w1)."""
    lam = d.K(lam)
    if not d.admits(lam):
        raise OutsideDh(f"h({lam}) = 0")
    col = ("pair",) + tuple(term) if len(term) == 2 else ("triple",) + tuple(term)
    return {v: d.coefficient(v, col)(lam, lam) for v in d.rows}


def compose_x(d: MinDitData, term: tuple) -> dict:
    """The x-form: c^v_term(x, x) as rational functions."""
    col = ("pair",) + tuple(term) if len(term) == 2 else ("triple",) + tuple(term)
    return {v: RatFun(d.coefficient(v, col).diagonal()) for v in d.rows}


# coefficient matrices and the rank criterion ------------------------------------

@dataclass
class CoefficientMatrices:
    rows: list
    columns: list
    Cxy: Matrix     # c0 x c1 over K[x, y]
    Cx: Matrix      # c1 x c0 over K(x), diagonal substitution, transposed
    data: MinDitData

    def at(self, lam) -> Matrix:
        """C(lam), c1 x c0 over the ground field."""
        lam = self.data.K(lam)
        if not self.data.admits(lam):
            raise OutsideDh(f"h({lam}) = 0")
        return evaluate(self.Cx, lam)


def coefficient_matrices(d: MinDitData) -> CoefficientMatrices:
    cols = d.column_keys
    R = BiPolyRing(d.K)
    Cxy = Matrix([[d.coefficient(v, c) for c in cols] for v in d.rows], R, ncols=len(cols))
    F = RatFunField(d.K)
    Cx = Matrix([[RatFun(Cxy.rows[i][j].diagonal()) for i in range(d.c0)] for j in range(len(cols))],
                F, ncols=d.c0)
    return CoefficientMatrices(d.rows, cols, Cxy, Cx, d)


def solve_brick_equations(d: MinDitData, lam=None, cm: CoefficientMatrices | None = None):
    """D with D C = I for C = C(lam), or C(x) when lam is None; None if unsolvable."""
    cm = cm or coefficient_matrices(d)
    C = cm.Cx if lam is None else cm.at(lam)
    return solve_left_inverse(C)


@dataclass
class RankReport:
    exact_rank: int
    c0: int
    c1: int
    sampled: list           # [(lam, rank)]
    exceptional: list       # lam where the rank of C(lam) may drop
    sampled_agreement: bool

    @property
    def generic_brick_flag(self) -> bool:
        return self.exact_rank == self.c0


def rank_criterion(d: MinDitData, samples: int, cm: CoefficientMatrices | None = None) -> RankReport:
    if samples < 1:
        raise ValidationError("samples must be at least 1")
    cm = cm or coefficient_matrices(d)
    C = cm.Cx
    r = mat_rank(C)
    exceptional = []
    if r > 0:
        g = None
        for _, _, m in minors(C, r):
            if m:
                g = m.num if g is None else poly_gcd(g, m.num)
        roots, _ = ground_roots(g) if g is not None and g.degree > 0 else ([], None)
        exceptional = list(dict.fromkeys(roots))
    pts = list(islice((lam for lam in d.K.sample_points() if d.admits(lam)), samples))
    sampled = [(lam, mat_rank(evaluate(C, lam)) if C.nrows and C.ncols else 0) for lam in pts]
    agree = all(rk == r or lam in exceptional for lam, rk in sampled)
    return RankReport(r, d.c0, len(cm.columns), sampled, exceptional, agree)


# normal form and localization -----------------------------------------------

def check_normal(C: Matrix) -> bool:
    """c[i][j] = 0 for i > j and c[i][i] != 0, for i, j < c0."""
    c0, c1 = C.shape
    if c1 < c0:
        return False
    for i in range(c0):
        if not C.rows[i][i]:
            return False
        if any(C.rows[i][j] for j in range(i)):
            return False
    return True


def _kyx_rank(cols: list, ground) -> int:
    Ky = RatFunField(ground)
    ring = PolyRing(Ky)
    if not cols:
        return 0
    rows = [[bipoly_to_kyx(c[i], Ky) for c in cols] for i in range(len(cols[0]))]
    return bareiss(rows, ring)[0]


@dataclass
class Normalization:
    data: MinDitData        # d'
    A: Matrix               # unimodular over k(y)[x]
    g: Poly
    permutation: list       # old column index for each new column
    exponents: list         # power of g(y) applied to each row
    scaled: Matrix          # diag(g(y)^m) A as a matrix over K[x, y]
    det: RatFun             # det A, a unit of k[y]_g


def _primed(name: str, taken: set) -> str:
    new = name + "'"
    while new in taken:
        new += "'"
    return new


def normalize_by_localization(d: MinDitData) -> Normalization:
    cm = coefficient_matrices(d)
    C = cm.Cxy
    c0, c1 = C.shape
    K = d.K
    R = BiPolyRing(K)
    ident_perm = list(range(c1))
    if check_normal(C):
        return Normalization(d, Matrix.identity(c0, PolyRing(RatFunField(K))), Poly.const(1, K),
                             ident_perm, [0] * c0, Matrix.identity(c0, R), RatFunField(K).one)
    columns = [[C.rows[i][j] for i in range(c0)] for j in range(c1)]
    chosen = []
    for j in range(c1):
        if len(chosen) == c0:
            break
        if _kyx_rank([columns[k] for k in chosen + [j]], K) == len(chosen) + 1:
            chosen.append(j)
    if len(chosen) < c0:
        raise RankDeficient(f"C(x, y) has rank {len(chosen)} < c0 = {c0}")
    perm = None
    if c0 <= 6:
        for order in itertools.permutations(chosen):
            trial = C.submatrix(range(c0), order)
            if check_normal(trial):
                perm = list(order)
                break
    if perm is not None:
        A = Matrix.identity(c0, PolyRing(RatFunField(K)))
        g = Poly.const(1, K)
        scaled = Matrix.identity(c0, R)
        exps = [0] * c0
        det_a = RatFunField(K).one
    else:
        perm = chosen
        A, det_a, g = hermite_triangularize(C.submatrix(range(c0), perm))
        exps, rows = [], []
        gy = Poly.const(RatFun(g), A.K.ground)
        for i in range(c0):
            m = 0
            row = list(A.rows[i])
            while not all(cf.is_polynomial() for p in row for cf in p.c):
                if m > 64:
                    raise ArithmeticError("could not clear denominators of A")
                row = [p * gy for p in row]
                m += 1
            exps.append(m)
            rows.append([kyx_to_bipoly(p) for p in row])
        scaled = Matrix(rows, R, ncols=c0)
    full_perm = perm + [j for j in range(c1) if j not in perm]
    new_cols = [cm.columns[j] for j in full_perm]
    d2 = _transform(d, scaled, g, new_cols)
    check = coefficient_matrices(d2).Cxy
    expected = scaled @ C.submatrix(range(c0), full_perm)
    if check != expected or not check_normal(check):
        raise ArithmeticError("normalization failed verification")
    return Normalization(d2, A, g, full_perm, exps, scaled, det_a)


def _transform(d: MinDitData, S: Matrix, g: Poly, columns: list) -> MinDitData:
    """Rebase B[f0, f0] along the rows of S and localize h by g."""
    K = d.K
    old = d.rows
    taken = set(d.ends)
    new = []
    for v in old:
        n = _primed(v, taken)
        taken.add(n)
        new.append(n)
    blocks = {k: (list(new) if k == (d.marked, d.marked) else list(v)) for k, v in d.blocks.items()}
    zero = BiPoly({}, K)
    pairs = {v: dict(c) for v, c in d.pairs.items() if v not in old}
    triples = {}
    for i, vn in enumerate(new):
        pcomp, tcomp = {}, {}
        for j, vo in enumerate(old):
            a = S.rows[i][j]
            if not a:
                continue
            for key, c in d.pairs.get(vo, {}).items():
                pcomp[key] = pcomp.get(key, zero) + a * c
            for key, c in d.triple_components(vo).items():
                tcomp[key] = tcomp.get(key, zero) + a * c
        pairs[vn] = {k: c for k, c in pcomp.items() if c}
        triples[vn] = {k: c for k, c in tcomp.items() if c}
    h = (d.h * g).monic()
    out = MinDitData(K, h, d.marked, list(d.unmarked), blocks, pairs, list(d.designated),
                     triples, list(columns))
    return out


# the factorization of radical generic endomorphisms -----------------------------

@dataclass
class RadMorphism:
    """A radical morphism given by coefficients on one block B[f', f].

    ``source`` and ``target`` are tags: "S_lambda", "S_f" or "generic".
    Coefficients are scalars, rational functions, or LazyLinearMaps for the
    generic endomorphism case.
    """
    source: str
    target: str
    block: tuple
    coeffs: dict

    def check(self, d: MinDitData):
        names = set(d.block(*self.block))
        stray = [v for v in self.coeffs if v not in names]
        if stray:
            raise ValidationError(f"symbols {stray} are not in B{self.block}")
        return self


@dataclass
class FactorTerm:
    """sign * (f_{w2,p} o f_{u_t} o f_{w1}) for triples, sign * (f_{w2,p} o f_{w1}) for pairs."""
    column: tuple
    p: LazyLinearMap
    sign: int
    row: int

    @property
    def through(self) -> str:
        if self.column[0] == "pair":
            return "S"
        return "gamma"


def factor_radical_generic(d: MinDitData, row: int, q: LazyLinearMap, demands=()) -> list:
    """Write f_{v_row, q} as a signed sum of maps through S^x_z or f^x_{u_t}.

    ``row`` counts from 1.  The result is checked on ``demands``: for every
    row s the summed operators agree with q (s = row) or 0 (s != row).
    """
    cm = coefficient_matrices(d)
    C = cm.Cxy
    if not check_normal(C):
        raise NotNormal("coefficient matrix is not normal; run normalize_by_localization first")
    if not 1 <= row <= d.c0:
        raise ValidationError(f"row must be between 1 and {d.c0}")
    demands = list(demands)
    terms = _factor(C, cm.columns, row - 1, q, 1, demands)
    op = term_operator(d, terms, cm)
    K = q.K
    for s in range(d.c0):
        target = q if s == row - 1 else None
        for z in demands:
            want = target(z) if target is not None and not target.is_zero else RatFun(Poly((), K))
            if op.coeffs[d.rows[s]](z) != want:
                raise ArithmeticError(f"factorization check failed at row {s + 1}, {z}")
    return terms


def _factor(C, columns, i, q, sign, demands) -> list:
    if q.is_zero:
        return []
    p = solve_convolution(C.rows[i][i], q, demands)
    out = [FactorTerm(columns[i], p, sign, i + 1)]
    for j in range(i):
        c = C.rows[j][i]
        if c:
            out += _factor(C, columns, j, apply_c(p, c), -sign, demands)
    return out


def term_operator(d: MinDitData, terms: list, cm: CoefficientMatrices | None = None) -> RadMorphism:
    """psi(v_s) = sum sign * p_{c_{s, column}} for the given terms."""
    cm = cm or coefficient_matrices(d)
    K = d.K
    col_index = {c: j for j, c in enumerate(cm.columns)}
    parts = {}
    for s, v in enumerate(d.rows):
        pieces = []
        for t in terms:
            c = cm.Cxy.rows[s][col_index[t.column]]
            if c:
                pieces.append((t.sign, apply_c(t.p, c)))
        parts[v] = _signed_sum(pieces, K)
    m = d.marked
    return RadMorphism("generic", "generic", (m, m), parts)


def _signed_sum(pieces, K) -> LazyLinearMap:
    if not pieces:
        return zero_map(K)

    def rule(b):
        out = RatFun(Poly((), K))
        for sign, op in pieces:
            val = op.basis_value(b)
            out = out + val if sign > 0 else out - val
        return out
    return LazyLinearMap(rule, K, "psi")


def rad_dimension(d: MinDitData, target: str, source: str) -> int:
    """Dimension of rad(S_source, S_target) between simples: |B[target, source]|."""
    return len(d.block(target, source))
