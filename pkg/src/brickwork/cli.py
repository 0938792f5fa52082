"""Command line entry point: ``brickwork <group> <command> ...``.

Exit codes: 0 on success (and for CONSISTENT verdicts), 1 for invalid input
or usage, 2 when a family verdict is INCONSISTENT.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from . import io
from .convolution import expand_basis, identity_map, mu
from .ditalgebra import (coefficient_matrices, factor_radical_generic, load_ditalgebra,
                         normalize_by_localization, rank_criterion, solve_brick_equations)
from .errors import BrickworkError, ValidationError
from .family import INCONSISTENT, brick_scan, theorem_verdict
from .fields import field_from_spec
from .modules import end_dimension
from .p1 import canonical_decomposition, is_zero_coker
from .parsing import parse_ratfun
from .poly import RatFunField

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    def __init__(self, message: str, usage: str):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, self.format_usage())


@dataclass
class RunConfig:
    field: str | None
    count: int
    fmt: str
    out: str | None
    seed: int

    def __post_init__(self):
        if self.field is not None:
            try:
                field_from_spec(self.field)
            except ValidationError as exc:
                raise ValidationError(f"--field: {exc}") from None
        if self.count < 1:
            raise ValidationError("--count/--samples: must be at least 1")


def _common(p: argparse.ArgumentParser, count_flag: str | None = None, default_count: int = 20):
    p.add_argument("--field", help="ground field, Q or Fp:<p>; overrides the input file")
    p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    if count_flag:
        p.add_argument(count_flag, "--samples" if count_flag == "--count" else "--count",
                       dest="count", type=int, default=default_count,
                       help="number of sample points")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="brickwork", description="Bricks, generic modules and minimal ditalgebras.")
    groups = parser.add_subparsers(dest="group", metavar="{algebra,p1,family,dit}", parser_class=_Parser)
    groups.required = True

    alg = groups.add_parser("algebra", help="bound quiver algebras").add_subparsers(
        dest="command", parser_class=_Parser)
    alg.required = True
    p = alg.add_parser("check", help="validate an algebra spec, optionally test a module for brickness")
    p.add_argument("algebra")
    p.add_argument("--module", help="module spec to test")
    _common(p)

    p1 = groups.add_parser("p1", help="the category of projective presentations").add_subparsers(
        dest="command", parser_class=_Parser)
    p1.required = True
    p = p1.add_parser("decompose", help="canonical decomposition of a zero-cokernel morphism")
    p.add_argument("--algebra", required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--morphism", help="morphism spec to decompose")
    src.add_argument("--random", type=int, metavar="N", help="decompose N seeded random morphisms")
    p.add_argument("--scalars", choices=("ground", "kx"), default="ground",
                   help="scalars for --random: the ground field or k(x)")
    _common(p)

    fam = groups.add_parser("family", help="one-parameter families").add_subparsers(
        dest="command", parser_class=_Parser)
    fam.required = True
    for name, helptext in (("scan", "brick test at sample points"),
                           ("verdict", "compare the generic and sampled brick flags")):
        p = fam.add_parser(name, help=helptext)
        p.add_argument("--algebra", required=True)
        p.add_argument("--realization", required=True)
        p.add_argument("--max-exceptions", type=int, default=0)
        _common(p, "--count")

    dit = groups.add_parser("dit", help="minimal ditalgebras").add_subparsers(
        dest="command", parser_class=_Parser)
    dit.required = True
    p = dit.add_parser("analyze", help="coefficient matrices and the rank criterion")
    p.add_argument("spec")
    _common(p, "--samples")
    p = dit.add_parser("normalize", help="localize and rebase to a normal coefficient matrix")
    p.add_argument("spec")
    _common(p)
    p = dit.add_parser("factor", help="factor a radical generic endomorphism")
    p.add_argument("spec")
    p.add_argument("--row", type=int, required=True, help="row index, counting from 1")
    p.add_argument("--q", default="1", help="multiplier r(x): q is multiplication by r (default identity)")
    p.add_argument("--demand", action="append", default=None,
                   help="rational function to check on; repeatable (default 1, x, x^2, 1/(x-1)^2)")
    p.add_argument("--normalize", action="store_true", help="normalize the ditalgebra first")
    _common(p)
    return parser


# commands ------------------------------------------------------------------------

def _algebra(args, cfg):
    alg = io.load_algebra(io.read_json(args.algebra), cfg.field)
    module = end_dim = None
    if args.module:
        module = io.load_module(alg, io.read_json(args.module))
        end_dim = end_dimension(module)
    report = io.algebra_report(alg, module, end_dim)
    text = [f"algebra of dimension {alg.dim} over {alg.K.spec()}"]
    if module is not None:
        text.append(f"End dimension {end_dim}: {'brick' if end_dim == 1 else 'not a brick'}")
    return report, "\n".join(text), EXIT_OK


def _p1(args, cfg):
    from .sampling import random_object, random_zero_coker_morphism
    alg = io.load_algebra(io.read_json(args.algebra), cfg.field)
    if args.morphism:
        u = io.load_p1_morphism(alg, io.read_json(args.morphism))
        if not is_zero_coker(u):
            raise ValidationError("morphism: the induced cokernel map is nonzero")
        dec = canonical_decomposition(u)
        report = io.decomposition_report(u, dec)
        text = (f"{len(dec.gamma_terms)} term(s) through gamma_t, {len(dec.s_terms)} through S; "
                f"recomposes: {report['recomposes']}")
        return report, text, EXIT_OK
    if args.random < 1:
        raise ValidationError("--random: must be at least 1")
    K = RatFunField(alg.K) if args.scalars == "kx" else alg.K
    rng = random.Random(cfg.seed)
    ok = 0
    gammas = ss = 0
    for _ in range(args.random):
        X, Y = random_object(alg, rng, K), random_object(alg, rng, K)
        u = random_zero_coker_morphism(X, Y, rng)
        dec = canonical_decomposition(u)
        ok += dec.recompose(X, Y) == u
        gammas += len(dec.gamma_terms)
        ss += len(dec.s_terms)
    report = {"kind": "p1-random-decomposition", "cases": args.random, "recomposed": ok,
              "scalars": args.scalars, "seed": cfg.seed, "gamma_terms": gammas, "s_terms": ss}
    return report, f"{ok}/{args.random} random decompositions recompose", EXIT_OK


def _family(args, cfg):
    alg = io.load_algebra(io.read_json(args.algebra), cfg.field)
    M = io.load_realization(alg, io.read_json(args.realization))
    if args.max_exceptions < 0:
        raise ValidationError("--max-exceptions: must be nonnegative")
    if args.command == "scan":
        rep = brick_scan(M, cfg.count, args.max_exceptions)
        return io.family_report(rep), rep.summary(), EXIT_OK
    rep = theorem_verdict(M, cfg.count, args.max_exceptions)
    code = EXIT_INCONSISTENT if rep.verdict == INCONSISTENT else EXIT_OK
    return io.family_report(rep), rep.summary(), code


def _dit(args, cfg):
    spec = io.read_json(args.spec)
    K = field_from_spec(cfg.field) if cfg.field else None
    d = load_ditalgebra(spec, K)
    if args.command == "analyze":
        cm = coefficient_matrices(d)
        rank = rank_criterion(d, cfg.count, cm)
        D = solve_brick_equations(d, None, cm)
        report = io.dit_analysis_report(d, cm, rank, D)
        text = (f"c0 = {rank.c0}, c1 = {rank.c1}, rank C(x) = {rank.exact_rank}; "
                f"generic brick flag: {str(rank.generic_brick_flag).lower()}")
        return report, text, EXIT_OK
    if args.command == "normalize":
        n = normalize_by_localization(d)
        report = io.normalization_report(n, coefficient_matrices(n.data))
        return report, f"normalized with g = {report['g']}, columns {n.permutation}", EXIT_OK
    if args.normalize:
        d = normalize_by_localization(d).data
    try:
        q = identity_map(d.K) if args.q.strip() == "1" else mu(parse_ratfun(args.q, d.K), d.K)
    except ValidationError as exc:
        raise ValidationError(f"--q: {exc}") from None
    texts = args.demand or ["1", "x", "x^2", "1/(x-1)^2"]
    demands = []
    for t in texts:
        try:
            demands += [b for _, b in expand_basis(parse_ratfun(t, d.K))]
        except (ValidationError, BrickworkError) as exc:
            raise ValidationError(f"--demand {t!r}: {exc}") from None
    demands = list(dict.fromkeys(demands))
    terms = factor_radical_generic(d, args.row, q, demands)
    report = io.factor_report(d, args.row, terms, demands, args.q)
    return report, f"{len(terms)} term(s), verified on {len(demands)} basis element(s)", EXIT_OK


DISPATCH = {"algebra": _algebra, "p1": _p1, "family": _family, "dit": _dit}


def dispatch(argv) -> tuple[int, str]:
    """Run one command; returns (exit code, text written)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return EXIT_INVALID, f"{exc.usage}brickwork: error: {exc}\n"
    try:
        cfg = RunConfig(args.field, getattr(args, "count", 1), args.fmt, args.out, args.seed)
        report, text, code = DISPATCH[args.group](args, cfg)
    except (BrickworkError, ValueError) as exc:
        return EXIT_INVALID, f"brickwork: error: {exc}\n"
    body = io.dumps(report) if cfg.fmt == "json" else text + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(body)
        return code, ""
    return code, body


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    code, output = dispatch(argv)
    stream = sys.stderr if code == EXIT_INVALID else sys.stdout
    stream.write(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
