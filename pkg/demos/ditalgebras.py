"""
Coefficient matrices of a minimal ditalgebra
============================================

Analyze, normalize and factor, using the shipped fixtures.
"""

from brickwork import io
from brickwork.convolution import Monomial, Pole, identity_map
from brickwork.ditalgebra import (coefficient_matrices, factor_radical_generic, load_ditalgebra,
                                  normalize_by_localization, rank_criterion, solve_brick_equations,
                                  term_operator)
from brickwork.fields import QQ

for name in ("dit_xy", "dit_xminusy", "dit_two_generator"):
    d = load_ditalgebra(io.load_fixture(f"{name}.json"))
    rep = rank_criterion(d, 8)
    print(f"{name}: c0 = {rep.c0}, rank C(x) = {rep.exact_rank}, flag {rep.generic_brick_flag}, "
          f"rank drops at {[str(v) for v in rep.exceptional]}")

d = load_ditalgebra(io.load_fixture("dit_xy.json"))
print("D(x) for xy:", solve_brick_equations(d).rows)

# A coefficient matrix that is not yet normal
skew = load_ditalgebra(io.load_fixture("dit_skew.json"))
print(coefficient_matrices(skew).Cxy)
n = normalize_by_localization(skew)
print("after localizing at g =", n.g, ":")
print(coefficient_matrices(n.data).Cxy)

# Factor the identity on row 2 of a normal fixture; row 1 picks up a correction
two_row = load_ditalgebra(io.load_fixture("dit_two_row.json"))
demands = [Monomial(0), Monomial(1), Pole(QQ(1), 2)]
terms = factor_radical_generic(two_row, 2, identity_map(QQ), demands)
for t in terms:
    print(f"  {'+' if t.sign > 0 else '-'} term from row {t.row} through {t.through}, column {t.column[1:]}")
op = term_operator(two_row, terms)
for v in two_row.rows:
    print(f"  {v}: ", [str(op.coeffs[v](z)) for z in demands])
