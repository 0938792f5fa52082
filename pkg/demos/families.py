"""
One-parameter families over the Kronecker quiver
================================================

Three families over 1 ==a,b==> 2, each given by matrices over k[x]_h.
For each we compare the End dimension of the generic module (over k(x))
with the End dimensions of the specializations M(lambda).
"""

from brickwork import io
from brickwork.family import genericize, specialize, theorem_verdict
from brickwork.modules import end_dimension

kronecker = io.load_algebra(io.load_fixture("kronecker.algebra.json"))

# a = 1, b = x: the regular simples, one for each lambda
regular = io.load_realization(kronecker, io.load_fixture("kronecker.realization.json"))
print(theorem_verdict(regular, 10).summary())
print()

# a = I, b = Jordan block: every member has a nilpotent endomorphism
jordan = io.load_realization(kronecker, io.load_fixture("jordan.realization.json"))
print(theorem_verdict(jordan, 10).summary())
print()

# Dimension vector (1, 2).  Generically preprojective, but at lambda = 0
# the map b vanishes and the module splits off a simple.
splitting = io.load_realization(kronecker, {
    "h": "1",
    "dims": {"1": 1, "2": 2},
    "maps": {"a": [["1"], ["0"]], "b": [["0"], ["x"]]},
})
print("generic End dimension:", end_dimension(genericize(splitting)))
for lam in range(-2, 3):
    print(f"  lambda = {lam:2d}: End dimension {end_dimension(specialize(splitting, lam))}")

report = theorem_verdict(splitting, 10)
print("strict verdict:", report.label, "exceptions:", [str(v) for v in report.exceptions])
print("allowing one exception:", theorem_verdict(splitting, 10, max_exceptions=1).label)
