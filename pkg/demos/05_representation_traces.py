"""Evaluate the induced bracket of trace functions at exact matrix points.

Generators become seeded random rational matrices; the trace of the
multiplied bracket is then a genuine Poisson bracket of trace functions,
and its skew symmetry and Jacobi identity hold as exact rational equalities.
"""

from ncdb import MatrixPoint, check_induced_poisson, eval_trace, induced_trace_bracket
from ncdb.classify import builtin

spec, _ = builtin("mdbI")
alg = spec.algebra
p = MatrixPoint.random(alg, size=2, seed=7)

print("a seeded exact point of the 2x2 representation space:")
for i, name in enumerate(alg.names, start=1):
    print(f"  {name} ->", p.mats[i])

x1, x2 = alg.gen(1), alg.gen(2)
print("\ntrace functions and their induced bracket:")
print("  tr(x1 x2)    =", eval_trace(x1 * x2, p))
print("  tr({x1,x2})  =", induced_trace_bracket(spec, x1, x2, p))
print("  tr({x2,x1})  =", induced_trace_bracket(spec, x2, x1, p))
print("  sum          =", induced_trace_bracket(spec, x1, x2, p) + induced_trace_bracket(spec, x2, x1, p))

print("\nthe full bounded sweep of trace identities at this point:")
print(" ", check_induced_poisson(spec, p, 3).summary())

print("\nat size 1 matrices commute, so every trace bracket is skew:")
q = MatrixPoint.random(alg, size=1, seed=11)
print("  tr({x1,x2}) + tr({x2,x1}) =", induced_trace_bracket(spec, x1, x2, q) + induced_trace_bracket(spec, x2, x1, q))
