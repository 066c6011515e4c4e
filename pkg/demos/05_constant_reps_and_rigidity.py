"""Constant representations, power-maximal matrices, and rigidity.

A constant map x -> M is always a representation; it splits into one
indecomposable piece per Jordan block of M, and blocks of size > 1 are
reducible without being decomposable.  When a candidate generator image J
is (q-1)-th power maximal, the presentation relations pin the second
generator down to J itself; that uniqueness claim is probed here by a
seeded falsification search, and the supporting equation-system lemma is
certified with exact integer arithmetic.
"""

import numpy as np

from quandlelab.cyclic_reps import (
    JordanSpec,
    constant_rep_decompose,
    kth_power_maximal,
    rigidity_check,
)
from quandlelab.fields import build_field
from quandlelab.polysys import log_involution, system_has_no_solution
from quandlelab.quandles import trivial

print("= power maximality =")
A = JordanSpec(((1, 2), (1j, 2)))
print(f"blocks {A.blocks}: maximal for k=1..8 -> "
      f"{[A.power_maximal(k) for k in range(1, 9)]}")
B = JordanSpec(((1, 2), (2j, 2)))
print(f"blocks {B.blocks}: maximal for k=1..8 -> "
      f"{[B.power_maximal(k) for k in range(1, 9)]}")
print()

print("= constant representations decompose blockwise =")
M = JordanSpec(((2, 2), (5, 1))).matrix()
d = constant_rep_decompose(M, trivial(1))
for part in d.parts:
    extra = ""
    if part.size > 1:
        extra = (", reducible but with no invariant complement for its "
                 "eigenline")
    print(f"  U(J({part.eigenvalue.real:g}, {part.size})){extra}")
print()

print("= the fixed-point equation system, exactly =")
F5 = build_field(5)
inv = log_involution(F5, 2)
cert = system_has_no_solution(inv)
print(f"q=5, alpha=2: pairing {inv.phi[1:]}, fixed point {inv.fixed_points[0]}")
for step in cert.steps:
    print(f"  {step.poly}: gcd degree {step.degree_after}  {step.note}")
print(f"no common solutions: {cert.no_solutions}")
print()

print("= searching for a second generator other than J itself =")
spec = JordanSpec(((2, 1), (3, 1)))
print(f"J = diag(2, 3), (q-1)-power maximal: {kth_power_maximal(spec, 4)}")
report = rigidity_check(spec, F5, 2, restarts=60, seed=0)
print(f"{report.restarts} restarts: {report.converged_to_J} collapsed onto J, "
      f"{len(report.candidates)} stayed away")
print(f"counterexample below 1e-6 residual: {report.found_counterexample}")
