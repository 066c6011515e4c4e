"""Where quandle representations part ways with group representations.

Sending one orbit of a quandle to a single Jordan block and the rest to
the identity is always a valid representation, and when the block is not
diagonalizable the obvious invariant line has no invariant complement:
complete reducibility fails, which can never happen for a finite group.
The same flavor of example gives a quandle homomorphism of the symmetric
group S3 (under conjugation) that is not a group homomorphism.
"""

import numpy as np

from quandlelab.counterexamples import maschke_counterexample, s3_hom_demo
from quandlelab.quandles import trivial

J = np.array([[1, 1], [0, 1]], dtype=complex)

print("= two-orbit representation of the order-4 dihedral quandle =")
report = maschke_counterexample(2, J)
m = report.multiplicities
print(f"B is a 2x2 Jordan block: geometric multiplicities {m.geometric}, "
      f"algebraic {m.algebraic}")
print(f"1 + sum(geometric) == sum(algebraic): {m.criterion_holds}")
print(f"invariant complement of span{{e1}}: "
      f"{'exists' if report.complement is not None else 'none'}")
print(f"completely reducible: {report.completely_reducible} "
      f"(residual dimension {report.decomposition.residual_dim})")
print()

print("= same game with a diagonalizable B =")
report = maschke_counterexample(3, np.diag([1.0, 2.0]))
print(f"criterion holds: {report.multiplicities.criterion_holds}; "
      f"completely reducible: {report.completely_reducible}")
print()

print("= even the one-element quandle misbehaves =")
report = maschke_counterexample(0, J, Q=trivial(1))
print(f"completely reducible: {report.completely_reducible}")
print()

print("= a quandle homomorphism that is not a group homomorphism =")
print(s3_hom_demo("r").describe())
