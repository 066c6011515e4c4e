"""How many quandles of cyclic type are there of a given order?

A quandle is of cyclic type when every right translation cycles all the
other elements; these are exactly the Alexander quandles (F_q, alpha) with
alpha primitive.  Two of them are isomorphic precisely when the primitive
elements are prime-power equivalent, so counting boils down to counting
equivalence classes: phi(q-1)/n of them for q = p^n.
"""

from quandlelab.fields import build_field, euler_phi, primitive_elements
from quandlelab.presentation import classify_cyclic, prime_power_equivalent
from quandlelab.quandles import alexander, find_isomorphism, is_cyclic_type

print("= order 5 =")
result = classify_cyclic(5)
F5 = result.field
print(f"GF(5) has primitive elements {primitive_elements(F5)}")
print(f"isomorphism classes: {result.count}")
Q2, Q3 = alexander(F5, 2), alexander(F5, 3)
print(f"both cyclic type: {is_cyclic_type(Q2)}, {is_cyclic_type(Q3)}")
print(f"isomorphic to each other: {find_isomorphism(Q2, Q3) is not None}")
print()

print("= order 125 =")
F = build_field(5, 3)
print(f"field: {F!r}")
alpha = F.from_coeffs([2, 1, 2])   # 2x^2 + x + 2
beta = F.from_coeffs([1, 2, 3])    # 3x^2 + 2x + 1
gamma = F.from_coeffs([3, 4, 3])   # 3x^2 + 4x + 3
for name, g in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
    print(f"|{name}| = {F.order(g)}  ({F.element_str(g)})")

print(f"alpha^25 == beta: {F.pow(alpha, 25) == beta}")
print(f"alpha ~ beta (prime-power): {prime_power_equivalent(F, alpha, beta)}")
print(f"alpha ~ gamma: {prime_power_equivalent(F, alpha, gamma)}")

result = classify_cyclic(125, F)
print(f"{euler_phi(124)} primitive elements fall into {result.count} classes "
      f"of {len(result.classes[0].members)}")
print(f"class of alpha: logs {[F.log(m) for m in result.class_of(alpha).members]}")
print(f"class of gamma: logs {[F.log(m) for m in result.class_of(gamma).members]}")
