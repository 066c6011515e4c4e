"""Decomposing regular representations of dihedral quandles.

The regular representation acts by permutation matrices, its invariant
subspaces are those of the (dihedral) inner automorphism group, and the
decomposition into irreducibles can be obtained two independent ways:
numerically, by averaging a random Hermitian matrix into the commutant and
splitting along its eigenspaces, or in closed form from root-of-unity
coefficient vectors over the orbit difference bases.  Both must agree.
"""

from quandlelab.dihedral_reps import dihedral_closed_form, matrix_forms
from quandlelab.quandles import dihedral, inner_group, is_dihedral_group
from quandlelab.reps import decompose, regular_rep


def show(n):
    Q = dihedral(n)
    inn = inner_group(Q)
    _, m = is_dihedral_group(inn)
    print(f"= order {n}:  Inn = D_{m} (order {inn.order}) =")
    decomp = decompose(regular_rep(Q))
    closed = dihedral_closed_form(n)
    print(f"{'dim':>4}  {'label':<9} generator")
    for part in closed.parts:
        print(f"{part.dim:>4}  {str(part.label):<9} {part.generator_desc}")
    match = decomp.label_multiset() == closed.label_multiset()
    print(f"generic decomposition agrees: {match}")
    print()


for n in (10, 11, 12):
    show(n)

print("= translation operators in the even difference basis, order 12 =")
mf = matrix_forms(12, "even")
print(f"operators: translations by {mf.operators}")
print("first (negated anti-diagonal):")
print(mf.first)
print("second (leading column of ones):")
print(mf.second)
