"""Stabilizer fixed spaces and the order-9 centralizer
======================================================

The code is the simultaneous fixed space of X(x)X(x)X and Z(x)Z(x)Z; the
group they generate has exactly nine elements and fixes the code pointwise.
The same construction on four qubits produces the distance-2 code there.
"""

from amecode import catalog
from amecode.groups import centralizer_containment_check, closure
from amecode.qecc import distance, kl_check, stabilizer_subspace
from amecode.tensor import apply

x3, z3 = catalog.xxx(3, 3, 12), catalog.zzz(3, 3, 12)

# The tensor cubes commute (the single-site commutation phase cubes to 1),
# so the generated group is elementary abelian of order 9.
print("X^3 Z^3 == Z^3 X^3:", x3 * z3 == z3 * x3)
group = closure([x3, z3], cap=90)
print("group order:", group.order)

# Its fixed space is exactly the code span.
sub = stabilizer_subspace([x3, z3])
print("fixed-space dimension:", sub.dimension)
print("equals the code span:", sub.span_equal(catalog.code_332()))

# Every element fixes every basis vector, each element is a phase times a
# determinant-1 product, and 648 * 9 = 5832.
print(centralizer_containment_check())

# Same story one dimension down: four qubits.
c442 = catalog.code_442()
print("four-qubit fixed space: K =", c442.dimension,
      " distance =", distance(c442),
      " pure =", kl_check(c442, 2).is_pure)

# A quick negative control: a product state is not fixed by the group.
probe = catalog.ket("010", 3, 12)
print("group fixes |010>:", all(apply(g, probe) == probe for g in group.elements))
