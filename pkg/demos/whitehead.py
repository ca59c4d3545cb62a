"""Whitehead's algorithm on small words in F_2: minimization, primitivity,
and the partial-basis test compared with the Farey determinant."""

import itertools

from pbcomplex.freegroup import (
    CyclicWord,
    abelianize,
    enumerate_primitive_classes,
    farey_edge,
    is_partial_basis_classes,
    is_primitive_class,
    whitehead_minimize,
)

for text in ["yxY", "xxy", "xyXY", "xxyy", "xyxYY"]:
    c = CyclicWord.parse(text, 2)
    t, total, log = whitehead_minimize((c,))
    print(f"[{text}] -> [{t[0]}] length {total} after {len(log)} moves; primitive: {is_primitive_class(c)}")

prims = enumerate_primitive_classes(2, 4)
agree = sum(is_partial_basis_classes((u, v)) == farey_edge(abelianize(u), abelianize(v)) for u, v in itertools.combinations(prims, 2))
print(f"{len(prims)} primitive classes up to length 4; pair test agrees with |det| = 1 on {agree} of "
      f"{len(prims) * (len(prims) - 1) // 2} pairs")
