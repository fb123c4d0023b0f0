"""Enumerated free Lie superalgebra dimensions against the counting formulas."""

import sys

from liesuper.freesuper import GradedAlphabet, build_truncated, dims_petrogradsky, super_witt

m, n, top = (int(a) for a in sys.argv[1:4]) if len(sys.argv) == 4 else (1, 1, 6)
alphabet = GradedAlphabet.standard(m, n)
F = build_truncated(alphabet, top)
print(f"alphabet ({m}|{n}), degrees 1..{top}")
for d in range(1, top + 1):
    md = F.multidegree_dims(d)
    sw = sum(super_witt(a, alphabet.parities) for a in md)
    pet = dims_petrogradsky(m, n, d)
    print(f"  degree {d}: built {sum(md.values()):4}  super-Witt {sw:4}  closed form {pet.dim_r:4} (+{pet.dim_r_plus} / -{pet.dim_r_minus})")
