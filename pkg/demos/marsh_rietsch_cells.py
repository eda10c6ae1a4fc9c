"""Exact positive parametrization of SL3 twisted-product strata.

Each nonempty stratum (v, wbar) carries parameters: one positive rational
per letter of the factor words skipped by the positive factorization.
The resulting matrices identify their own stratum through rank conditions,
so the parametrization theorem is machine-checked on every build.
"""

from fractions import Fraction

from tnnflag import parametrize_cell, stratum, type_a_group
from tnnflag.twisted import alpha

group = type_a_group(3)
s1, s2 = group.simple(0), group.simple(1)
w0 = group.from_word((0, 1, 0))

wbar = (group.multiply(s1, s2), group.multiply(s2, s1))
print(f"factor tuple wbar = {[w.describe() for w in wbar]}, m_star = {group.m_star(wbar).describe()}")
print()

for v in (group.identity, s1, group.multiply(s1, s2), w0):
    dim = sum(w.length for w in wbar) - v.length
    params = [Fraction(i + 1, 2) for i in range(dim)]
    z = parametrize_cell(v, wbar, params)
    sv, swbar = stratum(z)
    print(f"cell ({v.describe()}; {','.join(w.describe() for w in wbar)})  dim {dim}")
    for idx, g in enumerate(z.factors):
        rows = ["[" + " ".join(f"{x!s:>4s}" for x in row) + "]" for row in g]
        print(f"    g{idx + 1} = {rows[0]}")
        for r in rows[1:]:
            print(f"         {r}")
    print(f"    identified stratum: ({sv.describe()}; {','.join(w.describe() for w in swbar)})")
    print()

print("the partial-product flags (alpha) separate gauge classes:")
z = parametrize_cell(s1, wbar, [Fraction(1), Fraction(2), Fraction(3)])
for idx, f in enumerate(alpha(z)):
    print(f"  flag {idx + 1} canonical form: {[[str(x) for x in row] for row in f.canonical()]}")
