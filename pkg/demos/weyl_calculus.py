"""Weyl-group calculus: Demazure products, thickening, positive factorizations.

Everything runs inside integer matrix groups, so the same code drives the
symmetric groups, type B, and the infinite groups produced by thickening.
"""

from tnnflag.cartan import cartan_of_type, thicken
from tnnflag.weyl import WeylGroup, i_embed, positive_tuple, th_element, th_word

A2 = WeylGroup(cartan_of_type("A", 2))
s1, s2 = A2.simple(0), A2.simple(1)
w0 = A2.from_word((0, 1, 0))

print("Demazure product is a monoid operation absorbing descents:")
print(f"  s1 * s1        = {A2.demazure(s1, s1).describe()}")
print(f"  s1 * s2        = {A2.demazure(s1, s2).describe()}")
print(f"  s1s2 * s2s1    = {A2.demazure(A2.multiply(s1, s2), A2.multiply(s2, s1)).describe()}")
print(f"  w0 circ_r s1   = {A2.circ_r(w0, s1).describe()}  (minimal coset companion)")
print()

print("Thickening A2 for three factors couples two new vertices to everything:")
thick = thicken(A2.gcm, 3)
for row, label in zip(thick.entries, thick.labels):
    print(f"  {label:>5s} {list(row)}")
print()

T = A2.thickened(2)
wbar = (A2.multiply(s1, s2), A2.multiply(s2, s1))
print(f"two factors {[w.describe() for w in wbar]}:")
print(f"  interleaved word      = {th_word(T, wbar)}  (letter 2 is the new vertex)")
print(f"  th element length     = {th_element(T, wbar).length} = 2 + 1 + 2")
print(f"  m_star                = {A2.m_star(wbar).describe()}")
print()

print("positive factorizations of v below the Demazure product:")
for v in A2.lower_interval(A2.m_star(wbar)):
    vbar = positive_tuple(v, wbar)
    print(f"  {v.describe():>10s}  ->  ({vbar[0].describe()}, {vbar[1].describe()})")
print()

print("the embedded copy preserves Bruhat order:")
for v in (s1, A2.multiply(s1, s2)):
    lhs = A2.bruhat_leq(v, A2.m_star(wbar))
    rhs = T.bruhat_leq(i_embed(T, v), th_element(T, wbar))
    print(f"  v = {v.describe():8s} v <= m_star {lhs},  i(v) <= th(wbar) {rhs}")
