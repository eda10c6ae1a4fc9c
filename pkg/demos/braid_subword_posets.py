"""Braid posets: subwords of a fixed word keeping the full Demazure product.

For a word sbar of simple reflections with Demazure product w, the nodes
are the componentwise subwords whose Demazure product is still w.  These
posets are the face posets of totally nonnegative braid varieties; the
checks certify they look like closed balls.
"""

from itertools import product

from tnnflag import braid_poset, find_shelling, is_eulerian, is_pure, is_thin
from tnnflag.cartan import cartan_of_type
from tnnflag.posets import to_dot
from tnnflag.weyl import WeylGroup

group = WeylGroup(cartan_of_type("A", 2))

word = (0, 1, 0, 1)
poset = braid_poset(group, word)
print(f"word (s1, s2, s1, s2): Demazure product {group.m_star([group.simple(t) for t in word]).describe()}")
print(f"  nodes {len(poset)}, f-vector {poset.f_vector()}  (a closed 1-ball: two vertices, one edge)")
print()
print(to_dot(poset))
print()

print("sweep over all A2 words of length <= 4:")
for length in range(1, 5):
    for letters in product(range(2), repeat=length):
        poset = braid_poset(group, letters)
        shelling = find_shelling(poset)
        name = "".join(str(t + 1) for t in letters)
        print(
            f"  word {name:<4s} f={str(poset.f_vector()):<12s} "
            f"pure={is_pure(poset)} thin={is_thin(poset)} "
            f"eulerian={is_eulerian(poset)} shelling={shelling.status}"
        )
