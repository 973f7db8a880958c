"""Sign words and their alternation count.

A sign word assigns R, B or 0 to each of the positions 1..n.  The key
quantity is the length of a longest alternating subsequence of its
nonzero entries; a linear ordering decides which vertex each position
labels, and a word restricted to a hypergraph keeps the edges that fit
inside a single color class.
"""

from altermatic import (
    LinearOrder,
    SignVector,
    alt,
    apply_order,
    complete_uniform,
    restrict,
    support_size,
)

x = SignVector.from_word("RRBB0R0RB")
print(f"word {x.word()}: alt = {alt(x)}, nonzero entries = {support_size(x)}")

# the all-zero word and a fully alternating one bracket the range
print(f"word {'0' * 6}: alt = {alt(SignVector(6))}")
print(f"word RBRBRB: alt = {alt(SignVector.from_word('RBRBRB'))}")

# an ordering relabels positions to vertices: slot j names vertex perm[j]
order = LinearOrder((2, 3, 1))
y = SignVector.from_word("RB0")
labeled = apply_order(y, order)
print(f"\nword {y.word()} under ordering {order.perm}:")
print(f"  red vertices  {labeled.reds:03b} (mask), i.e. vertex 2")
print(f"  blue vertices {labeled.blues:03b} (mask), i.e. vertex 3")

# restriction: keep the edges inside one color class
h = complete_uniform(4, 2)
z = SignVector.from_sets(4, reds=[1, 2], blues=[3])
sub = restrict(h, z)
print(f"\nall 2-subsets of [4] restricted to reds={{1,2}}, blues={{3}}:")
print(f"  surviving edges {sub.edge_sets()} (indices {sub.origin} in the parent)")
