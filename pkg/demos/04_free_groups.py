"""Stallings foldings.

Folding a generating set gives a finite graph from which membership and
rank are read off. The return words of a Fibonacci factor form a basis of
the free group on {a, b}; the square of a letter does not.
"""

from rauzy import FreeWord, fold, is_basis_of_full_group, member, rank

for gens in (["a", "ab"], ["aa", "b"], ["ab", "ba", "abba"]):
    sg = fold(gens)
    print(f"<{', '.join(gens)}>: {sg.num_vertices} vertices, rank {rank(sg)}, "
          f"basis: {is_basis_of_full_group(gens, 'ab')}")

sg = fold(["aa", "b"])
for text in ("a a b", "a b", "b^-1 a^-1 a^-1"):
    print(f"{text!r} in <aa, b>: {member(sg, FreeWord.parse(text))}")
