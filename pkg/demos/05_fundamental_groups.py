"""Fundamental groups of Rauzy graphs and the maps between levels.

A spanning tree turns each remaining edge into a free generator. The
projection from order 4 to order 2 then induces a homomorphism, whose
abelianization for Fibonacci is a unimodular 2 x 2 matrix.
"""

import numpy as np

from rauzy import (
    abelianization_matrix,
    build_language,
    build_rauzy,
    connecting_map,
    load_preset,
    rank_profile,
    spanning_tree,
)

fib = build_language(load_preset("fibonacci"), 40)
bases = {n: spanning_tree(build_rauzy(fib, 2 * n), fib.default_window(n).word) for n in (1, 2)}
for n, stb in bases.items():
    print(f"n = {n}: base {stb.base}, generators {stb.generators}")

q = connecting_map(bases[2], bases[1])
for s, image in q.as_table().items():
    print(f"  {s} -> {image}")
m = abelianization_matrix(q)
print(m, "det", round(np.linalg.det(m)))

for name in ("fibonacci", "tribonacci", "thue-morse"):
    lang = build_language(load_preset(name), 40)
    print(name, [r for _, r in rank_profile(lang, range(1, 6))])
