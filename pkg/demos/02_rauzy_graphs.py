"""Rauzy graphs, central labels and projections.

Every edge of the order-4 Fibonacci graph projects onto an edge of the
order-2 graph by trimming one letter on each side, and the middle letter
survives the trim.
"""

from rauzy import build_language, build_rauzy, central_label, export_dot, load_preset, project

fib = build_language(load_preset("fibonacci"), 20)
g2, g4 = build_rauzy(fib, 2), build_rauzy(fib, 4)

print(export_dot(g2))
for e in g4.edges:
    p = project(g4, 2, e)
    print(f"{e} (label {central_label(g4, e)}) -> {p} (label {central_label(g2, p)})")
