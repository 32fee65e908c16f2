"""Extension graphs and the tree condition.

Fibonacci and Tribonacci have a tree as extension graph for every factor
scanned. Thue-Morse already fails at the empty word, whose extension graph
contains all four two-letter words and hence a cycle.
"""

from rauzy import build_language, extension_graph, load_preset, scan_tree_condition

for name in ("fibonacci", "tribonacci", "thue-morse", "paper-example"):
    lang = build_language(load_preset(name), 40)
    report = scan_tree_condition(lang, 10)
    print(f"{name:13s} {report.verdict:20s} witness={report.witness!r} reason={report.reason}")

tm = build_language(load_preset("thue-morse"), 10)
print(extension_graph(tm).to_dot())
