"""Factor languages of a few primitive substitutions.

Builds the Fibonacci, Tribonacci and Thue-Morse languages up to length 12
and prints their complexity functions. Sturmian words gain one factor per
length; Tribonacci gains two.
"""

from rauzy import build_language, check_primitive, complexity, load_preset

for name in ("fibonacci", "tribonacci", "thue-morse"):
    sub = load_preset(name)
    primitive, power = check_primitive(sub)
    lang = build_language(sub, 12)
    profile = [complexity(lang, k) for k in range(1, 13)]
    print(f"{name:11s} primitive at power {power}: p(k) = {profile}")

fib = build_language(load_preset("fibonacci"), 12)
print("Fibonacci factors of length 4:", ", ".join(fib.factors(4)))
