"""Return words and delayed return words.

For Fibonacci, every factor has exactly two return words, and cutting a
factor into two halves yields a delayed set of the same size.
"""

from rauzy import build_language, delayed_return_words, is_code, load_preset, return_words

fib = build_language(load_preset("fibonacci"), 40)
for u in ("a", "aa", "aba", "abaab"):
    print(f"R({u}) = {list(return_words(fib, u))}")

u1, u2 = "ab", "aab"
delayed = delayed_return_words(fib, u1, u2)
print(f"R({u1},{u2}) = {list(delayed)}; code: {is_code(delayed.words)[0]}")

for n in (1, 5, 10, 15):
    window = fib.default_window(n)
    rs = return_words(fib, window.word)
    print(f"n = {n:2d}: window {window.word}, shortest return {rs.min_length}")
