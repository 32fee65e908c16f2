"""Unique decipherability of finite word sets."""

from __future__ import annotations

from collections import deque

__all__ = ["is_code", "circular_ambiguity"]


def is_code(words):
    """Sardinas-Patterson test.

    Returns ``(True, None)`` when every word over ``words`` factorizes
    uniquely, otherwise ``(False, (w, f1, f2))`` where ``f1`` and ``f2`` are
    two distinct factorizations of the word ``w``.
    """
    code = sorted(set(words))
    if not code or any(not w for w in code):
        raise ValueError("a code must be a nonempty set of nonempty words")
    # state: dangling suffix s with concat(ahead) == concat(behind) + s
    queue = deque()
    seen = set()
    for x in code:
        for y in code:
            if x != y and y.startswith(x):
                s = y[len(x):]
                if s not in seen:
                    seen.add(s)
                    queue.append((s, (y,), (x,)))
    while queue:
        s, ahead, behind = queue.popleft()
        for c in code:
            if c == s:
                w = "".join(ahead)
                return False, (w, ahead, behind + (c,))
            if c.startswith(s):
                rest = c[len(s):]
                if rest not in seen:
                    seen.add(rest)
                    queue.append((rest, behind + (c,), ahead))
            elif s.startswith(c):
                rest = s[len(c):]
                if rest not in seen:
                    seen.add(rest)
                    queue.append((rest, ahead, behind + (c,)))
    return True, None


def _factorizations(word, code):
    """All factorizations of ``word`` over ``code`` as tuples of cut offsets."""
    results = []

    def walk(i, cuts):
        if i == len(word):
            results.append(cuts)
            return
        for c in code:
            if word.startswith(c, i):
                walk(i + len(c), cuts + (i,))

    walk(0, ())
    return results


def circular_ambiguity(words, max_total=16):
    """Search concatenations of total length ``<= max_total`` for a word
    admitting two different factorizations when read on a circle.

    Returns ``None`` when none is found, else ``(w, cuts1, cuts2)`` with the
    cut positions taken modulo ``len(w)``.
    """
    code = sorted(set(words))
    concatenations = set()
    frontier = {""}
    while frontier:
        nxt = set()
        for w in frontier:
            for c in code:
                v = w + c
                if len(v) <= max_total and v not in concatenations:
                    concatenations.add(v)
                    nxt.add(v)
        frontier = nxt
    for w in sorted(concatenations, key=lambda v: (len(v), v)):
        n = len(w)
        cut_sets = set()
        for shift in range(n):
            rotated = w[shift:] + w[:shift]
            for cuts in _factorizations(rotated, code):
                cut_sets.add(frozenset((shift + c) % n for c in cuts))
        if len(cut_sets) > 1:
            a, b = sorted(sorted(c) for c in cut_sets)[:2]
            return w, tuple(a), tuple(b)
    return None
