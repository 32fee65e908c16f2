"""Return words, delayed return words and their cycles in Rauzy graphs."""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass

from .codes import is_code
from .errors import HorizonExceeded, Incomplete, NotAdmissible, NotAFactor
from .graph import lift_word_to_path
from .language import PointWindow

__all__ = [
    "ReturnWordSet",
    "return_words",
    "delayed_return_words",
    "return_set_at",
    "lift_return_word",
    "min_return_length_profile",
    "return_report_rows",
    "write_return_report_csv",
]

DEFAULT_SCAN_BUDGET = 100_000


@dataclass(frozen=True)
class ReturnWordSet:
    """Return words of ``base``; ``base`` is ``(u,)`` for plain sets and
    ``(u1, u2)`` for delayed ones."""

    base: tuple
    words: tuple
    kind: str = "plain"

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, w):
        return w in self.words

    @property
    def min_length(self):
        return min(len(w) for w in self.words)

    @property
    def max_length(self):
        return max(len(w) for w in self.words)

    def as_dict(self):
        return {"base": list(self.base), "kind": self.kind, "words": list(self.words)}


def _scan(text, u):
    """Distinct gaps between consecutive occurrences of ``u`` in ``text``,
    each with the position where it is first completed."""
    positions = [m.start() for m in re.finditer(f"(?={re.escape(u)})", text)]
    first_seen = {}
    for p, q in zip(positions, positions[1:]):
        v = text[p:q]
        if v not in first_seen:
            first_seen[v] = q + len(u)
    return first_seen


def return_words(lang, u, scan_budget=DEFAULT_SCAN_BUDGET):
    """Return words of ``u``: the words ``v`` with ``vu`` in the language,
    starting with ``u`` and containing ``u`` only as prefix and suffix.

    Substitutive sources are scanned along a prefix of length
    ``scan_budget`` of the fixed point. The result is accepted only if no
    new return word shows up in the last quarter of the scan and the
    budget is at least four times the longest return seen; otherwise
    :class:`Incomplete` is raised. Periodic sources are scanned exactly.
    """
    if len(u) > lang.horizon:
        raise HorizonExceeded(len(u), lang.horizon)
    if u not in lang:
        raise NotAFactor(u)
    if lang.is_periodic:
        p = len(lang.source)
        found = _scan(lang.point_prefix(3 * p + len(u)), u)
    else:
        found = _scan(lang.point_prefix(scan_budget), u)
        late = [v for v, end in found.items() if end > 0.75 * scan_budget]
        longest = max((len(v) for v in found), default=scan_budget)
        if not found or late or 4 * (longest + len(u)) > scan_budget:
            raise Incomplete(u, scan_budget, sorted(found))
    return ReturnWordSet((u,), tuple(sorted(found, key=lambda v: (len(v), v))))


def delayed_return_words(lang, u1, u2, scan_budget=DEFAULT_SCAN_BUDGET):
    """Delayed return words ``u1^-1 (R(u1 u2) u1)``; both halves must be nonempty."""
    if not u1 or not u2:
        raise ValueError("delayed return words need nonempty u1 and u2")
    plain = return_words(lang, u1 + u2, scan_budget)
    k = len(u1)
    words = tuple(sorted(((v + u1)[k:] for v in plain), key=lambda v: (len(v), v)))
    return ReturnWordSet((u1, u2), words, "delayed")


def return_set_at(window, lang, scan_budget=DEFAULT_SCAN_BUDGET):
    """The set ``R_n`` of delayed return words split at the center of ``window``."""
    if isinstance(window, str):
        window = PointWindow(window)
    return delayed_return_words(lang, window.left, window.right, scan_budget)


def lift_return_word(g, window, r):
    """Cycle of the even-order graph ``g`` rooted at ``window`` whose
    central-label word is ``r``."""
    if isinstance(window, str):
        window = PointWindow(window)
    n = g.half_order
    if window.n != n:
        raise ValueError(f"window {window.word!r} does not match graph order {g.order}")
    traced = window.left + r + window.right
    if not traced.startswith(window.word):
        raise NotAdmissible(traced[: 2 * n], 0, traced)
    path = lift_word_to_path(g, window.word, traced[2 * n :])
    if path.end != window.word:
        raise NotAdmissible(path.end, len(traced) - 2 * n, traced)
    return path


def min_return_length_profile(lang, n_values, scan_budget=DEFAULT_SCAN_BUDGET, center=None):
    """``[(n, min |r| over R_n)]`` for windows of one point, nested around ``center``."""
    rows = []
    for n in n_values:
        window = lang.default_window(n, center)
        rows.append((n, return_set_at(window, lang, scan_budget).min_length))
    return rows


def return_report_rows(lang, n_values, scan_budget=DEFAULT_SCAN_BUDGET, center=None):
    """Rows ``(n, window, |R_n|, min length, max length, is_code)``."""
    rows = []
    for n in n_values:
        window = lang.default_window(n, center)
        rs = return_set_at(window, lang, scan_budget)
        rows.append((n, window.word, len(rs), rs.min_length, rs.max_length, is_code(rs.words)[0]))
    return rows


def write_return_report_csv(rows, fh, header_lines=()):
    for line in header_lines:
        fh.write(f"# {line}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["n", "window", "size", "min_length", "max_length", "is_code"])
    for row in rows:
        writer.writerow(row)
