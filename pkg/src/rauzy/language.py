"""Factor languages of subshifts given by primitive substitutions or periodic words.

Words are plain ``str`` objects whose characters are the letters; an alphabet
is a tuple of one-character strings whose order is the declaration order.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import HorizonExceeded, NoSeedLetter, NonPrimitive, NotAFactor

__all__ = [
    "Substitution",
    "FactorLanguage",
    "PointWindow",
    "check_primitive",
    "build_language",
    "complexity",
    "check_uniform_recurrence",
    "source_from_json",
    "write_language_csv",
]


def _check_alphabet(alphabet):
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ValueError("alphabet must be nonempty")
    if len(set(alphabet)) != len(alphabet):
        raise ValueError(f"duplicate letters in alphabet {alphabet!r}")
    for a in alphabet:
        if not isinstance(a, str) or len(a) != 1 or not a.isprintable() or a.isspace():
            raise ValueError(f"letters must be single printable characters, got {a!r}")
    return alphabet


@dataclass(frozen=True, eq=False)
class Substitution:
    """A substitution ``letter -> nonempty word`` over an ordered alphabet."""

    alphabet: tuple
    rules: dict

    def __post_init__(self):
        alphabet = _check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if set(self.rules) != set(alphabet):
            raise ValueError("rules must define exactly one image per letter")
        for a, image in self.rules.items():
            if not image:
                raise ValueError(f"image of {a!r} is empty")
            stray = set(image) - set(alphabet)
            if stray:
                raise ValueError(f"image of {a!r} uses letters outside the alphabet: {sorted(stray)}")
        object.__setattr__(self, "rules", {a: self.rules[a] for a in alphabet})

    def __eq__(self, other):
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.alphabet == other.alphabet and self.rules == other.rules

    def __hash__(self):
        return hash((self.alphabet, tuple(self.rules.items())))

    def __call__(self, word):
        rules = self.rules
        return "".join(rules[c] for c in word)

    def __repr__(self):
        body = ", ".join(f"{a}->{w}" for a, w in self.rules.items())
        return f"Substitution({body})"

    @property
    def max_rule_length(self):
        return max(len(w) for w in self.rules.values())

    def power(self, k):
        """Return the ``k``-fold composite of the substitution."""
        if k < 1:
            raise ValueError("power must be positive")
        images = dict(self.rules)
        for _ in range(k - 1):
            images = {a: self(w) for a, w in images.items()}
        return Substitution(self.alphabet, images)

    def incidence_matrix(self):
        """``M[i, j]`` is the number of occurrences of letter ``i`` in the image of letter ``j``."""
        index = {a: i for i, a in enumerate(self.alphabet)}
        m = np.zeros((len(self.alphabet),) * 2, dtype=np.int64)
        for j, a in enumerate(self.alphabet):
            for c in self.rules[a]:
                m[index[c], j] += 1
        return m

    def seed_letter(self):
        """First letter ``a`` (alphabet order) whose image starts with ``a``, or None."""
        for a in self.alphabet:
            if self.rules[a][0] == a:
                return a
        return None


def check_primitive(sub):
    """Decide primitivity of ``sub``.

    Returns ``(True, k)`` with ``k`` the smallest exponent for which the
    incidence matrix power is entrywise positive, or ``(False, None)``.
    Exponents up to ``|A|**2`` are tried, which exceeds Wielandt's bound.
    """
    m = sub.incidence_matrix() > 0
    p = m.copy()
    for k in range(1, len(sub.alphabet) ** 2 + 1):
        if p.all():
            return True, k
        p = (p.astype(np.int64) @ m.astype(np.int64)) > 0
    return False, None


@dataclass(frozen=True)
class PointWindow:
    """Central window ``x[-n, n-1]`` of a two-sided point, split in halves."""

    word: str

    def __post_init__(self):
        if not self.word or len(self.word) % 2:
            raise ValueError(f"window must have positive even length, got {self.word!r}")

    @property
    def n(self):
        return len(self.word) // 2

    @property
    def left(self):
        return self.word[: self.n]

    @property
    def right(self):
        return self.word[self.n :]


def _windows(word, k):
    return {word[i : i + k] for i in range(len(word) - k + 1)}


def _close_under_factors(top, n):
    """Slices ``L_1..L_n`` from the set of length-``n`` factors."""
    levels = {n: frozenset(top)}
    for k in range(n - 1, 0, -1):
        above = levels[k + 1]
        levels[k] = frozenset({w[:-1] for w in above} | {w[1:] for w in above})
    return levels


class FactorLanguage:
    """The factors of length ``1..horizon`` of a minimal subshift.

    Build instances with :func:`build_language`. The object is immutable;
    ``point_prefix`` returns prefixes of the one-sided point used to scan
    for return words (the fixed point for substitutive sources, the
    periodic repetition otherwise).
    """

    def __init__(self, alphabet, horizon, levels, source, generator=None, seed=None):
        self.alphabet = tuple(alphabet)
        self.horizon = horizon
        self._levels = levels
        self.source = source
        self.generator = generator
        self.seed = seed
        self._prefix = ""

    @property
    def is_periodic(self):
        return isinstance(self.source, str)

    @property
    def letters(self):
        """Letters that actually occur, in alphabet order."""
        return tuple(a for a in self.alphabet if a in self._levels[1])

    def factors(self, k):
        """Sorted list of the factors of length ``k``."""
        self._check_length(k)
        return sorted(self._levels[k])

    def factor_set(self, k):
        self._check_length(k)
        return self._levels[k]

    def __contains__(self, word):
        if not word:
            return False
        if len(word) > self.horizon:
            raise HorizonExceeded(len(word), self.horizon)
        return word in self._levels[len(word)]

    def __iter__(self):
        for k in range(1, self.horizon + 1):
            yield from self.factors(k)

    def require(self, word):
        if word not in self:
            raise NotAFactor(word)

    def _check_length(self, k):
        if k < 1 or k > self.horizon:
            raise HorizonExceeded(k, self.horizon)

    def point_prefix(self, length):
        """Prefix of length ``length`` of the scanning point."""
        if len(self._prefix) < length:
            if self.is_periodic:
                reps = length // len(self.source) + 1
                self._prefix = self.source * reps
            else:
                w = self._prefix or self.seed
                while len(w) < length:
                    w = self.generator(w)
                self._prefix = w
        return self._prefix[:length]

    def default_window(self, n, center=None):
        """Window ``x[c-n, c+n-1]`` of the scanning point around ``center``.

        The center defaults to ``horizon // 2`` so windows for different
        ``n`` are nested and project onto each other.
        """
        if center is None:
            center = self.horizon // 2
        if n < 1 or n > center:
            raise ValueError(f"window half-length {n} must lie in 1..{center}")
        self._check_length(2 * n)
        return PointWindow(self.point_prefix(center + n)[center - n : center + n])

    def __repr__(self):
        kind = f"periodic {self.source!r}" if self.is_periodic else repr(self.source)
        return f"FactorLanguage({kind}, horizon={self.horizon})"


def _fixed_point_data(sub):
    """Smallest power of ``sub`` with a seed letter, and that letter."""
    for k in range(1, math.factorial(len(sub.alphabet)) + 1):
        candidate = sub.power(k) if k > 1 else sub
        seed = candidate.seed_letter()
        if seed is not None:
            return candidate, seed
    raise NoSeedLetter(f"no power of {sub!r} up to |A|! has a seed letter")


def build_language(source, horizon):
    """Build the factor language of ``source`` up to length ``horizon``.

    ``source`` is a :class:`Substitution` (which must be primitive) or a
    nonempty ``str`` giving one period of a periodic point.

    For substitutions the fixed point prefix is iterated until it has
    length at least ``horizon * (1 + max rule length)`` and one further
    iteration leaves the set of length-``horizon`` factors unchanged. Once
    that happens no later iterate can contribute a new factor, so the
    result is exact.
    """
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if isinstance(source, str):
        if not source:
            raise ValueError("periodic word must be nonempty")
        alphabet = tuple(sorted(set(source)))
        _check_alphabet(alphabet)
        reps = horizon // len(source) + 2
        top = _windows(source * reps, horizon)
        return FactorLanguage(alphabet, horizon, _close_under_factors(top, horizon), source)

    ok, _ = check_primitive(source)
    if not ok:
        raise NonPrimitive(f"{source!r} is not primitive")
    gen, seed = _fixed_point_data(source)
    target = horizon * (1 + gen.max_rule_length)
    word = seed
    while len(word) < target:
        word = gen(word)
    current = _windows(word, horizon)
    while True:
        word = gen(word)
        nxt = _windows(word, horizon)
        if nxt == current:
            break
        current = nxt
    lang = FactorLanguage(source.alphabet, horizon, _close_under_factors(current, horizon), source, gen, seed)
    lang._prefix = word
    return lang


def complexity(lang, k):
    """Number of factors of length ``k``."""
    return len(lang.factor_set(k))


def check_uniform_recurrence(lang, u, search_len):
    """Check that every factor of length ``search_len`` contains ``u``.

    Returns ``(holds, least)`` where ``least`` is the smallest length
    ``k <= search_len`` at which every factor of length ``k`` contains
    ``u`` (``None`` when the check fails).
    """
    if search_len > lang.horizon:
        raise HorizonExceeded(search_len, lang.horizon)
    lang.require(u)
    if search_len < len(u) or not all(u in w for w in lang.factor_set(search_len)):
        return False, None
    least = search_len
    for k in range(search_len - 1, len(u) - 1, -1):
        if all(u in w for w in lang.factor_set(k)):
            least = k
        else:
            break
    return True, least


def source_from_json(obj):
    """Decode ``{"alphabet": [...], "rules": {...}}`` or ``{"periodic": "..."}``."""
    if "periodic" in obj:
        word = obj["periodic"]
        if not isinstance(word, str) or not word:
            raise ValueError("'periodic' must be a nonempty string")
        return word
    try:
        alphabet, rules = obj["alphabet"], obj["rules"]
    except KeyError as exc:
        raise ValueError(f"substitution file lacks key {exc}") from None
    return Substitution(tuple(alphabet), dict(rules))


def write_language_csv(lang, fh, header_lines=()):
    """Write ``length,word`` rows for every stored factor."""
    for line in header_lines:
        fh.write(f"# {line}\n")
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["length", "word"])
    for k in range(1, lang.horizon + 1):
        for w in lang.factors(k):
            writer.writerow([k, w])
