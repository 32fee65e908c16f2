"""Exception hierarchy shared by all modules."""


class RauzyError(Exception):
    """Base class for every error raised by this package."""


class NonPrimitive(RauzyError):
    pass


class NoSeedLetter(RauzyError):
    pass


class HorizonExceeded(RauzyError):
    def __init__(self, needed, horizon):
        super().__init__(f"length {needed} exceeds language horizon {horizon}")
        self.needed = needed
        self.horizon = horizon


class NotAFactor(RauzyError):
    def __init__(self, word):
        super().__init__(f"{word!r} is not a factor of the language")
        self.word = word


class OddOrder(RauzyError):
    pass


class OrderMismatch(RauzyError):
    pass


class BaseMismatch(RauzyError):
    pass


class NotAdmissible(RauzyError):
    """A window of a traced word falls outside the language.

    ``offset`` is the absolute position of ``window`` in the traced word.
    """

    def __init__(self, window, offset, traced=None):
        super().__init__(f"window {window!r} at offset {offset} is not in the language")
        self.window = window
        self.offset = offset
        self.traced = traced


class Incomplete(RauzyError):
    """Return-word scan did not stabilize within the budget."""

    def __init__(self, word, budget, found):
        super().__init__(
            f"return words of {word!r} did not stabilize within a scan of {budget} letters; "
            "raise the scan budget"
        )
        self.word = word
        self.budget = budget
        self.found = found


class UnknownEdge(RauzyError):
    pass


class NotALoop(RauzyError):
    pass


class Disconnected(RauzyError):
    pass


class EmptyGraph(RauzyError):
    pass
