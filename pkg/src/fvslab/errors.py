"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FvslabError(Exception):
    """Base class for all library errors."""


class CheckFailure(FvslabError):
    """A verification check did not hold."""


class ResourceLimit(FvslabError):
    """A search exceeded its node or solution budget."""


class ParseError(FvslabError):
    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)


# plane_core
class EmbeddingError(FvslabError):
    pass


class DanglingHalfArc(EmbeddingError):
    pass


class DuplicateHalfArc(EmbeddingError):
    pass


class EulerViolation(EmbeddingError):
    def __init__(self, n: int, m: int, f: int, c: int):
        self.n, self.m, self.f, self.c = n, m, f, c
        super().__init__(f"Euler identity fails: n={n} m={m} f={f} c={c}")


class NoOuterFace(FvslabError):
    pass


class UnknownVertex(FvslabError, KeyError):
    pass


class UnknownArc(FvslabError, KeyError):
    pass


class NotSimple(FvslabError):
    pass


class NotACycle(FvslabError):
    pass


# fvs_solver
class TooLarge(FvslabError):
    pass


class HypothesisViolated(FvslabError):
    pass


# cycles_normal
class CycleBudgetExceeded(ResourceLimit):
    pass


class NotNormal(FvslabError):
    pass


class NotStrictSubset(FvslabError):
    pass


class EmptySet(FvslabError):
    pass


class NotCrossing(FvslabError):
    pass


class UncrossingStuck(FvslabError):
    """No admissible two-cycle decomposition exists for any crossing pair."""


# valuations
class NotConsecutive(FvslabError):
    pass


class NotLaminar(FvslabError):
    pass


class EssentialVertexOnD(FvslabError):
    pass


# coatings
class LoopTooTight(FvslabError):
    pass


class NonPositiveH(FvslabError):
    pass


class NotFeedbackSet(FvslabError):
    pass


class NotGCoating(FvslabError):
    pass


class NonFacialRing(FvslabError):
    pass


class BudgetExhausted(ResourceLimit):
    pass


class SearchFailed(FvslabError):
    pass
