"""Exceptions raised by the engine."""


class KLRError(Exception):
    """Base class for all engine errors."""


class InvalidDatum(KLRError):
    """Cartan datum or Q-matrix fails a structural check."""


class NonHomogeneous(KLRError):
    """An element expected to be homogeneous mixes degrees."""


class InexactDivision(KLRError):
    """A polynomial division that must be exact left a remainder."""


class NeedLargerB(KLRError):
    """Truncation bound exhausted without a nilpotency certificate."""


class InconsistentClosure(KLRError):
    """Internal consistency check failed during an ideal closure."""


class CriterionMismatch(KLRError):
    """Two criteria that must agree disagreed on some input."""
