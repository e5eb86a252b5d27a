"""Exception types raised across the package."""


class CsymError(Exception):
    """Base class for all errors raised by csym_order."""


class CycleError(CsymError, ValueError):
    """The cover relations contain a directed cycle."""


class RangeError(CsymError, ValueError):
    """An element lies outside the ground set {1..d}."""


class NotAnIdeal(CsymError, ValueError):
    """A subset handed to an ideal operation is not down-closed."""


class CapExceeded(CsymError):
    """A computation would exceed a configured size budget."""


class ZeroColumn(CsymError, ValueError):
    """A matrix that must have nonzero columns has a zero column."""


class NotMarked(CsymError, ValueError):
    """A binomial's marked lead is not larger than its trail."""


class NotFullDim(CsymError, ValueError):
    """The polytope is not full-dimensional in its ambient space."""


class CompletionCapExceeded(CapExceeded):
    """Binomial Buchberger completion outgrew its element budget."""
