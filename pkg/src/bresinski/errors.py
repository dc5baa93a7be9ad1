"""Exception hierarchy shared by all modules."""


class SemigroupError(ValueError):
    """Base class for invalid-input errors."""


class EmptyInput(SemigroupError):
    pass


class NonCoprime(SemigroupError):
    pass


class ZeroGenerator(SemigroupError):
    pass


class NotInSemigroup(SemigroupError):
    pass


class ArityMismatch(ValueError):
    pass


class NotSkew(ValueError):
    pass


class NotSquare(ValueError):
    pass


class PreconditionError(ValueError):
    """Raised when an operation is called outside its domain (e.g. e != 4)."""


class NotSymmetric(PreconditionError):
    pass


class FrameImpossible(RuntimeError):
    """No pure-power-led generator frame exists; would contradict the theorem."""


class NoTemplateMatch(RuntimeError):
    """No variable permutation puts the frame into the explicit 5x5 template."""


class InconsistentSymmetry(AssertionError):
    """The independent symmetry tests disagreed (implementation bug)."""
