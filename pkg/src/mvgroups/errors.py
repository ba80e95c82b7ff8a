"""Exception hierarchy shared across the package."""


class MvGroupsError(Exception):
    """Base class for all package-specific errors."""


class EmptyMultiSet(MvGroupsError):
    """Raised when a multiset would be constructed from no elements."""


class BackendMismatch(MvGroupsError):
    """Operands belong to different group backends."""


class NotAnAutomorphism(MvGroupsError):
    """Generator images do not extend to an automorphism."""


class InverseMissing(MvGroupsError):
    """An automorphism was supplied without usable inverse images."""


class UnverifiedAutomorphism(MvGroupsError):
    """An automorphism was applied before verification, or to a foreign backend."""


class ClosureBudgetExceeded(MvGroupsError):
    """Automorphism closure did not terminate within the configured bound."""


class BudgetExceeded(MvGroupsError):
    """A BFS enumeration exceeded its node budget."""


class NotReachedWithinCap(MvGroupsError):
    """A length computation did not find the target within the radius cap."""


class InfiniteBackendUnsupported(MvGroupsError):
    """Operation requires a finite backend (e.g. double-coset projection)."""


class PreconditionViolated(MvGroupsError):
    """A check-specific precondition failed (e.g. n != 2, inv != id)."""


class InsufficientData(MvGroupsError):
    """Not enough table rows for growth classification."""


class SchemaError(MvGroupsError):
    """A config document violates the instance schema."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class WordSyntaxError(MvGroupsError):
    """A word expression failed to parse."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class UnknownGenerator(MvGroupsError):
    """A word references a generator name the backend does not declare."""


class ValidationError(MvGroupsError):
    """A structurally valid config describes an unsupported instance."""
