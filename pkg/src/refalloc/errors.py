"""Exception types raised across the package."""

from __future__ import annotations


class RefallocError(Exception):
    """Base class for every error this package raises deliberately."""


class MalformedIdError(RefallocError, ValueError):
    """An official or fixture id token does not have the letter+digits shape."""


class DuplicateIdError(RefallocError):
    """An entity with this id already exists in the store."""


class DuplicateUsernameError(RefallocError):
    """Another official already holds this username."""


class UnknownIdError(RefallocError):
    """No entity with this id exists in the store."""


class HasAssignmentsError(RefallocError):
    """The official still appears in assignments; pass cascade to remove those too."""


class ParseError(RefallocError):
    """A data file could not be parsed. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntegrityError(RefallocError):
    """A store invariant would be violated (dangling reference, duplicate key)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidPreAssignmentError(RefallocError):
    """One or more manual pre-assignments are unusable. Lists every failure."""

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class SearchBudgetExceededError(RefallocError):
    """The backtracking search hit its node limit; feasibility is unknown."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exceeded after {nodes} nodes; feasibility unknown")


class NotAssignedError(RefallocError):
    """No assignment matches the (fixture, official, role) triple to replace."""


class IneligibleReplacementError(RefallocError):
    """The replacement official does not qualify for the slot."""


class DoubleBookedReplacementError(RefallocError):
    """The replacement official is already engaged on the fixture's date."""


class UnknownReferenceError(RefallocError):
    """A referenced fixture or official does not exist in the store."""
