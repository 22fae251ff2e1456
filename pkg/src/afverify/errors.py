from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from afverify.models import ParseDiagnostic


class AFError(Exception):
    """Base exception for this package."""


@dataclass(frozen=True, slots=True)
class AFInputError(AFError):
    message: str
    value: Any | None = None

    def __str__(self) -> str:
        if self.value is None:
            return self.message
        return f"{self.message}: {self.value!r}"


@dataclass(frozen=True, slots=True)
class AFResourceError(AFError):
    operation: str
    requested: int
    bound: int

    def __str__(self) -> str:
        return (
            f"{self.operation} needs {self.requested} arguments but the exhaustive bound "
            f"is {self.bound}"
        )


@dataclass(frozen=True, slots=True)
class UnsupportedSemanticsError(AFError):
    kind: str
    operation: str

    def __str__(self) -> str:
        return f"{self.operation} is not available for semantics {self.kind!r}"


@dataclass(frozen=True, slots=True)
class ClassMismatchError(AFError):
    kind: str
    expected: str
    got: str

    def __str__(self) -> str:
        return (
            f"semantics {self.kind!r} is computed from the {self.expected} class, "
            f"got a {self.got} class"
        )


@dataclass(frozen=True, slots=True)
class AFParseError(AFError):
    diagnostics: Sequence[ParseDiagnostic]

    def __str__(self) -> str:
        errors = [d for d in self.diagnostics if d.severity == "error"]
        if not errors:
            return "parse failed"
        first = errors[0]
        more = f" (+{len(errors) - 1} more)" if len(errors) > 1 else ""
        return f"{first.line}:{first.column}: {first.message}{more}"


class AFInternalError(AFError):
    """Raised when a result that must be unique is not."""
