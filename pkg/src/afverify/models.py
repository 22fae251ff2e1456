from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from afverify.core import ArgumentationFramework


class _Record(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class ParseDiagnostic(_Record):
    """A located parser message. Errors always carry the line and column they refer to."""

    line: int = Field(ge=1)
    column: int = Field(ge=1)
    message: str
    severity: Literal["warning", "error"] = "error"

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class ParseResult(_Record):
    af: ArgumentationFramework
    diagnostics: tuple[ParseDiagnostic, ...] = ()

    @property
    def warnings(self) -> list[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]


class RationalityReport(_Record):
    kind: str
    n: int
    checked: int
    counterexample: ArgumentationFramework | None = None

    @property
    def rational(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.rational


class VerifiabilityCounterexample(_Record):
    """Two AFs sharing a verification class but not their extensions."""

    kind: str
    fn: str
    left: ArgumentationFramework
    right: ArgumentationFramework
    left_extensions: list[list[str]]
    right_extensions: list[list[str]]


class EquivalenceVerdict(_Record):
    kind: str
    equivalent: bool
    method: Literal["kernel", "oracle"] = "kernel"
    witness: ArgumentationFramework | None = None
    bound_note: str | None = None

    @model_validator(mode="after")
    def _witness_means_not_equivalent(self) -> EquivalenceVerdict:
        if self.witness is not None and self.equivalent:
            raise ValueError("an equivalent verdict cannot carry a witness")
        return self


class ExpansionViolation(_Record):
    left: ArgumentationFramework
    right: ArgumentationFramework
    witness: ArgumentationFramework | None = None


class KernelAgreementReport(_Record):
    """Kernel equality against the bounded expansion oracle over every AF pair at ``n``.

    ``soundness_violation``: equal kernels, yet some expansion ``witness`` separates the pair.
    ``completeness_gap``: different kernels, yet no expansion within the budget separates them.

    Truthiness follows ``sound``. A gap may close under a larger fresh budget, so only
    ``agrees`` requires both halves.
    """

    kind: str
    kernel: str
    n: int
    fresh: int
    frameworks: int
    expansions: int
    soundness_violation: ExpansionViolation | None = None
    completeness_gap: ExpansionViolation | None = None

    @property
    def sound(self) -> bool:
        return self.soundness_violation is None

    @property
    def agrees(self) -> bool:
        return self.sound and self.completeness_gap is None

    def __bool__(self) -> bool:
        return self.sound


class SuiteCheck(_Record):
    name: str
    passed: bool
    expected: bool = True
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.passed == self.expected
