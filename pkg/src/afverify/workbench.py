from __future__ import annotations

import logging
import os
from pathlib import Path

from afverify.core import ArgumentationFramework, ExtensionSet
from afverify.enumeration import DEFAULT_BOUND, DEFAULT_FRESH, require_bound
from afverify.equivalence import (
    check_intermediate_theorem,
    expansion_equivalent,
    find_expansion_counterexample,
)
from afverify.formats import Format, load_af, parse_text
from afverify.kernels import KernelKind, apply_kernel
from afverify.models import (
    EquivalenceVerdict,
    KernelAgreementReport,
    ParseResult,
    RationalityReport,
    SuiteCheck,
    VerifiabilityCounterexample,
)
from afverify.semantics import SemanticsKind, check_rational, extensions
from afverify.suite import run_suite
from afverify.verification import (
    NeighborhoodFn,
    VerificationClass,
    find_verifiability_counterexample,
    minimal_classes,
    parse_neighborhood,
    verification_class,
)

_logger = logging.getLogger("afverify")


def _env_bool(name: str, default: bool = False) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "y", "on"}


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value.strip())
    except ValueError:
        return default


def _fn(x: NeighborhoodFn | str) -> NeighborhoodFn:
    return x if isinstance(x, NeighborhoodFn) else parse_neighborhood(x)


def _search_note(witness: ArgumentationFramework | None, fresh: int) -> str | None:
    if witness is not None:
        return None
    return f"no separating expansion with at most {fresh} new arguments"


class Workbench:
    """Settings shared by the bounded operations: exhaustive bound, workers, fresh arguments."""

    @classmethod
    def from_env(
        cls,
        *,
        bound: int | None = None,
        threads: int | None = None,
        fresh: int | None = None,
        strict: bool | None = None,
        debug: bool | None = None,
        logger: logging.Logger | None = None,
    ) -> Workbench:
        return cls(
            bound=int(bound) if bound is not None else _env_int("AFVERIFY_BOUND", DEFAULT_BOUND),
            threads=int(threads) if threads is not None else _env_int("AFVERIFY_THREADS", 1),
            fresh=int(fresh) if fresh is not None else _env_int("AFVERIFY_FRESH", DEFAULT_FRESH),
            strict=bool(strict) if strict is not None else _env_bool("AFVERIFY_STRICT", False),
            debug=bool(debug) if debug is not None else _env_bool("AFVERIFY_DEBUG", False),
            logger=logger,
        )

    def __init__(
        self,
        *,
        bound: int = DEFAULT_BOUND,
        threads: int = 1,
        fresh: int = DEFAULT_FRESH,
        strict: bool = False,
        debug: bool = False,
        logger: logging.Logger | None = None,
    ) -> None:
        self._bound = max(0, int(bound))
        self._threads = max(1, int(threads))
        self._fresh = max(0, int(fresh))
        self._strict = bool(strict)
        self._logger = logger or (_logger if debug else None)

    @property
    def bound(self) -> int:
        return self._bound

    @property
    def threads(self) -> int:
        return self._threads

    @property
    def fresh(self) -> int:
        return self._fresh

    @property
    def strict(self) -> bool:
        return self._strict

    def _log_parse(self, source: str, result: ParseResult) -> None:
        if self._logger:
            self._logger.debug(
                "afverify.load source=%s args=%d warnings=%d",
                source,
                result.af.n,
                len(result.warnings),
            )

    def parse(self, text: str, fmt: Format = "apx") -> ParseResult:
        result = parse_text(text, fmt, strict=self._strict, logger=self._logger)
        self._log_parse("<text>", result)
        return result

    def load(self, path: str | Path, fmt: Format | None = None) -> ArgumentationFramework:
        result = load_af(path, fmt, strict=self._strict, logger=self._logger)
        self._log_parse(str(path), result)
        return result.af

    def solve(self, af: ArgumentationFramework, kind: SemanticsKind | str) -> ExtensionSet:
        return extensions(af, SemanticsKind(kind))

    def kernel(
        self, af: ArgumentationFramework, kind: KernelKind | str
    ) -> ArgumentationFramework:
        kernel = kind if isinstance(kind, KernelKind) else KernelKind.parse(kind)
        return apply_kernel(af, kernel)

    def vclass(self, af: ArgumentationFramework, x: NeighborhoodFn | str) -> VerificationClass:
        return verification_class(af, _fn(x))

    def equivalence(
        self,
        first: ArgumentationFramework,
        second: ArgumentationFramework,
        kind: SemanticsKind | str,
    ) -> EquivalenceVerdict:
        """Kernel verdict, with a separating expansion searched when the bound allows.

        sta has no kernel; its verdict comes from the bounded oracle alone.
        """
        kind = SemanticsKind(kind)
        args = len(set(first.names) | set(second.names))
        fresh = min(self._fresh, max(0, self._bound - args))
        if kind is SemanticsKind.STA:
            require_bound("equivalence (oracle)", args, self._bound)
            witness = find_expansion_counterexample(
                first, second, kind, fresh, bound=self._bound, logger=self._logger
            )
            return EquivalenceVerdict(
                kind=kind.value,
                equivalent=witness is None,
                method="oracle",
                witness=witness,
                bound_note=_search_note(witness, fresh),
            )
        verdict = expansion_equivalent(first, second, kind)
        if verdict.equivalent or args > self._bound:
            return verdict
        witness = find_expansion_counterexample(
            first, second, kind, fresh, bound=self._bound, logger=self._logger
        )
        return verdict.model_copy(
            update={"witness": witness, "bound_note": _search_note(witness, fresh)}
        )

    def verify(
        self, kind: SemanticsKind | str, x: NeighborhoodFn | str, n: int
    ) -> VerifiabilityCounterexample | None:
        """Least counterexample over 1..n arguments, smallest size first."""
        kind, x = SemanticsKind(kind), _fn(x)
        require_bound("verify", n, self._bound)
        for size in range(1, n + 1):
            found = find_verifiability_counterexample(
                kind, x, size, bound=self._bound, threads=self._threads, logger=self._logger
            )
            if found is not None:
                return found
        return None

    def exact(self, kind: SemanticsKind | str, n: int) -> list[NeighborhoodFn]:
        return minimal_classes(
            SemanticsKind(kind), n, bound=self._bound, threads=self._threads, logger=self._logger
        )

    def rationality(self, kind: SemanticsKind | str, n: int) -> RationalityReport:
        return check_rational(SemanticsKind(kind), n, bound=self._bound, logger=self._logger)

    def intermediate(self, kind: SemanticsKind | str, n: int) -> KernelAgreementReport:
        return check_intermediate_theorem(
            SemanticsKind(kind),
            n,
            fresh=min(self._fresh, max(0, self._bound - n)),
            bound=self._bound,
            threads=self._threads,
            logger=self._logger,
        )

    def suite(self, n: int = 3) -> list[SuiteCheck]:
        return run_suite(
            n, bound=self._bound, fresh=self._fresh, threads=self._threads, logger=self._logger
        )
