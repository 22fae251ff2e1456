from __future__ import annotations

__all__ = [
    "__version__",
    "AFError",
    "AFInputError",
    "AFInternalError",
    "AFParseError",
    "AFResourceError",
    "ArgumentTable",
    "ArgumentationFramework",
    "ClassMismatchError",
    "EquivalenceVerdict",
    "ExtensionSet",
    "KernelAgreementReport",
    "KernelKind",
    "NeighborhoodFn",
    "ParseResult",
    "RationalityReport",
    "SemanticsKind",
    "SuiteCheck",
    "UnsupportedSemanticsError",
    "VerifiabilityCounterexample",
    "Workbench",
    "apply_kernel",
    "build_af",
    "check_intermediate_theorem",
    "check_rational",
    "enumerate_afs",
    "expansion_equivalent",
    "extensions",
    "find_expansion_counterexample",
    "find_verifiability_counterexample",
    "kernel_for",
    "minimal_classes",
    "parse_apx",
    "parse_tgf",
    "standard_equivalent",
    "verification_class",
    "write_apx",
    "write_dot",
]

try:
    from importlib.metadata import PackageNotFoundError, version
except ImportError:  # pragma: no cover
    __version__ = "0.0.0"
else:
    try:
        __version__ = version("afverify")
    except PackageNotFoundError:  # pragma: no cover
        __version__ = "0.0.0"

from afverify.core import (  # noqa: E402
    ArgumentationFramework,
    ArgumentTable,
    ExtensionSet,
    build_af,
)
from afverify.equivalence import (  # noqa: E402
    check_intermediate_theorem,
    enumerate_afs,
    expansion_equivalent,
    find_expansion_counterexample,
    standard_equivalent,
)
from afverify.errors import (  # noqa: E402
    AFError,
    AFInputError,
    AFInternalError,
    AFParseError,
    AFResourceError,
    ClassMismatchError,
    UnsupportedSemanticsError,
)
from afverify.formats import parse_apx, parse_tgf, write_apx, write_dot  # noqa: E402
from afverify.kernels import KernelKind, apply_kernel, kernel_for  # noqa: E402
from afverify.models import (  # noqa: E402
    EquivalenceVerdict,
    KernelAgreementReport,
    ParseResult,
    RationalityReport,
    SuiteCheck,
    VerifiabilityCounterexample,
)
from afverify.semantics import SemanticsKind, check_rational, extensions  # noqa: E402
from afverify.verification import (  # noqa: E402
    NeighborhoodFn,
    find_verifiability_counterexample,
    minimal_classes,
    verification_class,
)
from afverify.workbench import Workbench  # noqa: E402
