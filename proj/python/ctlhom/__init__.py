"""Homology theories of finite and locally finite simplicial sets."""

from ._core import (
    ControlledError,
    DescriptorError,
    DomainError,
    Error,
    ParseError,
    PresentationError,
    Space,
    ValidationError,
    bm_homology,
    build,
    cohomology,
    compact_cohomology,
    from_json,
    homology,
    laws,
    load,
    pairing_matrix,
    resolve,
    run_cli,
    save,
    spaces,
    theorem41_check,
)

__all__ = [
    "ControlledError",
    "DescriptorError",
    "DomainError",
    "Error",
    "ParseError",
    "PresentationError",
    "Space",
    "ValidationError",
    "bm_homology",
    "build",
    "cohomology",
    "compact_cohomology",
    "from_json",
    "homology",
    "laws",
    "load",
    "pairing_matrix",
    "resolve",
    "run_cli",
    "save",
    "spaces",
    "theorem41_check",
]
