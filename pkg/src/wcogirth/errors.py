"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class WcogirthError(Exception):
    """Base class for every error raised by this package."""


class FieldError(WcogirthError, ValueError):
    """Unsupported field order or an element outside the field."""


class DimensionError(WcogirthError, ValueError):
    """Vector or matrix shapes do not agree."""


class EnumerationCapError(WcogirthError):
    """An exhaustive enumeration would exceed the desk-scale cap."""


class RankZeroError(WcogirthError, ValueError):
    """Cogirth (and anything built on it) is undefined for rank zero."""


class NotSimpleError(WcogirthError, ValueError):
    """The operation needs a simple matroid (no loops, no parallel pairs)."""


class PreconditionError(WcogirthError, ValueError):
    """A theorem check was called outside the hypotheses it covers."""


class ProjectiveGeometryError(PreconditionError):
    """The instance is a full projective geometry; use the PG check instead."""


class NotAFlatError(WcogirthError, ValueError):
    """A point set expected to be a flat of the projective geometry is not one."""


class ParseError(WcogirthError, ValueError):
    """Malformed matroid file or report document."""
