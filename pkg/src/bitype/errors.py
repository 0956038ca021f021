"""Exception hierarchy shared across the package.

The CLI maps these onto distinct exit codes (usage errors are argparse's
own and exit 2): range errors exit 3, size-guard trips exit 4.
"""


class BitypeError(Exception):
    """Base class for all package errors."""


class StructureError(BitypeError):
    """Operands live over different block structures."""


class ParameterRangeError(BitypeError):
    """Parameters outside the range an operation supports."""


class SizeGuardError(BitypeError):
    """An enumeration would exceed its configured size guard."""


class UnsortableError(BitypeError):
    """A generator set is not closed under the sorting operator."""


class RewriteLimitError(BitypeError):
    """Directed rewriting hit its step cap or detected a cycle."""
