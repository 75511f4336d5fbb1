"""Exception types shared across the package."""


class DressCodeError(Exception):
    """Base class for all errors raised by this package."""


class ParamViolation(DressCodeError, ValueError):
    """A numeric parameter or type invariant was violated; the message names the constraint."""


class EmptyGraph(DressCodeError):
    """Graph has no edges, so no code can be derived from it."""


class LengthMismatch(DressCodeError, ValueError):
    """Input sequence length does not match the declared message length."""


class InsufficientSymbols(DressCodeError):
    """Fewer distinct coordinates available than the message length B."""


class InconsistentSymbols(DressCodeError):
    """Over-determined decode disagrees with some received coordinate (corruption)."""


class IrregularCode(DressCodeError):
    """Inner code is neither strong nor weak; refusing to assemble by default."""


class DeadNodeContacted(DressCodeError):
    """A retrieval named a node that is currently down."""


class AlreadyDead(DressCodeError):
    """Failure injected on a node that is already down."""


class UnrepairableSymbol(DressCodeError):
    """A lost symbol has no live replica anywhere in the cluster."""


class NoStrictPlan(DressCodeError):
    """No one-symbol-per-helper assignment exists (bipartite matching deficit)."""


class StaleReport(DressCodeError):
    """Cluster state changed between repair planning and execution."""


class CodeFileError(DressCodeError):
    """On-disk code file is malformed or violates the format contract."""


class InternalCheckError(DressCodeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
