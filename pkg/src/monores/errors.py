"""Exception types.  The CLI maps these onto its exit codes."""


class MonomialError(ValueError):
    """Invalid monomial or ideal data."""


class NotGenericError(MonomialError):
    """An operation that needs a generic ideal got a non-generic one."""


class CapExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured size cap."""


class ParseError(ValueError):
    """Malformed ideal or triangulation input."""
