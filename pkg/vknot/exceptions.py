"""
Exceptions raised by vknot.

Every domain error derives from :class:`VirtualKnotError`, itself a
``ValueError``, so callers may catch either.
"""


class VirtualKnotError(ValueError):
    """Base class of all domain errors raised by vknot."""


class GaussCodeError(VirtualKnotError):
    """
    A Gauss code could not be parsed or does not describe a Gauss diagram.

    Parameters
    ----------
    message : str
        Description of the problem.

    position : int, default=None
        Index of the offending token (0-based) or character, when known.
    """

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CatalogError(VirtualKnotError):
    """
    A catalog file is malformed.

    Parameters
    ----------
    message : str
        Description of the problem.

    lineno : int, default=None
        1-based line number in the catalog file.
    """

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class MoveError(VirtualKnotError):
    """A Reidemeister move cannot be applied at the requested site."""


class ModulusMismatchError(VirtualKnotError):
    """Two residue classes live in quotients by different moduli."""


class NotationError(VirtualKnotError):
    """Malformed polynomial notation or a style that does not fit the value."""
