"""Exception hierarchy shared by every module.

The CLI maps the three top-level families onto exit codes: ``InputError`` -> 2,
``CapExceeded`` -> 3, ``VerificationFailure`` -> 4.
"""


class ToricGraphError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ToricGraphError, ValueError):
    pass


class CapExceeded(ToricGraphError):
    def __init__(self, message, cap=None, needed=None):
        super().__init__(message)
        self.cap = cap
        self.needed = needed


class VerificationFailure(ToricGraphError):
    pass


# field
class NonPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class UnsupportedQ(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(ToricGraphError, ZeroDivisionError):
    pass


# graph
class ParseError(InputError):
    pass


class LoopEdge(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class IsolatedVertex(InputError):
    pass


class TooFewEdges(InputError):
    pass


class NotACycle(InputError):
    pass


class OddCycle(InputError):
    pass


class EdgesOverlap(InputError):
    pass


# size caps
class EnumerationTooLarge(CapExceeded):
    pass


class MatrixTooLarge(CapExceeded):
    def __init__(self, message, cap=None, needed=None, partial=None):
        super().__init__(message, cap, needed)
        self.partial = partial


class SearchTooLarge(CapExceeded):
    pass


# code / ideal / generators
class OutOfRange(InputError):
    pass


class NotHomogeneous(InputError):
    pass


class NotReducible(InputError):
    pass


class GeneratorDoesNotVanish(VerificationFailure):
    def __init__(self, message, offenders=()):
        super().__init__(message)
        self.offenders = list(offenders)


class BadR(InputError):
    pass


class BadPartition(InputError):
    pass


class BadTransfer(InputError):
    pass


class NotConnected(InputError):
    pass


class NotBipartite(InputError):
    pass


class CyclesNotVertexDisjoint(InputError):
    pass


class IndexOutOfRange(InputError):
    pass
