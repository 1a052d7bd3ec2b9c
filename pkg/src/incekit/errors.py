"""Exception hierarchy shared by all incekit subpackages."""


class IncekitError(Exception):
    """Base class for all incekit errors."""


# --- expression kernel ---

class DivisionByZeroPolynomial(IncekitError, ZeroDivisionError):
    """A denominator normalized to the zero polynomial."""


class UnknownStateVariable(IncekitError):
    """An expression mentions a state variable the vector field does not define."""


class MissingDerivativeBinding(IncekitError):
    """A substitution binds a function symbol but its derivative cannot be generated."""


class NestedRadical(IncekitError):
    """An adjoined square root would square to something containing another radical."""


# --- catalog ---

class CatalogError(IncekitError):
    """Base class for catalog-file problems."""


class ParseError(CatalogError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateId(CatalogError):
    pass


class UndeclaredSymbol(CatalogError):
    pass


class UnknownId(CatalogError, KeyError):
    pass


# --- verifier ---

class MissingInverse(IncekitError):
    pass


class DenominatorVanishesIdentically(IncekitError):
    pass


# --- geometry ---

class NonRationalRoot(IncekitError):
    """A boundary root could not be split into factors of degree <= 2."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"unsolved boundary factor: {factor}")


class NotTriangularizable(IncekitError):
    pass


class CenterNotOnDivisor(IncekitError):
    pass


class ObstructionNotSolvable(IncekitError):
    def __init__(self, obstruction, reason=""):
        self.obstruction = obstruction
        msg = f"cannot solve obstruction = 0 as a constraint rule: {obstruction}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


# --- numerics ---

class NoViableChart(IncekitError):
    pass


class StepUnderflow(IncekitError):
    pass


class DenominatorNearZero(IncekitError):
    pass
