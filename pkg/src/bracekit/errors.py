"""Exception hierarchy shared by every bracekit module."""


class BraceError(Exception):
    """Base class for all bracekit errors."""


class ValidationError(BraceError):
    """A table pair is not a skew brace."""


class NotAGroup(ValidationError):
    def __init__(self, op, witness=None, reason=""):
        self.op = op
        self.witness = witness
        self.reason = reason
        super().__init__(f"({op}) is not a group: {reason} at {witness}")


class IdentityMismatch(ValidationError):
    pass


class CompatibilityFail(ValidationError):
    def __init__(self, a, b, c):
        self.witness = (a, b, c)
        super().__init__(f"a∘(b+c) != a∘b - a + a∘c for (a, b, c) = {self.witness}")


class NotHom(BraceError):
    def __init__(self, witness, op):
        self.witness = witness
        self.op = op
        super().__init__(f"map does not preserve {op} at {witness}")


class NotAnIdeal(BraceError):
    pass


class WellDefinednessFail(BraceError):
    pass


class NotInVariety(BraceError):
    pass


class OracleDisagreement(BraceError):
    pass


class NoMinimum(BraceError):
    pass


class BoundExceeded(BraceError):
    pass


class TargetMismatch(BraceError):
    pass


class CrossBraceError(BraceError):
    pass


class ParseError(BraceError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
