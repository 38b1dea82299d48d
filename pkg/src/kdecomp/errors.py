"""Exception hierarchy.

Two families: ``InputError`` for bad input or misuse (CLI exit code 2) and
``Finding`` for a mathematical statement that failed on a concrete instance
(CLI exit code 1).  Every exception carries the witness that triggered it.
"""


class KdecompError(Exception):
    pass


class InputError(KdecompError, ValueError):
    pass


class AxiomViolation(InputError):
    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"axiom {axiom} fails at {self.witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotCommutative(AxiomViolation):
    def __init__(self, witness, detail=""):
        super().__init__("mul-commutative", witness, detail)


class ParseError(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


class CarrierMismatch(InputError):
    pass


class NotProper(InputError):
    pass


class NotKIdeal(InputError):
    pass


class NotAnIdeal(InputError):
    pass


class OrderTooLarge(InputError):
    pass


class NotCoprime(InputError):
    pass


class ZeroDivisor(InputError, ZeroDivisionError):
    pass


class SearchSpaceTooLarge(InputError):
    pass


class Finding(KdecompError):
    """A checked mathematical claim failed; ``witness`` holds the evidence."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class TheoremViolation(Finding):
    pass


class GroupNotPrimary(Finding):
    pass


class RadicalNotPrime(Finding):
    pass


class ClosureNotKIdeal(Finding):
    pass


class StepFailed(Finding):
    def __init__(self, step, witness=None):
        self.step = step
        super().__init__(f"proof step {step} failed", witness)
