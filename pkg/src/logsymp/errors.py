"""Exception hierarchy.

Three families matter to callers (and to the CLI exit codes):

* ``InputError``: the request itself is malformed (bad syntax, wrong context,
  unspecialized parameters, ...).
* ``MathematicalNegative``: the input is fine but the mathematics says no
  (not divisible, not logarithmic, non-isolated singularity, ...).
* ``BudgetExceeded``: a Groebner computation hit its configured limits.
"""


class LogSympError(Exception):
    pass


class InputError(LogSympError, ValueError):
    pass


class MathematicalNegative(LogSympError, ArithmeticError):
    pass


class BudgetExceeded(LogSympError, RuntimeError):
    pass


# polynomial ring


class UndeclaredIdentifier(InputError):
    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"undeclared identifier {name!r}{where}")


class PolySyntaxError(InputError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class NegativeExponent(InputError):
    def __init__(self, position):
        self.position = position
        super().__init__(f"negative exponent at position {position}")


class ContextMismatch(InputError):
    pass


class DerivativeOfParameter(InputError):
    pass


class ZeroPolynomialError(InputError):
    pass


class DivisionByZeroPolynomial(InputError, ZeroDivisionError):
    pass


class NotQuasiHomogeneous(MathematicalNegative):
    def __init__(self, term1, term2):
        self.term1 = term1
        self.term2 = term2
        super().__init__(f"terms {term1} and {term2} have different weighted degrees")


class NotDivisible(MathematicalNegative):
    pass


# multivectors


class DegreeZero(InputError):
    pass


class OddDimension(InputError):
    pass


class NotBivector(InputError):
    pass


# ideals


class ParameterNotSpecialized(InputError):
    pass


# poisson


class DuplicateConflictingPair(InputError):
    pass


class WrongDimension(InputError):
    pass


class ZeroLambda(InputError):
    pass


class NotLogarithmic(MathematicalNegative):
    def __init__(self, component):
        self.component = component
        super().__init__(f"contraction component {component} is not divisible by the Pfaffian")


class ZeroPfaffian(MathematicalNegative):
    pass


class NonIsolated(MathematicalNegative):
    pass


# chern / diophantine


class NotTotalChernClass(InputError):
    pass


class WrongDegree(InputError):
    pass


class DegreeOutOfRange(InputError):
    pass
