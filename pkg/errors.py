# errors.py - Excepciones del toolkit de factorizaciones

"""
Excepciones compartidas por todos los módulos.

Todas heredan de FactorisationError para que la CLI y el servicio HTTP
puedan capturarlas en un solo punto y traducirlas a códigos de salida
o respuestas JSON.
"""


class FactorisationError(ValueError):
    """Error base del toolkit"""


class DegreeMismatchError(FactorisationError):
    """Dos objetos de grados distintos se combinaron"""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"degree mismatch: {left} != {right}")


class ConditionViolation(FactorisationError):
    """Una factorización de entrada no cumple una condición de su familia"""

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        message = f"condition {condition} violated"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class NotCentralError(FactorisationError):
    """El elemento no es central; witness es un par conjugado con coeficientes distintos"""

    def __init__(self, witness):
        self.witness = witness
        first, second = witness
        super().__init__(f"element is not central: witness {first} vs {second}")


class BoundsError(FactorisationError):
    """Un parámetro supera la cota configurada"""

    def __init__(self, bound, limit, value):
        self.bound = bound
        self.limit = limit
        self.value = value
        super().__init__(
            f"bound exceeded: {bound} <= {limit} (got {value}); pass --unsafe-bounds to override"
        )


class ExpressionSyntaxError(FactorisationError):
    """Error de sintaxis en una expresión algebraica"""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class InexactDivisionError(ArithmeticError):
    """Una división que debía ser exacta dejó resto"""

    def __init__(self, numerator, denominator):
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"division not exact: {numerator} / {denominator}")


def exact_div(numerator, denominator):
    """Divide enteros exigiendo que la división sea exacta"""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(numerator, denominator)
    return quotient
