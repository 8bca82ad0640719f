"""
Errores compartidos por todos los módulos de fovec
"""


class AlgebraError(ValueError):
    """
    Error de construcción o de cálculo con un código estable

    Args:
        code (str): Código del error (por ejemplo "D_SQUARED_NONZERO")
        message (str): Descripción legible
    """

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message


class VerificationError(AlgebraError):
    """Una verificación numérica de un enunciado falló (códigos *_VIOLATED, BASIS_MISMATCH)"""


class ParameterError(AlgebraError):
    """Parámetros fuera de rango"""

    def __init__(self, message):
        super().__init__("INVALID_PARAMETERS", message)
