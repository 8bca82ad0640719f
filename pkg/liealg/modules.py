"""
Datos de módulos de coeficientes para los complejos de campos vectoriales
"""

from dataclasses import dataclass

from exactlin import ParameterError

MODULE_KINDS = ("trivial", "sym_coadjoint")


@dataclass(frozen=True)
class ModuleSpec:
    """
    Coeficientes: trivial (k) o sym_coadjoint (S^m W*)

    Args:
        kind (str): "trivial" o "sym_coadjoint"
        power (int): m, sólo para sym_coadjoint
    """

    kind: str = "trivial"
    power: int = 0

    def __post_init__(self):
        if self.kind not in MODULE_KINDS:
            raise ParameterError(f"módulo desconocido: {self.kind}")
        if self.kind == "sym_coadjoint" and self.power < 1:
            raise ParameterError("sym_coadjoint requiere potencia m >= 1")
        if self.kind == "trivial" and self.power != 0:
            object.__setattr__(self, "power", 0)

    @classmethod
    def trivial(cls):
        return cls("trivial", 0)

    @classmethod
    def sym(cls, m):
        return cls("sym_coadjoint", m)

    @property
    def slots(self):
        """Número de ranuras simétricas de los cociclos"""
        return self.power

    def __str__(self):
        return "k" if self.kind == "trivial" else f"S^{self.power}W*"
