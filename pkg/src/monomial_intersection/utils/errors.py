# errors.py
# ============================================================================
#  Fehler-Hierarchie für alle Module.
#  Jede Klasse trägt ihren CLI-Exit-Code, main() muss nichts nachschlagen.
# ============================================================================
from __future__ import annotations


class MonomialIdealError(Exception):
    exit_code = 1


class IdealParseError(MonomialIdealError):
    """Eingabe verletzt die Ideal-Grammatik (Position 0-basiert, falls bekannt)"""

    exit_code = 2

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (Position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(MonomialIdealError):
    exit_code = 3


class DimensionMismatchError(PreconditionError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Ambiente Dimensionen passen nicht: {left} != {right}")
        self.left = left
        self.right = right


class PrimeNotInSupportError(PreconditionError):
    """p enthält I nicht – p liegt nicht in V*(I)"""


class SizeGuardError(MonomialIdealError):
    exit_code = 4


class ConsistencyError(MonomialIdealError):
    """Ein Satz wurde zur Laufzeit verletzt; beide Seiten stehen in der Meldung"""

    exit_code = 5

    def __init__(self, what: str, left: object, right: object):
        super().__init__(f"{what}\n  links : {left}\n  rechts: {right}")
        self.what = what
        self.left = left
        self.right = right
