"""Exception types shared by all modules."""


class ValidationError(ValueError):
    """Bad arguments: malformed shapes, out-of-range indices, schema violations."""


class CrystalFault(RuntimeError):
    """An internal consistency assertion failed; carries a reproducing witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
