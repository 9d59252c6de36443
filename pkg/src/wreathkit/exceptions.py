"""Exception hierarchy shared by all modules."""


class WreathKitError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 2)."""


class InvalidSpecError(WreathKitError, ValueError):
    pass


class SpecMismatchError(WreathKitError, ValueError):
    """An element does not belong to the group it is used with."""


class UnknownVertexError(WreathKitError, KeyError):
    pass


class ParseError(WreathKitError, ValueError):
    def __init__(self, message, position=0, text=""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class FactorizationError(WreathKitError):
    pass


class InvalidAutomorphismError(WreathKitError, ValueError):
    pass
