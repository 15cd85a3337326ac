class KKMError(Exception):
    pass


class InputError(KKMError):
    """
    A file could not be parsed, or parsed into something that does not match the
    expected schema. The message names the file position or the offending field.
    """

    def __init__(self, message, path=None, field=None):
        self.path = path
        self.field = field
        prefix = ""
        if path:
            prefix += "{}: ".format(path)
        if field:
            prefix += "field {!r}: ".format(field)
        super().__init__(prefix + message)


class ComplexError(KKMError, ValueError):
    pass


class NotPureError(ComplexError):
    pass


class NonOrientableError(ComplexError):
    pass


class NotManifoldError(ComplexError):
    pass


class DimensionMismatchError(KKMError, ValueError):
    pass


class OnImageError(KKMError):
    pass


class UnsupportedClassError(KKMError):
    pass


class UnsupportedCoverError(KKMError):
    pass


class AmbientMismatchError(KKMError):
    pass


class HypothesisError(KKMError):
    def __init__(self, message, items=None):
        self.items = list(items or [])
        super().__init__(message)


class PebbleConstructionError(KKMError):
    def __init__(self, message, report=None):
        self.report = report or {}
        super().__init__(message)


class FalsificationAlarm(KKMError):
    pass
