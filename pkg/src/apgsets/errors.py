"""Exception hierarchy. Every error raised by the library derives from ApgError."""


class ApgError(ValueError):
    pass


class ApgSyntaxError(ApgError):
    pass


class UndeclaredNode(ApgError):
    pass


class DuplicateChild(ApgError):
    pass


class DuplicateDeclaration(ApgError):
    pass


class NotAccessible(ApgError):
    pass


class UnknownNode(ApgError):
    pass


class CyclicGraph(ApgError):
    pass


class IncompleteMap(ApgError):
    pass


class UnknownRelation(ApgError):
    pass


class NotABisimulation(ApgError):
    pass


class UndefinedVariable(ApgError):
    pass


class NoRoot(ApgError):
    pass


class NotTotal(ApgError):
    pass
