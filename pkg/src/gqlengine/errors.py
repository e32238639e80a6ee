"""Error and diagnostic types shared across the engine."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Diagnostic:
    """A validation finding. ``path`` locates it in the query or schema."""

    message: str
    path: tuple = ()
    severity: str = "error"

    def __str__(self):
        where = ".".join(str(p) for p in self.path)
        return f"{where}: {self.message}" if where else self.message


@dataclass(frozen=True)
class ExecutionError:
    message: str
    path: tuple = ()
    locations: tuple = field(default=(), compare=False)

    def to_data(self):
        out = {"message": self.message}
        if self.locations:
            out["locations"] = [{"line": ln, "column": col} for ln, col in self.locations]
        if self.path:
            out["path"] = list(self.path)
        return out


class ResolverFailure(Exception):
    """Raised by a resolver that has no value to offer."""


class CoercionError(ValueError):
    pass


class SchemaError(Exception):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


class RegistrationError(Exception):
    pass


class UnknownType(RegistrationError):
    pass


class UnknownField(RegistrationError):
    pass


class AlreadyBound(RegistrationError):
    pass


class TypeNotFound(KeyError):
    pass


class OperationError(Exception):
    pass


class AmbiguousOperation(OperationError):
    pass


class UnknownOperation(OperationError):
    pass
