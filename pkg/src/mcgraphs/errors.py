"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class SizeLimitError(DomainError):
    """A requested instance exceeds a configured size cap."""


class DisconnectedGraphError(DomainError):
    """Some vertices cannot be reached from the BFS source."""

    def __init__(self, source, unreachable):
        self.source = source
        self.unreachable = list(unreachable)
        shown = ", ".join(map(str, self.unreachable[:10]))
        more = "" if len(self.unreachable) <= 10 else f", ... ({len(self.unreachable)} total)"
        super().__init__(f"vertices unreachable from {source}: {shown}{more}")


class ConsistencyError(RuntimeError):
    """An identity that must hold exactly was violated."""


class RoutingError(DomainError):
    """A routing failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(self.violations[:5])
        super().__init__(f"invalid routing ({len(self.violations)} violations): {head}")
