"""Exception hierarchy shared by the engine and the CLI."""


class QuiverCotorsionError(Exception):
    exit_code = 1


class InputError(QuiverCotorsionError, ValueError):
    """Malformed quiver, object, matrix or file."""

    exit_code = 2


class UnsupportedInputError(InputError):
    """Well-formed input that the requested operation does not handle (e.g. a cyclic quiver)."""


class CertificationError(QuiverCotorsionError):
    """A runtime certificate failed.

    Args:
        reason: What did not hold.
        level: Filtration level of the construction step, if any.
        vertex: Vertex at which the check failed, if any.
    """

    exit_code = 3

    def __init__(self, reason: str, level: int | None = None, vertex: str | None = None) -> None:
        self.reason = reason
        self.level = level
        self.vertex = vertex
        where = []
        if level is not None:
            where.append(f"level {level}")
        if vertex is not None:
            where.append(f"vertex {vertex}")
        super().__init__(f"{reason} ({', '.join(where)})" if where else reason)


class OracleSoundnessError(CertificationError):
    """A factorization the approximation theory guarantees does not exist."""
