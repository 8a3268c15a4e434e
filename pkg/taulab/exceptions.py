class TaulabError(Exception):
    """Base class for every error raised by the engine."""


class ConfigError(TaulabError):
    """Settings or command-line bounds are out of range."""


class InvalidShape(TaulabError, ValueError):
    """Matrix dimensions do not fit the requested operation."""


class BoundExceeded(TaulabError):
    """A path length, resolution length or enumeration bound was reached."""


class NotAdmissible(TaulabError, ValueError):
    """A relation is shorter than 2 or mixes non-parallel paths."""


class InvalidKupisch(TaulabError, ValueError):
    """A Kupisch series violates the admissibility conditions."""


class InvalidVertex(TaulabError, ValueError):
    """Vertex index out of range."""


class InvalidIdempotent(TaulabError, ValueError):
    """Empty or out-of-range idempotent vertex set."""


class AlgebraMismatch(TaulabError, ValueError):
    """Two modules (or a module and a map) live over different algebras."""


class InvalidModule(TaulabError, ValueError):
    """A representation does not satisfy the relations of its algebra."""


class NotNakayama(TaulabError):
    """The operation needs an algebra built from a Kupisch series."""


class InvalidInput(TaulabError, ValueError):
    """A predicate was called outside its domain (projective, injective or decomposable input)."""


class NotGorenstein(TaulabError):
    """The algebra is not Iwanaga-Gorenstein within the resolution bound."""


class NoFaithfulProjInj(TaulabError):
    """The algebra has no projective-injective module (dominant dimension 0)."""


class ParseError(TaulabError, ValueError):
    """An algebra file, module expression or operation string could not be parsed."""

    def __init__(self, message: str, location: str | None = None):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)
