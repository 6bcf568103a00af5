"""Exception types shared across the package."""


class GAutomataError(Exception):
    """Base class for every error raised by this package."""


class UsageError(GAutomataError, ValueError):
    """Malformed input or a violated precondition."""


class ResourceGuardError(GAutomataError, RuntimeError):
    """A desk-scale guard (cycle count, ball size, ...) was exceeded.

    Raised instead of returning a possibly wrong answer.
    """


class CertificationError(GAutomataError, RuntimeError):
    """A constructed certificate failed re-validation.

    Carries a transcript of the steps that led to the failure.
    """

    def __init__(self, message, transcript=()):
        super().__init__(message)
        self.transcript = list(transcript)


class WellDefinednessViolation(GAutomataError):
    """Two loops with equal register value map to different group elements.

    This can only happen when the automaton does not accept the word problem
    of the target group.
    """

    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second
