from typing import Dict, Tuple, Type

from django.core.management.base import CommandError
from pydantic import ValidationError

from api.includes import exceptions


# exit status 1: a mathematical failure; exit status 2: usage or environment
EXIT_CODES: Tuple[Tuple[Type[Exception], int], ...] = (
    (exceptions.NoInverse, 1),
    (exceptions.VerificationFailure, 1),
    (exceptions.FloatPathFailure, 1),
    (exceptions.InternalConsistencyError, 1),
    (exceptions.DomainError, 2),
    (ValidationError, 2),
    (OSError, 2),
)


def command_exception_handler(exc: Exception) -> Exception:
    """Custom command exception handler.

    Converts a library exception to a CommandError carrying the exit status
    Django uses when the command is run from the command line.
    Unknown exceptions are returned as is so the caller can re-raise them.
    """

    if isinstance(exc, CommandError):
        return exc

    error_payload: Dict[str, object] = {"returncode": 0, "message": str(exc)}
    for exc_type, returncode in EXIT_CODES:
        if isinstance(exc, exc_type):
            error_payload["returncode"] = returncode
            break
    else:
        return exc

    if isinstance(exc, OSError):
        error_payload["message"] = f"cannot write {exc.filename}: {exc.strerror}"

    return CommandError(
        error_payload["message"], returncode=error_payload["returncode"]
    )
