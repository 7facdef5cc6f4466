"""Centralized error handling for the complex toolkit

This module provides:
- The exception hierarchy raised by models and services
- Error classification by severity
- Mapping from errors to CLI exit codes
- Structured error logging with Sentry capture for severe failures
"""

import logging
import time
from enum import Enum
from typing import Optional

from pydantic import ValidationError

from config import EXIT_INVALID, EXIT_USAGE, SENTRY_ENABLED

try:
    import sentry_sdk

    SENTRY_AVAILABLE = True
except ImportError:
    SENTRY_AVAILABLE = False

logger = logging.getLogger(__name__)


class ErrorSeverity(Enum):
    """Error severity levels"""

    LOW = "low"  # Bad input, reported to the user
    MEDIUM = "medium"  # Guard tripped or precondition unmet
    HIGH = "high"  # Internal routes disagree
    CRITICAL = "critical"  # Unexpected failure


class ComplexToolkitError(Exception):
    """Base class for all toolkit errors"""

    pass


class ConstructionError(ComplexToolkitError):
    """A vertex set, subset, complex, map or ideal could not be built"""

    pass


class VertexSetMismatchError(ConstructionError):
    """Operands live on different vertex sets or rings"""

    pass


class DisjointnessError(ConstructionError):
    """Operands were required to have disjoint vertex sets"""

    pass


class GuardExceededError(ComplexToolkitError):
    """An enumeration bound was exceeded"""

    def __init__(self, operation: str, size: int, limit: int):
        self.operation = operation
        self.size = size
        self.limit = limit
        super().__init__(f"{operation}: size {size} exceeds limit {limit}")


class PreconditionError(ComplexToolkitError):
    """An operation was called on inputs outside its domain"""

    pass


class InconsistencyError(ComplexToolkitError):
    """Two independent computations of the same quantity disagree"""

    pass


class ParseError(ComplexToolkitError):
    """Malformed text input, with a 1-based position"""

    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        text = f"line {line}, column {column}: {message}" if line else message
        super().__init__(f"{source}: {text}" if source else text)

    def with_source(self, source: str) -> "ParseError":
        return ParseError(self.message, self.line, self.column, source)


def ensure_guard(operation: str, size: int, limit: int) -> None:
    """Raise GuardExceededError when ``size`` is above ``limit``"""
    if size > limit:
        logger.warning(f"Guard tripped in {operation}: {size} > {limit}")
        raise GuardExceededError(operation, size, limit)


# === ERROR CLASSIFICATION ===


def classify_error(error: Exception) -> ErrorSeverity:
    """Classify error by severity

    Args:
        error: Exception to classify

    Returns:
        ErrorSeverity level
    """
    if isinstance(error, (ParseError, ValidationError, ConstructionError)):
        return ErrorSeverity.LOW

    if isinstance(error, (GuardExceededError, PreconditionError, OSError)):
        return ErrorSeverity.MEDIUM

    if isinstance(error, InconsistencyError):
        return ErrorSeverity.HIGH

    return ErrorSeverity.CRITICAL


def exit_code_for(error: Exception) -> int:
    """Exit code the CLI reports for an error that escaped a handler"""
    if isinstance(error, InconsistencyError):
        return EXIT_INVALID
    return EXIT_USAGE


def report_error(error: Exception, **context) -> None:
    """Log an error at a level matching its severity

    HIGH and CRITICAL errors are also sent to Sentry when it is available.
    """
    severity = classify_error(error)
    extra = {**context, "severity": severity.value}

    if severity is ErrorSeverity.LOW:
        logger.info(f"Rejected input: {error}", extra=extra)
    elif severity is ErrorSeverity.MEDIUM:
        logger.warning(f"Operation refused: {error}", extra=extra)
    else:
        logger.error(f"Operation failed: {error}", exc_info=error, extra=extra)
        if SENTRY_AVAILABLE and SENTRY_ENABLED:
            sentry_sdk.capture_exception(error)


# === CONTEXT MANAGERS ===


class safe_operation:
    """Context manager that times an operation and logs its failure

    Example:
        with safe_operation("apply", functor="ss"):
            result = AdjointService.apply(kind, f, X)
    """

    def __init__(self, operation: str, **context):
        self.operation = operation
        self.context = context
        self.start_time: Optional[float] = None

    def __enter__(self):
        self.start_time = time.perf_counter()
        logger.debug(f"Starting operation: {self.operation}", extra=self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        duration = time.perf_counter() - (self.start_time or 0.0)

        if exc_type is None:
            logger.debug(
                f"Operation completed: {self.operation} ({duration:.3f}s)",
                extra={**self.context, "duration": duration},
            )
            return False

        report_error(exc_val, operation=self.operation, duration=duration, **self.context)

        # Don't suppress exception
        return False


# === VALIDATION ERROR HANDLERS ===


def format_validation_error(error: ValidationError) -> str:
    """Format Pydantic validation error to a one-line message

    Args:
        error: Pydantic ValidationError

    Returns:
        Readable error message
    """
    errors = error.errors()
    if not errors:
        return "invalid input"

    first_error = errors[0]
    field = ".".join(str(loc) for loc in first_error["loc"])
    msg = first_error["msg"]

    if field:
        return f"invalid '{field}': {msg}"
    return msg
