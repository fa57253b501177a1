from typing import Any, override


class BaseBlockstabError(Exception):
    """Base class for the errors raised by `blockstab`.

    Args
    ----
    - `code` (`int`): Process exit status the CLI reports for this error
    - `message` (`str`): Error message
    - `details` (`list[Any]`): Error details (locations, offending values, mismatches)
    - `hint` (`str`, optional): Proposed fix for the error
    """

    def __init__(
        self,
        code: int,
        message: str,
        details: list[Any] | None = None,
        hint: str | None = None,
    ) -> None:
        self.code: int = code
        self.message: str = message
        self.details: list[Any] = details or []
        self.hint: str | None = hint
        super().__init__(message)

    @override
    def __str__(self) -> str:
        text: str = self.message
        if self.details:
            text += "; " + "; ".join(str(detail) for detail in self.details)
        if self.hint:
            text += f" (hint: {self.hint})"
        return text


class InputValidationError(BaseBlockstabError, ValueError):
    """Error raised when an input violates a precondition or fails to parse."""

    def __init__(
        self,
        message: str,
        details: list[Any] | None = None,
        hint: str | None = None,
    ) -> None:
        super().__init__(code=2, message=message, details=details, hint=hint)


class FieldMismatchError(InputValidationError):
    """Error raised when objects over different prime fields are combined."""

    def __init__(self, left: int, right: int) -> None:
        super().__init__(
            message=f"Field characteristics differ: GF({left}) vs GF({right})",
            hint="Re-encode both inputs over the same prime field",
        )


class DimensionMismatchError(InputValidationError):
    """Error raised when matrix or vector shapes do not fit together."""

    def __init__(self, expected: object, received: object, where: str = "") -> None:
        super().__init__(
            message=f"Dimension mismatch{f' in {where}' if where else ''}: expected {expected}, got {received}",
        )


class InvalidGraphError(InputValidationError):
    """Error raised when a PL graph violates the Morse-type conditions."""

    def __init__(self, issues: list[Any]) -> None:
        super().__init__(
            message="PL graph is not of Morse type",
            details=issues,
            hint="Every edge needs distinct endpoint values and the vertex set must be nonempty",
        )


class InvalidMatchingError(InputValidationError):
    """Error raised when a matching is not an ε-matching of the given barcodes."""

    def __init__(self, epsilon: object) -> None:
        super().__init__(message=f"Matching is not an ε-matching at ε={epsilon}")


class PerturbationError(BaseBlockstabError):
    """Error raised when perturbation resampling exhausts its attempt budget."""

    def __init__(self, attempts: int) -> None:
        super().__init__(
            code=3,
            message=f"No Morse-type perturbation found after {attempts} attempts",
            hint="Use a larger delta or a graph with fewer tied edge values",
        )


class ConsistencyError(BaseBlockstabError):
    """Error raised when two independent computations of the same invariant disagree."""

    def __init__(self, message: str, details: list[Any] | None = None) -> None:
        super().__init__(code=1, message=message, details=details)
