from json import JSONDecodeError
from json import loads as json_loads
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, TypeAdapter, ValidationError

from blockstab.errors import InputValidationError


class FrozenModel(BaseModel):
    """Base model for every immutable value of the package.

    Notes
    -----
    - Instances are hashable and safe to share between threads.
    - Rationals are held as `fractions.Fraction`, so arbitrary types are allowed.
    """

    model_config = ConfigDict(
        frozen=True,
        arbitrary_types_allowed=True,
        populate_by_name=True,
        extra="forbid",
    )

    def to_json(self) -> str:
        """Serialize the model with field aliases, as read back by `parse_model`.

        Returns
        -------
        - `str`: Compact JSON text
        """
        return self.model_dump_json(by_alias=True)


def _load_json(source: str | bytes | Path | Any) -> tuple[str, Any]:
    origin: str = "<input>"
    if isinstance(source, Path):
        origin = str(source)
        try:
            source = source.read_text(encoding="utf-8")
        except OSError as exc:
            msg = f"Cannot read {origin}: {exc.strerror}"
            raise InputValidationError(msg) from exc
    if isinstance(source, (str, bytes)):
        try:
            return origin, json_loads(source)
        except JSONDecodeError as exc:
            msg = f"{origin}: invalid JSON at line {exc.lineno}, column {exc.colno}"
            raise InputValidationError(msg) from exc
    return origin, source


def _error_details(exc: ValidationError) -> list[str]:
    return [f"{'/'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}" for error in exc.errors()]


def parse_model[T: BaseModel](
    source: str | bytes | Path | dict[str, Any],
    expected_type: type[T],
) -> T:
    """Parse JSON text, a JSON file or a decoded mapping into an instance of the expected type.

    Args
    ----
    - `source` (`str | bytes | Path | dict`): JSON text, path to a JSON file or an already decoded object
    - `expected_type` (`type[T]`): Model to validate against

    Returns
    -------
    - An instance of the expected type `T`

    Raises
    ------
    - `InputValidationError`: if the payload is not a JSON object or fails validation; the
      details carry the file name and the pydantic error locations
    """
    origin, parsed = _load_json(source)
    if not isinstance(parsed, dict):
        msg = f"{origin}: expected a JSON object for {expected_type.__name__}"
        raise InputValidationError(msg)
    try:
        return expected_type.model_validate(parsed)
    except ValidationError as exc:
        msg = f"{origin}: invalid {expected_type.__name__}"
        raise InputValidationError(msg, details=_error_details(exc)) from exc


def parse_models[T: BaseModel](
    source: str | bytes | Path | list[Any],
    item_type: type[T],
) -> tuple[T, ...]:
    """Parse a JSON array of models, such as the reports of `decompose` and `extend`.

    Raises
    ------
    - `InputValidationError`: if the payload is not a JSON array or an item fails validation
    """
    origin, parsed = _load_json(source)
    if not isinstance(parsed, list):
        msg = f"{origin}: expected a JSON array of {item_type.__name__}"
        raise InputValidationError(msg)
    try:
        return TypeAdapter(tuple[item_type, ...]).validate_python(parsed)
    except ValidationError as exc:
        msg = f"{origin}: invalid {item_type.__name__} list"
        raise InputValidationError(msg, details=_error_details(exc)) from exc
