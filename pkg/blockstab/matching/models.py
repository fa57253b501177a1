from typing import Self

from pydantic import NonNegativeInt, field_validator, model_validator

from blockstab.base_model import FrozenModel
from blockstab.errors import InputValidationError


class Matching(FrozenModel):
    """Model representing a partial bijection between two indexed multisets.

    Attributes
    ----------
    - `pairs` (`tuple[tuple[int, int], ...]`): Index pairs `(i, j)`, `i` into the source and `j` into the target

    Notes
    -----
    - Pairs are kept sorted by source index so that equal matchings compare equal.
    """

    pairs: tuple[tuple[NonNegativeInt, NonNegativeInt], ...] = ()

    @field_validator("pairs")
    @classmethod
    def _sort_pairs(cls, value: tuple[tuple[int, int], ...]) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(value))

    @model_validator(mode="after")
    def _check_injective(self) -> Self:
        sources: list[int] = [i for i, _ in self.pairs]
        targets: list[int] = [j for _, j in self.pairs]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            msg = "A matching uses every source and target index at most once"
            raise ValueError(msg)
        return self

    @classmethod
    def identity(cls, size: int) -> "Matching":
        return cls(pairs=tuple((i, i) for i in range(size)))

    @property
    def coim(self) -> frozenset[int]:
        """Source indices that are matched."""
        return frozenset(i for i, _ in self.pairs)

    @property
    def im(self) -> frozenset[int]:
        """Target indices that are matched."""
        return frozenset(j for _, j in self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def inverse(self) -> "Matching":
        return Matching(pairs=tuple((j, i) for i, j in self.pairs))

    def compose(self, then: "Matching") -> "Matching":
        """Return `then ∘ self`: `i ↦ then(self(i))` wherever both are defined."""
        forward: dict[int, int] = then.as_dict()
        return Matching(pairs=tuple((i, forward[j]) for i, j in self.pairs if j in forward))

    def check_indices(self, source_size: int, target_size: int) -> None:
        """Raise `InputValidationError` when a pair points outside the given multisets."""
        for i, j in self.pairs:
            if i >= source_size or j >= target_size:
                msg = f"Pair ({i}, {j}) out of range for sizes ({source_size}, {target_size})"
                raise InputValidationError(msg)
