"""Block extension of zigzag modules, on barcodes and pointwise, and the zigzag distances built on it."""

import logging
from fractions import Fraction

from blockstab.blocks import Block, BlockBarcode, BlockKind, bottleneck_block
from blockstab.config import StabilityConstants
from blockstab.errors import InputValidationError
from blockstab.values import POS_INF, ExtendedNumber, is_finite
from blockstab.zigzag import (
    ArrowDirection,
    Orientation,
    ZigzagBarcode,
    ZigzagInterval,
    ZigzagModule,
    colimit_dimension,
    decompose_zz,
)

from .models import TaggedZigzagInterval

logger: logging.Logger = logging.getLogger(__name__)


def zz_positions(orientation: Orientation) -> list[tuple[bool, int]]:
    """Label the positions of an alternating zigzag by their ℤℤ coordinates.

    Args
    ----
    - `orientation` (`Orientation`): Arrow directions, alternating

    Returns
    -------
    - `list[tuple[bool, int]]`: Per position, `(True, k)` for the sink `(k, k)` or `(False, k)` for the source `(k + 1, k)`,
      where `k` counts the sinks up to the position

    Raises
    ------
    - `InputValidationError`: if two consecutive arrows point the same way

    Notes
    -----
    - A zigzag with a single position is read as one sink.
    """
    if any(left is right for left, right in zip(orientation, orientation[1:])):
        msg = "Orientation is not alternating"
        raise InputValidationError(msg, details=[" ".join(direction.value for direction in orientation)])
    labels: list[tuple[bool, int]] = []
    sinks: int = 0
    for i in range(len(orientation) + 1):
        incoming_left: bool = i == 0 or orientation[i - 1] is ArrowDirection.FWD
        incoming_right: bool = i == len(orientation) or orientation[i] is ArrowDirection.BWD
        is_sink: bool = incoming_left and incoming_right
        if is_sink:
            sinks += 1
        labels.append((is_sink, sinks))
    return labels


def tag_interval(interval: ZigzagInterval, orientation: Orientation) -> TaggedZigzagInterval:
    """Translate a position range of an alternating zigzag into `⟨b, d⟩_ZZ`.

    Returns
    -------
    - `TaggedZigzagInterval`: Closed at an end iff that end is a sink; labels from the ℤℤ coordinates

    Raises
    ------
    - `InputValidationError`: if the orientation is not alternating or the range leaves the zigzag
    """
    labels: list[tuple[bool, int]] = zz_positions(orientation)
    if interval.last > len(labels):
        msg = f"Interval {interval} does not fit in {len(labels)} positions"
        raise InputValidationError(msg)
    left_sink, left_label = labels[interval.first - 1]
    right_sink, right_label = labels[interval.last - 1]
    return TaggedZigzagInterval(
        kind=BlockKind.from_decorations(left_closed=left_sink, right_closed=right_sink),
        b=Fraction(left_label),
        d=Fraction(right_label if right_sink else right_label + 1),
    )


def extend_interval(interval: TaggedZigzagInterval) -> Block:
    """Send `⟨b, d⟩_ZZ` to the block `⟨b, d⟩_BL` of the same type."""
    return Block.make(interval.kind, interval.b, interval.d)


def extend_barcode(barcode: ZigzagBarcode, orientation: Orientation) -> BlockBarcode:
    """Extend every interval of a zigzag barcode to its block, preserving multiplicities."""
    return BlockBarcode(
        blocks=tuple(extend_interval(tag_interval(interval, orientation)) for interval in barcode.intervals),
    )


def pointwise_dim_E(module: ZigzagModule, x: Fraction, y: Fraction) -> int:
    """Return the dimension of the block extension of `module` at `(x, y)`.

    Args
    ----
    - `module` (`ZigzagModule`): Alternating zigzag module
    - `x`, `y` (`Fraction`): Point of `𝕌`, in ℤℤ label coordinates

    Returns
    -------
    - `int`: Dimension of the colimit over the ℤℤ positions `(i, j)` with `x ≤ i` and `j ≤ y`

    Raises
    ------
    - `InputValidationError`: if `x > y` or the orientation is not alternating
    """
    if x > y:
        msg = f"Point ({x}, {y}) is not in 𝕌"
        raise InputValidationError(msg)
    positions: list[int] = [
        index
        for index, (is_sink, k) in enumerate(zz_positions(module.orientation))
        if (is_sink and x <= k <= y) or (not is_sink and x <= k + 1 and k <= y)
    ]
    return colimit_dimension(module, positions) if positions else 0


def module_blocks(module: ZigzagModule) -> BlockBarcode:
    """Return the block barcode of the extension of an alternating zigzag module."""
    return extend_barcode(decompose_zz(module), module.orientation)


def zz_bottleneck(first: ZigzagModule, second: ZigzagModule) -> ExtendedNumber:
    """Return the zigzag bottleneck distance, the block bottleneck distance of the extensions."""
    return bottleneck_block(module_blocks(first), module_blocks(second))


def zz_interleaving_bounds(
    first: ZigzagModule,
    second: ZigzagModule,
    constants: StabilityConstants = StabilityConstants.PUBLISHED,
) -> tuple[ExtendedNumber, ExtendedNumber]:
    """Return certified bounds `(lower, upper)` on the zigzag interleaving distance.

    Args
    ----
    - `first`, `second` (`ZigzagModule`): Alternating zigzag modules
    - `constants` (`StabilityConstants`, optional): `PUBLISHED` gives `(2 d_b / 5, d_b)`, `TIGHT` gives `(d_b, d_b)`

    Returns
    -------
    - `tuple[ExtendedNumber, ExtendedNumber]`: Lower and upper bound; both `+∞` when the bottleneck distance is
    """
    distance: ExtendedNumber = zz_bottleneck(first, second)
    if not is_finite(distance):
        return POS_INF, POS_INF
    lower: Fraction = distance / constants.value.block
    logger.debug("interleaving bounds (%s, %s) with factor %s", lower, distance, constants.value.block)
    return lower, distance
