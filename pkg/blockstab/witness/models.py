from fractions import Fraction

from blockstab.base_model import FrozenModel
from blockstab.blocks import BlockBarcode, BlockKind, region_contains
from blockstab.intervals import Barcode1D, Interval1D
from blockstab.values import ExtendedValue, NonNegativeRational


class Region(FrozenModel):
    """Model representing a block-shaped region of `𝕌` that may be empty.

    Attributes
    ----------
    - `kind` (`BlockKind`): Region type
    - `a` (`ExtendedValue`): First coordinate
    - `b` (`ExtendedValue`): Second coordinate

    Notes
    -----
    - Unlike `Block`, the coordinates are not validated, so shifted blocks that become empty are representable.
    """

    kind: BlockKind
    a: ExtendedValue
    b: ExtendedValue

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return region_contains(self.kind, self.a, self.b, x, y)


class Overlap(FrozenModel):
    """Model representing the support `first ∩ second` of a unit-scalar block morphism.

    Attributes
    ----------
    - `first` (`Region`): Source block
    - `second` (`Region`): Target block pulled back along the shift
    """

    first: Region
    second: Region

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return self.first.contains(x, y) and self.second.contains(x, y)


class WitnessPair(FrozenModel):
    """Model representing the components of an interleaving between one source and one target block.

    Attributes
    ----------
    - `source` (`int`): Index into the source barcode
    - `target` (`int`): Index into the target barcode
    - `forward` (`Overlap`, optional): Support of `f`, `None` for the zero map
    - `backward` (`Overlap`, optional): Support of `g`, `None` for the zero map
    """

    source: int
    target: int
    forward: Overlap | None = None
    backward: Overlap | None = None


class InterleavingWitness(FrozenModel):
    """Model representing a candidate ε-interleaving between two block-decomposable modules.

    Attributes
    ----------
    - `epsilon` (`NonNegativeRational`): Shift `ε`
    - `source` (`BlockBarcode`): Barcode of `M`
    - `target` (`BlockBarcode`): Barcode of `N`
    - `pairs` (`tuple[WitnessPair, ...]`): Matched blocks; unmatched blocks have zero components

    Notes
    -----
    - The shift by `ε` sends `(x, y)` to `(x − ε, y + ε)`.
    """

    epsilon: NonNegativeRational
    source: BlockBarcode
    target: BlockBarcode
    pairs: tuple[WitnessPair, ...] = ()


class LineWitnessPair(FrozenModel):
    """Model representing the components of an interleaving between two intervals.

    Attributes
    ----------
    - `source` (`int`): Index into the source barcode
    - `target` (`int`): Index into the target barcode
    - `forward` (`tuple[Interval1D, Interval1D]`, optional): `f` is `1` on the intersection, `None` for zero
    - `backward` (`tuple[Interval1D, Interval1D]`, optional): `g` is `1` on the intersection, `None` for zero
    """

    source: int
    target: int
    forward: tuple[Interval1D, Interval1D] | None = None
    backward: tuple[Interval1D, Interval1D] | None = None


class LineInterleavingWitness(FrozenModel):
    """Model representing a candidate ε-interleaving between two interval-decomposable modules over ℝ.

    Attributes
    ----------
    - `epsilon` (`NonNegativeRational`): Shift `ε`, acting by `t ↦ t + ε`
    - `source` (`Barcode1D`): Barcode of `M`
    - `target` (`Barcode1D`): Barcode of `N`
    - `pairs` (`tuple[LineWitnessPair, ...]`): Matched intervals
    """

    epsilon: NonNegativeRational
    source: Barcode1D
    target: Barcode1D
    pairs: tuple[LineWitnessPair, ...] = ()
