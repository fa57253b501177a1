from fractions import Fraction

import numpy as np
from pydantic import PositiveInt

from blockstab import (
    BlockBarcode,
    PLGraph,
    StabilityConstants,
    ZigzagModule,
    block_stability_check,
    bottleneck_block,
    decompose_zz,
    extend_barcode,
    interlevel_blocks,
    level_barcode,
    witness_from_matching,
)
from blockstab.grid2d import (
    GeneratorMultiset,
    Window,
    free_morphism,
    freeness_certificate,
    generators_of,
    interpolant,
)
from blockstab.levelset import perturb, reeb_lower_bound
from blockstab.matching import Matching
from blockstab.witness import verify_witness
from blockstab.zigzag import ArrowDirection

FIELD: PositiveInt = 3
SEED: int = 2024
DELTA: Fraction = Fraction(1, 4)
EPSILON: Fraction = Fraction(1)


def pr_resp(response: object) -> None:
    print(f"{type(response).__name__}: {response}")


def print_section(section_name: str) -> None:
    print(f"{section_name:=^50}")


def run_zigzag() -> None:
    print_section("Zigzag")
    module: ZigzagModule = ZigzagModule.from_arrays(
        [1, 2, 1],
        [ArrowDirection.FWD, ArrowDirection.BWD],
        [np.array([[1], [0]]), np.array([[1], [1]])],
        FIELD,
    )
    barcode = decompose_zz(module)
    pr_resp(barcode)
    pr_resp(extend_barcode(barcode, module.orientation))


def run_levelset(graph: PLGraph) -> None:
    print_section("Level sets")
    for degree in (0, 1):
        pr_resp(interlevel_blocks(graph, degree, FIELD))
        pr_resp(level_barcode(graph, degree, FIELD))
    perturbed = perturb(graph, DELTA, SEED)
    print(f"realized d_inf = {perturbed.realized_distance}")
    for degree in (0, 1):
        distance = bottleneck_block(interlevel_blocks(graph, degree), interlevel_blocks(perturbed.graph, degree))
        print(f"d_b(B{degree}) = {distance}")
    pr_resp(reeb_lower_bound(graph, perturbed.graph, StabilityConstants.TIGHT))


def run_witness() -> None:
    print_section("Witness")
    source: BlockBarcode = BlockBarcode.parse("(0, 10)", "[0, 4]")
    target: BlockBarcode = BlockBarcode.parse("(1, 9)", "[1, 5]")
    witness = witness_from_matching(Matching.identity(2), source, target, EPSILON)
    print(f"verified: {verify_witness(witness)}")
    print(f"typed matching at {EPSILON}: {block_stability_check(source, target, EPSILON)}")


def run_interpolant() -> None:
    print_section("Interpolant")
    window: Window = Window(lower=(0, 0), upper=(4, 4))
    morphism = free_morphism(GeneratorMultiset.of((1, 1)), GeneratorMultiset.of((0, 0)), {(0, 0): 1}, window)
    layer = interpolant(morphism, 1)
    pr_resp(generators_of(layer))
    print(f"window freeness failures: {freeness_certificate(layer)}")


def main() -> None:
    run_zigzag()
    run_levelset(
        PLGraph.of(
            {0: -2, 1: 0, 2: 1, 3: -1, 4: 2, 5: 0},
            [(0, 1), (1, 2), (3, 1), (1, 4), (2, 5), (5, 3)],
        ),
    )
    run_witness()
    run_interpolant()


if __name__ == "__main__":
    main()
