import json
from pathlib import Path

import numpy as np
import pytest

from blockstab.base_model import FrozenModel, parse_models
from blockstab.blocks import Block, BlockBarcode
from blockstab.errors import InputValidationError
from blockstab.extension import extend_barcode
from blockstab.cli import build_parser, main
from blockstab.grid2d import GeneratorMultiset, GridModule2D, Window, free_morphism
from blockstab.intervals import Barcode1D
from blockstab.levelset import PLGraph
from blockstab.zigzag import ArrowDirection, ZigzagBarcode, ZigzagInterval, ZigzagModule, decompose_zz


def _write(tmp_path: Path, name: str, model: FrozenModel) -> str:
    path: Path = tmp_path / f"{name}.json"
    path.write_text(model.to_json(), encoding="utf-8")
    return str(path)


def _run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, str]:
    status: int = main(argv)
    return status, capsys.readouterr().out.strip()


def test_unknown_subcommands_exit_with_two() -> None:
    parser = build_parser()
    with pytest.raises(SystemExit) as exit_info:
        parser.parse_args(["frobnicate"])
    assert exit_info.value.code == 2


def test_schema_version(capsys: pytest.CaptureFixture[str]) -> None:
    assert _run(["schema-version"], capsys) == (0, "1")
    status, out = _run(["schema-version", "--format", "json"], capsys)
    assert status == 0
    assert json.loads(out) == {"schema_version": "1"}


def test_bottleneck_kinds(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    first = _write(tmp_path, "first", Barcode1D.parse("[0, 10]"))
    second = _write(tmp_path, "second", Barcode1D.parse("[1, 9]"))
    assert _run(["bottleneck", "--kind", "1d", first, second], capsys) == (0, "1")
    blocks_first = _write(tmp_path, "blocks_first", BlockBarcode.parse("(0, 10)"))
    blocks_second = _write(tmp_path, "blocks_second", BlockBarcode.parse("[0, 5]"))
    assert _run(["bottleneck", blocks_first, blocks_second], capsys) == (0, "inf")
    assert _run(["bottleneck", "--format", "json", blocks_first, blocks_first], capsys) == (0, '"0"')


def test_decompose(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    zero = ZigzagModule.from_arrays([0, 0], [ArrowDirection.FWD], [np.zeros((0, 0), dtype=np.int64)])
    assert _run(["decompose", _write(tmp_path, "zero", zero)], capsys) == (0, "[]")
    bar = ZigzagModule.from_arrays([1, 1], [ArrowDirection.BWD], [np.ones((1, 1), dtype=np.int64)])
    path = _write(tmp_path, "bar", bar)
    status, out = _run(["decompose", path], capsys)
    assert status == 0
    assert json.loads(out) == [{"first": 1, "last": 2}]
    assert _run(["decompose", "--format", "tsv", path], capsys) == (0, "1\t2")


def test_extend(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "extend.json"
    path.write_text(json.dumps({"orientation": ["bwd", "fwd"], "intervals": [{"first": 1, "last": 3}]}))
    status, out = _run(["extend", str(path)], capsys)
    assert status == 0
    assert len(json.loads(out)) == 1


def test_bad_inputs_exit_with_two(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert main(["decompose", str(broken)]) == 2
    assert main(["decompose", str(tmp_path / "missing.json")]) == 2
    assert main(["decompose"]) == 2
    one = _write(tmp_path, "one", Barcode1D.parse("[0, 1]"))
    assert main(["bottleneck", "--kind", "block", one, one]) == 2
    capsys.readouterr()


def test_levelset(tmp_path: Path, capsys: pytest.CaptureFixture[str], immersed_curve: PLGraph) -> None:
    path = _write(tmp_path, "curve", immersed_curve)
    status, out = _run(["levelset", "--format", "tsv", path], capsys)
    assert status == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert sum(1 for row in rows if row[0] == "block") == 4
    assert rows[-1] == ["certificate", "pass"]
    status, out = _run(["levelset", "--degree", "1", path], capsys)
    report = json.loads(out)
    assert (status, report["certificate"], len(report["blocks"]["blocks"])) == (0, True, 1)
    invalid = _write(tmp_path, "flat", PLGraph.of({0: 1, 1: 1}, [(0, 1)]))
    assert main(["levelset", invalid]) == 2


def test_betti(tmp_path: Path, capsys: pytest.CaptureFixture[str], square_indicator: GridModule2D) -> None:
    path = _write(tmp_path, "square", square_indicator)
    assert _run(["betti", "--point", "0,3", path], capsys) == (0, "1")
    assert _run(["betti", "--point", "1,1", path], capsys) == (0, "0")
    with pytest.raises(SystemExit):
        main(["betti", path])


def test_interpolant(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    window = Window(lower=(0, 0), upper=(4, 4))
    morphism = free_morphism(GeneratorMultiset.of((1, 1)), GeneratorMultiset.of((0, 0)), {(0, 0): 1}, window)
    path = _write(tmp_path, "morphism", morphism)
    status, out = _run(["interpolant", "--eps", "1", path], capsys)
    report = json.loads(out)
    assert (status, report["free"], report["failures"]) == (0, True, [])
    assert main(["interpolant", "--eps", "1/2", path]) == 2


def test_witness(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "witness.json"
    path.write_text(
        json.dumps(
            {
                "source": json.loads(BlockBarcode.parse("(0, 10)").model_dump_json()),
                "target": json.loads(BlockBarcode.parse("(1, 9)").model_dump_json()),
                "matching": {"pairs": [[0, 0]]},
            },
        ),
    )
    status, out = _run(["witness", "--eps", "1", "--format", "tsv", str(path)], capsys)
    assert (status, out) == (0, "verdict\tpass")
    assert main(["witness", "--eps", "1/2", str(path)]) == 2


def test_reeb_bound(tmp_path: Path, capsys: pytest.CaptureFixture[str], single_edge: PLGraph) -> None:
    first = _write(tmp_path, "short", single_edge)
    second = _write(tmp_path, "tall", PLGraph.of({0: 0, 1: 2}, [(0, 1)]))
    assert _run(["reeb-bound", first, second], capsys) == (0, "1/5")
    assert _run(["reeb-bound", "--tight", first, second], capsys) == (0, "1/2")


def test_perturb_is_reproducible(capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["perturb", "--delta", "1/4", "--trials", "3", "--seed", "5", "--format", "tsv"]
    status, out = _run(argv, capsys)
    assert status == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["trial", "seed", "realized", "block0", "block1", "level0", "level1", "pass"]
    assert [row[1] for row in rows[1:4]] == ["5:0", "5:1", "5:2"]
    assert all(row[-1] == "pass" for row in rows[1:4])
    assert rows[-1][0] == "worst_ratio"
    assert _run(argv, capsys) == (0, out)


def test_perturb_a_given_graph(tmp_path: Path, capsys: pytest.CaptureFixture[str], diamond: PLGraph) -> None:
    status, out = _run(["perturb", "--delta", "0", _write(tmp_path, "diamond", diamond)], capsys)
    report = json.loads(out)
    assert status == 0
    assert report["trials"][0]["realized"] == "0"
    assert report["worst_ratio"] is None


def test_array_reports_parse_back(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    module = ZigzagModule.from_arrays(
        [1, 2, 1],
        [ArrowDirection.FWD, ArrowDirection.BWD],
        [np.array([[1], [0]]), np.array([[1], [1]])],
        3,
    )
    status, out = _run(["decompose", "--format", "json", _write(tmp_path, "module", module)], capsys)
    assert status == 0
    assert parse_models(out, ZigzagInterval) == decompose_zz(module).sorted().intervals

    path = tmp_path / "extend.json"
    path.write_text(json.dumps({"orientation": ["bwd", "fwd"], "intervals": [{"first": 1, "last": 3}, {"first": 2, "last": 2}]}))
    status, out = _run(["extend", "--format", "json", str(path)], capsys)
    intervals = (ZigzagInterval(first=1, last=3), ZigzagInterval(first=2, last=2))
    expected = extend_barcode(ZigzagBarcode(intervals=intervals), (ArrowDirection.BWD, ArrowDirection.FWD))
    assert status == 0
    assert parse_models(out, Block) == expected.blocks

    assert parse_models("[]", Block) == ()
    with pytest.raises(InputValidationError, match="JSON array"):
        parse_models('{"first": 1, "last": 2}', ZigzagInterval)
    with pytest.raises(InputValidationError):
        parse_models('[{"first": 1}]', ZigzagInterval)


def test_field_is_only_accepted_where_it_is_used(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
    immersed_curve: PLGraph,
) -> None:
    module = ZigzagModule.from_arrays([1, 1], [ArrowDirection.BWD], [np.ones((1, 1), dtype=np.int64)])
    path = _write(tmp_path, "bar", module)
    for argv in (["decompose", "--field", "5", path], ["bottleneck", "--field", "5", path, path]):
        with pytest.raises(SystemExit) as exit_info:
            main(argv)
        assert exit_info.value.code == 2
    curve = _write(tmp_path, "curve", immersed_curve)
    assert _run(["levelset", "--field", "32749", "--format", "tsv", curve], capsys)[0] == 0
    assert main(["levelset", "--field", "4", curve]) == 2
    assert main(["levelset", "--field", "2147483647", curve]) == 2
    assert main(["perturb", "--field", "65537", "--delta", "1/4"]) == 2
    capsys.readouterr()
