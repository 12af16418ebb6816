import json

import pytest

from ordmotif import ScaleFamily, build_scale, parse_burmeister, to_burmeister
from ordmotif.cli import main

B3 = build_scale(ScaleFamily.CONTRANOMINAL, 3)
N3 = build_scale(ScaleFamily.NOMINAL, 3)


@pytest.fixture
def b3_path(tmp_path):
    path = tmp_path / "b3.cxt"
    path.write_text(to_burmeister(B3), encoding="utf-8")
    return path


@pytest.fixture
def n3_path(tmp_path):
    path = tmp_path / "n3.cxt"
    path.write_text(to_burmeister(N3), encoding="utf-8")
    return path


def run_json(capsys, argv):
    assert main(argv) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["schema_version"] == 1
    return payload


def test_concepts_counts_extents(capsys, n3_path):
    assert main(["concepts", str(n3_path)]) == 0
    assert capsys.readouterr().out == "5 extents\n"


def test_concepts_json_lists_extents(capsys, n3_path):
    payload = run_json(capsys, ["concepts", str(n3_path), "--json", "--list"])
    assert payload["count"] == 5
    assert [] in payload["extents"]
    assert ["1", "2", "3"] in payload["extents"]


def test_motifs_table_mentions_all_families(capsys, b3_path):
    assert main(["motifs", str(b3_path)]) == 0
    out = capsys.readouterr().out
    for family in ScaleFamily:
        assert str(family) in out


def test_motifs_json_stats(capsys, b3_path):
    payload = run_json(capsys, ["motifs", str(b3_path), "--json"])
    assert payload["stats"]["contranominal"] == {
        "total": 4,
        "maximal": 1,
        "largest": 3,
    }
    assert payload["stats"]["ordinal"] == {"total": 0, "maximal": 0, "largest": 0}
    assert {"family": "crown", "domain": ["1", "2", "3"]} in payload["motifs"]


def test_cover_text_output(capsys, b3_path):
    assert main(["cover", str(b3_path)]) == 0
    assert capsys.readouterr().out == (
        "step 1: contranominal {1, 2, 3} new=8 cumulative=8\n"
        "covered 8 of 8 extents\n"
    )


def test_cover_csv_side_files(capsys, tmp_path, b3_path):
    coverage = tmp_path / "coverage.csv"
    ratios = tmp_path / "ratios.csv"
    assert (
        main(
            [
                "cover",
                str(b3_path),
                "--coverage-csv",
                str(coverage),
                "--ratios-csv",
                str(ratios),
            ]
        )
        == 0
    )
    assert coverage.read_text(encoding="utf-8") == (
        "step,new_extents,cumulative\n1,8,8\n"
    )
    assert ratios.read_text(encoding="utf-8") == (
        "step,nominal,ordinal,interordinal,contranominal,crown\n"
        "1,0.000000,0.000000,0.000000,0.500000,0.500000\n"
    )


def test_cover_json_reports_ties_and_families(capsys, b3_path):
    payload = run_json(capsys, ["cover", str(b3_path), "--json"])
    assert payload["total_extents"] == 8
    step = payload["steps"][0]
    assert step["families"] == ["contranominal", "crown"]
    assert step["domain"] == ["1", "2", "3"]
    assert step["tie_count"] == 2


def test_explain_text_has_both_paragraphs(capsys, b3_path):
    assert main(["explain", str(b3_path)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("1. Each combination of the elements 1, 2 and 3")
    assert "closed cycle from 1 over 2 and 3 back to 1" in lines[1]


def test_explain_json_entries(capsys, b3_path):
    payload = run_json(capsys, ["explain", str(b3_path), "--json"])
    entry = payload["entries"][0]
    assert entry["families_rendered"] == ["contranominal", "crown"]
    assert entry["text"].count("\n") == 1


def test_basis_round_trips_through_burmeister(capsys, tmp_path, b3_path):
    out_path = tmp_path / "basis.cxt"
    assert main(["basis", str(b3_path), "--output", str(out_path)]) == 0
    rebuilt = parse_burmeister(out_path.read_text(encoding="utf-8"))
    assert rebuilt.objects == B3.objects
    assert set(rebuilt.extents()) == set(B3.extents())


def test_basis_prints_to_stdout_by_default(capsys, b3_path):
    assert main(["basis", str(b3_path)]) == 0
    rebuilt = parse_burmeister(capsys.readouterr().out)
    assert set(rebuilt.extents()) == set(B3.extents())


def test_scaling_dim_value_and_unknown(capsys, b3_path):
    assert main(["scaling-dim", str(b3_path), "--scales", "ordinal:2"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert (
        main(["scaling-dim", str(b3_path), "--scales", "ordinal:2", "--max-d", "2"])
        == 0
    )
    assert capsys.readouterr().out == (
        "unknown (no full measure with at most 2 scales)\n"
    )


def test_scaling_dim_json(capsys, b3_path):
    payload = run_json(
        capsys,
        ["scaling-dim", str(b3_path), "--scales", "ordinal:2", "--max-d", "2", "--json"],
    )
    assert payload["dimension"] is None
    assert payload["max_d"] == 2


def test_transpose_swaps_sides(capsys, tmp_path):
    chain = build_scale(ScaleFamily.ORDINAL, 3)
    path = tmp_path / "chain.cxt"
    path.write_text(to_burmeister(chain), encoding="utf-8")
    payload = run_json(capsys, ["concepts", str(path), "--json", "--transpose"])
    assert payload["count"] == len(chain.transpose().extents())


def test_clarify_merges_labels_in_explanations(capsys, tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text(",p,q\nx,1,0\ny,1,0\nz,0,1\n", encoding="utf-8")
    assert main(["explain", str(path), "--clarify"]) == 0
    out = capsys.readouterr().out
    assert "x/y" in out


def test_missing_file_fails_cleanly(capsys, tmp_path):
    assert main(["concepts", str(tmp_path / "absent.cxt")]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_bad_family_name_fails_cleanly(capsys, b3_path):
    assert main(["motifs", str(b3_path), "--families", "diagonal"]) == 1
    assert "error:" in capsys.readouterr().err


def test_incomplete_covering_fails_cleanly(capsys, n3_path):
    # pairs cannot reach the three singleton extents of this context
    assert main(["basis", str(n3_path), "--families", "ordinal"]) == 1
    assert "covering misses" in capsys.readouterr().err


def test_malformed_context_fails_cleanly(capsys, tmp_path):
    path = tmp_path / "broken.cxt"
    path.write_text("B\n\n2\n", encoding="utf-8")
    assert main(["concepts", str(path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_scale_spec_fails_cleanly(capsys, b3_path):
    assert main(["scaling-dim", str(b3_path), "--scales", "ordinal4"]) == 1
    assert "scale spec" in capsys.readouterr().err


def test_json_output_is_deterministic(capsys, b3_path):
    assert main(["cover", str(b3_path), "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["cover", str(b3_path), "--json"]) == 0
    assert capsys.readouterr().out == first
