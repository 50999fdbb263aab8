#!/usr/bin/env python3
"""
Test the run_multicores command line: outputs, exit codes and --from-file checks
"""

import json

from multicores.paths import count_gd
from run_multicores import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_rect(capsys):
    assert run(capsys, "count", "rect", "--s", "3", "--t", "5") == (0, "7\n", "")


def test_count_json_uses_strings(capsys):
    code, out, _ = run(capsys, "count", "multi-catalan", "--s", "10", "--p", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"count": "2188"}


def test_not_coprime_is_a_usage_error(capsys):
    code, out, err = run(capsys, "count", "rect", "--s", "4", "--t", "6")
    assert code == 1
    assert out == ""
    assert "coprime" in err


def test_infinite_poset_message(capsys):
    code, _, err = run(capsys, "poset", "--gens", "4,6")
    assert code == 1
    assert "relatively prime" in err


def test_poset_formats(capsys):
    code, out, _ = run(capsys, "poset", "--gens", "5,7,13", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gaps"] == [1, 2, 3, 4, 6, 8, 9, 11, 16]
    assert payload["frobenius_number"] == "16"

    code, out, _ = run(capsys, "poset", "--gens", "5,7,13", "--format", "dot")
    assert code == 0 and out.startswith("digraph")

    code, _, err = run(capsys, "poset", "--gens", "5,7,13", "--format", "svg")
    assert code == 1 and "--format svg" in err


def test_cores_list(capsys):
    code, out, _ = run(capsys, "cores", "--gens", "2,3", "--list")
    assert code == 0
    assert out.splitlines() == ["∅", "(1)"]


def test_cores_total_size(capsys):
    code, out, _ = run(capsys, "cores", "--gens", "4,5,6", "--total-size")
    assert code == 0
    assert out == "25\n"


def test_ideals_count_only(capsys):
    code, out, _ = run(capsys, "ideals", "--gens", "3,5", "--count-only")
    assert code == 0
    assert out.startswith("7 lower ideals")


def test_paths_gd_count(capsys):
    code, out, _ = run(capsys, "paths", "gd", "--n", "4", "--k", "3", "--count-only")
    assert code == 0
    assert out == f"{count_gd(4, 3)}\n"


def test_paths_svg_file(capsys, tmp_path):
    target = tmp_path / "paths.svg"
    code, _, _ = run(capsys, "paths", "rect", "--s", "3", "--t", "5", "--list", "--svg", str(target))
    assert code == 0
    assert target.read_text().startswith("<svg")


def test_qdet_json(capsys):
    code, out, _ = run(capsys, "qdet", "--shape", "2,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"shape": [2, 1], "coefficients": ["1", "1", "2", "1"]}


def test_diagram(capsys):
    assert run(capsys, "diagram", "--shape", "2,1") == (0, "1\n3 1\n", "")
    code, _, _ = run(capsys, "diagram", "--shape", "1,2")
    assert code == 1


def test_symmetry_table_parity(capsys):
    code, out, _ = run(capsys, "symmetry-table", "--s", "5")
    assert code == 0 and len(out.splitlines()) == 4
    code, _, err = run(capsys, "symmetry-table", "--s", "4")
    assert code == 1 and "odd" in err


def test_verify_conjecture(capsys):
    code, out, _ = run(capsys, "verify", "conjecture", "--max-s", "4", "--format", "json")
    assert code == 0
    (report,) = json.loads(out)
    assert report["status"] == "pass"
    assert [i["detail"] for i in report["instances"]] == ["lhs=5 rhs=5", "lhs=25 rhs=25"]


def test_verify_plain_summary(capsys):
    code, out, _ = run(capsys, "verify", "symmetry", "--max-s", "7")
    assert code == 0
    assert "✅ pass" in out


def test_verify_empty_range(capsys):
    code, _, err = run(capsys, "verify", "conjecture", "--max-s", "2")
    assert code == 1
    assert "no instances" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "count", "rect", "--s", "3")[0] == 1
    assert run(capsys, "poset", "--gens", "a,b")[0] == 1


def test_max_items_cap(capsys):
    code, _, err = run(capsys, "ideals", "--gens", "5,7", "--list", "--max-items", "3")
    assert code == 1
    assert "--max-items" in err


def test_from_file_round_trip(capsys, tmp_path):
    for argv, key in [(["ideals", "--gens", "4,5,6"], "ideals"),
                      (["cores", "--gens", "3,5"], "cores"),
                      (["paths", "rect", "--s", "3", "--t", "5"], "paths"),
                      (["paths", "gd", "--n", "4", "--k", "2"], "paths")]:
        code, out, _ = run(capsys, *argv, "--format", "json", "--list")
        assert code == 0
        listing = tmp_path / f"{key}.json"
        listing.write_text(out)
        assert run(capsys, *argv, "--from-file", str(listing))[0] == 0

        payload = json.loads(out)
        payload[key] = payload[key][1:]
        listing.write_text(json.dumps(payload))
        code, out, _ = run(capsys, *argv, "--from-file", str(listing))
        assert code == 2 and out.startswith("❌")


def test_output_is_deterministic(capsys):
    first = run(capsys, "ideals", "--gens", "5,7,13", "--list", "--format", "json")
    second = run(capsys, "ideals", "--gens", "5,7,13", "--list", "--format", "json")
    assert first == second


def test_count_only_rejects_listing_flags(capsys, tmp_path):
    code, out, _ = run(capsys, "paths", "rect", "--s", "3", "--t", "5", "--list", "--format", "json")
    listing = tmp_path / "paths.json"
    listing.write_text(out)
    svg = tmp_path / "empty.svg"

    for argv in [("paths", "rect", "--s", "3", "--t", "5", "--count-only", "--from-file", str(listing)),
                 ("paths", "rect", "--s", "3", "--t", "5", "--count-only", "--svg", str(svg)),
                 ("paths", "gd", "--n", "4", "--k", "2", "--count-only", "--format", "svg"),
                 ("cores", "--gens", "3,5", "--count-only", "--from-file", str(tmp_path / "missing.json")),
                 ("ideals", "--gens", "3,5", "--count-only", "--from-file", str(listing))]:
        code, out, err = run(capsys, *argv)
        assert code == 1, argv
        assert out == ""
        assert "--count-only" in err
    assert not svg.exists()


def test_poset_from_file(capsys, tmp_path):
    code, out, _ = run(capsys, "poset", "--gens", "5,7,13", "--format", "json")
    assert code == 0
    export = tmp_path / "poset.json"
    export.write_text(out)
    code, out, _ = run(capsys, "poset", "--gens", "5,7,13", "--from-file", str(export))
    assert code == 0
    assert out.count("✅") == 2

    payload = json.loads(export.read_text())
    payload["covers"] = payload["covers"][:-1]
    export.write_text(json.dumps(payload))
    code, out, _ = run(capsys, "poset", "--gens", "5,7,13", "--from-file", str(export))
    assert code == 2
    assert "❌" in out and "covers" in out
