import json
import os
import subprocess

import pytest

import rouquier


def test_klein_four_has_four_singletons():
    rep = rouquier.group_blocks(2, 2, 2, [0], 1)
    assert rep["schemaVersion"] == rouquier.SCHEMA_VERSION
    assert rep["group"] == "G(2,2,2)"
    assert [len(b) for b in rep["blocks"]] == [1, 1, 1, 1]


def test_character_counts_of_small_dihedral_groups():
    assert len(rouquier.group_blocks(3, 3, 2, [0], 1)["labels"]) == 3
    assert len(rouquier.group_blocks(4, 4, 2, [0], 1)["labels"]) == 5
    assert len(rouquier.group_blocks(6, 6, 2, [0], 1)["labels"]) == 6


def test_ariki_koike_blocks():
    rep = rouquier.ak_blocks(2, 2, [0, 0], 1)
    assert rep["blocks"] == [
        ["[[2],[]]", "[[],[2]]"],
        ["[[1,1],[]]", "[[],[1,1]]"],
        ["[[1],[1]]"],
    ]


def test_rank2_hyperplanes_and_half_integral_a():
    assert rouquier.rank2_hyperplanes(2)["hyperplaneCount"] == 7
    rep = rouquier.rank2_aa(2, [1, 0], [1, 0], [1, 0])
    row = next(r for r in rep["aa"] if r["label"] == "chi2[0,1,1]")
    assert (row["a"], row["A"], row["aPlusA"]) == ("-3/2", "3/2", "0")


def test_primitives():
    assert rouquier.beta_number([3, 2]) == [4, 2]
    assert rouquier.shift([4, 2], 1) == [5, 3, 0]
    assert rouquier.partition_from_beta([4, 2]) == [3, 2]
    assert rouquier.contents_equal([[2], []], [[1], [1]], [0, 1])
    assert not rouquier.contents_equal([[1], []], [[], [1]], [0, 1])
    assert rouquier.prime_divisors_of_root_difference(6, 0, 2) == {3}
    assert not rouquier.is_essential_pair(6, 0, 1)
    assert rouquier.tau([[2], [], []], 1) == [[], [2], []]
    assert rouquier.is_d_stuttering([[1], [], [1], []], 2, 2)
    assert len(rouquier.multipartitions(2, 2)) == 5


def test_errors():
    with pytest.raises(ValueError):
        rouquier.group_blocks(4, 2, 2, [0], 1)
    with pytest.raises(rouquier.ValidationError):
        rouquier.shift([1], -1)


def test_verify_suite():
    rep = rouquier.verify("cyclotomic", 2, 2, 1)
    assert rep["passed"] == rep["total"] > 0


@pytest.mark.skipif("ROUQUIER_CLI" not in os.environ, reason="command-line tool not built")
def test_cli_matches_module_and_round_trips():
    cli = os.environ["ROUQUIER_CLI"]
    out = subprocess.run(
        [cli, "blocks", "--de", "2", "--e", "2", "--r", "2", "--m", "0", "--n", "1"],
        check=True, capture_output=True, text=True,
    ).stdout
    parsed = json.loads(out)
    assert parsed == rouquier.group_blocks(2, 2, 2, [0], 1)
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == out

    bad = subprocess.run([cli, "blocks", "--de", "4", "--e", "2", "--r", "2", "--m", "0", "--n", "1"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    assert "--m" in bad.stderr
