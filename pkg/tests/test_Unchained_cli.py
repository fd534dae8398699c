import json

import pytest

from unchained.BaseErrors import ParseError
from unchained.Unchained_cli import RunConfig, main, parse_args


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_recursive(capsys, fixture_path):
    code, doc = run_json(capsys, ["check-recursive", fixture_path("height_coalgebra.json")])
    assert code == 0
    assert doc["format"] == "unchained/1"
    assert doc["recursive"]
    assert sorted(doc["order"]) == ["u", "v", "w", "x", "y", "z"]


def test_check_recursive_on_cycle(capsys, fixture_path):
    code, doc = run_json(capsys, ["check-recursive", fixture_path("cyclic_coalgebra.json")])
    assert code == 2
    assert not doc["recursive"]
    assert set(doc["cycle"]) == {"a", "b"}


def test_check_recursive_dot(capsys, fixture_path):
    code = main(["check-recursive", fixture_path("cyclic_coalgebra.json"), "--format", "dot"])
    out = capsys.readouterr().out
    assert code == 2
    assert out.startswith("// unchained/1")


def test_hylo(capsys, fixture_path):
    code, doc = run_json(
        capsys,
        ["hylo", fixture_path("counter_coalgebra.json"), fixture_path("parity_algebra.json")],
    )
    assert code == 0
    assert doc["h"] == {"a": "0", "b": "1", "c": "0"}


def test_hylo_on_cycle(capsys, fixture_path, tmp_path):
    algebra = tmp_path / "zero.json"
    algebra.write_text(
        json.dumps(
            {"functor": "cherry", "carrier": ["0"], "structure": {"leaf": "0", "node(0,0)": "0"}}
        ),
        encoding="utf-8",
    )
    code, doc = run_json(
        capsys, ["hylo", fixture_path("cyclic_coalgebra.json"), str(algebra)]
    )
    assert code == 2
    assert doc["error"] == "NotRecursive"
    assert set(doc["witness"]["cycle"]) == {"a", "b"}


def test_initial(capsys):
    code, doc = run_json(
        capsys, ["initial", "--functor", "constants:3", "--bound", "1", "--emit-terms"]
    )
    assert code == 0
    assert doc["status"] == "initial"
    assert doc["size"] == 3
    assert sorted(doc["terms"].values()) == ["k1", "k2", "k3"]


def test_initial_inconclusive(capsys):
    code, doc = run_json(capsys, ["initial", "--functor", "successor", "--bound", "2"])
    assert code == 0
    assert doc["status"] == "inconclusive"
    assert doc["alpha_injective"] and not doc["alpha_surjective"]


def test_initial_cap(capsys):
    code, doc = run_json(capsys, ["initial", "--bound", "3", "--cap", "5"])
    assert code == 3
    assert doc["error"] == "SizeCapExceeded"


def test_chain(capsys):
    code, doc = run_json(capsys, ["chain", "--steps", "3"])
    assert code == 0
    assert doc["sizes"] == [0, 1, 2, 5]
    assert doc["converged_at"] is None


def test_chain_text(capsys, tmp_path):
    plot = tmp_path / "chain.png"
    code = main(["chain", "--functor", "constants:2", "--steps", "2", "--bound", "1", "--plot", str(plot)])
    out = capsys.readouterr().out
    assert code == 0
    assert "converged at k = 1" in out
    assert plot.exists()


def test_iterate_check(capsys):
    code, doc = run_json(
        capsys, ["iterate-check", "--functor", "constants:3", "--bound", "1", "--slice", "1"]
    )
    assert code == 0
    assert doc["status"] == "bijective"


def test_colimit(capsys, fixture_path):
    code, doc = run_json(capsys, ["colimit", fixture_path("parallel_pair.json")])
    assert code == 0
    assert doc["apex"] == ["P:p"]
    assert doc["classes"] == {"P:p": ["P:p", "X:a", "X:b"]}
    assert doc["filtered"]["counterexamples"] == [{"node": "X", "x1": "a", "x2": "b"}]


def test_colimit_dot(capsys, fixture_path):
    code = main(["colimit", fixture_path("chain_diagram.json"), "--format", "dot"])
    assert code == 0
    assert "cluster_0" in capsys.readouterr().out


@pytest.mark.parametrize(
    "name, value, expected",
    [
        ("quicksort", "3,1,2", "1,2,3"),
        ("quicksort", "b,a,b", "a,b,b"),
        ("gcd", "12,8", "4"),
        ("wf-relation", "6", "2"),
        ("height", "v", "2"),
    ],
)
def test_examples_with_input(capsys, name, value, expected):
    code = main(["examples", name, "--input", value])
    assert code == 0
    assert capsys.readouterr().out.strip() == expected


def test_examples_report(capsys):
    code = main(["examples", "height"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.rstrip().endswith("z ↦ 0")


def test_examples_bad_input(capsys):
    assert main(["examples", "gcd", "--input", "1,x"]) == 4
    assert main(["examples", "height", "--input", "q"]) == 4
    assert main(["examples", "quicksort", "--input", "12,3"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["examples", "nope"],
        ["initial", "--format", "xml"],
        ["initial", "--bound", "-1"],
        ["initial", "--cap", "0"],
        ["check-recursive"],
    ],
)
def test_bad_arguments(capsys, argv):
    assert main(argv) == 4


def test_bad_files(capsys, fixture_path):
    assert main(["check-recursive", fixture_path("does_not_exist.json")]) == 4
    assert main(["check-recursive", fixture_path("broken.json")]) == 4
    assert main(["check-recursive", fixture_path("incomplete_coalgebra.json")]) == 4


def test_functor_from_file(capsys, tmp_path):
    path = tmp_path / "functor.json"
    path.write_text(json.dumps({"ops": [{"name": "a", "arity": 0}]}), encoding="utf-8")
    cfg = parse_args(["initial", "--functor", str(path), "--bound", "1"])
    assert cfg.functor == {"ops": [{"name": "a", "arity": 0}]}
    assert len(cfg.sig.ops) == 1


def test_run_config_validation():
    with pytest.raises(ParseError):
        RunConfig("initial", fmt="xml")
    with pytest.raises(ParseError):
        RunConfig("chain", steps=-2)


def test_json_output_is_deterministic(capsys):
    argv = ["iterate-check", "--functor", "constants:2", "--bound", "1", "--format", "json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


@pytest.mark.parametrize(
    "argv",
    [
        ["examples", "gcd", "--input", "40,1", "--cap", "100"],
        ["examples", "quicksort", "--input", "1,2,3,4,1", "--cap", "100"],
        ["examples", "quicksort", "--cap", "100"],
    ],
)
def test_examples_cap(capsys, argv):
    code, doc = run_json(capsys, argv)
    assert code == 3
    assert doc["error"] == "SizeCapExceeded"


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus", "--format", "json"],
        ["initial", "--bound", "-1", "--format", "json"],
        ["initial", "--cap", "0", "--format=json"],
    ],
)
def test_parse_errors_as_json(capsys, argv):
    code = main(argv)
    doc = json.loads(capsys.readouterr().out)
    assert code == 4
    assert doc["format"] == "unchained/1"
    assert doc["error"] == "ParseError"
