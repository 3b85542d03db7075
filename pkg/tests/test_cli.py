"""Command-line surface: exit codes, JSON contract, config validation."""

import json

from nicholsalg.cli import main
from nicholsalg.configs import shipped_config_names


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_nichols_shipped(capsys):
    code, rep, _ = run_json(capsys, "nichols", "--config", "rank1_zeta3")
    assert code == 0
    assert rep["command"] == "nichols"
    assert rep["results"]["dims"][:4] == [1, 1, 1, 0]
    assert rep["results"]["total"] == 3


def test_diagram_and_roots(capsys):
    code, rep, _ = run_json(capsys, "roots", "--config", "a2_cartan_zeta3")
    assert code == 0
    assert rep["results"]["positive_roots"] == [[0, 1], [1, 0], [1, 1]]
    code, _, _ = run(capsys, "diagram", "--config", "b2")
    assert code == 0


def test_rigidity_exit_codes(capsys):
    for name in shipped_config_names():
        if name.startswith("fk"):
            continue
        code, rep, _ = run_json(capsys, "rigidity", "--config", name)
        assert code == 0 and rep["results"]["verdict"] == "Rigid", name
    code, rep, _ = run_json(
        capsys, "rigidity", "--config", "a2_cartan_zeta3", "--pre-nichols"
    )
    assert code == 0


def open_config(name):
    import os

    from nicholsalg.configs import CONFIG_DIR

    with open(os.path.join(CONFIG_DIR, name + ".json")) as f:
        return f.read()


def test_malformed_config_names_field(tmp_path, capsys):
    bad = dict(json.loads(open_config("rank1_zeta3")))
    bad["q_exponents"] = [[0, 1], [1, 0]]  # wrong shape for rank 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, err = run(capsys, "nichols", "--config", str(path))
    assert code == 1
    assert "q_exponents" in err


def test_config_echo_round_trip(tmp_path, capsys):
    code, rep, _ = run_json(capsys, "nichols", "--config", "a2_super")
    assert code == 0
    echo = tmp_path / "echo.json"
    echo.write_text(json.dumps(rep["config_echo"]))
    code2, rep2, _ = run_json(capsys, "nichols", "--config", str(echo))
    assert code2 == 0
    assert rep2["results"] == rep["results"]


def test_text_and_json_agree(capsys):
    code, rep, _ = run_json(capsys, "fk", "--n", "3")
    code2, text, _ = run(capsys, "fk", "--n", "3")
    assert code == code2 == 0
    for n in rep["results"]["dims"]:
        assert str(n) in text


def test_fk_small_n_rejected(capsys):
    code, _, err = run(capsys, "fk", "--n", "2")
    assert code == 1
    assert "n" in err


def test_missing_config_file(capsys):
    code, _, err = run(capsys, "nichols", "--config", "/no/such/file.json")
    assert code == 1 and err


def test_twist_command(tmp_path, capsys):
    beta = {
        "cyclotomic_order": 5,
        "values": [["-1", "zeta5"], ["zeta5^4", "-1"]],
        "skew": True,
    }
    path = tmp_path / "beta.json"
    path.write_text(json.dumps(beta))
    code, rep, _ = run_json(capsys, "twist", "--bicharacter", str(path))
    assert code == 0
    assert rep["results"]["beta_sigma_is_sign"]
    assert rep["results"]["cocycle_identity_random"]


def test_lie_and_pbw(capsys):
    code, rep, _ = run_json(capsys, "lie-check", "--example", "color_pair")
    assert code == 0 and all(v["ok"] for v in rep["results"].values())
    code, rep, _ = run_json(capsys, "pbw", "--example", "heisenberg")
    assert code == 0 and rep["results"]["match"]
    assert rep["results"]["gr"] == [1, 3, 6, 10, 15]


def test_epsilon_command(capsys):
    code, rep, _ = run_json(capsys, "epsilon", "--config", "rank1_zeta3")
    assert code == 0
    assert rep["results"]["identity_holds"]


def test_cohomology_single_degree(capsys):
    code, rep, _ = run_json(
        capsys, "cohomology", "--config", "rank1_m1", "--ell", "-1"
    )
    assert code == 0
    assert rep["results"]["H2_by_degree"]["-1"]["H"] == 0
