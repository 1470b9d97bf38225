import pandas as pd

import analyze_strata
from analyze_strata import build_catalog, profile_table, weyl_chain_lines, write_report


def test_profile_table():
    table = profile_table(build_catalog()).set_index("module")
    assert list(table.columns) == ["ring", "stratum", "t_0", "t_1", "t_2", "t_3", "crt_dims"]
    strata = table["stratum"].to_dict()
    assert strata["x^2, x*y"] == "mixed"
    assert strata["x*y, x*z"] == "mixed"
    assert strata["x"] == 1
    assert strata["x^2, y^3"] == 0
    assert strata["x^2, x*y, y*z^2"] == 1
    assert strata["(t-1)^2(t-2)"] == 0

    dims = table["crt_dims"].to_dict()
    assert dims["x^2, y^3"] == "6"
    assert dims["(t-1)^2(t-2)"] == "2 1"
    assert dims["(t-1)(t-2)(t-3)"] == "1 1 1"
    assert dims["x*y"] == "n/a (CoprimalityError)"
    assert table.loc["x^2, x*y", "t_0"] == "nonzero"
    assert table.loc["x", "t_0"] == "0"
    assert table.loc["x", "t_1"] == "M"
    assert pd.isna(table.loc["(t-1)(t-2)", "t_2"])


def test_weyl_chain_lines():
    lines = weyl_chain_lines()
    assert "- chain to (t1 - 1): (t1^2 - 4*t1 + 5) -Y1-> (t2) -Y2-> (t1 - 1)" in lines
    assert all(line.endswith("false") for line in lines if line.startswith("- single step"))
    assert lines[-1] == "- admitted toward (t1 - 1): (t1 - 1), (t2), (t1^2 - 4*t1 + 5)"


def test_write_report(tmp_path):
    table = profile_table(build_catalog()[:3])
    path = tmp_path / "report.md"
    write_report(table, ["- a chain"], path)
    text = path.read_text()
    assert text.startswith("# Coheight Strata Report")
    assert "Modules analyzed: 3" in text
    assert "Pure strata: 2, mixed: 1" in text
    assert "- a chain" in text


def test_main_writes_files(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    analyze_strata.main()
    table = pd.read_csv(tmp_path / "outputs" / "strata_profile.csv")
    assert len(table) == len(build_catalog())
    assert (tmp_path / "results" / "strata_report.md").exists()
    assert "Analysis complete!" in capsys.readouterr().out
