import json

from supercoh import catalog, cli


def write_entry(tmp_path, entry_id, name="alg.json"):
    e = catalog.get_entry(entry_id)
    path = tmp_path / name
    path.write_text(json.dumps(e.data, indent=2, sort_keys=True))
    return path


def run(argv):
    return cli.main(argv)


def test_validate_ok(tmp_path, capsys):
    path = write_entry(tmp_path, "a4-borel")
    assert run(["validate", str(path)]) == 0
    out = capsys.readouterr().out
    assert "(2|0)" in out and "GF(3)" in out


def test_validate_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["validate", str(bad)]) == cli.EXIT_PARSE
    assert "parse error" in capsys.readouterr().err


def test_validate_missing_file(capsys):
    assert run(["validate", "/nonexistent/x.json"]) == cli.EXIT_PARSE


def test_p_must_be_odd_prime(tmp_path, capsys):
    f = tmp_path / "p2.json"
    f.write_text(json.dumps({"p": 2, "even": ["x"], "odd": []}))
    assert run(["validate", str(f)]) == cli.EXIT_PARSE
    assert "odd prime" in capsys.readouterr().err


def test_broken_jacobi_exits_3_with_indices(tmp_path, capsys):
    data = {
        "p": 3,
        "even": ["a", "b", "c"],
        "odd": [],
        "brackets": {"[a,b]": {"c": 1}, "[a,c]": {"a": 1}},
        "pmap": {},
    }
    f = tmp_path / "jacobi.json"
    f.write_text(json.dumps(data))
    assert run(["validate", str(f)]) == cli.EXIT_VALIDATION
    err = capsys.readouterr().err
    assert "jacobi" in err and "(" in err


def test_duplicate_bracket_pair_rejected(tmp_path, capsys):
    data = {
        "p": 3,
        "even": ["h", "x"],
        "odd": [],
        "brackets": {"[h,x]": {"x": 1}, "[x,h]": {"x": -1}},
        "pmap": {"h": {"h": 1}},
    }
    f = tmp_path / "dup.json"
    f.write_text(json.dumps(data))
    assert run(["validate", str(f)]) == cli.EXIT_PARSE


def test_p_override_rules(tmp_path, capsys):
    pinned = write_entry(tmp_path, "a1-null", "pinned.json")
    assert run(["validate", str(pinned), "--p-override", "5"]) == cli.EXIT_PARSE
    free = tmp_path / "free.json"
    data = dict(catalog.get_entry("a1-null").data)
    del data["p"]
    free.write_text(json.dumps(data))
    assert run(["validate", str(free)]) == cli.EXIT_PARSE
    assert run(["validate", str(free), "--p-override", "5"]) == 0


def test_cohomology_command(tmp_path, capsys):
    path = write_entry(tmp_path, "a3-heisenberg")
    assert run(["cohomology", str(path), "--module", "k",
                "--degree", "1", "--kind", "lie"]) == 0
    assert "= 0" in capsys.readouterr().out
    assert run(["cohomology", str(path), "--module", "k",
                "--degree", "2", "--kind", "restricted"]) == 0
    assert "= 1" in capsys.readouterr().out
    assert run(["cohomology", str(path), "--module", "nope",
                "--degree", "1", "--kind", "lie"]) == cli.EXIT_VALIDATION


def test_module_pmap_warning(tmp_path, capsys):
    data = dict(catalog.get_entry("a1-null").data)
    data["modules"] = {"k": {"even": ["m"], "odd": [], "action": {},
                             "pmap": {"m": {"m": 1}}}}
    f = tmp_path / "warn.json"
    f.write_text(json.dumps(data))
    assert run(["validate", str(f)]) == 0
    assert "strongly abelian" in capsys.readouterr().err


def test_sixterm_command_and_report(tmp_path, capsys):
    path = write_entry(tmp_path, "a1-null")
    out = tmp_path / "report.json"
    assert run(["sixterm", str(path), "--module", "k", "--json", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["payload"]["dims"] == [1, 1, 1, 1, 0, 0]
    assert report["payload"]["all_exact"] is True
    assert report["schema_version"] == 1
    assert "exact_at_H2s" in report["payload"]["exactness"]


def test_report_determinism(tmp_path):
    path = write_entry(tmp_path, "a4-borel")
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run(["sixterm", str(path), "--module", "k", "--json", str(out1)]) == 0
    assert run(["sixterm", str(path), "--module", "k", "--json", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    r1 = json.loads(out1.read_text())
    assert "timings" not in json.dumps(r1)  # telemetry stays out of the payload


def test_examples_list_show(capsys):
    assert run(["examples", "list"]) == 0
    out = capsys.readouterr().out
    for e in catalog.ENTRIES:
        assert e.entry_id in out
    assert run(["examples", "show", "a5-odd-line"]) == 0
    shown = json.loads(capsys.readouterr().out)
    assert shown["odd"] == ["y"]
    assert run(["examples", "show"]) == cli.EXIT_PARSE


def test_examples_run_all(capsys):
    assert run(["examples", "run-all"]) == 0
    out = capsys.readouterr().out
    assert "all exact" in out
    for e in catalog.ENTRIES:
        assert e.entry_id in out


def test_exactness_failure_exit_code(tmp_path, monkeypatch, capsys):
    import supercoh.sixterm as sixterm_mod

    real = sixterm_mod.build_six_term

    def broken(g, rep, algebra_id="g", module_id="M", **kw):
        report = real(g, rep, algebra_id, module_id, **kw)
        report.exactness["exact_at_H1"] = False
        return report

    monkeypatch.setattr(sixterm_mod, "build_six_term", broken)
    path = write_entry(tmp_path, "a1-null")
    assert run(["sixterm", str(path), "--module", "k"]) == cli.EXIT_EXACTNESS


def test_selftest(capsys):
    assert run(["selftest", "--seed", "3"]) == 0
    assert "selftest: ok" in capsys.readouterr().out


def test_json_to_stdout(tmp_path, capsys):
    path = write_entry(tmp_path, "a1-null")
    assert run(["validate", str(path), "--json", "-"]) == 0
    out = capsys.readouterr().out
    payload = json.loads(out[out.index("{"):])
    assert payload["payload"]["valid"] is True


def test_internal_error_exit_code(tmp_path, monkeypatch, capsys):
    import supercoh.sixterm as sixterm_mod

    def boom(*a, **kw):
        raise RuntimeError("synthetic fault")

    monkeypatch.setattr(sixterm_mod, "build_six_term", boom)
    path = write_entry(tmp_path, "a1-null")
    assert run(["sixterm", str(path), "--module", "k"]) == cli.EXIT_INTERNAL
    assert "internal error" in capsys.readouterr().err
