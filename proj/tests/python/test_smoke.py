import pytest

import buffsim


def test_fixture_verdicts():
    a, b = buffsim.fixture("branching")
    assert not buffsim.plain_simulates(a, b)
    assert not buffsim.bounded_simulates(a, b, 3)
    r = buffsim.decide(a, b, "lookahead")
    assert r["outcome"] == "holds"
    assert r["certificate"].startswith("# lookahead-fair holds")
    a, b = buffsim.fixture("inclusion-gap")
    assert buffsim.language_inclusion(a, b)["verdict"] == "included"
    assert buffsim.decide(a, b, "continuous")["outcome"] == "fails"


def test_counterexample_and_membership():
    a = buffsim.Nba(["p"], ["a", "b"], [(0, 0, 0), (0, 1, 0)], 0, [0])
    b = buffsim.Nba(["q"], ["a", "b"], [(0, 0, 0)], 0, [0])
    r = buffsim.language_inclusion(a, b)
    assert r["verdict"] == "not_included"
    stem, period = r["counterexample"]
    assert "b" in stem + period
    assert a.accepts("", "b")
    assert not b.accepts("", "b")


def test_round_trip_and_minimize():
    a, _ = buffsim.fixture("branching")
    assert buffsim.parse_nba(a.emit()) == a
    m = buffsim.minimize(a, "direct", 2, prune=True)
    assert len(m) <= len(a)
    assert buffsim.language_inclusion(a, m)["verdict"] == "included"
    assert buffsim.language_inclusion(m, a)["verdict"] == "included"
    with pytest.raises(buffsim.DelayedPruningRefused):
        buffsim.minimize(a, "delayed", 1, prune=True)


def test_errors():
    with pytest.raises(buffsim.ParseError):
        buffsim.parse_nba("states: p\nbogus line\n")
    with pytest.raises(ValueError):
        buffsim.decide(*buffsim.fixture("branching"), relation="sideways")


def test_generators():
    ts = buffsim.parse_tiling_system(
        "tiles: x y\nh: x y\nh: y x\nv: x x\nv: y y\ninitial: x\nfinal: y\n")
    a, b = buffsim.gen_pspace(ts, 1)
    expected = "fails" if buffsim.has_tiling(ts, 1, 2) else "holds"
    assert buffsim.decide(a, b, "lookahead")["outcome"] == expected
    assert buffsim.tiling_game_winner(ts, 1) in ("starter", "completer")


def test_run_cli():
    code, out, _ = buffsim.run_cli(["selftest", "--seed", "1", "--budget", "5"])
    assert code == 0
    assert out.endswith("RESULT holds\n")
