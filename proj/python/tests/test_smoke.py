# SPDX-License-Identifier: Apache-2.0
import pytest

import zdchaos


def test_lengths_are_exact_python_ints():
    t = zdchaos.Tower("fixed-point")
    assert [t.l1(n) for n in range(1, 5)] == [1, 9, 49, 249]
    assert t.l1(60) == 2 * 5**59 - 1
    assert zdchaos.Tower("odometer").cover_walk_length(3) == 10


def test_decode_and_q_interval():
    t = zdchaos.Tower("fixed-point")
    assert t.q_interval(3, 1) == (24, 25)
    word = [t.decode(2, f"p1:{j}" if 0 < j < 9 else ("H" if j == 0 else "F:a"), 1)
            for j in range(10)]
    assert word == ["H", "H", "F:a", "F:a", "H", "F:a", "F:a", "H", "F:a", "F:a"]
    assert t.decode_p1(254, t.q_interval(254, 4)[0] + 1, 4) == "p1:1"
    assert sorted(t.step(2, "H")) == ["H", "p1:1"]


def test_schedule():
    t = zdchaos.Tower("fixed-point")
    assert t.schedule(2, "strict") == [(1, 3, 1), (4, 254, 249)]
    assert [(n, m) for n, m, _ in t.schedule(3)] == [(1, 3), (4, 5), (6, 7)]


@pytest.mark.parametrize("gen", ["fixed-point", "odometer"])
def test_claims_pass_and_replay(gen):
    t = zdchaos.Tower(gen)
    for claim in ["fixed-point-pattern", "property1", "property2", "triple-cover",
                  "density", "proximal", "recurrent", "invariant", "scrambled",
                  "transitive"]:
        r = t.verify(claim, m=3, n=1)
        assert r["passed"], r["text"]
        assert t.replay(r["text"]) is None


def test_property2_witnesses():
    r = zdchaos.Tower("fixed-point").verify("property2", m=2, n=1)
    assert r["witnesses"]["left.t"] == -3
    assert r["witnesses"]["right.t"] == 3


def test_build_and_budget():
    b = zdchaos.build("fixed-point", 3)
    assert b["vertices"] == [1, 2, 18, 98]
    assert b["report"]["passed"]
    assert "cluster_F" in b["dot"][1]
    with pytest.raises(zdchaos.BudgetExceeded):
        zdchaos.build("fixed-point", 12, budget=1000)


def test_covering_text_and_errors():
    ok = zdchaos.validate_covering_text(
        "covering c\nlevel 1\nvertices a b\nedges\na b\nb a\nend\n")
    assert ok["ok"] and ok["chain_transitive"] and ok["depth"] == 1
    with pytest.raises(ValueError, match="line 5"):
        zdchaos.validate_covering_text("covering c\nlevel 1\nvertices a\nedges\na z\nend\n")
    with pytest.raises(ValueError):
        zdchaos.Tower("no-such-generator")
    with pytest.raises(ValueError):
        zdchaos.Tower().verify("property1", mode="sloppy")
