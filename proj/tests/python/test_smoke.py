import pytest

import strongco


def test_path_values():
    expected = [1, 2, 0, 4, 4, 4, 4, 5, 5]
    for n, want in enumerate(expected, start=1):
        assert strongco.solve(strongco.generate(f"path:{n}"))["value"] == want
        assert strongco.sc_oracle(f"path:{n}") == want


def test_solve_record():
    r = strongco.solve(strongco.generate("cycle:6"))
    assert r["value"] == 6
    assert r["certified"]
    assert r["certificate"] == "exhaustive"
    assert sorted(v for b in r["witness"] for v in b) == list(range(6))
    assert strongco.validate_partition(strongco.generate("cycle:6"), r["witness"])["valid"]


def test_star_has_no_partition():
    r = strongco.solve(strongco.generate("star:4"))
    assert r["value"] == 0
    assert r["witness"] is None
    assert r["certificate"] == "family_F"
    assert strongco.family_f_member(strongco.generate("star:4"))


def test_plain_style_and_workers():
    g = strongco.generate("complete_bipartite:5,2")
    assert strongco.solve(g, "plain")["value"] == 7
    assert strongco.solve(g, "strong", workers=3)["value"] == 2
    assert strongco.c_oracle("complete_bipartite:5,2") == 7
    assert strongco.c_oracle("path:5") is None


def test_graph_round_trip():
    g = strongco.Graph(4, [(0, 1), (1, 2), (2, 3)])
    text = g.to_edge_list()
    assert text == "4 3\n1 2\n2 3\n3 4\n"
    h = strongco.parse_edge_list(text)
    assert h.edges == g.edges
    assert h.labels == ["v1", "v2", "v3", "v4"]
    assert g.degrees == [1, 2, 2, 1]


def test_domination():
    p5 = strongco.generate("path:5")
    assert strongco.is_dominating(p5, [1, 3])
    assert not strongco.is_dominating(p5, [1, 4])
    assert strongco.gamma(strongco.generate("path:9")) == 3
    assert strongco.count_all_sds(strongco.generate("path:3"), "strong") == 4
    value, blocks = strongco.domatic(strongco.generate("cycle:6"))
    assert value == 3 and len(blocks) == 3


def test_scg_and_bounds():
    p7 = strongco.generate("path:7")
    labels, edges, dot = strongco.build_scg(p7, [[0, 2], [1, 3], [5], [4, 6]])
    assert edges == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert labels[2] == "V3={v6}"
    assert dot.startswith("graph SCG {\n")
    with pytest.raises(ValueError):
        strongco.build_scg(p7, [[v] for v in range(7)])
    bound, reasons = strongco.upper_bounds(p7)
    assert bound == 6
    assert [name for name, _, applied in reasons if applied] == ["order", "delta2"]


def test_constructions():
    blocks, d, _ = strongco.construct_from_domatic(strongco.generate("cycle:6"))
    assert d == 3 and len(blocks) >= 6
    g, ok = strongco.family_g_check(1, 1, 1)
    assert ok and g.order == 4


def test_errors():
    with pytest.raises(strongco.CapacityError):
        strongco.solve(strongco.generate("path:25"))
    with pytest.raises(ValueError):
        strongco.parse_edge_list("3 1\n1 1\n")
    with pytest.raises(ValueError):
        strongco.generate("wheel:5")
    with pytest.raises(ValueError):
        strongco.Graph(2, [(0, 0)])
