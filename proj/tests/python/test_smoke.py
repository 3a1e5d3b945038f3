"""Smoke tests for the python bindings: the key published numbers and
verdicts, reached through the module surface."""

import entcert


def test_construct_families():
    u = entcert.construct("U")
    assert u["dims"] == [2, 2, 2]
    assert len(u["states"]) == 6

    u000 = entcert.construct("Uhqm", rot="000")
    assert len(u000["states"]) == 19

    ges = entcert.construct("GES", rot="000")
    assert len(ges["states"]) == 8

    tau = entcert.stopper(3, 3)
    terms = tau["states"][0]["terms"]
    assert len(terms) == 27
    assert all(t["re"] == "1" for t in terms)


def test_exact_rank():
    assert entcert.rank([[1, 0], [0, 1]]) == 2
    assert entcert.rank([["1/2", "1"], ["1", "2"]]) == 1
    assert entcert.rank([[0, 0, 0]]) == 0


def test_ubb_certificate():
    cert = entcert.certify_ubb(entcert.construct("U"))
    assert cert["verdict"] == "ubb"
    assert cert["complement_dim"] == 2
    for cut in cert["ges"]["cuts"]:
        assert cut["span_dim"] == 4
        assert cut["full"]


def test_ges_certificate():
    cert = entcert.certify_ges(entcert.construct("GES", rot="000"))
    assert cert["verdict"] == "genuinely-entangled-subspace"
    assert [c["span_dim"] for c in cert["cuts"]] == [64, 64, 64]


def test_strong_nonlocality():
    cert = entcert.certify_strong_nonlocality(entcert.construct("Uhqm", rot="000"))
    assert cert["strongly_nonlocal"]
    big_sides = [c for c in cert["certificates"] if c["active_dim"] == 9]
    assert [c["span_dim"] for c in big_sides] == [80, 80, 80]

    reducible = entcert.certify_strong_nonlocality(entcert.construct("U"))
    assert not reducible["strongly_nonlocal"]
    assert "witness" in reducible


def test_protocol_tree():
    outcome = entcert.verify_protocol(entcert.construct("U"), "A|BC")
    assert outcome["distinguished"]

    tree = entcert.appendix_protocol_tree()
    outcome2 = entcert.verify_protocol(entcert.construct("U"), "A|BC", tree)
    assert outcome2["distinguished"]


def test_omega_set():
    gplus = entcert.construct("Gplus")
    omega = entcert.omega_set(gplus, 2)
    assert len(omega["states"]) == 2


def test_fixtures():
    report = entcert.verify_fixtures()
    assert report["all_pass"], report
