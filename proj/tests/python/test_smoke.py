"""Smoke tests for the python bindings."""

import sgtop


def test_operators_on_the_witness_space():
    p4 = sgtop.catalog("p4")
    assert p4.n == 4
    assert sgtop.interior(p4, sgtop.PtSet(4, [0, 2])).members() == [0]
    assert sgtop.closure(p4, sgtop.PtSet(4, [0])).members() == [0, 2, 3]
    assert sgtop.semi_closure(p4, sgtop.PtSet(4, [0, 1])).members() == [0, 1, 2, 3]

    c = sgtop.classify_set(p4, sgtop.PtSet(4, [0]))
    assert c.open and c.regular_open and not c.nowhere_dense


def test_sg_predicates_and_decomposition():
    p4 = sgtop.catalog("p4")
    d = sgtop.decompose(p4)
    assert d.x1.members() == [2, 3]
    assert not sgtop.is_sg_closed(p4, sgtop.PtSet(4, [0, 1]))
    assert sgtop.is_sg_closed(p4, sgtop.PtSet(4, [0]))
    assert sgtop.is_sg_closed(
        p4, sgtop.PtSet(4, [0]), sgtop.PredicateMode.DEFINITIONAL
    )


def test_constructions():
    p4 = sgtop.catalog("p4")
    sub = sgtop.subspace(p4, sgtop.PtSet(4, [0, 1]))
    assert sub.space == sgtop.catalog("discrete:2")
    prod = sgtop.product(sgtop.catalog("indiscrete:2"), sgtop.catalog("indiscrete:2"))
    assert prod == sgtop.catalog("indiscrete:4")
    assert sgtop.count_topologies(3) == 29
    assert len(sgtop.enumerate_topologies(2)) == 4


def test_json_round_trip():
    p4 = sgtop.catalog("p4")
    again = sgtop.from_json(p4.to_json())
    assert again == p4


def test_symbolic_catalog():
    cof = sgtop.SymSpace("cofinite-nat")
    assert sgtop.sym_is_c3(cof)["value"] is True
    assert sgtop.sym_is_sg_compact(cof)

    ind = sgtop.SymSpace("indiscrete-nat")
    verdict = sgtop.sym_is_c3(ind)
    assert verdict["value"] is False
    assert verdict["witness"] == "cof{}"

    e1 = sgtop.SymSpace("e1-infinite")
    a = sgtop.SymSet.parse("fin{1,2}-p", e1)
    assert sgtop.sym_closure(e1, a).text(e1) == "cof{}+p"
    assert not sgtop.sym_is_semi_compact(sgtop.SymSpace("opc-discrete"))


def test_claims_api():
    assert len(sgtop.claim_registry()) == 24
    report = sgtop.verify_claim("DP1_regular_open_iff", max_n=3)
    assert report["result"] == "pass"
    assert report["instances"] > 0

    record = sgtop.search_counterexample("hsg-implies-nowhere-dense", max_n=3)
    assert record is not None
    assert record["carrier_size"] == 1
    assert sgtop.replay_counterexample(record)


def test_suite_smoke():
    report = sgtop.run_suite(claims=["SG_char_closed", "THM1_sym"], max_n=2)
    assert report["schema_version"] == 1
    assert report["summary"]["failed"] == 0
