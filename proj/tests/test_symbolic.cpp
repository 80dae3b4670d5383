#include <doctest.h>

#include "sgtop/operators.hpp"
#include "sgtop/spaces.hpp"
#include "sgtop/symbolic.hpp"

using namespace sgtop;

namespace {

SymSet fin(std::vector<std::uint32_t> s, std::vector<bool> e = {}) {
  return SymSet::finite(std::move(s), std::move(e));
}
SymSet cof(std::vector<std::uint32_t> s, std::vector<bool> e = {}) {
  return SymSet::cofinite(std::move(s), std::move(e));
}

}  // namespace

TEST_CASE("finite/cofinite algebra closure and involution") {
  std::vector<SymSet> samples = {fin({}), fin({1, 2, 7}), cof({}), cof({0, 3}), fin({0}),
                                 cof({5})};
  for (const auto& a : samples) {
    CHECK(a.complement().complement() == a);
    for (const auto& b : samples) {
      SymSet u = a | b;
      SymSet i = a & b;
      CHECK((a.complement() & b.complement()) == u.complement());  // De Morgan
      CHECK((a.complement() | b.complement()) == i.complement());
      for (std::uint32_t x : {0u, 1u, 2u, 3u, 5u, 7u, 100u}) {
        CHECK(u.contains_nat(x) == (a.contains_nat(x) || b.contains_nat(x)));
        CHECK(i.contains_nat(x) == (a.contains_nat(x) && b.contains_nat(x)));
      }
    }
  }
}

TEST_CASE("symbolic text form round trips") {
  SymSpace e1(SymFamily::IndiscretePlusPoint);
  for (const char* text : {"fin{1,2,7}-p", "cof{0,3}-p", "fin{}+p", "cof{}+p"}) {
    SymSet s = SymSet::parse(text, e1.extra_names());
    CHECK(s.to_string(e1.extra_names()) == text);
  }
  CHECK(SymSet::parse("fin{2,1,2}", {}) == fin({1, 2}));
  CHECK_THROWS_AS(SymSet::parse("open{1}", {}), BadParameter);
  CHECK_THROWS_AS(SymSet::parse("fin{1}+q", e1.extra_names()), NotRepresentable);
}

TEST_CASE("interior closed forms") {
  SymSpace cofinite(SymFamily::CofiniteNat);
  CHECK(sym_interior(cofinite, fin({1, 2})) == fin({}));
  CHECK(sym_interior(cofinite, cof({0})) == cof({0}));

  SymSpace ind(SymFamily::IndiscreteNat);
  CHECK(sym_interior(ind, cof({0})) == fin({}));
  CHECK(sym_interior(ind, cof({})) == cof({}));

  SymSpace opc(SymFamily::OnePointCompactDiscreteNat);
  CHECK(sym_interior(opc, fin({3, 7}, {false})) == fin({3, 7}, {false}));
  CHECK(sym_interior(opc, fin({3}, {true})) == fin({3}, {false}));   // inf not interior
  CHECK(sym_interior(opc, cof({1}, {true})) == cof({1}, {true}));    // cofinite nbhd of inf

  SymSpace e1(SymFamily::IndiscretePlusPoint);
  CHECK(sym_interior(e1, cof({}, {false})) == cof({}, {false}));  // N itself
  CHECK(sym_interior(e1, cof({2}, {true})) == fin({}, {false}));
  CHECK(sym_interior(e1, fin({1, 2}, {true})) == fin({}, {false}));
}

TEST_CASE("closure closed forms") {
  SymSpace e1(SymFamily::IndiscretePlusPoint);
  CHECK(sym_closure(e1, cof({1}, {false})) == e1.universe());  // infinite sets are dense
  CHECK(sym_closure(e1, fin({0}, {false})) == e1.universe());  // anything meeting N is dense
  CHECK(sym_closure(e1, fin({}, {true})) == fin({}, {true}));  // {p} closed

  SymSpace cofinite(SymFamily::CofiniteNat);
  CHECK(sym_closure(cofinite, fin({5})) == fin({5}));
  CHECK(sym_closure(cofinite, cof({5})) == cof({}));

  SymSpace opc(SymFamily::OnePointCompactDiscreteNat);
  CHECK(sym_closure(opc, fin({}, {true})) == fin({}, {true}));      // {inf} closed
  CHECK(sym_closure(opc, fin({2, 4}, {false})) == fin({2, 4}, {false}));
  CHECK(sym_closure(opc, cof({}, {false})) == opc.universe());      // N accumulates at inf
}

TEST_CASE("duality holds through the independent closure forms") {
  for (const auto& name : SymSpace::names()) {
    SymSpace sp = SymSpace::by_name(name);
    int extras = static_cast<int>(sp.extra_names().size());
    std::vector<SymSet> samples;
    for (auto tag : {0, 1})
      for (auto sup : std::vector<std::vector<std::uint32_t>>{{}, {0}, {1, 2}, {0, 5, 9}})
        for (int e = 0; e < (1 << extras); ++e) {
          std::vector<bool> flags;
          for (int i = 0; i < extras; ++i) flags.push_back((e >> i) & 1);
          samples.push_back(tag ? SymSet::cofinite(sup, flags) : SymSet::finite(sup, flags));
        }
    for (const auto& a : samples) {
      CHECK(sym_closure(sp, a) == sym_interior(sp, a.complement()).complement());
      CHECK(sym_interior(sp, a) == sym_closure(sp, a.complement()).complement());
    }
  }
}

TEST_CASE("decomposition of the symbolic catalog") {
  SymSpace cofinite(SymFamily::CofiniteNat);
  CHECK(sym_decompose(cofinite).x1 == cofinite.universe());

  SymSpace ind(SymFamily::IndiscreteNat);
  CHECK(sym_decompose(ind).x1 == ind.empty_set());

  SymSpace e1(SymFamily::IndiscretePlusPoint);
  CHECK(sym_decompose(e1).x1 == fin({}, {true}));
  CHECK(sym_decompose(e1).x2 == cof({}, {false}));

  SymSpace opc(SymFamily::OnePointCompactDiscreteNat);
  CHECK(sym_decompose(opc).x1 == fin({}, {true}));

  // The tables agree with per-singleton operator evaluation.
  for (const auto& name : SymSpace::names()) {
    SymSpace sp = SymSpace::by_name(name);
    SymDecomp d = sym_decompose(sp);
    for (std::uint32_t x = 0; x < 20; ++x) {
      SymSet singleton = SymSet::finite({x}, std::vector<bool>(sp.extra_names().size(), false));
      bool nowhere_dense = sym_is_nowhere_dense(sp, singleton);
      CHECK(nowhere_dense == d.x1.contains_nat(x));
    }
  }
}

TEST_CASE("hsg-closed closed forms") {
  SymSpace cofinite(SymFamily::CofiniteNat);
  CHECK(sym_is_hsg_closed(cofinite, fin({1, 2, 3})));
  CHECK_FALSE(sym_is_hsg_closed(cofinite, cof({7})));
  SymSpace ind(SymFamily::IndiscreteNat);
  CHECK(sym_is_hsg_closed(ind, cof({})));
}

TEST_CASE("c2/c3 verdicts across the catalog") {
  SymVerdict v = sym_is_c3(SymSpace::by_name("cofinite-nat"));
  CHECK(v.value);
  CHECK(sym_is_sg_compact(SymSpace::by_name("cofinite-nat")));

  SymVerdict ind = sym_is_c3(SymSpace::by_name("indiscrete-nat"));
  CHECK_FALSE(ind.value);
  REQUIRE(ind.witness.has_value());
  CHECK(ind.witness->is_infinite());
  CHECK_FALSE(sym_is_sg_compact(SymSpace::by_name("indiscrete-nat")));

  CHECK(sym_is_c2(SymSpace::by_name("opc-discrete")).value);
  SymVerdict opc_c3 = sym_is_c3(SymSpace::by_name("opc-discrete"));
  CHECK_FALSE(opc_c3.value);
  CHECK_FALSE(opc_c3.witness_family.empty());  // witness lives outside the algebra

  CHECK(sym_is_c3(SymSpace::by_name("e1-infinite")).value);

  for (const auto& name : SymSpace::names()) {
    SymSpace sp = SymSpace::by_name(name);
    if (sym_is_c3(sp).value) CHECK(sym_is_c2(sp).value);
  }
}

TEST_CASE("cellular witnesses") {
  auto w = sym_cellular_witness(SymSpace::by_name("opc-discrete"));
  REQUIRE(w.has_value());
  CHECK(w->union_in_x2);
  CHECK(w->subfamily_union == cof({}, {false}));
  CHECK_FALSE(sym_cellular_witness(SymSpace::by_name("indiscrete-nat")).has_value());
  CHECK_FALSE(sym_cellular_witness(SymSpace::by_name("cofinite-nat")).has_value());
  CHECK_FALSE(sym_cellular_witness(SymSpace::by_name("e1-infinite")).has_value());
}

TEST_CASE("semi-compactness via the cellular characterization") {
  CHECK(sym_is_semi_compact(SymSpace::by_name("cofinite-nat")));
  CHECK(sym_is_semi_compact(SymSpace::by_name("e1-infinite")));
  CHECK(sym_is_semi_compact(SymSpace::by_name("indiscrete-nat")));
  CHECK_FALSE(sym_is_semi_compact(SymSpace::by_name("opc-discrete")));
}

TEST_CASE("falsifiers find no verdict contradiction") {
  for (const auto& name : SymSpace::names()) {
    FalsifierResult f = falsify_verdicts(SymSpace::by_name(name), 1000, 7);
    CHECK(f.samples == 1000);
    CHECK(f.contradictions == 0);
  }
}

TEST_CASE("truncation consistency against the finite engine, small windows") {
  // e1-infinite vs e1_model(k): all proper supports, both p-flags.
  SymSpace e1(SymFamily::IndiscretePlusPoint);
  for (int k = 2; k <= 5; ++k) {
    FinTopology model = e1_model(k);
    for (std::uint64_t mask = 0; mask + 1 < (1ULL << k); ++mask) {
      for (bool p : {false, true}) {
        std::vector<std::uint32_t> sup;
        for (int i = 0; i < k; ++i)
          if ((mask >> i) & 1ULL) sup.push_back(i);
        SymSet a = SymSet::finite(sup, {p});
        PtSet mapped = truncate_to_model(e1, a, k);
        CHECK(truncate_to_model(e1, sym_interior(e1, a), k) == interior(model, mapped));
        CHECK(truncate_to_model(e1, sym_closure(e1, a), k) == closure(model, mapped));
      }
    }
  }

  // opc-discrete: the discrete shadow is exact on sets avoiding inf, the
  // included-point shadow on sets containing inf.
  SymSpace opc(SymFamily::OnePointCompactDiscreteNat);
  for (int k = 2; k <= 5; ++k) {
    FinTopology disc = opc_model_discrete(k);
    FinTopology incl = opc_model_included_point(k);
    for (std::uint64_t mask = 0; mask + 1 < (1ULL << k); ++mask) {
      std::vector<std::uint32_t> sup;
      for (int i = 0; i < k; ++i)
        if ((mask >> i) & 1ULL) sup.push_back(i);
      SymSet plain = SymSet::finite(sup, {false});
      PtSet mapped = truncate_to_model(opc, plain, k);
      CHECK(truncate_to_model(opc, sym_interior(opc, plain), k) == interior(disc, mapped));
      CHECK(truncate_to_model(opc, sym_closure(opc, plain), k) == closure(disc, mapped));

      SymSet with_inf = SymSet::finite(sup, {true});
      PtSet mapped_inf = truncate_to_model(opc, with_inf, k);
      CHECK(truncate_to_model(opc, sym_interior(opc, with_inf), k) == interior(incl, mapped_inf));
      CHECK(truncate_to_model(opc, sym_closure(opc, with_inf), k) == closure(incl, mapped_inf));
    }
  }
}

TEST_CASE("truncation guards and cofinite windows") {
  SymSpace e1(SymFamily::IndiscretePlusPoint);
  CHECK(truncate_to_model(e1, cof({}, {false}), 4) == PtSet::of(5, {0, 1, 2, 3}));
  CHECK(truncate_to_model(e1, cof({1}, {true}), 4) == PtSet::of(5, {0, 2, 3, 4}));
  CHECK_THROWS_AS(truncate_to_model(e1, fin({9}, {false}), 4), NotRepresentable);
  CHECK_THROWS_AS(sym_interior(e1, fin({1})), NotRepresentable);  // missing the extra flag
}
