#include <doctest.h>

#include "sgtop/spaces.hpp"
#include "sgtop/topology.hpp"

using namespace sgtop;

TEST_CASE("validate_topology accepts the indiscrete family") {
  FinTopology t = validate_topology({PtSet::empty_set(3), PtSet::full_set(3)}, 3);
  CHECK(t.carrier_size() == 3);
  CHECK(t.opens().size() == 2);
  for (int x = 0; x < 3; ++x) CHECK(t.min_nbhd(x).is_full());
}

TEST_CASE("validate_topology builds the 4-point witness space") {
  FinTopology t = p4_example();
  CHECK(t.opens().size() == 5);
  CHECK(t.min_nbhd(0) == PtSet::of(4, {0}));
  CHECK(t.min_nbhd(1) == PtSet::of(4, {1}));
  CHECK(t.min_nbhd(2).is_full());
  CHECK(t.min_nbhd(3).is_full());
}

TEST_CASE("validate_topology rejects bad families") {
  CHECK_THROWS_AS(validate_topology({PtSet::empty_set(2), PtSet::of(2, {0})}, 2),
                  MissingEmptyOrFull);
  // {0} and {1} present but their union {0,1} missing on a 3-point carrier.
  CHECK_THROWS_AS(validate_topology({PtSet::empty_set(3), PtSet::of(3, {0}), PtSet::of(3, {1}),
                                     PtSet::full_set(3)},
                                    3),
                  NotClosedUnderUnion);
  CHECK_THROWS_AS(validate_topology({PtSet::empty_set(3), PtSet::of(3, {0, 1}),
                                     PtSet::of(3, {1, 2}), PtSet::full_set(3)},
                                    3),
                  NotClosedUnderIntersection);
  CHECK_THROWS_AS(validate_topology({PtSet::empty_set(2), PtSet::full_set(2)}, 3),
                  CarrierMismatch);
}

TEST_CASE("min_nbhd is the smallest open set containing the point") {
  FinTopology t = p4_example();
  for (int x = 0; x < 4; ++x) {
    const PtSet& m = t.min_nbhd(x);
    CHECK(t.is_open(m));
    CHECK(m.test(x));
    for (const auto& u : t.opens())
      if (u.test(x)) CHECK(m.subset_of(u));
  }
  CHECK(discrete(3).min_nbhd(1) == PtSet::of(3, {1}));
  CHECK_THROWS_AS(t.min_nbhd(4), PointOutOfRange);
}

TEST_CASE("JSON round trip preserves the canonical form") {
  FinTopology t = p4_example();
  FinTopology back = topology_from_json(topology_to_json(t));
  CHECK(back == t);
  CHECK(back.opens() == t.opens());

  // Unordered input canonicalizes on load.
  nlohmann::json j = {{"n", 2}, {"opens", {{0, 1}, {}, {0}}}};
  FinTopology s = topology_from_json(j);
  CHECK(s.opens().front().empty());
  CHECK(s.opens().back().is_full());
}

TEST_CASE("permutation relabels opens consistently") {
  FinTopology t = sierpinski();
  FinTopology flipped = apply_permutation(t, {1, 0});
  CHECK(flipped.is_open(PtSet::of(2, {1})));
  CHECK_FALSE(flipped.is_open(PtSet::of(2, {0})));
  CHECK(apply_permutation(flipped, {1, 0}) == t);
}
