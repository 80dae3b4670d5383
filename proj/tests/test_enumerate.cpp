#include <doctest.h>

#include <set>

#include "sgtop/enumerate.hpp"

using namespace sgtop;

namespace {

std::vector<std::uint64_t> encoding(const FinTopology& t) {
  std::vector<std::uint64_t> key;
  for (const auto& u : t.opens()) key.push_back(u.bits64());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

TEST_CASE("labeled counts match the direct family-closure oracle") {
  // 1, 4, 29, 355: computed by the direct oracle, frozen here.
  const std::uint64_t expected[] = {0, 1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    auto fast = enumerate_topologies(n);
    auto slow = enumerate_topologies_direct(n);
    CHECK(fast.size() == expected[n]);
    CHECK(slow.size() == expected[n]);

    std::set<std::vector<std::uint64_t>> fast_keys, slow_keys;
    for (const auto& t : fast) fast_keys.insert(encoding(t));
    for (const auto& t : slow) slow_keys.insert(encoding(t));
    CHECK(fast_keys == slow_keys);
    CHECK(fast_keys.size() == fast.size());  // no duplicates
  }
}

TEST_CASE("every enumerated family revalidates") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      FinTopology again = validate_topology(t.opens(), n);
      CHECK(again == t);
    }
}

TEST_CASE("enumeration order is deterministic") {
  auto a = enumerate_topologies(3);
  auto b = enumerate_topologies(3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("homeomorphism dedup keeps one representative per class") {
  // 1, 3, 9, 33: derived from the labeled stream by canonical-key grouping.
  const std::uint64_t expected[] = {0, 1, 3, 9, 33};
  for (int n = 1; n <= 4; ++n) {
    auto reps = enumerate_topologies(n, EnumMode::UpToHomeomorphism);
    CHECK(reps.size() == expected[n]);

    std::set<std::vector<std::uint64_t>> classes;
    for (const auto& t : enumerate_topologies(n)) classes.insert(canonical_key(t));
    CHECK(reps.size() == classes.size());
    for (const auto& t : reps) CHECK(encoding(t) == canonical_key(t));
  }
}

TEST_CASE("carrier guards") {
  CHECK_THROWS_AS(enumerate_topologies(6), CarrierTooLarge);
  CHECK_THROWS_AS(enumerate_topologies(5), CarrierTooLarge);  // needs the opt-in
  CHECK_THROWS_AS(enumerate_topologies_direct(5), CarrierTooLarge);
  CHECK_THROWS_AS(count_topologies_direct(5, false), CarrierTooLarge);
  CHECK(count_topologies(5, EnumMode::Labeled, true) == 6942);
}
