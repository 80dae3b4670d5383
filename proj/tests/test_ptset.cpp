#include <doctest.h>

#include "sgtop/ptset.hpp"

using namespace sgtop;

TEST_CASE("set algebra laws hold exhaustively up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    PtSet full = PtSet::full_set(n);
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
      PtSet a = PtSet::from_bits(n, ma);
      CHECK(a.complement().complement() == a);
      CHECK((a | a.complement()) == full);
      CHECK((a & a.complement()).empty());
      for (std::uint64_t mb = 0; mb < (1ULL << n); ++mb) {
        PtSet b = PtSet::from_bits(n, mb);
        CHECK((a | b).complement() == (a.complement() & b.complement()));
        CHECK(a.minus(b) == (a & b.complement()));
        CHECK(a.subset_of(b) == ((a & b) == a));
      }
    }
  }
}

TEST_CASE("canonical order sorts by cardinality then bit value") {
  PtSet two = PtSet::of(3, {2});
  PtSet pair = PtSet::of(3, {0, 1});
  CHECK(two < pair);  // smaller cardinality wins even with larger bit value
  CHECK(PtSet::of(3, {0}) < two);
  CHECK_FALSE(pair < two);
}

TEST_CASE("wide carriers work beyond one word") {
  PtSet s(81);
  s.set(0);
  s.set(64);
  s.set(80);
  CHECK(s.count() == 3);
  CHECK(s.test(64));
  CHECK(s.complement().count() == 78);
  CHECK((s & s.complement()).empty());
  CHECK(s.members() == std::vector<int>{0, 64, 80});
}

TEST_CASE("carrier and range errors") {
  PtSet a(3), b(4);
  CHECK_THROWS_AS((void)(a | b), CarrierMismatch);
  CHECK_THROWS_AS(a.set(3), PointOutOfRange);
  CHECK_THROWS_AS(PtSet::from_bits(2, 0b100), PointOutOfRange);
}
