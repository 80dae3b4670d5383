#include "sgtop/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace sgtop {

namespace {

constexpr int kEnumCap = 5;

void check_enum_size(int n, bool allow_large) {
  if (n < 1 || n > kEnumCap)
    throw CarrierTooLarge("enumeration supports 1 <= n <= " + std::to_string(kEnumCap));
  if (n == kEnumCap && !allow_large)
    throw CarrierTooLarge("n = 5 enumeration must be explicitly opted into");
}

// Decodes an off-diagonal bit assignment into a reflexive relation matrix,
// rows as bit masks. Bit k covers the k-th off-diagonal cell in row-major
// order. Returns false if the relation is not transitive.
bool decode_preorder(std::uint64_t code, int n, std::array<std::uint32_t, 8>& rows) {
  int bit = 0;
  for (int x = 0; x < n; ++x) {
    rows[x] = 1u << x;
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if ((code >> bit) & 1ULL) rows[x] |= 1u << y;
      ++bit;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if ((rows[x] >> y) & 1u)
        if ((rows[y] & ~rows[x]) != 0) return false;  // y below x but rows[y] not within
  return true;
}

FinTopology topology_from_rows(const std::array<std::uint32_t, 8>& rows, int n) {
  std::vector<PtSet> nbhds;
  nbhds.reserve(n);
  for (int x = 0; x < n; ++x) nbhds.push_back(PtSet::from_bits(n, rows[x]));
  return FinTopology::from_min_nbhds(std::move(nbhds));
}

std::vector<std::uint64_t> opens_encoding(const FinTopology& t) {
  std::vector<std::uint64_t> key;
  key.reserve(t.opens().size());
  for (const auto& u : t.opens()) key.push_back(u.bits64());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

EnumerationStream::EnumerationStream(int n, EnumMode mode, bool allow_large)
    : n_(n), mode_(mode) {
  check_enum_size(n, allow_large);
  total_ = 1ULL << (n * (n - 1));
}

std::optional<FinTopology> EnumerationStream::next() {
  std::array<std::uint32_t, 8> rows{};
  while (cursor_ < total_) {
    std::uint64_t code = cursor_++;
    if (!decode_preorder(code, n_, rows)) continue;
    FinTopology t = topology_from_rows(rows, n_);
    if (mode_ == EnumMode::UpToHomeomorphism && opens_encoding(t) != canonical_key(t)) continue;
    return t;
  }
  return std::nullopt;
}

std::vector<FinTopology> enumerate_topologies(int n, EnumMode mode, bool allow_large) {
  EnumerationStream stream(n, mode, allow_large);
  std::vector<FinTopology> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::uint64_t count_topologies(int n, EnumMode mode, bool allow_large) {
  EnumerationStream stream(n, mode, allow_large);
  std::uint64_t count = 0;
  while (stream.next()) ++count;
  return count;
}

std::vector<FinTopology> enumerate_topologies_direct(int n) {
  if (n < 1 || n > 4)
    throw CarrierTooLarge("direct oracle materializes families only for n <= 4");
  int subsets = 1 << n;
  std::uint32_t empty_bit = 1u;
  std::uint32_t full_bit = 1u << (subsets - 1);
  std::uint64_t total = 1ULL << subsets;

  std::vector<FinTopology> out;
  for (std::uint64_t fam = 0; fam < total; ++fam) {
    std::uint32_t f = static_cast<std::uint32_t>(fam);
    if ((f & empty_bit) == 0 || (f & full_bit) == 0) continue;
    bool ok = true;
    for (int a = 0; a < subsets && ok; ++a) {
      if (((f >> a) & 1u) == 0) continue;
      for (int b = a + 1; b < subsets; ++b) {
        if (((f >> b) & 1u) == 0) continue;
        if (((f >> (a | b)) & 1u) == 0 || ((f >> (a & b)) & 1u) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<PtSet> opens;
    for (int a = 0; a < subsets; ++a)
      if ((f >> a) & 1u) opens.push_back(PtSet::from_bits(n, a));
    out.push_back(validate_topology(std::move(opens), n));
  }
  return out;
}

std::uint64_t count_topologies_direct(int n, bool allow_n5) {
  if (n <= 4) return enumerate_topologies_direct(n).size();
  if (n != 5 || !allow_n5)
    throw CarrierTooLarge("direct oracle counts at n = 5 must be explicitly opted into");

  // 2^30 candidate families over the 30 subsets other than {} and X.
  constexpr int subsets = 32;
  constexpr std::uint32_t forced = 1u | (1u << (subsets - 1));
  std::uint64_t count = 0;
  int member[subsets];
  for (std::uint64_t body = 0; body < (1ULL << 30); ++body) {
    std::uint32_t f = forced | (static_cast<std::uint32_t>(body) << 1);
    int k = 0;
    std::uint32_t rest = f;
    while (rest) {
      member[k++] = std::countr_zero(rest);
      rest &= rest - 1;
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k; ++j) {
        int a = member[i], b = member[j];
        if (((f >> (a | b)) & 1u) == 0 || ((f >> (a & b)) & 1u) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(pi);
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

std::vector<std::uint64_t> canonical_key(const FinTopology& t) {
  std::vector<std::uint64_t> best;
  for (const auto& pi : all_permutations(t.carrier_size())) {
    std::vector<std::uint64_t> key;
    key.reserve(t.opens().size());
    for (const auto& u : t.opens()) key.push_back(apply_permutation(u, pi).bits64());
    std::sort(key.begin(), key.end());
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace sgtop
