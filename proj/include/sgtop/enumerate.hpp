#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgtop/topology.hpp"

namespace sgtop {

enum class EnumMode { Labeled, UpToHomeomorphism };

/// Streams every topology on n labeled points exactly once, in a fixed
/// deterministic order (ascending encoding of the specialization preorder's
/// adjacency matrix). Topologies on a finite carrier correspond one-to-one
/// to preorders: min_nbhd(x) = {y : y lies below x}, opens = down-sets.
///
/// In UpToHomeomorphism mode only the lexicographically least labeled
/// representative of each homeomorphism class is emitted.
///
/// n = 5 must be opted into with allow_large (6942 labeled topologies; the
/// independent cross-check oracle at that size is much slower).
class EnumerationStream {
 public:
  explicit EnumerationStream(int n, EnumMode mode = EnumMode::Labeled, bool allow_large = false);

  std::optional<FinTopology> next();

  int carrier_size() const { return n_; }
  EnumMode mode() const { return mode_; }

 private:
  int n_;
  EnumMode mode_;
  std::uint64_t cursor_ = 0;  // next off-diagonal bit assignment to try
  std::uint64_t total_;
};

std::vector<FinTopology> enumerate_topologies(int n, EnumMode mode = EnumMode::Labeled,
                                              bool allow_large = false);
std::uint64_t count_topologies(int n, EnumMode mode = EnumMode::Labeled,
                               bool allow_large = false);

/// Independent slow oracle: scans every family of subsets containing the
/// empty set and the carrier and keeps the ones closed under pairwise union
/// and intersection. Materializes families for n <= 4; counting additionally
/// supports the (slow) n = 5 scan over 2^30 candidate families.
std::vector<FinTopology> enumerate_topologies_direct(int n);
std::uint64_t count_topologies_direct(int n, bool allow_n5 = false);

std::vector<std::vector<int>> all_permutations(int n);

/// Homeomorphism-invariant key: the minimum over all relabelings of the
/// canonical opens encoding.
std::vector<std::uint64_t> canonical_key(const FinTopology& t);

}  // namespace sgtop
