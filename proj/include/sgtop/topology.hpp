#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgtop/ptset.hpp"

namespace sgtop {

/// A topology on a finite carrier, stored as the explicit family of open
/// sets in canonical order plus the minimal-neighbourhood cache. Finite
/// spaces are Alexandrov, so min_nbhd(x) — the intersection of all opens
/// containing x — is itself open and determines every operator.
///
/// Product spaces can have more opens than is practical to store; those
/// instances keep only the min_nbhd cache (opens_explicit() == false) and
/// still support the full operator suite plus the is_open membership test.
class FinTopology {
 public:
  FinTopology() = default;

  int carrier_size() const { return n_; }

  bool opens_explicit() const { return opens_explicit_; }

  /// Canonical open-set family (sorted by cardinality, then bit value).
  const std::vector<PtSet>& opens() const;

  const PtSet& min_nbhd(int x) const;
  const std::vector<PtSet>& min_nbhds() const { return min_nbhd_; }

  PtSet empty_set() const { return PtSet::empty_set(n_); }
  PtSet full_set() const { return PtSet::full_set(n_); }

  /// Membership test; works whether or not the family is stored explicitly.
  bool is_open(const PtSet& a) const;
  bool is_closed(const PtSet& a) const;

  bool is_discrete() const;
  bool is_indiscrete() const;

  /// Topologies are equal iff their canonical forms coincide; for a finite
  /// space the min_nbhd vector determines the canonical form, so comparison
  /// works for non-explicit instances too.
  bool operator==(const FinTopology& o) const {
    return n_ == o.n_ && min_nbhd_ == o.min_nbhd_;
  }

  std::string to_string() const;

  /// Construct from a consistent minimal-neighbourhood table
  /// (x in nbhd[x], and y in nbhd[x] implies nbhd[y] subset of nbhd[x]).
  /// Opens are materialized unless there would be more than max_explicit.
  static FinTopology from_min_nbhds(std::vector<PtSet> nbhds, std::size_t max_explicit = 4096);

  void check_carrier(const PtSet& a) const {
    if (a.carrier_size() != n_)
      throw CarrierMismatch("set on carrier " + std::to_string(a.carrier_size()) +
                            " used with space on carrier " + std::to_string(n_));
  }

  void check_point(int x) const {
    if (x < 0 || x >= n_)
      throw PointOutOfRange("point " + std::to_string(x) + " outside carrier of size " +
                            std::to_string(n_));
  }

 private:
  friend FinTopology validate_topology(std::vector<PtSet> opens, int n);

  int n_ = 0;
  std::vector<PtSet> opens_;
  bool opens_explicit_ = false;
  std::vector<PtSet> min_nbhd_;
};

/// Checks the open-set axioms (empty and full present, closure under
/// pairwise union and intersection), canonicalizes the family and builds
/// the min_nbhd cache. Throws MissingEmptyOrFull, NotClosedUnderUnion or
/// NotClosedUnderIntersection (the latter two name the offending pair).
FinTopology validate_topology(std::vector<PtSet> opens, int n);

/// Relabels points: x becomes pi[x]. pi must be a permutation of 0..n-1.
PtSet apply_permutation(const PtSet& a, const std::vector<int>& pi);
FinTopology apply_permutation(const FinTopology& t, const std::vector<int>& pi);

/// JSON form: {"n": int, "opens": [[int, ...], ...]}. Input families may be
/// unordered; they are validated and canonicalized on load.
FinTopology topology_from_json(const nlohmann::json& j);
nlohmann::ordered_json topology_to_json(const FinTopology& t);

}  // namespace sgtop
