// Brute-force reference implementations used only by tests. They work from
// the explicit opens list alone, independent of the min_nbhd fast path.
#pragma once

#include "sgtop/topology.hpp"

namespace sgtop::oracles {

inline PtSet interior_oracle(const FinTopology& t, const PtSet& a) {
  PtSet out(t.carrier_size());
  for (const auto& u : t.opens())
    if (u.subset_of(a)) out = out | u;
  return out;
}

inline PtSet closure_oracle(const FinTopology& t, const PtSet& a) {
  PtSet out = t.full_set();
  for (const auto& u : t.opens()) {
    PtSet closed = u.complement();
    if (a.subset_of(closed)) out = out & closed;
  }
  return out;
}

inline bool semi_open_oracle(const FinTopology& t, const PtSet& a) {
  return a.subset_of(closure_oracle(t, interior_oracle(t, a)));
}

inline bool semi_closed_oracle(const FinTopology& t, const PtSet& a) {
  return interior_oracle(t, closure_oracle(t, a)).subset_of(a);
}

// Union of all semi-open subsets of A.
inline PtSet semi_interior_oracle(const FinTopology& t, const PtSet& a) {
  int n = t.carrier_size();
  PtSet out(n);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    PtSet s = PtSet::from_bits(n, mask);
    if (s.subset_of(a) && semi_open_oracle(t, s)) out = out | s;
  }
  return out;
}

// Intersection of all semi-closed supersets of A.
inline PtSet semi_closure_oracle(const FinTopology& t, const PtSet& a) {
  int n = t.carrier_size();
  PtSet out = t.full_set();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    PtSet s = PtSet::from_bits(n, mask);
    if (a.subset_of(s) && semi_closed_oracle(t, s)) out = out & s;
  }
  return out;
}

}  // namespace sgtop::oracles
