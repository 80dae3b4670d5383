#pragma once

#include <string>

#include "sgtop/topology.hpp"

namespace sgtop {

/// Membership of a set in the classes used throughout the library.
/// Flag implications that always hold:
///   open => semi_open, alpha_open, preopen;  regular_open => open;
///   nowhere_dense => semi_closed.
struct SetClass {
  bool open = false;
  bool closed = false;
  bool semi_open = false;
  bool semi_closed = false;
  bool preopen = false;
  bool nowhere_dense = false;
  bool dense = false;
  bool regular_open = false;
  bool regular_closed = false;
  bool alpha_open = false;
  bool beta_open = false;
  bool delta_open = false;

  bool operator==(const SetClass&) const = default;
  std::string to_string() const;
};

/// Union of all opens contained in A; equivalently {x : min_nbhd(x) in A}.
PtSet interior(const FinTopology& t, const PtSet& a);

/// Smallest closed superset of A; computed as the complement of the
/// interior of the complement.
PtSet closure(const FinTopology& t, const PtSet& a);

/// A intersected with the closure of its interior; equals the union of all
/// semi-open subsets of A.
PtSet semi_interior(const FinTopology& t, const PtSet& a);

/// A joined with the interior of its closure; equals the intersection of
/// all semi-closed supersets of A.
PtSet semi_closure(const FinTopology& t, const PtSet& a);

bool is_semi_open(const FinTopology& t, const PtSet& a);    // A in cl(Int A)
bool is_semi_closed(const FinTopology& t, const PtSet& a);  // Int(cl A) in A
bool is_preopen(const FinTopology& t, const PtSet& a);      // A in Int(cl A)
bool is_nowhere_dense(const FinTopology& t, const PtSet& a);
bool is_dense(const FinTopology& t, const PtSet& a);
bool is_regular_open(const FinTopology& t, const PtSet& a);    // A = Int(cl A)
bool is_regular_closed(const FinTopology& t, const PtSet& a);  // A = cl(Int A)
bool is_alpha_open(const FinTopology& t, const PtSet& a);      // A in Int(cl(Int A))
bool is_beta_open(const FinTopology& t, const PtSet& a);       // A in cl(Int(cl A))

/// A equals the union of its regular-open subsets. Decided by subset
/// enumeration on small carriers; large carriers use the pointwise
/// criterion (for every x in A, Int(cl(min_nbhd(x))) is contained in A),
/// which agrees on finite spaces.
bool is_delta_open(const FinTopology& t, const PtSet& a);

SetClass classify_set(const FinTopology& t, const PtSet& a);

}  // namespace sgtop
