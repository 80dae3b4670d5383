#pragma once

#include <vector>

#include "sgtop/operators.hpp"

namespace sgtop {

/// The partition of a space into the points whose singleton is nowhere
/// dense (x1) and the points whose singleton is locally dense (x2).
struct SpaceDecomp {
  PtSet x1;
  PtSet x2;
};

SpaceDecomp decompose(const FinTopology& t);

/// Every sg predicate is implemented twice. Definitional mode follows the
/// quantified definitions (loops over semi-open supersets, semi-closed
/// subsets, or all subsets); characterization mode evaluates the pointwise
/// x1 criteria. Both modes must agree on every input; that agreement is a
/// central test surface, not an implementation detail.
enum class PredicateMode { Definitional, Characterization };

/// sg-closed: semi-closure stays inside every semi-open superset
/// (definitional), equivalently x1 meet Int(cl A) is contained in A.
bool is_sg_closed(const FinTopology& t, const PtSet& a,
                  PredicateMode mode = PredicateMode::Characterization);
bool is_sg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                  PredicateMode mode = PredicateMode::Characterization);

/// sg-open: every semi-closed subset lies in the semi-interior
/// (definitional), equivalently A meet x1 is contained in sInt(A).
bool is_sg_open(const FinTopology& t, const PtSet& a,
                PredicateMode mode = PredicateMode::Characterization);
bool is_sg_open(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                PredicateMode mode = PredicateMode::Characterization);

/// hereditarily sg-closed: every subset is sg-closed (definitional),
/// equivalently x1 meet Int(cl A) is empty.
bool is_hsg_closed(const FinTopology& t, const PtSet& a,
                   PredicateMode mode = PredicateMode::Characterization);
bool is_hsg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                   PredicateMode mode = PredicateMode::Characterization);

/// Every singleton is open or nowhere dense.
bool is_semi_td(const FinTopology& t);

/// All members nonempty, open and pairwise disjoint.
bool is_cellular(const FinTopology& t, const std::vector<PtSet>& family);

/// Enumerates the cellular families no other cellular family refines or
/// extends (F is dominated by G when every member of F contains a member
/// of G and G cannot be grown further). On a finite space these are the
/// families of minimal nonempty open sets; the enumeration is deterministic,
/// members in canonical order.
std::vector<std::vector<PtSet>> maximal_cellular_families(const FinTopology& t);

/// Total function between carriers, stored pointwise.
struct PointMap {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> image;  // image[x] in [0, codomain_size)

  static PointMap identity(int n);
  static PointMap constant(int domain_size, int codomain_size, int value);
  void validate() const;
};

PtSet preimage(const PointMap& f, const PtSet& b);

/// Preimages of semi-closed sets are sg-closed.
bool is_pre_sg_continuous(const PointMap& f, const FinTopology& dom, const FinTopology& cod);

}  // namespace sgtop
