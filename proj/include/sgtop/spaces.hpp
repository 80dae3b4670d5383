#pragma once

#include <string>
#include <vector>

#include "sgtop/operators.hpp"

namespace sgtop {

/// Subspaces are re-indexed to 0..|S|-1; to_parent maps the new indices back
/// to the original labels so witnesses can be reported in them.
struct SubspaceResult {
  FinTopology space;
  std::vector<int> to_parent;

  PtSet restrict(const PtSet& parent_set) const;  // parent set -> subspace set
  PtSet embed(const PtSet& sub_set, int parent_size) const;
};

SubspaceResult subspace(const FinTopology& t, const PtSet& s);

/// Product topology; the pair (i, j) gets index i * n2 + j. Opens are the
/// unions of open rectangles; the result may exceed the explicit-opens
/// limit, in which case only the operator suite is available on it.
/// Carriers beyond 81 points are rejected.
FinTopology product(const FinTopology& t1, const FinTopology& t2);

/// The topology of all sets U \ N with U open and N nowhere dense;
/// equivalently {A : A in Int(cl(Int A))}.
FinTopology alpha_topology(const FinTopology& t);

/// The topology generated by the regular-open sets (all their unions).
FinTopology semi_regularization(const FinTopology& t);

// Named spaces.
FinTopology discrete(int n);
FinTopology indiscrete(int n);
/// Two points, {0} open, {1} closed.
FinTopology sierpinski();
/// Finite set with the cofinite topology, which degenerates to discrete.
FinTopology cofinite_finite(int n);
/// Four points with opens {}, {0}, {1}, {0,1}, X.
FinTopology p4_example();
/// n+1 points: 0..n-1 plus the extra point p = n; opens {}, {0..n-1}, X.
FinTopology e1_model(int n);

/// Parses catalog strings: "p4", "sierpinski", "discrete:3", "indiscrete:2",
/// "cofinite:3", "e1:4". Throws UnknownName / BadParameter.
FinTopology catalog(const std::string& spec_string);

}  // namespace sgtop
