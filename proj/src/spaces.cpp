#include "sgtop/spaces.hpp"

#include <algorithm>
#include <unordered_set>

namespace sgtop {

namespace {

constexpr int kProductCap = 81;

template <typename F>
void for_each_subset(int n, F&& fn) {
  std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(PtSet::from_bits(n, mask));
}

FinTopology close_under_unions(std::vector<PtSet> gens, int n) {
  std::unordered_set<PtSet> seen(gens.begin(), gens.end());
  std::vector<PtSet> family(gens.begin(), gens.end());
  PtSet empty = PtSet::empty_set(n);
  if (seen.insert(empty).second) family.push_back(empty);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      PtSet u = family[i] | family[j];
      if (seen.insert(u).second) family.push_back(u);
    }
  return validate_topology(std::move(family), n);
}

}  // namespace

PtSet SubspaceResult::restrict(const PtSet& parent_set) const {
  PtSet out(space.carrier_size());
  for (int i = 0; i < space.carrier_size(); ++i)
    if (parent_set.test(to_parent[i])) out.set(i);
  return out;
}

PtSet SubspaceResult::embed(const PtSet& sub_set, int parent_size) const {
  PtSet out(parent_size);
  for (int i : sub_set.members()) out.set(to_parent[i]);
  return out;
}

SubspaceResult subspace(const FinTopology& t, const PtSet& s) {
  t.check_carrier(s);
  if (s.empty()) throw EmptySubspace("subspace carrier must be nonempty");
  std::vector<int> to_parent = s.members();
  int m = static_cast<int>(to_parent.size());

  SubspaceResult result;
  result.to_parent = to_parent;

  std::unordered_set<PtSet> seen;
  std::vector<PtSet> opens;
  for (const auto& u : t.opens()) {
    PtSet v(m);
    for (int i = 0; i < m; ++i)
      if (u.test(to_parent[i])) v.set(i);
    if (seen.insert(v).second) opens.push_back(v);
  }
  result.space = validate_topology(std::move(opens), m);
  return result;
}

FinTopology product(const FinTopology& t1, const FinTopology& t2) {
  int n1 = t1.carrier_size(), n2 = t2.carrier_size();
  if (n1 * n2 > kProductCap)
    throw ProductTooLarge("product carrier " + std::to_string(n1 * n2) + " exceeds " +
                          std::to_string(kProductCap));
  int n = n1 * n2;
  // min_nbhd(i,j) is the open rectangle min_nbhd(i) x min_nbhd(j); every
  // open of the product is a union of such rectangles.
  std::vector<PtSet> nbhds;
  nbhds.reserve(n);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      PtSet m(n);
      for (int a : t1.min_nbhd(i).members())
        for (int b : t2.min_nbhd(j).members()) m.set(a * n2 + b);
      nbhds.push_back(m);
    }
  return FinTopology::from_min_nbhds(std::move(nbhds));
}

FinTopology alpha_topology(const FinTopology& t) {
  int n = t.carrier_size();
  if (n > 20) throw CarrierTooLarge("alpha topology enumerates subsets; carrier too large");
  std::unordered_set<PtSet> seen;
  std::vector<PtSet> family;
  std::vector<PtSet> nowhere_dense_sets;
  for_each_subset(n, [&](const PtSet& a) {
    if (is_nowhere_dense(t, a)) nowhere_dense_sets.push_back(a);
  });
  for (const auto& u : t.opens())
    for (const auto& nd : nowhere_dense_sets) {
      PtSet v = u.minus(nd);
      if (seen.insert(v).second) family.push_back(v);
    }
  return validate_topology(std::move(family), n);
}

FinTopology semi_regularization(const FinTopology& t) {
  int n = t.carrier_size();
  if (n > 20) throw CarrierTooLarge("semi-regularization enumerates subsets; carrier too large");
  std::vector<PtSet> regular_opens;
  for_each_subset(n, [&](const PtSet& a) {
    if (is_regular_open(t, a)) regular_opens.push_back(a);
  });
  return close_under_unions(std::move(regular_opens), n);
}

FinTopology discrete(int n) {
  if (n < 1) throw BadParameter("discrete space needs n >= 1");
  if (n > 12) throw CarrierTooLarge("explicit discrete topology capped at 12 points");
  std::vector<PtSet> opens;
  for_each_subset(n, [&](const PtSet& a) { opens.push_back(a); });
  return validate_topology(std::move(opens), n);
}

FinTopology indiscrete(int n) {
  if (n < 1) throw BadParameter("indiscrete space needs n >= 1");
  return validate_topology({PtSet::empty_set(n), PtSet::full_set(n)}, n);
}

FinTopology sierpinski() {
  return validate_topology({PtSet::empty_set(2), PtSet::of(2, {0}), PtSet::full_set(2)}, 2);
}

FinTopology cofinite_finite(int n) {
  // Complements of finite sets in a finite carrier are all sets.
  return discrete(n);
}

FinTopology p4_example() {
  return validate_topology({PtSet::empty_set(4), PtSet::of(4, {0}), PtSet::of(4, {1}),
                            PtSet::of(4, {0, 1}), PtSet::full_set(4)},
                           4);
}

FinTopology e1_model(int n) {
  if (n < 1) throw BadParameter("e1 model needs n >= 1");
  if (n + 1 > PtSet::kMaxPoints) throw BadParameter("e1 model too large");
  int m = n + 1;
  PtSet a(m);
  for (int i = 0; i < n; ++i) a.set(i);
  return validate_topology({PtSet::empty_set(m), a, PtSet::full_set(m)}, m);
}

FinTopology catalog(const std::string& spec_string) {
  std::string name = spec_string;
  int param = -1;
  auto colon = spec_string.find(':');
  if (colon != std::string::npos) {
    name = spec_string.substr(0, colon);
    try {
      param = std::stoi(spec_string.substr(colon + 1));
    } catch (const std::exception&) {
      throw BadParameter("bad catalog parameter in \"" + spec_string + "\"");
    }
  }
  auto need_param = [&]() {
    if (param < 0) throw BadParameter("catalog name \"" + name + "\" needs a parameter, e.g. \"" +
                                      name + ":3\"");
    return param;
  };
  if (name == "discrete") return discrete(need_param());
  if (name == "indiscrete") return indiscrete(need_param());
  if (name == "cofinite") return cofinite_finite(need_param());
  if (name == "e1") return e1_model(need_param());
  if (name == "sierpinski") return sierpinski();
  if (name == "p4") return p4_example();
  throw UnknownName("unknown catalog space \"" + name + "\"");
}

}  // namespace sgtop
