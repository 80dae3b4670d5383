#include "sgtop/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace sgtop {

const std::vector<PtSet>& FinTopology::opens() const {
  if (!opens_explicit_)
    throw Error("open-set family not materialized for this space (carrier " +
                std::to_string(n_) + ")");
  return opens_;
}

const PtSet& FinTopology::min_nbhd(int x) const {
  check_point(x);
  return min_nbhd_[x];
}

bool FinTopology::is_open(const PtSet& a) const {
  check_carrier(a);
  for (int x : a.members())
    if (!min_nbhd_[x].subset_of(a)) return false;
  return true;
}

bool FinTopology::is_closed(const PtSet& a) const { return is_open(a.complement()); }

bool FinTopology::is_discrete() const {
  for (int x = 0; x < n_; ++x)
    if (min_nbhd_[x].count() != 1) return false;
  return true;
}

bool FinTopology::is_indiscrete() const {
  for (int x = 0; x < n_; ++x)
    if (!min_nbhd_[x].is_full()) return false;
  return true;
}

std::string FinTopology::to_string() const {
  std::string s = "tau(n=" + std::to_string(n_) + "){";
  if (opens_explicit_) {
    bool first = true;
    for (const auto& u : opens_) {
      if (!first) s += ", ";
      s += u.to_string();
      first = false;
    }
  } else {
    s += "min_nbhds:";
    for (int x = 0; x < n_; ++x) s += " " + min_nbhd_[x].to_string();
  }
  return s + "}";
}

FinTopology FinTopology::from_min_nbhds(std::vector<PtSet> nbhds, std::size_t max_explicit) {
  int n = static_cast<int>(nbhds.size());
  if (n < 1) throw BadParameter("carrier must have at least one point");
  for (int x = 0; x < n; ++x) {
    if (nbhds[x].carrier_size() != n) throw CarrierMismatch("min_nbhd table carrier mismatch");
    if (!nbhds[x].test(x)) throw BadParameter("min_nbhd[" + std::to_string(x) + "] misses its point");
    for (int y : nbhds[x].members())
      if (!nbhds[y].subset_of(nbhds[x]))
        throw BadParameter("min_nbhd table not transitive at " + std::to_string(x));
  }

  FinTopology t;
  t.n_ = n;
  t.min_nbhd_ = std::move(nbhds);

  // Opens are exactly the unions of minimal neighbourhoods (plus the empty
  // set); materialize by union closure unless the family is too large.
  std::unordered_set<PtSet> seen;
  std::vector<PtSet> family;
  family.push_back(PtSet::empty_set(n));
  seen.insert(family.back());
  for (const auto& u : t.min_nbhd_) {
    if (seen.insert(u).second) family.push_back(u);
  }
  bool exploded = false;
  for (std::size_t i = 0; i < family.size() && !exploded; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PtSet u = family[i] | family[j];
      if (seen.insert(u).second) {
        family.push_back(u);
        if (family.size() > max_explicit) {
          exploded = true;
          break;
        }
      }
    }
  }
  if (!exploded) {
    std::sort(family.begin(), family.end());
    t.opens_ = std::move(family);
    t.opens_explicit_ = true;
  }
  return t;
}

FinTopology validate_topology(std::vector<PtSet> opens, int n) {
  if (n < 1) throw BadParameter("carrier must have at least one point");
  for (const auto& u : opens)
    if (u.carrier_size() != n)
      throw CarrierMismatch("open set " + u.to_string() + " does not fit carrier " +
                            std::to_string(n));

  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  PtSet empty = PtSet::empty_set(n);
  PtSet full = PtSet::full_set(n);
  bool has_empty = std::binary_search(opens.begin(), opens.end(), empty);
  bool has_full = std::binary_search(opens.begin(), opens.end(), full);
  if (!has_empty || !has_full)
    throw MissingEmptyOrFull(std::string("family must contain ") +
                             (!has_empty ? "the empty set" : "the full carrier"));

  auto contains = [&](const PtSet& u) {
    return std::binary_search(opens.begin(), opens.end(), u);
  };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (!contains(opens[i] | opens[j]))
        throw NotClosedUnderUnion("union of " + opens[i].to_string() + " and " +
                                  opens[j].to_string() + " is not open");
      if (!contains(opens[i] & opens[j]))
        throw NotClosedUnderIntersection("intersection of " + opens[i].to_string() + " and " +
                                         opens[j].to_string() + " is not open");
    }
  }

  FinTopology t;
  t.n_ = n;
  t.opens_ = std::move(opens);
  t.opens_explicit_ = true;
  t.min_nbhd_.reserve(n);
  for (int x = 0; x < n; ++x) {
    PtSet m = full;
    for (const auto& u : t.opens_)
      if (u.test(x)) m = m & u;
    t.min_nbhd_.push_back(m);
  }
  return t;
}

PtSet apply_permutation(const PtSet& a, const std::vector<int>& pi) {
  PtSet out(a.carrier_size());
  for (int x : a.members()) out.set(pi[x]);
  return out;
}

FinTopology apply_permutation(const FinTopology& t, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != t.carrier_size())
    throw BadParameter("permutation length does not match carrier");
  std::vector<PtSet> opens;
  opens.reserve(t.opens().size());
  for (const auto& u : t.opens()) opens.push_back(apply_permutation(u, pi));
  return validate_topology(std::move(opens), t.carrier_size());
}

FinTopology topology_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("opens"))
    throw BadParameter("topology JSON must be an object with \"n\" and \"opens\"");
  int n = j.at("n").get<int>();
  if (n < 1 || n > PtSet::kMaxPoints) throw BadParameter("carrier size out of range");
  std::vector<PtSet> opens;
  for (const auto& arr : j.at("opens")) {
    PtSet u(n);
    for (const auto& v : arr) {
      int x = v.get<int>();
      if (x < 0 || x >= n) throw PointOutOfRange("point " + std::to_string(x) + " outside carrier");
      u.set(x);
    }
    opens.push_back(u);
  }
  return validate_topology(std::move(opens), n);
}

nlohmann::ordered_json topology_to_json(const FinTopology& t) {
  nlohmann::ordered_json j;
  j["n"] = t.carrier_size();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& u : t.opens()) arr.push_back(u.members());
  j["opens"] = arr;
  return j;
}

}  // namespace sgtop
