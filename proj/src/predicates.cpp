#include "sgtop/predicates.hpp"

#include <algorithm>

namespace sgtop {

namespace {

constexpr int kDefinitionalCap = 25;

void check_definitional(const FinTopology& t) {
  if (t.carrier_size() > kDefinitionalCap)
    throw CarrierTooLarge("definitional mode enumerates subsets; carrier " +
                          std::to_string(t.carrier_size()) + " exceeds " +
                          std::to_string(kDefinitionalCap));
}

// Iterates over every subset of the carrier.
template <typename F>
void for_each_subset(int n, F&& fn) {
  std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(PtSet::from_bits(n, mask));
}

// Iterates over every subset of base.
template <typename F>
void for_each_subset_of(const PtSet& base, F&& fn) {
  std::vector<int> pts = base.members();
  int n = base.carrier_size();
  std::uint64_t total = 1ULL << pts.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    PtSet s(n);
    for (std::size_t i = 0; i < pts.size(); ++i)
      if ((mask >> i) & 1ULL) s.set(pts[i]);
    fn(s);
  }
}

}  // namespace

SpaceDecomp decompose(const FinTopology& t) {
  int n = t.carrier_size();
  SpaceDecomp d{PtSet(n), PtSet(n)};
  for (int x = 0; x < n; ++x) {
    PtSet s = PtSet::singleton(n, x);
    PtSet int_cl = interior(t, closure(t, s));
    bool nowhere_dense = int_cl.empty();
    bool locally_dense = s.subset_of(int_cl);
    if (nowhere_dense == locally_dense)
      throw Error("singleton dichotomy failed at point " + std::to_string(x));
    if (nowhere_dense)
      d.x1.set(x);
    else
      d.x2.set(x);
  }
  return d;
}

bool is_sg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                  PredicateMode mode) {
  t.check_carrier(a);
  if (mode == PredicateMode::Characterization)
    return (d.x1 & interior(t, closure(t, a))).subset_of(a);

  check_definitional(t);
  PtSet scl = semi_closure(t, a);
  bool ok = true;
  for_each_subset(t.carrier_size(), [&](const PtSet& u) {
    if (!ok) return;
    if (a.subset_of(u) && is_semi_open(t, u) && !scl.subset_of(u)) ok = false;
  });
  return ok;
}

bool is_sg_closed(const FinTopology& t, const PtSet& a, PredicateMode mode) {
  return is_sg_closed(t, decompose(t), a, mode);
}

bool is_sg_open(const FinTopology& t, const SpaceDecomp& d, const PtSet& a, PredicateMode mode) {
  t.check_carrier(a);
  if (mode == PredicateMode::Characterization)
    return (a & d.x1).subset_of(semi_interior(t, a));

  check_definitional(t);
  PtSet sint = semi_interior(t, a);
  bool ok = true;
  for_each_subset_of(a, [&](const PtSet& s) {
    if (!ok) return;
    if (is_semi_closed(t, s) && !s.subset_of(sint)) ok = false;
  });
  return ok;
}

bool is_sg_open(const FinTopology& t, const PtSet& a, PredicateMode mode) {
  return is_sg_open(t, decompose(t), a, mode);
}

bool is_hsg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                   PredicateMode mode) {
  t.check_carrier(a);
  if (mode == PredicateMode::Characterization)
    return !d.x1.intersects(interior(t, closure(t, a)));

  check_definitional(t);
  bool ok = true;
  for_each_subset_of(a, [&](const PtSet& b) {
    if (!ok) return;
    if (!is_sg_closed(t, d, b, PredicateMode::Definitional)) ok = false;
  });
  return ok;
}

bool is_hsg_closed(const FinTopology& t, const PtSet& a, PredicateMode mode) {
  return is_hsg_closed(t, decompose(t), a, mode);
}

bool is_semi_td(const FinTopology& t) {
  int n = t.carrier_size();
  for (int x = 0; x < n; ++x) {
    PtSet s = PtSet::singleton(n, x);
    if (!t.is_open(s) && !is_nowhere_dense(t, s)) return false;
  }
  return true;
}

bool is_cellular(const FinTopology& t, const std::vector<PtSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    t.check_carrier(family[i]);
    if (family[i].empty() || !t.is_open(family[i])) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (family[i].intersects(family[j])) return false;
  }
  return true;
}

std::vector<std::vector<PtSet>> maximal_cellular_families(const FinTopology& t) {
  // Minimal nonempty opens are pairwise disjoint or equal, every nonempty
  // open contains one, and every open is a union of minimal neighbourhoods;
  // hence the family of all minimal opens dominates every cellular family
  // and is the unique undominated one.
  std::vector<PtSet> minimal;
  for (int x = 0; x < t.carrier_size(); ++x) {
    const PtSet& u = t.min_nbhd(x);
    bool is_minimal = true;
    for (int y : u.members())
      if (t.min_nbhd(y).count() < u.count()) {
        is_minimal = false;
        break;
      }
    if (is_minimal && std::find(minimal.begin(), minimal.end(), u) == minimal.end())
      minimal.push_back(u);
  }
  std::sort(minimal.begin(), minimal.end());
  return {minimal};
}

PointMap PointMap::identity(int n) {
  PointMap f{n, n, {}};
  f.image.resize(n);
  for (int x = 0; x < n; ++x) f.image[x] = x;
  return f;
}

PointMap PointMap::constant(int domain_size, int codomain_size, int value) {
  PointMap f{domain_size, codomain_size, std::vector<int>(domain_size, value)};
  f.validate();
  return f;
}

void PointMap::validate() const {
  if (static_cast<int>(image.size()) != domain_size)
    throw BadParameter("point map must be total on its domain");
  for (int v : image)
    if (v < 0 || v >= codomain_size)
      throw PointOutOfRange("image point " + std::to_string(v) + " outside codomain");
}

PtSet preimage(const PointMap& f, const PtSet& b) {
  if (b.carrier_size() != f.codomain_size)
    throw CarrierMismatch("preimage set does not fit the codomain");
  PtSet out(f.domain_size);
  for (int x = 0; x < f.domain_size; ++x)
    if (b.test(f.image[x])) out.set(x);
  return out;
}

bool is_pre_sg_continuous(const PointMap& f, const FinTopology& dom, const FinTopology& cod) {
  f.validate();
  if (f.domain_size != dom.carrier_size() || f.codomain_size != cod.carrier_size())
    throw CarrierMismatch("point map does not match the given spaces");
  check_definitional(cod);
  SpaceDecomp d = decompose(dom);
  bool ok = true;
  for_each_subset(cod.carrier_size(), [&](const PtSet& closed_candidate) {
    if (!ok) return;
    if (is_semi_closed(cod, closed_candidate) &&
        !is_sg_closed(dom, d, preimage(f, closed_candidate)))
      ok = false;
  });
  return ok;
}

}  // namespace sgtop
