#include "sgtop/operators.hpp"

namespace sgtop {

std::string SetClass::to_string() const {
  std::string s;
  auto add = [&](bool v, const char* name) {
    if (v) {
      if (!s.empty()) s += ",";
      s += name;
    }
  };
  add(open, "open");
  add(closed, "closed");
  add(semi_open, "semi_open");
  add(semi_closed, "semi_closed");
  add(preopen, "preopen");
  add(nowhere_dense, "nowhere_dense");
  add(dense, "dense");
  add(regular_open, "regular_open");
  add(regular_closed, "regular_closed");
  add(alpha_open, "alpha_open");
  add(beta_open, "beta_open");
  add(delta_open, "delta_open");
  return "[" + s + "]";
}

PtSet interior(const FinTopology& t, const PtSet& a) {
  t.check_carrier(a);
  PtSet out(t.carrier_size());
  for (int x : a.members())
    if (t.min_nbhd(x).subset_of(a)) out.set(x);
  return out;
}

PtSet closure(const FinTopology& t, const PtSet& a) {
  t.check_carrier(a);
  return interior(t, a.complement()).complement();
}

PtSet semi_interior(const FinTopology& t, const PtSet& a) {
  return a & closure(t, interior(t, a));
}

PtSet semi_closure(const FinTopology& t, const PtSet& a) {
  return a | interior(t, closure(t, a));
}

bool is_semi_open(const FinTopology& t, const PtSet& a) {
  return a.subset_of(closure(t, interior(t, a)));
}

bool is_semi_closed(const FinTopology& t, const PtSet& a) {
  return interior(t, closure(t, a)).subset_of(a);
}

bool is_preopen(const FinTopology& t, const PtSet& a) {
  return a.subset_of(interior(t, closure(t, a)));
}

bool is_nowhere_dense(const FinTopology& t, const PtSet& a) {
  return interior(t, closure(t, a)).empty();
}

bool is_dense(const FinTopology& t, const PtSet& a) { return closure(t, a).is_full(); }

bool is_regular_open(const FinTopology& t, const PtSet& a) {
  return a == interior(t, closure(t, a));
}

bool is_regular_closed(const FinTopology& t, const PtSet& a) {
  return a == closure(t, interior(t, a));
}

bool is_alpha_open(const FinTopology& t, const PtSet& a) {
  return a.subset_of(interior(t, closure(t, interior(t, a))));
}

bool is_beta_open(const FinTopology& t, const PtSet& a) {
  return a.subset_of(closure(t, interior(t, closure(t, a))));
}

bool is_delta_open(const FinTopology& t, const PtSet& a) {
  t.check_carrier(a);
  int n = t.carrier_size();
  if (n <= 16) {
    // Union of all regular-open subsets of A.
    PtSet acc(n);
    std::vector<int> pts = a.members();
    std::uint64_t total = 1ULL << pts.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      PtSet r(n);
      for (std::size_t i = 0; i < pts.size(); ++i)
        if ((mask >> i) & 1ULL) r.set(pts[i]);
      if (is_regular_open(t, r)) acc = acc | r;
    }
    return acc == a;
  }
  // Pointwise: x in A admits the regular-open set Int(cl(min_nbhd(x))),
  // which is the smallest one containing x.
  for (int x : a.members())
    if (!interior(t, closure(t, t.min_nbhd(x))).subset_of(a)) return false;
  return true;
}

SetClass classify_set(const FinTopology& t, const PtSet& a) {
  t.check_carrier(a);
  SetClass c;
  PtSet ia = interior(t, a);
  PtSet ca = closure(t, a);
  PtSet int_cl = interior(t, ca);
  PtSet cl_int = closure(t, ia);
  c.open = (ia == a);
  c.closed = (ca == a);
  c.semi_open = a.subset_of(cl_int);
  c.semi_closed = int_cl.subset_of(a);
  c.preopen = a.subset_of(int_cl);
  c.nowhere_dense = int_cl.empty();
  c.dense = ca.is_full();
  c.regular_open = (a == int_cl);
  c.regular_closed = (a == cl_int);
  c.alpha_open = a.subset_of(interior(t, cl_int));
  c.beta_open = a.subset_of(closure(t, int_cl));
  c.delta_open = is_delta_open(t, a);
  return c;
}

}  // namespace sgtop
