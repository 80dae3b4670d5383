#include "sgtop/claims.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <random>

namespace sgtop {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Fault injection

enum class Mutation { None, SgClosedCharDropX1, HsgCharUseX2 };

Mutation parse_mutation(const std::string& name) {
  if (name.empty()) return Mutation::None;
  if (name == "sg-closed-char-drop-x1") return Mutation::SgClosedCharDropX1;
  if (name == "hsg-char-use-x2") return Mutation::HsgCharUseX2;
  throw BadParameter("unknown mutation \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// Shared evaluation context

struct Ctx {
  ClaimConfig cfg;
  Mutation mutation = Mutation::None;
  // Cached labeled enumerations per carrier size, shared across claims.
  std::shared_ptr<const std::vector<std::vector<FinTopology>>> levels;

  explicit Ctx(const ClaimConfig& c) : cfg(c), mutation(parse_mutation(c.mutation)) {}

  const std::vector<FinTopology>& level(int n) const { return (*levels)[n]; }

  int top_n(int cap = 5) const { return std::min(cfg.max_n, cap); }

  bool sg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                 PredicateMode m = PredicateMode::Characterization) const {
    if (m == PredicateMode::Characterization && mutation == Mutation::SgClosedCharDropX1)
      return interior(t, closure(t, a)).subset_of(a);
    return is_sg_closed(t, d, a, m);
  }

  bool sg_open(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
               PredicateMode m = PredicateMode::Characterization) const {
    // The injected sg-closed bug propagates through complement duality.
    if (m == PredicateMode::Characterization && mutation == Mutation::SgClosedCharDropX1)
      return sg_closed(t, d, a.complement(), m);
    return is_sg_open(t, d, a, m);
  }

  bool hsg_closed(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                  PredicateMode m = PredicateMode::Characterization) const {
    if (m == PredicateMode::Characterization && mutation == Mutation::HsgCharUseX2)
      return !d.x2.intersects(interior(t, closure(t, a)));
    return is_hsg_closed(t, d, a, m);
  }
};

std::shared_ptr<const std::vector<std::vector<FinTopology>>> build_levels(int max_n) {
  auto levels = std::make_shared<std::vector<std::vector<FinTopology>>>();
  levels->resize(max_n + 1);
  for (int n = 1; n <= max_n; ++n)
    (*levels)[n] = enumerate_topologies(n, EnumMode::Labeled, /*allow_large=*/true);
  return levels;
}

template <typename F>
void for_each_subset(int n, F&& fn) {
  std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(PtSet::from_bits(n, mask));
}

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

std::string labeled_universe(const Ctx& ctx, const std::string& inner) {
  std::string counts;
  for (int n = 1; n <= ctx.cfg.max_n; ++n) {
    if (!counts.empty()) counts += ",";
    counts += std::to_string(ctx.level(n).size());
  }
  return "labeled topologies n=1.." + std::to_string(ctx.cfg.max_n) + " (" + counts + ") x " +
         inner;
}

ordered_json base_witness(const Ctx& ctx, const std::string& id) {
  ordered_json j;
  j["claim"] = id;
  j["mutation"] = ctx.cfg.mutation;
  j["seed"] = ctx.cfg.seed;
  return j;
}

PtSet set_from_json(const nlohmann::json& arr, int n) {
  PtSet s(n);
  for (const auto& v : arr) s.set(v.get<int>());
  return s;
}

// ---------------------------------------------------------------------------
// Individual claims. Each returns true on pass; on failure it fills in the
// witness. Instance counts cover the checks actually performed.

// Definitional and characterization hsg-closedness agree everywhere.
bool claim_p1_hsg_char(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all subsets");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& a) {
        if (bad) return;
        ++r.instances;
        bool def = ctx.hsg_closed(t, d, a, PredicateMode::Definitional);
        bool chr = ctx.hsg_closed(t, d, a, PredicateMode::Characterization);
        if (def != chr) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          r.witness["definitional"] = def;
          r.witness["characterization"] = chr;
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

bool claim_sg_char_open(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all subsets");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& a) {
        if (bad) return;
        ++r.instances;
        bool def = ctx.sg_open(t, d, a, PredicateMode::Definitional);
        bool chr = ctx.sg_open(t, d, a, PredicateMode::Characterization);
        bool dual = ctx.sg_closed(t, d, a.complement(), PredicateMode::Characterization);
        if (def != chr || def != dual) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          r.witness["definitional"] = def;
          r.witness["characterization"] = chr;
          r.witness["complement_dual"] = dual;
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

// Definitional form vs. both pointwise criteria (Int-cl and semi-closure).
bool claim_sg_char_closed(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all subsets");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& a) {
        if (bad) return;
        ++r.instances;
        bool def = ctx.sg_closed(t, d, a, PredicateMode::Definitional);
        bool chr = ctx.sg_closed(t, d, a, PredicateMode::Characterization);
        bool via_scl = (d.x1 & semi_closure(t, a)).subset_of(a);
        if (def != chr || def != via_scl) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          r.witness["definitional"] = def;
          r.witness["characterization"] = chr;
          r.witness["via_semi_closure"] = via_scl;
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

bool claim_x2_subsets_sg_open(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all subsets of x2");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset_of(d.x2, [&](const PtSet& a) {
        if (bad) return;
        ++r.instances;
        if (!ctx.sg_open(t, d, a)) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

bool claim_r3_i(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "(sg-closed A) x (closed B)");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      std::vector<PtSet> sg_closed_sets, closed_sets;
      for_each_subset(n, [&](const PtSet& a) {
        if (ctx.sg_closed(t, d, a)) sg_closed_sets.push_back(a);
        if (t.is_closed(a)) closed_sets.push_back(a);
      });
      for (const auto& a : sg_closed_sets)
        for (const auto& b : closed_sets) {
          ++r.instances;
          if (!ctx.sg_closed(t, d, a | b)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["a"] = a.members();
            r.witness["b"] = b.members();
            return false;
          }
        }
    }
  return true;
}

bool claim_r3_ii(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "(sg-open A) x (open U)");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      std::vector<PtSet> sg_open_sets;
      for_each_subset(n, [&](const PtSet& a) {
        if (ctx.sg_open(t, d, a)) sg_open_sets.push_back(a);
      });
      for (const auto& a : sg_open_sets)
        for (const auto& u : t.opens()) {
          ++r.instances;
          if (!ctx.sg_open(t, d, a & u)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["a"] = a.members();
            r.witness["u"] = u.members();
            return false;
          }
        }
    }
  return true;
}

// The 4-point witness behaves exactly as stated. Pairwise unions of
// sg-closed sets stay sg-closed on 1- and 2-point spaces; the smallest
// violations live on 3 points (one open point fewer than the 4-point
// witness), and the first one in enumeration order is recorded.
bool claim_r3_iii(const Ctx& ctx, PropertyReport& r) {
  FinTopology p4 = p4_example();
  SpaceDecomp d = decompose(p4);
  PtSet a = PtSet::of(4, {0}), b = PtSet::of(4, {1});
  bool a_semi = is_semi_closed(p4, a);
  bool b_semi = is_semi_closed(p4, b);
  bool a_sg = ctx.sg_closed(p4, d, a);
  bool b_sg = ctx.sg_closed(p4, d, b);
  bool union_sg = ctx.sg_closed(p4, d, a | b);
  r.instances += 5;
  if (!a_semi || !b_semi || !a_sg || !b_sg || union_sg) {
    r.witness = base_witness(ctx, r.id);
    r.witness["kind"] = "expected-witness";
    r.witness["topology"] = topology_to_json(p4);
    r.witness["a"] = a.members();
    r.witness["b"] = b.members();
    r.witness["a_semi_closed"] = a_semi;
    r.witness["b_semi_closed"] = b_semi;
    r.witness["a_sg_closed"] = a_sg;
    r.witness["b_sg_closed"] = b_sg;
    r.witness["union_sg_closed"] = union_sg;
    return false;
  }
  r.details["witness_space"] = topology_to_json(p4);
  r.details["a"] = a.members();
  r.details["b"] = b.members();
  r.details["union_sg_closed"] = false;

  // No violation is possible on 1 or 2 points.
  int cap = ctx.top_n(2);
  for (int n = 1; n <= cap; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp dt = decompose(t);
      std::vector<PtSet> sg;
      for_each_subset(n, [&](const PtSet& s) {
        if (ctx.sg_closed(t, dt, s)) sg.push_back(s);
      });
      for (const auto& x : sg)
        for (const auto& y : sg) {
          ++r.instances;
          if (!ctx.sg_closed(t, dt, x | y)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["kind"] = "minimality";
            r.witness["topology"] = topology_to_json(t);
            r.witness["a"] = x.members();
            r.witness["b"] = y.members();
            return false;
          }
        }
    }

  // Three points already suffice; the earliest record must exist and replay.
  if (ctx.cfg.max_n >= 3 && ctx.mutation == Mutation::None) {
    auto rec = search_counterexample("union-of-two-sg-closed-sg-closed", 3);
    ++r.instances;
    if (!rec || rec->carrier_size != 3 || !replay_counterexample(rec->to_json())) {
      r.witness = base_witness(ctx, r.id);
      r.witness["kind"] = "minimal-record";
      r.witness["found"] = rec.has_value();
      if (rec) r.witness["record"] = rec->to_json();
      return false;
    }
    r.details["minimal_record"] = rec->to_json();
  }
  r.universe = "4-point witness space + all sg-closed pairs over labeled topologies n<=" +
               std::to_string(cap) + " + minimal-record scan at n=3";
  return true;
}

// Arbitrary intersections: all families at n <= 3, all pairs at n = 4.
bool claim_int_stable(const Ctx& ctx, PropertyReport& r) {
  int cap3 = ctx.top_n(3);
  for (int n = 1; n <= cap3; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      std::vector<PtSet> sg;
      for_each_subset(n, [&](const PtSet& s) {
        if (ctx.sg_closed(t, d, s)) sg.push_back(s);
      });
      std::uint64_t families = 1ULL << sg.size();
      for (std::uint64_t mask = 1; mask < families; ++mask) {
        PtSet inter = PtSet::full_set(n);
        for (std::size_t i = 0; i < sg.size(); ++i)
          if ((mask >> i) & 1ULL) inter = inter & sg[i];
        ++r.instances;
        if (!ctx.sg_closed(t, d, inter)) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          auto fam = ordered_json::array();
          for (std::size_t i = 0; i < sg.size(); ++i)
            if ((mask >> i) & 1ULL) fam.push_back(sg[i].members());
          r.witness["family"] = fam;
          return false;
        }
      }
    }
  if (ctx.cfg.max_n >= 4)
    for (const auto& t : ctx.level(4)) {
      SpaceDecomp d = decompose(t);
      std::vector<PtSet> sg;
      for_each_subset(4, [&](const PtSet& s) {
        if (ctx.sg_closed(t, d, s)) sg.push_back(s);
      });
      for (const auto& x : sg)
        for (const auto& y : sg) {
          ++r.instances;
          if (!ctx.sg_closed(t, d, x & y)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["family"] = ordered_json::array({x.members(), y.members()});
            return false;
          }
        }
    }
  r.universe = "all sg-closed families at n<=" + std::to_string(cap3) +
               (ctx.cfg.max_n >= 4 ? ", all pairs at n=4" : "");
  return true;
}

// For open sg-closed A, sg-closedness of B within A agrees between the
// subspace on A and the whole space.
bool claim_bl1_transfer(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "(open sg-closed A) x (B within A)");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      for (const auto& a : t.opens()) {
        if (a.empty() || !ctx.sg_closed(t, d, a)) continue;
        SubspaceResult sub = subspace(t, a);
        SpaceDecomp ds = decompose(sub.space);
        bool bad = false;
        for_each_subset_of(a, [&](const PtSet& b) {
          if (bad) return;
          ++r.instances;
          bool in_sub = ctx.sg_closed(sub.space, ds, sub.restrict(b));
          bool in_parent = ctx.sg_closed(t, d, b);
          if (in_sub != in_parent) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["a"] = a.members();
            r.witness["b"] = b.members();
            r.witness["sg_closed_in_subspace"] = in_sub;
            r.witness["sg_closed_in_space"] = in_parent;
            bad = true;
          }
        });
        if (bad) return false;
      }
    }
  return true;
}

// sg-open subsets of a regular-open subspace are sg-open in the space.
bool claim_p4_transfer(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "(regular-open R) x (A within R)");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& rset) {
        if (bad || rset.empty() || !is_regular_open(t, rset)) return;
        SubspaceResult sub = subspace(t, rset);
        SpaceDecomp ds = decompose(sub.space);
        for_each_subset_of(rset, [&](const PtSet& a) {
          if (bad) return;
          ++r.instances;
          if (ctx.sg_open(sub.space, ds, sub.restrict(a)) && !ctx.sg_open(t, d, a)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["r"] = rset.members();
            r.witness["a"] = a.members();
            bad = true;
          }
        });
      });
      if (bad) return false;
    }
  return true;
}

// sg-open subsets of a delta-open subspace are sg-open in the space.
bool claim_c2_transfer(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "(delta-open B) x (A within B)");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& bset) {
        if (bad || bset.empty() || !is_delta_open(t, bset)) return;
        SubspaceResult sub = subspace(t, bset);
        SpaceDecomp ds = decompose(sub.space);
        for_each_subset_of(bset, [&](const PtSet& a) {
          if (bad) return;
          ++r.instances;
          if (ctx.sg_open(sub.space, ds, sub.restrict(a)) && !ctx.sg_open(t, d, a)) {
            r.witness = base_witness(ctx, r.id);
            r.witness["topology"] = topology_to_json(t);
            r.witness["b"] = bset.members();
            r.witness["a"] = a.members();
            bad = true;
          }
        });
      });
      if (bad) return false;
    }
  return true;
}

// Regular open iff alpha-open and sg-closed.
bool claim_dp1(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all subsets");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& a) {
        if (bad) return;
        ++r.instances;
        bool ro = is_regular_open(t, a);
        bool rhs = is_alpha_open(t, a) && ctx.sg_closed(t, d, a);
        if (ro != rhs) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          r.witness["regular_open"] = ro;
          r.witness["alpha_open_and_sg_closed"] = rhs;
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

bool families_coincide(const Ctx& ctx, const FinTopology& t, const SpaceDecomp& d,
                       PtSet* where = nullptr) {
  bool equal = true;
  for_each_subset(t.carrier_size(), [&](const PtSet& a) {
    if (!equal) return;
    if (ctx.sg_closed(t, d, a) != is_semi_closed(t, a)) {
      equal = false;
      if (where) *where = a;
    }
  });
  return equal;
}

bool claim_semitd(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "whole-space family comparison");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      ++r.instances;
      PtSet where(n);
      bool td = is_semi_td(t);
      bool coincide = families_coincide(ctx, t, d, &where);
      if (td != coincide) {
        r.witness = base_witness(ctx, r.id);
        r.witness["topology"] = topology_to_json(t);
        r.witness["semi_td"] = td;
        r.witness["families_coincide"] = coincide;
        if (!coincide) r.witness["set"] = where.members();
        return false;
      }
    }
  return true;
}

// Checked as stated: indiscrete <=> every subset hsg-closed <=> x1 empty.
// The exhaustive sweep refutes the first leg: any discrete space with two
// or more points has x1 empty (singletons are open, hence locally dense)
// and therefore every subset hsg-closed, without being indiscrete. The
// claim reports that refutation with the minimal witness; the leg that does
// hold (every subset hsg-closed <=> x1 empty, and indiscrete => both) is
// spelled out in the witness.
bool claim_indiscrete_iff(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "three-way equivalence per space");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      ++r.instances;
      bool indis = t.is_indiscrete();
      bool x1_empty = d.x1.empty();
      bool all_hsg = true;
      for_each_subset(n, [&](const PtSet& a) {
        if (all_hsg && !ctx.hsg_closed(t, d, a)) all_hsg = false;
      });
      if (indis != all_hsg || indis != x1_empty) {
        r.witness = base_witness(ctx, r.id);
        r.witness["topology"] = topology_to_json(t);
        r.witness["indiscrete"] = indis;
        r.witness["all_subsets_hsg_closed"] = all_hsg;
        r.witness["x1_empty"] = x1_empty;
        if (all_hsg == x1_empty)
          r.witness["note"] =
              "the legs 'every subset hsg-closed' and 'x1 empty' agree; what fails is the "
              "implication from them to indiscreteness";
        return false;
      }
    }
  return true;
}

// x1 = X forces the sg-closed and semi-closed families to coincide. No
// finite space satisfies the hypothesis (some minimal open consists of
// locally dense points), which the sweep itself confirms; the substantive
// instance is the symbolic cofinite space, where x1 = X.
bool claim_r2i(const Ctx& ctx, PropertyReport& r) {
  std::uint64_t hypothesis_hits = 0;
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      ++r.instances;
      if (!d.x1.is_full()) continue;
      ++hypothesis_hits;
      PtSet where(n);
      if (!families_coincide(ctx, t, d, &where)) {
        r.witness = base_witness(ctx, r.id);
        r.witness["topology"] = topology_to_json(t);
        r.witness["set"] = where.members();
        return false;
      }
    }
  r.details["finite_spaces_with_x1_full"] = hypothesis_hits;

  if (ctx.cfg.symbolic) {
    SymSpace sp(SymFamily::CofiniteNat);
    if (!(sym_decompose(sp).x1 == sp.universe())) {
      r.witness = base_witness(ctx, r.id);
      r.witness["space"] = sp.name();
      r.witness["reason"] = "x1 is not the whole space";
      return false;
    }
    std::mt19937_64 rng(ctx.cfg.seed);
    for (int i = 0; i < 2000; ++i) {
      std::uint32_t size = rng() % 6;
      std::vector<std::uint32_t> sup;
      for (std::uint32_t k = 0; k < size; ++k) sup.push_back(rng() % 50);
      SymSet a = (rng() & 1) ? SymSet::cofinite(sup) : SymSet::finite(sup);
      ++r.instances;
      if (sym_is_sg_closed(sp, a) != sym_is_semi_closed(sp, a)) {
        r.witness = base_witness(ctx, r.id);
        r.witness["space"] = sp.name();
        r.witness["set"] = a.to_string(sp.extra_names());
        return false;
      }
    }
  }
  r.universe = labeled_universe(ctx, "x1 = X hypothesis scan") +
               (ctx.cfg.symbolic ? " + sampled sets on cofinite-nat" : "");
  return true;
}

bool claim_sg_implies_beta(const Ctx& ctx, PropertyReport& r) {
  r.universe = labeled_universe(ctx, "all sg-open subsets");
  for (int n = 1; n <= ctx.cfg.max_n; ++n)
    for (const auto& t : ctx.level(n)) {
      SpaceDecomp d = decompose(t);
      bool bad = false;
      for_each_subset(n, [&](const PtSet& a) {
        if (bad || !ctx.sg_open(t, d, a)) return;
        ++r.instances;
        if (!is_beta_open(t, a)) {
          r.witness = base_witness(ctx, r.id);
          r.witness["topology"] = topology_to_json(t);
          r.witness["set"] = a.members();
          bad = true;
        }
      });
      if (bad) return false;
    }
  return true;
}

bool claim_thm1_sym(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "symbolic catalog (4 families) + 10000-sample falsifiers";
  for (const auto& name : SymSpace::names()) {
    SymSpace sp = SymSpace::by_name(name);
    SymVerdict c3 = sym_is_c3(sp);
    SymVerdict c2 = sym_is_c2(sp);
    bool sg_compact = sym_is_sg_compact(sp);
    ++r.instances;
    bool ok = (sg_compact == c3.value) && (!c3.value || c2.value);
    FalsifierResult f = falsify_verdicts(sp, 10000, ctx.cfg.seed);
    r.instances += f.samples;
    if (!ok || f.contradictions != 0) {
      r.witness = base_witness(ctx, r.id);
      r.witness["space"] = name;
      r.witness["sg_compact"] = sg_compact;
      r.witness["c3"] = c3.value;
      r.witness["c2"] = c2.value;
      r.witness["falsifier_contradictions"] = f.contradictions;
      return false;
    }
    r.details[name] = {{"c2", c2.value}, {"c3", c3.value}, {"sg_compact", sg_compact}};
  }
  return true;
}

bool claim_r1i_opc(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "opc-discrete closed forms + 10000-sample c2 falsifier";
  SymSpace sp(SymFamily::OnePointCompactDiscreteNat);
  SymVerdict c2 = sym_is_c2(sp);
  auto cellular = sym_cellular_witness(sp);
  FalsifierResult f = falsify_verdicts(sp, 10000, ctx.cfg.seed);
  r.instances += 2 + f.samples;
  if (!c2.value || !cellular || f.contradictions != 0) {
    r.witness = base_witness(ctx, r.id);
    r.witness["space"] = sp.name();
    r.witness["c2"] = c2.value;
    r.witness["has_infinite_cellular_family"] = cellular.has_value();
    return false;
  }
  r.details["cellular_family"] = cellular->description;
  return true;
}

bool claim_r2ii_cofinite(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "cofinite-nat closed forms";
  SymSpace sp(SymFamily::CofiniteNat);
  SymVerdict c3 = sym_is_c3(sp);
  bool sg_compact = sym_is_sg_compact(sp);
  r.instances += 2;
  if (!c3.value || !sg_compact) {
    r.witness = base_witness(ctx, r.id);
    r.witness["space"] = sp.name();
    r.witness["c3"] = c3.value;
    r.witness["sg_compact"] = sg_compact;
    return false;
  }
  r.details["hereditary_note"] =
      "subspaces of a cofinite space are cofinite or finite, hence again sg-compact";
  return true;
}

bool claim_e1_i(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "e1-infinite and its open subspace (indiscrete-nat)";
  SymSpace whole(SymFamily::IndiscretePlusPoint);
  SymSpace open_subspace(SymFamily::IndiscreteNat);
  bool whole_compact = sym_is_sg_compact(whole);
  SymVerdict sub_c3 = sym_is_c3(open_subspace);
  // The open subspace N is not delta-open in the whole space: it is not a
  // union of regular-open sets, as Int(cl(N)) = X.
  SymSet nat = whole.nat_part();
  bool nat_regular_open = (sym_interior(whole, sym_closure(whole, nat)) == nat);
  r.instances += 3;
  if (!whole_compact || sub_c3.value || nat_regular_open) {
    r.witness = base_witness(ctx, r.id);
    r.witness["whole_sg_compact"] = whole_compact;
    r.witness["subspace_c3"] = sub_c3.value;
    r.witness["nat_regular_open"] = nat_regular_open;
    return false;
  }
  r.details["subspace_witness"] =
      sub_c3.witness ? sub_c3.witness->to_string(open_subspace.extra_names()) : "";
  return true;
}

bool claim_e1_ii(const Ctx& ctx, PropertyReport& r) {
  r.universe = "squares of e1 models, n=2..8";
  int prev = 0;
  for (int k = 2; k <= 8; ++k) {
    FinTopology base = e1_model(k);
    FinTopology sq = product(base, base);
    int m = k + 1;
    PtSet corner(m * m);  // X x X minus A x A
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i == k || j == k) corner.set(i * m + j);
    ++r.instances;
    bool nd = is_nowhere_dense(sq, corner);
    int size = corner.count();
    if (!nd || size != 2 * k + 1 || size <= prev) {
      r.witness = base_witness(ctx, r.id);
      r.witness["k"] = k;
      r.witness["nowhere_dense"] = nd;
      r.witness["size"] = size;
      r.witness["expected_size"] = 2 * k + 1;
      return false;
    }
    prev = size;
  }
  return true;
}

bool claim_l1_instance(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "opc-discrete cellular family";
  SymSpace sp(SymFamily::OnePointCompactDiscreteNat);
  auto cellular = sym_cellular_witness(sp);
  ++r.instances;
  if (!sym_is_c2(sp).value || !cellular || !cellular->union_in_x2) {
    r.witness = base_witness(ctx, r.id);
    r.witness["space"] = sp.name();
    r.witness["has_family"] = cellular.has_value();
    if (cellular) r.witness["union_in_x2"] = cellular->union_in_x2;
    return false;
  }
  r.details["family"] = cellular->description;
  r.details["union"] = cellular->subfamily_union.to_string(sp.extra_names());
  return true;
}

bool claim_l2_i_sym(const Ctx& ctx, PropertyReport& r) {
  if (!ctx.cfg.symbolic) {
    r.result = ClaimResult::Skipped;
    r.universe = "symbolic catalog (disabled by config)";
    return true;
  }
  r.universe = "symbolic catalog (4 families)";
  for (const auto& name : SymSpace::names()) {
    SymSpace sp = SymSpace::by_name(name);
    bool c3 = sym_is_c3(sp).value;
    bool sg_compact = sym_is_sg_compact(sp);
    bool semi_compact = sym_is_semi_compact(sp);
    ++r.instances;
    if ((c3 && !semi_compact) || (sg_compact && !semi_compact)) {
      r.witness = base_witness(ctx, r.id);
      r.witness["space"] = name;
      r.witness["c3"] = c3;
      r.witness["sg_compact"] = sg_compact;
      r.witness["semi_compact"] = semi_compact;
      return false;
    }
  }
  return true;
}

// Battery of predicate outputs compared across a relabeling.
bool invariance_instance(const Ctx& ctx, const FinTopology& t, const std::vector<int>& pi,
                         std::string* what) {
  FinTopology tp = apply_permutation(t, pi);
  SpaceDecomp d = decompose(t), dp = decompose(tp);
  if (!(apply_permutation(d.x1, pi) == dp.x1) || !(apply_permutation(d.x2, pi) == dp.x2)) {
    *what = "decomposition";
    return false;
  }
  if (is_semi_td(t) != is_semi_td(tp)) {
    *what = "semi_td";
    return false;
  }
  bool ok = true;
  for_each_subset(t.carrier_size(), [&](const PtSet& a) {
    if (!ok) return;
    PtSet ap = apply_permutation(a, pi);
    if (!(classify_set(t, a) == classify_set(tp, ap))) {
      *what = "classify_set at " + a.to_string();
      ok = false;
    } else if (ctx.sg_closed(t, d, a) != ctx.sg_closed(tp, dp, ap) ||
               ctx.sg_open(t, d, a) != ctx.sg_open(tp, dp, ap) ||
               ctx.hsg_closed(t, d, a) != ctx.hsg_closed(tp, dp, ap)) {
      *what = "sg predicates at " + a.to_string();
      ok = false;
    }
  });
  return ok;
}

bool claim_invariance(const Ctx& ctx, PropertyReport& r) {
  int cap = ctx.top_n(4);
  r.universe = "1000 seeded random (topology, permutation) pairs at n<=" + std::to_string(cap);
  std::mt19937_64 rng(ctx.cfg.seed);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(rng() % cap);
    const auto& level = ctx.level(n);
    const FinTopology& t = level[rng() % level.size()];
    std::vector<int> pi(n);
    for (int k = 0; k < n; ++k) pi[k] = k;
    for (int k = n - 1; k > 0; --k) std::swap(pi[k], pi[rng() % (k + 1)]);
    ++r.instances;
    std::string what;
    if (!invariance_instance(ctx, t, pi, &what)) {
      r.witness = base_witness(ctx, r.id);
      r.witness["topology"] = topology_to_json(t);
      r.witness["permutation"] = pi;
      r.witness["disagrees_on"] = what;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Registry

struct ClaimEntry {
  const char* id;
  const char* description;
  bool (*run)(const Ctx&, PropertyReport&);
};

const ClaimEntry kClaims[] = {
    {"P1_hsg_char",
     "hereditary sg-closedness: subset definition agrees with the x1-meets-Int-cl criterion",
     claim_p1_hsg_char},
    {"SG_char_open",
     "sg-openness: semi-closed-subset definition agrees with the x1 criterion and complement "
     "duality",
     claim_sg_char_open},
    {"SG_char_closed",
     "sg-closedness: semi-open-superset definition agrees with both pointwise criteria",
     claim_sg_char_closed},
    {"X2_subsets_sg_open", "every subset of x2 is sg-open", claim_x2_subsets_sg_open},
    {"R3_i_union_closed", "the union of an sg-closed set and a closed set is sg-closed",
     claim_r3_i},
    {"R3_ii_int_open", "the intersection of an sg-open set and an open set is sg-open",
     claim_r3_ii},
    {"R3_iii_counterexample",
     "two semi-closed singletons with a non-sg-closed union exist on the 4-point witness space; "
     "1- and 2-point spaces cannot violate pairwise-union closure, 3-point spaces can",
     claim_r3_iii},
    {"INT_sg_closed_stable", "intersections of families of sg-closed sets are sg-closed",
     claim_int_stable},
    {"BL1_T3_transfer",
     "for open sg-closed A, sg-closedness of subsets transfers between subspace and space",
     claim_bl1_transfer},
    {"P4_regular_open_transfer",
     "sg-open subsets of a regular-open subspace are sg-open in the whole space",
     claim_p4_transfer},
    {"C2_delta_open_transfer",
     "sg-open subsets of a delta-open subspace are sg-open in the whole space", claim_c2_transfer},
    {"DP1_regular_open_iff", "regular open is equivalent to alpha-open plus sg-closed", claim_dp1},
    {"SEMITD_coincide",
     "every singleton open-or-nowhere-dense is equivalent to the sg-closed and semi-closed "
     "families coinciding",
     claim_semitd},
    {"INDISCRETE_iff_hsg",
     "indiscrete, every-subset-hsg-closed and empty x1 are equivalent", claim_indiscrete_iff},
    {"R2i_X1_full_coincide",
     "when x1 is the whole space, sg-closed and semi-closed coincide (vacuous finitely; "
     "substantive on cofinite-nat)",
     claim_r2i},
    {"SG_implies_beta", "sg-open sets are beta-open", claim_sg_implies_beta},
    {"THM1_sym",
     "sg-compactness coincides with the c3 property across the symbolic catalog; c3 implies c2; "
     "falsifiers find no contradiction",
     claim_thm1_sym},
    {"R1i_opc", "opc-discrete is a c2 space carrying an infinite cellular family", claim_r1i_opc},
    {"R2ii_cofinite", "cofinite-nat is c3 and (hereditarily) sg-compact", claim_r2ii_cofinite},
    {"E1_i_subspace",
     "e1-infinite is sg-compact while its open subspace is not; the subspace is not delta-open",
     claim_e1_i},
    {"E1_ii_product_nd",
     "squares of e1 models contain a nowhere dense corner set of size 2n+1, increasing with n",
     claim_e1_ii},
    {"L1_instance",
     "catalog instance: infinite cellular family with a subfamily union inside x2",
     claim_l1_instance},
    {"L2_i_sym", "c3 (and sg-compactness) implies semi-compactness on the symbolic catalog",
     claim_l2_i_sym},
    {"TOPOLOGICAL_invariance", "all predicate outputs are equivariant under relabeling",
     claim_invariance},
};

const ClaimEntry* find_claim(const std::string& id) {
  for (const auto& entry : kClaims)
    if (id == entry.id) return &entry;
  return nullptr;
}

void check_config(const ClaimConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > 5)
    throw CarrierTooLarge("max_n must lie in 1..5, got " + std::to_string(cfg.max_n));
  parse_mutation(cfg.mutation);
}

PropertyReport run_entry(const ClaimEntry& entry, Ctx& ctx) {
  PropertyReport r;
  r.id = entry.id;
  r.description = entry.description;
  auto start = std::chrono::steady_clock::now();
  bool ok = entry.run(ctx, r);
  if (r.result != ClaimResult::Skipped) r.result = ok ? ClaimResult::Pass : ClaimResult::Fail;
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

nlohmann::ordered_json PropertyReport::to_json(bool include_wall) const {
  ordered_json j;
  j["id"] = id;
  j["description"] = description;
  j["universe"] = universe;
  j["instances"] = instances;
  j["result"] = result == ClaimResult::Pass ? "pass"
              : result == ClaimResult::Fail ? "fail"
                                            : "skipped";
  j["witness"] = witness.is_null() ? ordered_json(nullptr) : witness;
  if (!details.is_null()) j["details"] = details;
  if (include_wall) j["wall_ms"] = wall_ms;
  return j;
}

const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& entry : kClaims) v.push_back(entry.id);
    return v;
  }();
  return ids;
}

bool is_known_claim(const std::string& id) { return find_claim(id) != nullptr; }

const std::string& claim_description(const std::string& id) {
  const ClaimEntry* entry = find_claim(id);
  if (!entry) throw UnknownClaim("unknown claim \"" + id + "\"");
  static thread_local std::string out;
  out = entry->description;
  return out;
}

const std::vector<std::string>& mutation_registry() {
  static const std::vector<std::string> kMutations = {"sg-closed-char-drop-x1",
                                                      "hsg-char-use-x2"};
  return kMutations;
}

PropertyReport verify_claim(const std::string& id, const ClaimConfig& config) {
  const ClaimEntry* entry = find_claim(id);
  if (!entry) throw UnknownClaim("unknown claim \"" + id + "\"");
  check_config(config);
  Ctx ctx(config);
  ctx.levels = build_levels(config.max_n);
  return run_entry(*entry, ctx);
}

// ---------------------------------------------------------------------------
// Witness replay

bool replay_witness(const std::string& id, const nlohmann::json& witness) {
  if (!is_known_claim(id)) throw UnknownClaim("unknown claim \"" + id + "\"");
  ClaimConfig cfg;
  cfg.mutation = witness.value("mutation", std::string());
  cfg.seed = witness.value("seed", cfg.seed);
  Ctx ctx(cfg);

  auto topo = [&]() { return topology_from_json(witness.at("topology")); };
  auto set_of = [&](const FinTopology& t, const char* key) {
    return set_from_json(witness.at(key), t.carrier_size());
  };

  if (id == "P1_hsg_char") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    return ctx.hsg_closed(t, d, a, PredicateMode::Definitional) !=
           ctx.hsg_closed(t, d, a, PredicateMode::Characterization);
  }
  if (id == "SG_char_open") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    bool def = ctx.sg_open(t, d, a, PredicateMode::Definitional);
    bool chr = ctx.sg_open(t, d, a, PredicateMode::Characterization);
    bool dual = ctx.sg_closed(t, d, a.complement(), PredicateMode::Characterization);
    return def != chr || def != dual;
  }
  if (id == "SG_char_closed") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    bool def = ctx.sg_closed(t, d, a, PredicateMode::Definitional);
    bool chr = ctx.sg_closed(t, d, a, PredicateMode::Characterization);
    bool via_scl = (d.x1 & semi_closure(t, a)).subset_of(a);
    return def != chr || def != via_scl;
  }
  if (id == "X2_subsets_sg_open") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    return a.subset_of(d.x2) && !ctx.sg_open(t, d, a);
  }
  if (id == "R3_i_union_closed") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "a"), b = set_of(t, "b");
    return ctx.sg_closed(t, d, a) && t.is_closed(b) && !ctx.sg_closed(t, d, a | b);
  }
  if (id == "R3_ii_int_open") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "a"), u = set_of(t, "u");
    return ctx.sg_open(t, d, a) && t.is_open(u) && !ctx.sg_open(t, d, a & u);
  }
  if (id == "R3_iii_counterexample") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "a"), b = set_of(t, "b");
    if (witness.value("kind", std::string()) == "minimality")
      return ctx.sg_closed(t, d, a) && ctx.sg_closed(t, d, b) && !ctx.sg_closed(t, d, a | b);
    bool expected = is_semi_closed(t, a) && is_semi_closed(t, b) && ctx.sg_closed(t, d, a) &&
                    ctx.sg_closed(t, d, b) && !ctx.sg_closed(t, d, a | b);
    return !expected;
  }
  if (id == "INT_sg_closed_stable") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet inter = t.full_set();
    bool all_sg = true;
    for (const auto& arr : witness.at("family")) {
      PtSet s = set_from_json(arr, t.carrier_size());
      all_sg = all_sg && ctx.sg_closed(t, d, s);
      inter = inter & s;
    }
    return all_sg && !ctx.sg_closed(t, d, inter);
  }
  if (id == "BL1_T3_transfer") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "a"), b = set_of(t, "b");
    if (!t.is_open(a) || !ctx.sg_closed(t, d, a)) return false;
    SubspaceResult sub = subspace(t, a);
    SpaceDecomp ds = decompose(sub.space);
    return ctx.sg_closed(sub.space, ds, sub.restrict(b)) != ctx.sg_closed(t, d, b);
  }
  if (id == "P4_regular_open_transfer" || id == "C2_delta_open_transfer") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    bool reg = (id == "P4_regular_open_transfer");
    PtSet big = set_of(t, reg ? "r" : "b");
    PtSet a = set_of(t, "a");
    if (reg ? !is_regular_open(t, big) : !is_delta_open(t, big)) return false;
    SubspaceResult sub = subspace(t, big);
    SpaceDecomp ds = decompose(sub.space);
    return ctx.sg_open(sub.space, ds, sub.restrict(a)) && !ctx.sg_open(t, d, a);
  }
  if (id == "DP1_regular_open_iff") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    return is_regular_open(t, a) != (is_alpha_open(t, a) && ctx.sg_closed(t, d, a));
  }
  if (id == "SEMITD_coincide") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    return is_semi_td(t) != families_coincide(ctx, t, d);
  }
  if (id == "INDISCRETE_iff_hsg") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    bool indis = t.is_indiscrete();
    bool x1_empty = d.x1.empty();
    bool all_hsg = true;
    for_each_subset(t.carrier_size(), [&](const PtSet& a) {
      if (all_hsg && !ctx.hsg_closed(t, d, a)) all_hsg = false;
    });
    return indis != all_hsg || indis != x1_empty;
  }
  if (id == "R2i_X1_full_coincide") {
    if (witness.contains("space")) {
      SymSpace sp = SymSpace::by_name(witness.at("space").get<std::string>());
      if (!witness.contains("set")) return !(sym_decompose(sp).x1 == sp.universe());
      SymSet a = SymSet::parse(witness.at("set").get<std::string>(), sp.extra_names());
      return sym_is_sg_closed(sp, a) != sym_is_semi_closed(sp, a);
    }
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    return d.x1.is_full() && !families_coincide(ctx, t, d);
  }
  if (id == "SG_implies_beta") {
    FinTopology t = topo();
    SpaceDecomp d = decompose(t);
    PtSet a = set_of(t, "set");
    return ctx.sg_open(t, d, a) && !is_beta_open(t, a);
  }
  if (id == "THM1_sym") {
    SymSpace sp = SymSpace::by_name(witness.at("space").get<std::string>());
    SymVerdict c3 = sym_is_c3(sp);
    SymVerdict c2 = sym_is_c2(sp);
    bool ok = (sym_is_sg_compact(sp) == c3.value) && (!c3.value || c2.value);
    FalsifierResult f = falsify_verdicts(sp, 10000, cfg.seed);
    return !ok || f.contradictions != 0;
  }
  if (id == "R1i_opc") {
    SymSpace sp(SymFamily::OnePointCompactDiscreteNat);
    FalsifierResult f = falsify_verdicts(sp, 10000, cfg.seed);
    return !sym_is_c2(sp).value || !sym_cellular_witness(sp).has_value() ||
           f.contradictions != 0;
  }
  if (id == "R2ii_cofinite") {
    SymSpace sp(SymFamily::CofiniteNat);
    return !sym_is_c3(sp).value || !sym_is_sg_compact(sp);
  }
  if (id == "E1_i_subspace") {
    SymSpace whole(SymFamily::IndiscretePlusPoint);
    SymSpace sub(SymFamily::IndiscreteNat);
    SymSet nat = whole.nat_part();
    bool nat_regular_open = (sym_interior(whole, sym_closure(whole, nat)) == nat);
    return !sym_is_sg_compact(whole) || sym_is_c3(sub).value || nat_regular_open;
  }
  if (id == "E1_ii_product_nd") {
    int k = witness.at("k").get<int>();
    FinTopology base = e1_model(k);
    FinTopology sq = product(base, base);
    int m = k + 1;
    PtSet corner(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i == k || j == k) corner.set(i * m + j);
    return !is_nowhere_dense(sq, corner) || corner.count() != 2 * k + 1;
  }
  if (id == "L1_instance") {
    SymSpace sp(SymFamily::OnePointCompactDiscreteNat);
    auto cellular = sym_cellular_witness(sp);
    return !sym_is_c2(sp).value || !cellular || !cellular->union_in_x2;
  }
  if (id == "L2_i_sym") {
    SymSpace sp = SymSpace::by_name(witness.at("space").get<std::string>());
    bool c3 = sym_is_c3(sp).value;
    bool sg_compact = sym_is_sg_compact(sp);
    bool semi_compact = sym_is_semi_compact(sp);
    return (c3 && !semi_compact) || (sg_compact && !semi_compact);
  }
  if (id == "TOPOLOGICAL_invariance") {
    FinTopology t = topo();
    std::vector<int> pi = witness.at("permutation").get<std::vector<int>>();
    std::string what;
    return !invariance_instance(ctx, t, pi, &what);
  }
  throw UnknownClaim("no replay rule for claim \"" + id + "\"");
}

// ---------------------------------------------------------------------------
// Counterexample mining

nlohmann::ordered_json CounterexampleRecord::to_json() const {
  ordered_json j;
  j["target"] = target;
  j["carrier_size"] = carrier_size;
  j["topology"] = topology_to_json(space);
  auto arr = ordered_json::array();
  for (const auto& s : sets) arr.push_back(s.members());
  j["sets"] = arr;
  j["transcript"] = transcript;
  return j;
}

const std::vector<std::string>& counterexample_targets() {
  static const std::vector<std::string> kTargets = {
      "union-of-two-sg-closed-sg-closed",
      "sg-closed-union-semi-closed-sg-closed",
      "hsg-implies-nowhere-dense",
      "sg-open-implies-semi-open",
      "all-hsg-implies-indiscrete",
  };
  return kTargets;
}

namespace {

std::string predicate_line(const FinTopology& t, const SpaceDecomp& d, const PtSet& a,
                           const char* name) {
  bool chr = is_sg_closed(t, d, a, PredicateMode::Characterization);
  bool def = is_sg_closed(t, d, a, PredicateMode::Definitional);
  return std::string(name) + "=" + a.to_string() + " sg-closed: characterization=" +
         (chr ? "true" : "false") + ", definitional=" + (def ? "true" : "false");
}

std::optional<CounterexampleRecord> search_in_space(const std::string& target,
                                                    const FinTopology& t) {
  int n = t.carrier_size();
  SpaceDecomp d = decompose(t);
  CounterexampleRecord rec;
  rec.target = target;
  rec.carrier_size = n;
  rec.space = t;

  if (target == "union-of-two-sg-closed-sg-closed" ||
      target == "sg-closed-union-semi-closed-sg-closed") {
    bool need_semi = (target == "sg-closed-union-semi-closed-sg-closed");
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
      PtSet a = PtSet::from_bits(n, ma);
      if (!is_sg_closed(t, d, a)) continue;
      for (std::uint64_t mb = 0; mb < (1ULL << n); ++mb) {
        PtSet b = PtSet::from_bits(n, mb);
        if (need_semi ? !is_semi_closed(t, b) : !is_sg_closed(t, d, b)) continue;
        if (is_sg_closed(t, d, a | b)) continue;
        rec.sets = {a, b, a | b};
        rec.transcript = {predicate_line(t, d, a, "A"),
                          need_semi ? "B=" + b.to_string() + " is semi-closed"
                                    : predicate_line(t, d, b, "B"),
                          predicate_line(t, d, a | b, "A|B")};
        return rec;
      }
    }
    return std::nullopt;
  }
  if (target == "hsg-implies-nowhere-dense") {
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
      PtSet a = PtSet::from_bits(n, ma);
      if (!is_hsg_closed(t, d, a) || is_nowhere_dense(t, a)) continue;
      rec.sets = {a};
      rec.transcript = {"A=" + a.to_string() + " is hsg-closed (both modes) yet Int(cl A)=" +
                        interior(t, closure(t, a)).to_string() + " is nonempty"};
      return rec;
    }
    return std::nullopt;
  }
  if (target == "sg-open-implies-semi-open") {
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
      PtSet a = PtSet::from_bits(n, ma);
      if (!is_sg_open(t, d, a) || is_semi_open(t, a)) continue;
      rec.sets = {a};
      rec.transcript = {"A=" + a.to_string() + " is sg-open yet cl(Int A)=" +
                        closure(t, interior(t, a)).to_string() + " does not contain it"};
      return rec;
    }
    return std::nullopt;
  }
  if (target == "all-hsg-implies-indiscrete") {
    if (t.is_indiscrete()) return std::nullopt;
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma)
      if (!is_hsg_closed(t, d, PtSet::from_bits(n, ma))) return std::nullopt;
    rec.sets = {};
    rec.transcript = {"every subset is hsg-closed (x1=" + d.x1.to_string() +
                      " is empty) yet the space has " + std::to_string(t.opens().size()) +
                      " opens"};
    return rec;
  }
  throw UnknownTarget("unknown counterexample target \"" + target + "\"");
}

}  // namespace

std::optional<CounterexampleRecord> search_counterexample(const std::string& target, int max_n) {
  if (std::find(counterexample_targets().begin(), counterexample_targets().end(), target) ==
      counterexample_targets().end())
    throw UnknownTarget("unknown counterexample target \"" + target + "\"");
  if (max_n < 1 || max_n > 5) throw CarrierTooLarge("max_n must lie in 1..5");
  for (int n = 1; n <= max_n; ++n) {
    EnumerationStream stream(n, EnumMode::Labeled, /*allow_large=*/true);
    while (auto t = stream.next()) {
      if (auto rec = search_in_space(target, *t)) return rec;
    }
  }
  return std::nullopt;
}

bool replay_counterexample(const nlohmann::json& record) {
  std::string target = record.at("target").get<std::string>();
  FinTopology t = topology_from_json(record.at("topology"));
  SpaceDecomp d = decompose(t);
  std::vector<PtSet> sets;
  for (const auto& arr : record.at("sets")) sets.push_back(set_from_json(arr, t.carrier_size()));

  auto sg_both = [&](const PtSet& a) {
    return is_sg_closed(t, d, a, PredicateMode::Characterization) &&
           is_sg_closed(t, d, a, PredicateMode::Definitional);
  };
  auto not_sg_both = [&](const PtSet& a) {
    return !is_sg_closed(t, d, a, PredicateMode::Characterization) &&
           !is_sg_closed(t, d, a, PredicateMode::Definitional);
  };

  if (target == "union-of-two-sg-closed-sg-closed")
    return sets.size() >= 2 && sg_both(sets[0]) && sg_both(sets[1]) &&
           not_sg_both(sets[0] | sets[1]);
  if (target == "sg-closed-union-semi-closed-sg-closed")
    return sets.size() >= 2 && sg_both(sets[0]) && is_semi_closed(t, sets[1]) &&
           not_sg_both(sets[0] | sets[1]);
  if (target == "hsg-implies-nowhere-dense")
    return !sets.empty() && is_hsg_closed(t, d, sets[0], PredicateMode::Characterization) &&
           is_hsg_closed(t, d, sets[0], PredicateMode::Definitional) &&
           !is_nowhere_dense(t, sets[0]);
  if (target == "sg-open-implies-semi-open")
    return !sets.empty() && is_sg_open(t, d, sets[0], PredicateMode::Characterization) &&
           is_sg_open(t, d, sets[0], PredicateMode::Definitional) && !is_semi_open(t, sets[0]);
  if (target == "all-hsg-implies-indiscrete") {
    if (t.is_indiscrete()) return false;
    int n = t.carrier_size();
    for (std::uint64_t ma = 0; ma < (1ULL << n); ++ma) {
      PtSet a = PtSet::from_bits(n, ma);
      if (!is_hsg_closed(t, d, a, PredicateMode::Characterization) ||
          !is_hsg_closed(t, d, a, PredicateMode::Definitional))
        return false;
    }
    return true;
  }
  throw UnknownTarget("unknown counterexample target \"" + target + "\"");
}

// ---------------------------------------------------------------------------
// Suite runner

SuiteResult run_suite(const SuiteConfig& config) {
  check_config(config);
  std::vector<std::string> ids = config.claims.empty() ? claim_registry() : config.claims;
  for (const auto& id : ids)
    if (!is_known_claim(id)) throw UnknownClaim("unknown claim \"" + id + "\"");

  auto levels = build_levels(config.max_n);
  std::vector<PropertyReport> reports(ids.size());
  auto job = [&](std::size_t i) {
    Ctx ctx(static_cast<const ClaimConfig&>(config));
    ctx.levels = levels;
    reports[i] = run_entry(*find_claim(ids[i]), ctx);
  };

  int workers = std::max(1, config.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) job(i);
  } else {
    std::size_t next = 0;
    while (next < ids.size()) {
      std::vector<std::future<void>> wave;
      for (int w = 0; w < workers && next < ids.size(); ++w, ++next)
        wave.push_back(std::async(std::launch::async, job, next));
      for (auto& f : wave) f.get();
    }
  }

  SuiteResult result;
  result.reports = std::move(reports);
  result.all_pass = std::all_of(result.reports.begin(), result.reports.end(),
                                [](const PropertyReport& r) { return r.result != ClaimResult::Fail; });
  result.exit_code = result.all_pass ? 0 : 1;
  return result;
}

nlohmann::ordered_json suite_report_json(const SuiteConfig& config,
                                         const std::vector<PropertyReport>& reports,
                                         bool include_wall) {
  ordered_json j;
  j["schema_version"] = 1;
  j["generator"] = "sgtop";
  ordered_json cfg;
  cfg["claims"] = config.claims.empty() ? claim_registry() : config.claims;
  cfg["max_n"] = config.max_n;
  cfg["symbolic"] = config.symbolic;
  cfg["seed"] = config.seed;
  cfg["mutation"] = config.mutation;
  cfg["workers"] = config.workers;
  j["config"] = cfg;
  auto arr = ordered_json::array();
  std::uint64_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    arr.push_back(r.to_json(include_wall));
    if (r.result == ClaimResult::Pass) ++passed;
    if (r.result == ClaimResult::Fail) ++failed;
    if (r.result == ClaimResult::Skipped) ++skipped;
  }
  j["claims"] = arr;
  j["summary"] = {{"total", reports.size()}, {"passed", passed}, {"failed", failed},
                  {"skipped", skipped}};
  return j;
}

}  // namespace sgtop
