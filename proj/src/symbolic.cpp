#include "sgtop/symbolic.hpp"

#include <algorithm>
#include <random>

#include "sgtop/spaces.hpp"

namespace sgtop {

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint32_t> set_union(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> set_intersection(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> set_difference(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_extras(const SymSet& a, const SymSet& b) {
  if (a.extras_count() != b.extras_count())
    throw NotRepresentable("sets carry different numbers of extra points");
}

bool sym_subset(const SymSet& a, const SymSet& b) { return (a & b) == a; }

}  // namespace

SymSet SymSet::finite(std::vector<std::uint32_t> support, std::vector<bool> extras) {
  SymSet s;
  s.tag_ = SymTag::Finite;
  s.support_ = sorted_unique(std::move(support));
  s.extras_ = std::move(extras);
  return s;
}

SymSet SymSet::cofinite(std::vector<std::uint32_t> exceptions, std::vector<bool> extras) {
  SymSet s;
  s.tag_ = SymTag::Cofinite;
  s.support_ = sorted_unique(std::move(exceptions));
  s.extras_ = std::move(extras);
  return s;
}

bool SymSet::is_empty() const {
  if (tag_ != SymTag::Finite || !support_.empty()) return false;
  return std::none_of(extras_.begin(), extras_.end(), [](bool f) { return f; });
}

bool SymSet::contains_nat(std::uint32_t x) const {
  bool in_support = std::binary_search(support_.begin(), support_.end(), x);
  return tag_ == SymTag::Finite ? in_support : !in_support;
}

SymSet SymSet::complement() const {
  SymSet s;
  s.tag_ = (tag_ == SymTag::Finite) ? SymTag::Cofinite : SymTag::Finite;
  s.support_ = support_;
  s.extras_.reserve(extras_.size());
  for (bool f : extras_) s.extras_.push_back(!f);
  return s;
}

SymSet operator|(const SymSet& a, const SymSet& b) {
  check_extras(a, b);
  SymSet s;
  if (a.tag_ == SymTag::Finite && b.tag_ == SymTag::Finite) {
    s.tag_ = SymTag::Finite;
    s.support_ = set_union(a.support_, b.support_);
  } else if (a.tag_ == SymTag::Cofinite && b.tag_ == SymTag::Cofinite) {
    s.tag_ = SymTag::Cofinite;
    s.support_ = set_intersection(a.support_, b.support_);
  } else {
    const SymSet& fin = (a.tag_ == SymTag::Finite) ? a : b;
    const SymSet& cof = (a.tag_ == SymTag::Finite) ? b : a;
    s.tag_ = SymTag::Cofinite;
    s.support_ = set_difference(cof.support_, fin.support_);
  }
  s.extras_.reserve(a.extras_.size());
  for (int i = 0; i < a.extras_count(); ++i) s.extras_.push_back(a.extras_[i] || b.extras_[i]);
  return s;
}

SymSet operator&(const SymSet& a, const SymSet& b) {
  check_extras(a, b);
  return (a.complement() | b.complement()).complement();
}

SymSet SymSet::nat_part() const {
  SymSet s = *this;
  std::fill(s.extras_.begin(), s.extras_.end(), false);
  return s;
}

std::string SymSet::to_string(const std::vector<std::string>& extra_names) const {
  std::string s = (tag_ == SymTag::Finite) ? "fin{" : "cof{";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(support_[i]);
  }
  s += "}";
  for (std::size_t i = 0; i < extras_.size(); ++i)
    s += (extras_[i] ? "+" : "-") + (i < extra_names.size() ? extra_names[i] : "?");
  return s;
}

SymSet SymSet::parse(const std::string& text, const std::vector<std::string>& extra_names) {
  auto fail = [&]() { throw BadParameter("cannot parse symbolic set \"" + text + "\""); };
  std::size_t pos = 0;
  SymTag tag;
  if (text.rfind("fin", 0) == 0)
    tag = SymTag::Finite;
  else if (text.rfind("cof", 0) == 0)
    tag = SymTag::Cofinite;
  else {
    fail();
    return {};
  }
  pos = 3;
  if (pos >= text.size() || text[pos] != '{') fail();
  auto close = text.find('}', pos);
  if (close == std::string::npos) fail();
  std::vector<std::uint32_t> support;
  std::string body = text.substr(pos + 1, close - pos - 1);
  std::size_t start = 0;
  while (start < body.size()) {
    auto comma = body.find(',', start);
    std::string item = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    try {
      long v = std::stol(item);
      if (v < 0) fail();
      support.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      fail();
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  std::vector<bool> extras(extra_names.size(), false);
  pos = close + 1;
  while (pos < text.size()) {
    char sign = text[pos];
    if (sign != '+' && sign != '-') fail();
    std::size_t next = pos + 1;
    while (next < text.size() && text[next] != '+' && text[next] != '-') ++next;
    std::string name = text.substr(pos + 1, next - pos - 1);
    auto it = std::find(extra_names.begin(), extra_names.end(), name);
    if (it == extra_names.end())
      throw NotRepresentable("extra point \"" + name + "\" does not exist in this space");
    extras[it - extra_names.begin()] = (sign == '+');
    pos = next;
  }
  return (tag == SymTag::Finite) ? finite(std::move(support), std::move(extras))
                                 : cofinite(std::move(support), std::move(extras));
}

SymSpace::SymSpace(SymFamily family) : family_(family) {
  switch (family) {
    case SymFamily::CofiniteNat:
      name_ = "cofinite-nat";
      break;
    case SymFamily::IndiscreteNat:
      name_ = "indiscrete-nat";
      break;
    case SymFamily::IndiscretePlusPoint:
      name_ = "e1-infinite";
      extra_names_ = {"p"};
      break;
    case SymFamily::OnePointCompactDiscreteNat:
      name_ = "opc-discrete";
      extra_names_ = {"inf"};
      break;
  }
}

SymSpace SymSpace::by_name(const std::string& name) {
  if (name == "cofinite-nat") return SymSpace(SymFamily::CofiniteNat);
  if (name == "indiscrete-nat") return SymSpace(SymFamily::IndiscreteNat);
  if (name == "e1-infinite") return SymSpace(SymFamily::IndiscretePlusPoint);
  if (name == "opc-discrete") return SymSpace(SymFamily::OnePointCompactDiscreteNat);
  throw UnknownName("unknown symbolic space \"" + name + "\"");
}

const std::vector<std::string>& SymSpace::names() {
  static const std::vector<std::string> kNames = {"cofinite-nat", "indiscrete-nat", "e1-infinite",
                                                  "opc-discrete"};
  return kNames;
}

SymSet SymSpace::empty_set() const {
  return SymSet::finite({}, std::vector<bool>(extra_names_.size(), false));
}

SymSet SymSpace::universe() const {
  return SymSet::cofinite({}, std::vector<bool>(extra_names_.size(), true));
}

SymSet SymSpace::nat_part() const {
  return SymSet::cofinite({}, std::vector<bool>(extra_names_.size(), false));
}

void SymSpace::check(const SymSet& a) const {
  if (a.extras_count() != static_cast<int>(extra_names_.size()))
    throw NotRepresentable("set does not match the space's extra points");
}

SymSet sym_interior(const SymSpace& sp, const SymSet& a) {
  sp.check(a);
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      // Opens are the empty set and the cofinite sets.
      return a.is_infinite() ? a : sp.empty_set();
    case SymFamily::IndiscreteNat:
      return (a == sp.universe()) ? a : sp.empty_set();
    case SymFamily::IndiscretePlusPoint:
      // Opens: empty, N, X.
      if (a == sp.universe()) return a;
      if (a.nat_part_full()) return sp.nat_part();
      return sp.empty_set();
    case SymFamily::OnePointCompactDiscreteNat:
      // Subsets of N are open; inf is interior exactly when the N-part is
      // cofinite and inf is a member.
      if (a.is_infinite() && a.extra(0)) return a;
      return a.nat_part();
  }
  throw Error("unreachable");
}

SymSet sym_closure(const SymSpace& sp, const SymSet& a) {
  sp.check(a);
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      // Finite sets are closed; infinite sets are dense.
      return a.is_infinite() ? sp.universe() : a;
    case SymFamily::IndiscreteNat:
      return a.is_empty() ? a : sp.universe();
    case SymFamily::IndiscretePlusPoint:
      // Closed sets: empty, {p}, X.
      if (a.is_empty()) return a;
      if (a.nat_part_empty()) return a;  // within {p}
      return sp.universe();
    case SymFamily::OnePointCompactDiscreteNat: {
      // Finite-tagged sets are closed; infinite N-parts accumulate at inf.
      if (!a.is_infinite()) return a;
      return a | SymSet::finite({}, {true});
    }
  }
  throw Error("unreachable");
}

SymDecomp sym_decompose(const SymSpace& sp) {
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      // Every singleton is closed with empty interior.
      return {sp.universe(), sp.empty_set()};
    case SymFamily::IndiscreteNat:
      // Every singleton is dense.
      return {sp.empty_set(), sp.universe()};
    case SymFamily::IndiscretePlusPoint:
      // cl{p} = {p} is nowhere dense; singletons of N are dense.
      return {SymSet::finite({}, {true}), SymSet::cofinite({}, {false})};
    case SymFamily::OnePointCompactDiscreteNat:
      // {inf} is closed with empty interior; singletons of N are open.
      return {SymSet::finite({}, {true}), SymSet::cofinite({}, {false})};
  }
  throw Error("unreachable");
}

bool sym_is_nowhere_dense(const SymSpace& sp, const SymSet& a) {
  return sym_interior(sp, sym_closure(sp, a)).is_empty();
}

bool sym_is_semi_closed(const SymSpace& sp, const SymSet& a) {
  return sym_subset(sym_interior(sp, sym_closure(sp, a)), a);
}

bool sym_is_sg_closed(const SymSpace& sp, const SymSet& a) {
  SymSet guard = sym_decompose(sp).x1 & sym_interior(sp, sym_closure(sp, a));
  return sym_subset(guard, a);
}

bool sym_is_hsg_closed(const SymSpace& sp, const SymSet& a) {
  return (sym_decompose(sp).x1 & sym_interior(sp, sym_closure(sp, a))).is_empty();
}

namespace {

SymVerdict make_verdict(const SymSpace& sp, bool value, std::optional<SymSet> witness,
                        std::string witness_family, std::string justification, bool for_c3) {
  SymVerdict v;
  v.value = value;
  v.justification = std::move(justification);
  if (!value) {
    // Self-check: a representable witness must actually be infinite and in
    // the class the verdict denies finiteness for.
    if (witness) {
      bool in_class = for_c3 ? sym_is_hsg_closed(sp, *witness) : sym_is_nowhere_dense(sp, *witness);
      if (!witness->is_infinite() || !in_class)
        throw Error("verdict table inconsistent for " + sp.name());
      v.witness = std::move(witness);
    } else if (witness_family.empty()) {
      throw Error("false verdict for " + sp.name() + " lacks a witness");
    }
    v.witness_family = std::move(witness_family);
  }
  return v;
}

}  // namespace

SymVerdict sym_is_c2(const SymSpace& sp) {
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      return make_verdict(sp, true, std::nullopt, {},
                          "infinite sets are dense and Int X = X, so no infinite set is nowhere dense",
                          false);
    case SymFamily::IndiscreteNat:
      return make_verdict(sp, true, std::nullopt, {},
                          "every nonempty set is dense with Int cl A = X; only the empty set is nowhere dense",
                          false);
    case SymFamily::IndiscretePlusPoint:
      return make_verdict(sp, true, std::nullopt, {},
                          "sets meeting N are dense, so nowhere dense sets lie within {p}", false);
    case SymFamily::OnePointCompactDiscreteNat:
      return make_verdict(sp, true, std::nullopt, {},
                          "sets meeting N have open points in their closure; nowhere dense sets lie within {inf}",
                          false);
  }
  throw Error("unreachable");
}

SymVerdict sym_is_c3(const SymSpace& sp) {
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      return make_verdict(sp, true, std::nullopt, {},
                          "x1 = X and Int cl A = X for infinite A, so infinite sets are never hsg-closed",
                          true);
    case SymFamily::IndiscreteNat:
      return make_verdict(sp, false, sp.universe(), "",
                          "x1 is empty, so every subset is hsg-closed, including the infinite carrier",
                          true);
    case SymFamily::IndiscretePlusPoint:
      return make_verdict(sp, true, std::nullopt, {},
                          "any infinite set meets N, hence is dense and Int cl A = X meets x1 = {p}",
                          true);
    case SymFamily::OnePointCompactDiscreteNat:
      return make_verdict(sp, false, std::nullopt,
                          "any infinite A within N with infinite complement, e.g. the even numbers",
                          "for such A, cl A = A + {inf} and Int cl A = A, which avoids x1 = {inf}",
                          true);
  }
  throw Error("unreachable");
}

bool sym_is_sg_compact(const SymSpace& sp) { return sym_is_c3(sp).value; }

bool sym_is_semi_compact(const SymSpace& sp) {
  return sym_is_c2(sp).value && !sym_cellular_witness(sp).has_value();
}

std::optional<SymCellularWitness> sym_cellular_witness(const SymSpace& sp) {
  switch (sp.family()) {
    case SymFamily::CofiniteNat:
      // Any two nonempty opens are cofinite and intersect.
      return std::nullopt;
    case SymFamily::IndiscreteNat:
      // The only nonempty open is X.
      return std::nullopt;
    case SymFamily::IndiscretePlusPoint:
      // Nonempty opens are N and X, which intersect.
      return std::nullopt;
    case SymFamily::OnePointCompactDiscreteNat: {
      SymCellularWitness w;
      w.description = "{{n} : n in N}";
      w.subfamily_union = sp.nat_part();
      w.union_in_x2 = sym_subset(w.subfamily_union, sym_decompose(sp).x2);
      return w;
    }
  }
  throw Error("unreachable");
}

FalsifierResult falsify_verdicts(const SymSpace& sp, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (static_cast<int>(sp.family()) + 1)));
  SymVerdict c2 = sym_is_c2(sp);
  SymVerdict c3 = sym_is_c3(sp);
  int extras = static_cast<int>(sp.extra_names().size());

  FalsifierResult result;
  for (std::uint64_t i = 0; i < samples; ++i) {
    // Support sizes grow as sampling proceeds.
    std::uint32_t max_size = 2 + static_cast<std::uint32_t>(i / 100);
    std::uint32_t size = rng() % (max_size + 1);
    std::vector<std::uint32_t> support;
    support.reserve(size);
    for (std::uint32_t k = 0; k < size; ++k)
      support.push_back(static_cast<std::uint32_t>(rng() % 10000));
    std::vector<bool> flags;
    for (int e = 0; e < extras; ++e) flags.push_back(rng() & 1);
    SymSet a = (rng() & 1) ? SymSet::cofinite(std::move(support), std::move(flags))
                           : SymSet::finite(std::move(support), std::move(flags));
    ++result.samples;
    if (c2.value && a.is_infinite() && sym_is_nowhere_dense(sp, a)) ++result.contradictions;
    if (c3.value && a.is_infinite() && sym_is_hsg_closed(sp, a)) ++result.contradictions;
    if (!c2.value && c2.witness && *c2.witness == a && !sym_is_nowhere_dense(sp, a))
      ++result.contradictions;
    if (!c3.value && c3.witness && *c3.witness == a && !sym_is_hsg_closed(sp, a))
      ++result.contradictions;
  }
  return result;
}

FinTopology opc_model_discrete(int k) {
  if (k < 1 || k > 11) throw BadParameter("opc model size out of range");
  return discrete(k + 1);
}

FinTopology opc_model_included_point(int k) {
  if (k < 1 || k > 19) throw BadParameter("opc model size out of range");
  int n = k + 1;
  std::vector<PtSet> opens;
  std::uint64_t total = 1ULL << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) opens.push_back(PtSet::from_bits(n, mask));
  opens.push_back(PtSet::full_set(n));
  return validate_topology(std::move(opens), n);
}

PtSet truncate_to_model(const SymSpace& sp, const SymSet& a, int k) {
  sp.check(a);
  int extras = static_cast<int>(sp.extra_names().size());
  PtSet out(k + extras);
  for (std::uint32_t x : a.support())
    if (x >= static_cast<std::uint32_t>(k))
      throw NotRepresentable("support exceeds the truncation window");
  for (int x = 0; x < k; ++x)
    if (a.contains_nat(static_cast<std::uint32_t>(x))) out.set(x);
  for (int e = 0; e < extras; ++e)
    if (a.extra(e)) out.set(k + e);
  return out;
}

}  // namespace sgtop
