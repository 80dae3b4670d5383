#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "sgtop/errors.hpp"

namespace sgtop {

/// A subset of a finite carrier {0, ..., n-1}, stored as a fixed 128-bit
/// field. Ordinary spaces stay at n <= 5; product spaces use up to 81 points.
///
/// The comparison operator implements the canonical set order (cardinality,
/// then numeric value of the bit field), so sorting a family of PtSets yields
/// its canonical form.
class PtSet {
 public:
  static constexpr int kMaxPoints = 128;

  PtSet() = default;

  explicit PtSet(int carrier_size) : n_(carrier_size) {
    if (carrier_size < 0 || carrier_size > kMaxPoints)
      throw BadParameter("carrier size out of range: " + std::to_string(carrier_size));
  }

  static PtSet empty_set(int n) { return PtSet(n); }

  static PtSet full_set(int n) {
    PtSet s(n);
    if (n >= 64) {
      s.w_[0] = ~0ULL;
      s.w_[1] = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      s.w_[0] = (n == 0) ? 0 : ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
    }
    return s;
  }

  static PtSet singleton(int n, int x) {
    PtSet s(n);
    s.set(x);
    return s;
  }

  static PtSet of(int n, std::initializer_list<int> xs) {
    PtSet s(n);
    for (int x : xs) s.set(x);
    return s;
  }

  static PtSet of(int n, const std::vector<int>& xs) {
    PtSet s(n);
    for (int x : xs) s.set(x);
    return s;
  }

  /// Low 64-bit mask constructor; n must be <= 64.
  static PtSet from_bits(int n, std::uint64_t bits) {
    if (n > 64) throw BadParameter("from_bits requires carrier <= 64");
    PtSet s(n);
    s.w_[0] = bits & full_set(n).w_[0];
    if (s.w_[0] != bits) throw PointOutOfRange("bit mask exceeds carrier");
    return s;
  }

  int carrier_size() const { return n_; }

  bool test(int x) const {
    check_point(x);
    return (w_[x >> 6] >> (x & 63)) & 1ULL;
  }

  void set(int x) {
    check_point(x);
    w_[x >> 6] |= 1ULL << (x & 63);
  }

  void reset(int x) {
    check_point(x);
    w_[x >> 6] &= ~(1ULL << (x & 63));
  }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }

  bool is_full() const { return *this == full_set(n_); }

  std::uint64_t bits64() const {
    if (n_ > 64) throw BadParameter("bits64 requires carrier <= 64");
    return w_[0];
  }

  PtSet complement() const {
    PtSet s = full_set(n_);
    s.w_[0] &= ~w_[0];
    s.w_[1] &= ~w_[1];
    return s;
  }

  bool subset_of(const PtSet& o) const {
    check_carrier(o);
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  bool intersects(const PtSet& o) const {
    check_carrier(o);
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }

  friend PtSet operator|(const PtSet& a, const PtSet& b) {
    a.check_carrier(b);
    PtSet s(a.n_);
    s.w_[0] = a.w_[0] | b.w_[0];
    s.w_[1] = a.w_[1] | b.w_[1];
    return s;
  }

  friend PtSet operator&(const PtSet& a, const PtSet& b) {
    a.check_carrier(b);
    PtSet s(a.n_);
    s.w_[0] = a.w_[0] & b.w_[0];
    s.w_[1] = a.w_[1] & b.w_[1];
    return s;
  }

  /// Set difference.
  PtSet minus(const PtSet& o) const {
    check_carrier(o);
    PtSet s(n_);
    s.w_[0] = w_[0] & ~o.w_[0];
    s.w_[1] = w_[1] & ~o.w_[1];
    return s;
  }

  bool operator==(const PtSet& o) const = default;

  /// Canonical order: cardinality first, then numeric value of the bit field.
  bool operator<(const PtSet& o) const {
    int ca = count(), cb = o.count();
    if (ca != cb) return ca < cb;
    if (w_[1] != o.w_[1]) return w_[1] < o.w_[1];
    return w_[0] < o.w_[0];
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (int x = 0; x < n_; ++x)
      if ((w_[x >> 6] >> (x & 63)) & 1ULL) out.push_back(x);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int x : members()) {
      if (!first) s += ",";
      s += std::to_string(x);
      first = false;
    }
    return s + "}";
  }

  std::size_t hash() const {
    std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL;
    h ^= w_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(n_) * 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h);
  }

 private:
  void check_point(int x) const {
    if (x < 0 || x >= n_)
      throw PointOutOfRange("point " + std::to_string(x) + " outside carrier of size " +
                            std::to_string(n_));
  }

  void check_carrier(const PtSet& o) const {
    if (n_ != o.n_)
      throw CarrierMismatch("carrier sizes differ: " + std::to_string(n_) + " vs " +
                            std::to_string(o.n_));
  }

  int n_ = 0;
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace sgtop

template <>
struct std::hash<sgtop::PtSet> {
  std::size_t operator()(const sgtop::PtSet& s) const noexcept { return s.hash(); }
};
