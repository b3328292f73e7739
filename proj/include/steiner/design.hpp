#pragma once

// Steiner triple systems and their orientations.
//
// Points are 1-based everywhere. A SteinerTripleSystem can only be obtained
// through validate_sts, so holding one means the pair-cover property holds.
// Triples are kept sorted; an OrientedSTS records one cyclic order per base
// triple and exposes its oriented triples in sorted canonical form, so
// equality and ordering of oriented systems are plain lexicographic
// comparisons.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Point = int;

class Triple {
 public:
  /// Builds the sorted triple {a,b,c}. Throws MalformedTriple on repeated or
  /// non-positive points.
  static Triple of(Point a, Point b, Point c) {
    if (a < 1 || b < 1 || c < 1 || a == b || b == c || a == c) {
      throw Error(ErrorCode::MalformedTriple, "{" + std::to_string(a) + "," + std::to_string(b) +
                                                  "," + std::to_string(c) + "}");
    }
    std::array<Point, 3> p{a, b, c};
    std::sort(p.begin(), p.end());
    return Triple(p);
  }

  const std::array<Point, 3>& points() const noexcept { return p_; }
  Point operator[](std::size_t i) const noexcept { return p_[i]; }
  Point min() const noexcept { return p_[0]; }
  Point max() const noexcept { return p_[2]; }
  bool contains(Point x) const noexcept { return p_[0] == x || p_[1] == x || p_[2] == x; }

  auto operator<=>(const Triple&) const = default;

 private:
  explicit Triple(std::array<Point, 3> p) : p_(p) {}
  std::array<Point, 3> p_;
};

/// A cyclically ordered triple [a,b,c] meaning a->b->c->a, stored in the
/// rotation that puts the minimum point first.
class OrientedTriple {
 public:
  static OrientedTriple from_cycle(Point a, Point b, Point c) {
    (void)Triple::of(a, b, c);  // distinctness check
    std::array<Point, 3> r{a, b, c};
    auto it = std::min_element(r.begin(), r.end());
    std::rotate(r.begin(), it, r.end());
    return OrientedTriple(r);
  }

  const std::array<Point, 3>& cycle() const noexcept { return c_; }
  Point operator[](std::size_t i) const noexcept { return c_[i]; }
  Triple support() const { return Triple::of(c_[0], c_[1], c_[2]); }
  OrientedTriple reversed() const { return OrientedTriple({c_[0], c_[2], c_[1]}); }

  /// True when the cycle reads in increasing order, i.e. [a,b,c] with a<b<c.
  bool is_ascending() const noexcept { return c_[1] < c_[2]; }

  /// +1 if y follows x in the cycle, -1 if x follows y, 0 if x == y.
  /// Both points must belong to the triple.
  int sign(Point x, Point y) const noexcept {
    if (x == y) return 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (c_[i] == x) return c_[(i + 1) % 3] == y ? 1 : -1;
    }
    return 0;
  }

  auto operator<=>(const OrientedTriple&) const = default;

 private:
  explicit OrientedTriple(std::array<Point, 3> c) : c_(c) {}
  std::array<Point, 3> c_;
};

inline OrientedTriple canonical_rotation(const std::array<Point, 3>& cycle) {
  return OrientedTriple::from_cycle(cycle[0], cycle[1], cycle[2]);
}

class SteinerTripleSystem;
SteinerTripleSystem validate_sts(int n, std::vector<Triple> triples);

class SteinerTripleSystem {
 public:
  int order() const noexcept { return n_; }
  std::span<const Triple> triples() const noexcept { return triples_; }
  std::size_t triple_count() const noexcept { return triples_.size(); }
  const Triple& triple(std::size_t i) const { return triples_.at(i); }

  /// Index (into triples()) of the unique triple containing the pair {x,y}.
  std::size_t triple_of_pair(Point x, Point y) const {
    return static_cast<std::size_t>(pair_index_[slot(x, y)]);
  }

  /// The third point of the triple through x and y (x != y).
  Point third(Point x, Point y) const {
    const Triple& t = triples_[triple_of_pair(x, y)];
    return t[0] + t[1] + t[2] - x - y;
  }

  std::optional<std::size_t> index_of(const Triple& t) const {
    auto it = std::lower_bound(triples_.begin(), triples_.end(), t);
    if (it == triples_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - triples_.begin());
  }

  bool operator==(const SteinerTripleSystem& o) const {
    return n_ == o.n_ && triples_ == o.triples_;
  }

 private:
  friend SteinerTripleSystem validate_sts(int n, std::vector<Triple> triples);
  SteinerTripleSystem() = default;
  std::size_t slot(Point x, Point y) const noexcept {
    return static_cast<std::size_t>((x - 1) * n_ + (y - 1));
  }

  int n_ = 0;
  std::vector<Triple> triples_;
  std::vector<int> pair_index_;
};

/// Checks the pair-cover property. Errors, in the order they are tested:
/// BadOrder (n < 3 or n not 1,3 mod 6), MalformedTriple (point outside 1..n),
/// PairDoubleCovered for the first pair seen twice while
/// scanning the sorted triples, PairUncovered for the smallest missing pair.
inline SteinerTripleSystem validate_sts(int n, std::vector<Triple> triples) {
  if (n < 3 || (n % 6 != 1 && n % 6 != 3)) {
    throw Error(ErrorCode::BadOrder, "n=" + std::to_string(n));
  }
  std::sort(triples.begin(), triples.end());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (t.max() > n) {
      throw Error(ErrorCode::MalformedTriple,
                  "point " + std::to_string(t.max()) + " outside 1.." + std::to_string(n));
    }
  }
  SteinerTripleSystem s;
  s.n_ = n;
  s.pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& p = triples[i].points();
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        int& cell = s.pair_index_[s.slot(p[a], p[b])];
        if (cell != -1) throw Error::pair(ErrorCode::PairDoubleCovered, p[a], p[b]);
        cell = static_cast<int>(i);
        s.pair_index_[s.slot(p[b], p[a])] = static_cast<int>(i);
      }
    }
  }
  for (Point x = 1; x <= n; ++x) {
    for (Point y = x + 1; y <= n; ++y) {
      if (s.pair_index_[s.slot(x, y)] == -1) throw Error::pair(ErrorCode::PairUncovered, x, y);
    }
  }
  s.triples_ = std::move(triples);
  return s;
}

/// n is taken as the largest point mentioned.
inline SteinerTripleSystem validate_sts(std::vector<Triple> triples) {
  int n = 0;
  for (const auto& t : triples) n = std::max(n, t.max());
  return validate_sts(n, std::move(triples));
}

class OrientedSTS {
 public:
  /// Validates the underlying system and canonicalizes every cycle.
  static OrientedSTS make(int n, const std::vector<OrientedTriple>& oriented) {
    std::vector<Triple> support;
    support.reserve(oriented.size());
    for (const auto& o : oriented) support.push_back(o.support());
    OrientedSTS result(validate_sts(n, std::move(support)));
    for (const auto& o : oriented) {
      const std::size_t idx = *result.base_.index_of(o.support());
      result.descending_[idx] = o.is_ascending() ? 0 : 1;
    }
    result.rebuild();
    return result;
  }

  static OrientedSTS make(const std::vector<OrientedTriple>& oriented) {
    int n = 0;
    for (const auto& o : oriented) n = std::max(n, o.support().max());
    return make(n, oriented);
  }

  /// Orientation whose bit t is set when base triple t is descending ([a,c,b]).
  static OrientedSTS from_mask(const SteinerTripleSystem& base, std::uint64_t mask) {
    OrientedSTS result(base);
    for (std::size_t t = 0; t < base.triple_count() && t < 64; ++t) {
      result.descending_[t] = static_cast<std::uint8_t>((mask >> t) & 1U);
    }
    result.rebuild();
    return result;
  }

  static OrientedSTS from_flags(const SteinerTripleSystem& base, std::vector<std::uint8_t> desc) {
    OrientedSTS result(base);
    for (std::size_t t = 0; t < desc.size() && t < base.triple_count(); ++t) {
      result.descending_[t] = desc[t] ? 1 : 0;
    }
    result.rebuild();
    return result;
  }

  const SteinerTripleSystem& base() const noexcept { return base_; }
  int order() const noexcept { return base_.order(); }
  std::span<const OrientedTriple> triples() const noexcept { return sorted_; }
  std::span<const std::uint8_t> descending_flags() const noexcept { return descending_; }

  /// The oriented version of base triple t.
  OrientedTriple oriented(std::size_t t) const {
    const auto& p = base_.triple(t).points();
    return descending_[t] ? OrientedTriple::from_cycle(p[0], p[2], p[1])
                          : OrientedTriple::from_cycle(p[0], p[1], p[2]);
  }

  std::uint64_t flip_mask() const {
    if (descending_.size() > 64) {
      throw Error(ErrorCode::TooManyTriples, "flip mask needs more than 64 bits");
    }
    std::uint64_t m = 0;
    for (std::size_t t = 0; t < descending_.size(); ++t) {
      if (descending_[t]) m |= std::uint64_t{1} << t;
    }
    return m;
  }

  /// +1 if y follows x on their triple, -1 if x follows y, 0 when x == y.
  int sign(Point x, Point y) const {
    if (x == y) return 0;
    const std::size_t t = base_.triple_of_pair(x, y);
    const auto& p = base_.triple(t).points();
    // ascending cycle a->b->c: forward pairs are (a,b), (b,c), (c,a)
    const bool forward = (x == p[0] && y == p[1]) || (x == p[1] && y == p[2]) ||
                         (x == p[2] && y == p[0]);
    const int s = forward ? 1 : -1;
    return descending_[t] ? -s : s;
  }

  OrientedSTS reversed() const {
    OrientedSTS r(*this);
    for (auto& d : r.descending_) d ^= 1U;
    r.rebuild();
    return r;
  }

  bool operator==(const OrientedSTS& o) const {
    return order() == o.order() && sorted_ == o.sorted_;
  }
  std::strong_ordering operator<=>(const OrientedSTS& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    return std::lexicographical_compare_three_way(sorted_.begin(), sorted_.end(),
                                                  o.sorted_.begin(), o.sorted_.end());
  }

 private:
  explicit OrientedSTS(SteinerTripleSystem base)
      : base_(std::move(base)), descending_(base_.triple_count(), 0) {}

  void rebuild() {
    sorted_.clear();
    sorted_.reserve(descending_.size());
    for (std::size_t t = 0; t < descending_.size(); ++t) sorted_.push_back(oriented(t));
    std::sort(sorted_.begin(), sorted_.end());
  }

  SteinerTripleSystem base_;
  std::vector<std::uint8_t> descending_;
  std::vector<OrientedTriple> sorted_;
};

inline OrientedSTS reverse_orientation(const OrientedSTS& o) { return o.reversed(); }

/// Dense skew table f(s,t) in {-1,0,+1} for 1 <= s,t <= n.
class OrientationFunction {
 public:
  explicit OrientationFunction(const OrientedSTS& o)
      : n_(o.order()), table_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const auto& ot : o.triples()) {
      const auto& c = ot.cycle();
      for (std::size_t i = 0; i < 3; ++i) {
        const Point x = c[i];
        const Point y = c[(i + 1) % 3];
        at_mut(x, y) = 1;
        at_mut(y, x) = -1;
      }
    }
  }

  int order() const noexcept { return n_; }
  int operator()(Point s, Point t) const { return table_[slot(s, t)]; }

  bool operator==(const OrientationFunction&) const = default;

 private:
  std::size_t slot(Point s, Point t) const noexcept {
    return static_cast<std::size_t>((s - 1) * n_ + (t - 1));
  }
  std::int8_t& at_mut(Point s, Point t) { return table_[slot(s, t)]; }

  int n_;
  std::vector<std::int8_t> table_;
};

inline OrientationFunction orientation_function(const OrientedSTS& o) {
  return OrientationFunction(o);
}

/// Enumeration cap on |T|: 24 unless STEINER_MAX_TRIPLES is set (clamped to 62).
inline std::size_t enumeration_cap() {
  if (const char* env = std::getenv("STEINER_MAX_TRIPLES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(std::min(v, 62L));
  }
  return 24;
}

/// All 2^|T| orientations of a system, in flip-mask counter order: mask m
/// reverses base triple t exactly when bit t of m is set.
class OrientationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = OrientedSTS;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = OrientedSTS;

    iterator() = default;
    iterator(const SteinerTripleSystem* s, std::uint64_t m) : sts_(s), mask_(m) {}
    OrientedSTS operator*() const { return OrientedSTS::from_mask(*sts_, mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++mask_;
      return t;
    }
    std::uint64_t mask() const noexcept { return mask_; }
    bool operator==(const iterator& o) const noexcept { return mask_ == o.mask_; }

   private:
    const SteinerTripleSystem* sts_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  explicit OrientationRange(const SteinerTripleSystem& sts) : sts_(&sts) {}
  iterator begin() const { return {sts_, 0}; }
  iterator end() const { return {sts_, size()}; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << sts_->triple_count(); }

 private:
  const SteinerTripleSystem* sts_;
};

/// The returned range refers to `sts`, which must outlive it.
inline OrientationRange enumerate_orientations(const SteinerTripleSystem& sts,
                                               std::size_t max_triples = enumeration_cap()) {
  if (sts.triple_count() > max_triples || sts.triple_count() > 62) {
    throw Error(ErrorCode::TooManyTriples, std::to_string(sts.triple_count()) + " triples exceed cap " +
                                               std::to_string(max_triples));
  }
  return OrientationRange(sts);
}

}  // namespace steiner
