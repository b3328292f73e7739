#pragma once

// Permutations of the point set, explicit permutation groups, automorphism
// groups of (oriented) Steiner triple systems and small-group fingerprints.
//
// Groups are stored as the sorted list of their elements; every group that
// arises here has at most a few hundred elements.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

class Permutation {
 public:
  static Permutation identity(int n) {
    std::vector<Point> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// images[i-1] = phi(i). Throws DegreeMismatch unless this is a bijection of 1..n.
  static Permutation from_images(std::vector<Point> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p < 1 || p > n || seen[static_cast<std::size_t>(p - 1)]) {
        throw Error(ErrorCode::DegreeMismatch, "images do not form a permutation of 1.." + std::to_string(n));
      }
      seen[static_cast<std::size_t>(p - 1)] = true;
    }
    return Permutation(std::move(images));
  }

  /// Builds from disjoint cycles, e.g. {{2,4,6},{3,5,7}} on 7 points.
  static Permutation from_cycles(int n, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        img.at(static_cast<std::size_t>(c[i] - 1)) = c[(i + 1) % c.size()];
      }
    }
    return from_images(std::move(img));
  }

  int degree() const noexcept { return static_cast<int>(img_.size()); }
  Point operator()(Point x) const { return img_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<Point>& images() const noexcept { return img_; }

  /// (*this * other)(x) = this(other(x)).
  Permutation operator*(const Permutation& other) const {
    require_same_degree(other);
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = (*this)(other.img_[i]);
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<Point> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[static_cast<std::size_t>(img_[i] - 1)] = static_cast<Point>(i + 1);
    return Permutation(std::move(img));
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != static_cast<Point>(i + 1)) return false;
    }
    return true;
  }

  /// Order of the element: lcm of its cycle lengths.
  long element_order() const {
    long ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      long len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j] - 1)) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// Disjoint cycles, each starting at its smallest point, fixed points omitted.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == static_cast<Point>(i + 1)) continue;
      std::vector<Point> c;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(img_[j] - 1)) {
        seen[j] = true;
        c.push_back(static_cast<Point>(j + 1));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// "(2,4,6)(3,5,7)"; the identity prints as "()".
  std::string cycle_notation() const {
    std::ostringstream os;
    const auto cs = cycles();
    if (cs.empty()) return "()";
    for (const auto& c : cs) {
      os << '(';
      for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
      os << ')';
    }
    return os.str();
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<Point> img) : img_(std::move(img)) {}
  void require_same_degree(const Permutation& o) const {
    if (o.degree() != degree()) {
      throw Error(ErrorCode::DegreeMismatch,
                  std::to_string(degree()) + " vs " + std::to_string(o.degree()));
    }
  }

  std::vector<Point> img_;
};

class PermutationGroup {
 public:
  /// Takes an explicit element list (any order, duplicates removed). The list
  /// must already be closed; use generated_by() to close a generating set.
  PermutationGroup(int n, std::vector<Permutation> elements) : n_(n), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& e : elements_) {
      if (e.degree() != n_) throw Error(ErrorCode::DegreeMismatch, "group element of wrong degree");
    }
    choose_generators();
  }

  static PermutationGroup generated_by(int n, const std::vector<Permutation>& gens) {
    const auto closed = closure(n, gens);
    return PermutationGroup(n, std::vector<Permutation>(closed.begin(), closed.end()));
  }

  int degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool is_subset_of(const PermutationGroup& g) const {
    return std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return g.contains(p); });
  }

  bool is_closed() const {
    if (elements_.empty() || !contains(Permutation::identity(n_))) return false;
    for (const auto& a : elements_) {
      if (!contains(a.inverse())) return false;
      for (const auto& b : elements_) {
        if (!contains(a * b)) return false;
      }
    }
    return true;
  }

  bool operator==(const PermutationGroup& o) const { return n_ == o.n_ && elements_ == o.elements_; }

 private:
  // Greedy: walk the sorted elements and keep each one not yet generated.
  void choose_generators() {
    generators_.clear();
    if (elements_.size() <= 1) return;
    std::set<Permutation> span{Permutation::identity(n_)};
    for (const auto& e : elements_) {
      if (span.count(e)) continue;
      generators_.push_back(e);
      span = closure(n_, generators_);
      if (span.size() == elements_.size()) break;
    }
  }

  static std::set<Permutation> closure(int n, const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          Permutation y = g * x;
          if (seen.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  int n_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

// ---------------------------------------------------------------------------
// Actions

inline Triple apply(const Permutation& phi, const Triple& t) {
  return Triple::of(phi(t[0]), phi(t[1]), phi(t[2]));
}

inline OrientedTriple apply(const Permutation& phi, const OrientedTriple& t) {
  return OrientedTriple::from_cycle(phi(t[0]), phi(t[1]), phi(t[2]));
}

/// Maps every oriented triple pointwise; the result is canonicalized.
inline OrientedSTS apply(const Permutation& phi, const OrientedSTS& o) {
  if (phi.degree() != o.order()) {
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(phi.degree()) + " vs " + std::to_string(o.order()));
  }
  std::vector<OrientedTriple> img;
  img.reserve(o.triples().size());
  for (const auto& t : o.triples()) img.push_back(apply(phi, t));
  return OrientedSTS::make(o.order(), img);
}

// ---------------------------------------------------------------------------
// Isomorphism search
//
// Backtracking over images of the points 1..n in order. Whenever two mapped
// points x,y have a mapped third point z, the image triple must match (and,
// for oriented search, the cycle direction must agree).

namespace detail {

struct IsoProblem {
  const SteinerTripleSystem* from;
  const SteinerTripleSystem* to;
  const OrientedSTS* from_o = nullptr;  // set for oriented search
  const OrientedSTS* to_o = nullptr;
};

class IsoSearch {
 public:
  explicit IsoSearch(IsoProblem p)
      : p_(p), n_(p.from->order()), img_(static_cast<std::size_t>(n_) + 1, 0),
        used_(static_cast<std::size_t>(n_) + 1, false) {}

  /// Calls visit(images) for each isomorphism until it returns false.
  void run(const std::function<bool(const std::vector<Point>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    extend(1);
  }

 private:
  bool consistent(Point x) const {
    for (Point y = 1; y < x; ++y) {
      const Point z = p_.from->third(x, y);
      if (z > x) continue;  // checked once z is assigned
      const Point fx = img_[static_cast<std::size_t>(x)];
      const Point fy = img_[static_cast<std::size_t>(y)];
      const Point fz = img_[static_cast<std::size_t>(z)];
      if (p_.to->third(fx, fy) != fz) return false;
      if (p_.from_o && p_.from_o->sign(x, y) != p_.to_o->sign(fx, fy)) return false;
    }
    return true;
  }

  void extend(Point x) {
    if (stop_) return;
    if (x > n_) {
      std::vector<Point> images(img_.begin() + 1, img_.end());
      if (!(*visit_)(images)) stop_ = true;
      return;
    }
    for (Point c = 1; c <= n_ && !stop_; ++c) {
      if (used_[static_cast<std::size_t>(c)]) continue;
      img_[static_cast<std::size_t>(x)] = c;
      used_[static_cast<std::size_t>(c)] = true;
      if (consistent(x)) extend(x + 1);
      used_[static_cast<std::size_t>(c)] = false;
    }
    img_[static_cast<std::size_t>(x)] = 0;
  }

  IsoProblem p_;
  int n_;
  std::vector<Point> img_;
  std::vector<bool> used_;
  const std::function<bool(const std::vector<Point>&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace detail

struct AutOptions {
  int exhaustive_cap = 9;         ///< scan all of S_n when n <= this
  bool allow_backtracking = true;  ///< otherwise use the pruned search
};

/// {phi : phi(T) = T}. Exhaustive over S_n up to the cap, backtracking above it.
inline PermutationGroup sts_aut_group(const SteinerTripleSystem& sts, AutOptions opt = {}) {
  const int n = sts.order();
  std::vector<Permutation> elems;
  if (n <= opt.exhaustive_cap) {
    std::vector<Point> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
      bool ok = true;
      for (const auto& t : sts.triples()) {
        const Point a = img[static_cast<std::size_t>(t[0] - 1)];
        const Point b = img[static_cast<std::size_t>(t[1] - 1)];
        const Point c = img[static_cast<std::size_t>(t[2] - 1)];
        if (sts.third(a, b) != c) {
          ok = false;
          break;
        }
      }
      if (ok) elems.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
  } else if (opt.allow_backtracking) {
    detail::IsoSearch search({&sts, &sts});
    search.run([&](const std::vector<Point>& images) {
      elems.push_back(Permutation::from_images(images));
      return true;
    });
  } else {
    throw Error(ErrorCode::DegreeTooLarge, "n=" + std::to_string(n) + " above exhaustive cap " +
                                               std::to_string(opt.exhaustive_cap));
  }
  return PermutationGroup(n, std::move(elems));
}

/// Stabilizer of o inside base_aut.
inline PermutationGroup oriented_aut_group(const OrientedSTS& o, const PermutationGroup& base_aut) {
  if (base_aut.degree() != o.order()) {
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(base_aut.degree()) + " vs " + std::to_string(o.order()));
  }
  std::vector<Permutation> keep;
  for (const auto& phi : base_aut.elements()) {
    bool ok = true;
    for (const auto& t : o.triples()) {
      if (o.sign(phi(t[0]), phi(t[1])) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) keep.push_back(phi);
  }
  return PermutationGroup(o.order(), std::move(keep));
}

inline PermutationGroup oriented_aut_group(const OrientedSTS& o) {
  return oriented_aut_group(o, sts_aut_group(o.base()));
}

/// Some phi with apply(phi, a) == b, or nothing. Over a common base system
/// the search runs through `base_aut` (computed if not supplied); otherwise a
/// pruned bijection search is used.
inline std::optional<Permutation> are_isomorphic(const OrientedSTS& a, const OrientedSTS& b,
                                                 const PermutationGroup* base_aut = nullptr) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::DegreeMismatch, std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  if (a.base() == b.base()) {
    std::optional<PermutationGroup> own;
    if (!base_aut) {
      own = sts_aut_group(a.base());
      base_aut = &*own;
    }
    for (const auto& phi : base_aut->elements()) {
      bool ok = true;
      for (const auto& t : a.triples()) {
        if (b.sign(phi(t[0]), phi(t[1])) != 1) {
          ok = false;
          break;
        }
      }
      if (ok) return phi;
    }
    return std::nullopt;
  }
  std::optional<Permutation> found;
  detail::IsoSearch search({&a.base(), &b.base(), &a, &b});
  search.run([&](const std::vector<Point>& images) {
    found = Permutation::from_images(images);
    return false;
  });
  return found;
}

/// Isomorphism of the underlying unoriented systems.
inline std::optional<Permutation> are_isomorphic(const SteinerTripleSystem& a, const SteinerTripleSystem& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::DegreeMismatch, std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  std::optional<Permutation> found;
  detail::IsoSearch search({&a, &b});
  search.run([&](const std::vector<Point>& images) {
    found = Permutation::from_images(images);
    return false;
  });
  return found;
}

inline bool is_reflexive(const OrientedSTS& o, const PermutationGroup* base_aut = nullptr) {
  return are_isomorphic(o, o.reversed(), base_aut).has_value();
}

// ---------------------------------------------------------------------------
// Fingerprints

struct SubgroupProfile {
  std::size_t order = 0;
  bool is_abelian = false;
  long exponent = 1;
  bool is_cyclic = false;
  std::string catalog_name;

  bool operator==(const SubgroupProfile&) const = default;
};

/// Catalog lookup for the group orders that occur for systems on 3, 7 and 9
/// points. The two large automorphism groups are named by order only.
inline std::string catalog_name(std::size_t order, bool abelian, long exponent) {
  if (order == 1) return "C1";
  if (order == 3) return "C3";
  if (order == 6 && !abelian) return "S3";
  if (order == 9 && abelian && exponent == 3) return "C3xC3";
  if (order == 9 && abelian && exponent == 9) return "C9";
  if (order == 21 && !abelian) return "C7:C3";
  if (order == 27 && !abelian && exponent == 3) return "He3";
  if (order == 168 && !abelian && exponent == 84) return "order-168 (GL(3,2), by order only)";
  if (order == 432 && !abelian) return "order-432 (Aff(2,F3), by order only)";
  std::ostringstream os;
  os << "unknown(" << order << "," << (abelian ? "abelian" : "nonabelian") << "," << exponent << ")";
  return os.str();
}

inline SubgroupProfile profile_group(const PermutationGroup& g) {
  SubgroupProfile p;
  p.order = g.order();
  p.is_abelian = true;
  const auto& el = g.elements();
  for (std::size_t i = 0; i < el.size() && p.is_abelian; ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (el[i] * el[j] != el[j] * el[i]) {
        p.is_abelian = false;
        break;
      }
    }
  }
  p.exponent = 1;
  long max_order = 1;
  for (const auto& e : el) {
    const long k = e.element_order();
    p.exponent = std::lcm(p.exponent, k);
    max_order = std::max(max_order, k);
  }
  p.is_cyclic = static_cast<std::size_t>(max_order) == p.order;
  p.catalog_name = catalog_name(p.order, p.is_abelian, p.exponent);
  return p;
}

/// Some x in g with x h x^-1 = k, or nothing. NotSubgroup unless h, k are
/// closed subsets of g.
inline std::optional<Permutation> are_conjugate_subgroups(const PermutationGroup& h, const PermutationGroup& k,
                                                          const PermutationGroup& g) {
  if (!h.is_subset_of(g) || !h.is_closed()) throw Error(ErrorCode::NotSubgroup, "first group");
  if (!k.is_subset_of(g) || !k.is_closed()) throw Error(ErrorCode::NotSubgroup, "second group");
  if (h.order() != k.order()) return std::nullopt;
  for (const auto& x : g.elements()) {
    const Permutation xi = x.inverse();
    bool ok = true;
    for (const auto& e : h.elements()) {
      if (!k.contains(x * e * xi)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

inline PermutationGroup conjugate(const PermutationGroup& h, const Permutation& x) {
  std::vector<Permutation> out;
  const Permutation xi = x.inverse();
  for (const auto& e : h.elements()) out.push_back(x * e * xi);
  return PermutationGroup(h.degree(), std::move(out));
}

}  // namespace steiner
