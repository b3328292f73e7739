#pragma once

// Sparse multivariate polynomials with integer coefficients. A monomial is
// the sorted multiset of its variable indices, so x0*x0*x3 is {0,0,3}.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "steiner/exact.hpp"

namespace steiner {

class Polynomial {
 public:
  using Monomial = std::vector<std::uint16_t>;

  Polynomial() = default;

  static Polynomial constant(long long c) {
    Polynomial p;
    if (c != 0) p.terms_[{}] = c;
    return p;
  }
  static Polynomial variable(std::uint16_t index) {
    Polynomial p;
    p.terms_[{index}] = 1;
    return p;
  }

  const std::map<Monomial, long long>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(long long k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, long long k) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    Monomial m;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        m.resize(ma.size() + mb.size());
        std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), m.begin());
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  bool operator==(const Polynomial&) const = default;

  /// Value at x (x[i] is variable i).
  Scalar evaluate(const std::vector<Scalar>& x) const {
    Scalar total = 0;
    for (const auto& [m, c] : terms_) {
      Scalar t = c;
      for (auto v : m) t *= x.at(v);
      total += t;
    }
    return total;
  }

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
  }

 private:
  void add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, long long> terms_;
};

}  // namespace steiner
