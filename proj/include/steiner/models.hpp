#pragma once

// Named systems: the unique STS(3), STS(7) and STS(9) models, the published
// class representatives of their orientations, and the seven-point
// orientations used in the zero-divisor and rank-growth examples.

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "steiner/design.hpp"

namespace steiner {

namespace detail {

using Cycle = std::array<Point, 3>;

inline OrientedSTS oriented_model(int n, std::initializer_list<Cycle> cycles) {
  std::vector<OrientedTriple> v;
  for (const auto& c : cycles) v.push_back(canonical_rotation(c));
  return OrientedSTS::make(n, v);
}

inline SteinerTripleSystem plain_model(int n, std::initializer_list<Cycle> cycles) {
  std::vector<Triple> v;
  for (const auto& c : cycles) v.push_back(Triple::of(c[0], c[1], c[2]));
  return validate_sts(n, std::move(v));
}

// The twelve nine-point representatives share their first six cycles.
inline OrientedSTS nine(std::initializer_list<Cycle> tail) {
  std::vector<OrientedTriple> v{canonical_rotation({1, 2, 3}), canonical_rotation({1, 4, 7}),
                                canonical_rotation({1, 5, 9}), canonical_rotation({1, 6, 8}),
                                canonical_rotation({2, 4, 9})};
  for (const auto& c : tail) v.push_back(canonical_rotation(c));
  return OrientedSTS::make(9, v);
}

}  // namespace detail

inline SteinerTripleSystem sts3() { return detail::plain_model(3, {{1, 2, 3}}); }

inline SteinerTripleSystem sts7() {
  return detail::plain_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

inline SteinerTripleSystem sts9() {
  return detail::plain_model(9, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}, {2, 5, 8}, {3, 6, 9},
                                 {1, 5, 9}, {2, 6, 7}, {3, 4, 8}, {1, 6, 8}, {2, 4, 9}, {3, 5, 7}});
}

/// A published representative together with the automorphism-group order
/// printed next to it.
struct ReferenceRepresentative {
  std::string name;
  OrientedSTS system;
  int printed_aut_order;
};

inline std::vector<ReferenceRepresentative> reference_representatives(int n) {
  using detail::nine;
  using detail::oriented_model;
  std::vector<ReferenceRepresentative> r;
  if (n == 3) {
    r.push_back({"o1_3", oriented_model(3, {{1, 2, 3}}), 3});
  } else if (n == 7) {
    r.push_back({"o1_7",
                 oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 7, 5}, {3, 6, 5}, {3, 7, 4}}),
                 21});
    r.push_back({"o2_7",
                 oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}),
                 21});
    r.push_back({"o3_7",
                 oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}}),
                 3});
    r.push_back({"o4_7",
                 oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}),
                 3});
  } else if (n == 9) {
    r.push_back({"o1_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}}), 27});
    r.push_back({"o2_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 9, 8}}), 9});
    r.push_back({"o3_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 9, 6}, {4, 5, 6}, {7, 8, 9}}), 3});
    r.push_back({"o4_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 7, 5}, {3, 8, 4}, {3, 9, 6}, {4, 5, 6}, {7, 8, 9}}), 3});
    r.push_back({"o5_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 7, 5}, {3, 8, 4}, {3, 9, 6}, {4, 5, 6}, {7, 9, 8}}), 3});
    r.push_back({"o6_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 9, 6}, {4, 5, 6}, {7, 9, 8}}), 1});
    r.push_back({"o7_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 5, 6}, {7, 8, 9}}), 1});
    r.push_back({"o8_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 6, 5}, {7, 9, 8}}), 1});
    r.push_back({"o9_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 7, 5}, {3, 8, 4}, {3, 9, 6}, {4, 5, 6}, {7, 9, 8}}), 3});
    r.push_back({"o10_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 7, 5}, {3, 8, 4}, {3, 9, 6}, {4, 6, 5}, {7, 8, 9}}), 3});
    r.push_back({"o11_9", nine({{2, 5, 8}, {2, 7, 6}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 5, 6}, {7, 8, 9}}), 3});
    r.push_back({"o12_9", nine({{2, 7, 6}, {2, 8, 5}, {3, 4, 8}, {3, 5, 7}, {3, 9, 6}, {4, 6, 5}, {7, 9, 8}}), 3});
    r.push_back({"o13_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 5, 6}, {7, 9, 8}}), 1});
    r.push_back({"o14_9", nine({{2, 5, 8}, {2, 6, 7}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 6, 5}, {7, 8, 9}}), 1});
    r.push_back({"o15_9", nine({{2, 5, 8}, {2, 7, 6}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 5, 6}, {7, 9, 8}}), 1});
    r.push_back({"o16_9", nine({{2, 5, 8}, {2, 7, 6}, {3, 4, 8}, {3, 7, 5}, {3, 9, 6}, {4, 6, 5}, {7, 9, 8}}), 1});
  }
  return r;
}

/// Seven-point orientation of the zero-divisor example; it is also the second
/// rank-growth orientation (rg7b).
inline OrientedSTS zd7() {
  return detail::oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}});
}

/// First rank-growth orientation (generic plateau rank 3).
inline OrientedSTS rg7a() {
  return detail::oriented_model(7, {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}});
}

inline OrientedSTS rg7b() { return zd7(); }

using Model = std::variant<SteinerTripleSystem, OrientedSTS>;

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> names{"sts3", "sts7", "sts9", "o1_3"};
  for (int k = 1; k <= 4; ++k) names.push_back("o" + std::to_string(k) + "_7");
  for (int k = 1; k <= 16; ++k) names.push_back("o" + std::to_string(k) + "_9");
  names.insert(names.end(), {"zd7", "rg7a", "rg7b"});
  return names;
}

inline Model builtin_model(std::string_view name) {
  if (name == "sts3") return sts3();
  if (name == "sts7") return sts7();
  if (name == "sts9") return sts9();
  if (name == "zd7") return zd7();
  if (name == "rg7a") return rg7a();
  if (name == "rg7b") return rg7b();
  for (int n : {3, 7, 9}) {
    for (auto& rep : reference_representatives(n)) {
      if (rep.name == name) return std::move(rep.system);
    }
  }
  throw Error(ErrorCode::UnknownModel, std::string(name));
}

/// Builtin as an oriented system; UnknownModel if the name is unoriented.
inline OrientedSTS builtin_oriented(std::string_view name) {
  Model m = builtin_model(name);
  if (auto* o = std::get_if<OrientedSTS>(&m)) return std::move(*o);
  throw Error(ErrorCode::UnknownModel, std::string(name) + " is not oriented");
}

inline SteinerTripleSystem builtin_sts(std::string_view name) {
  Model m = builtin_model(name);
  if (auto* s = std::get_if<SteinerTripleSystem>(&m)) return std::move(*s);
  return std::get<OrientedSTS>(m).base();
}

}  // namespace steiner
