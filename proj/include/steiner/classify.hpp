#pragma once

// Orbits of orientations under the automorphism group of the base system.
//
// Orientations are handled as flip masks over the sorted base triples. Each
// automorphism acts on masks through a triple permutation plus a per-triple
// direction flip, so an orbit is computed without rebuilding oriented systems.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "steiner/design.hpp"
#include "steiner/group.hpp"
#include "steiner/io.hpp"
#include "steiner/models.hpp"

namespace steiner {

struct OrientationClass {
  OrientedSTS representative;  ///< lexicographically least orbit member
  std::uint64_t orbit_size = 0;
  PermutationGroup aut;
  SubgroupProfile profile;
  bool reflexive = false;
  std::optional<std::size_t> mirror;  ///< 0-based index of the reversed class; empty if reflexive
};

struct ClassificationReport {
  int n = 0;
  std::size_t base_aut_order = 0;
  std::uint64_t orientation_count = 0;
  std::vector<OrientationClass> classes;

  /// 0-based index of the class containing o (which must orient the same base).
  std::size_t class_of(const OrientedSTS& o) const {
    const auto mine = classes.empty() ? std::span<const Triple>{} : classes.front().representative.base().triples();
    const auto theirs = o.base().triples();
    const bool same_base = o.order() == n && std::equal(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                                                        [](const Triple& a, const Triple& b) { return a.points() == b.points(); });
    if (!same_base) throw Error(ErrorCode::DegreeMismatch, "orientation of another base system");
    const std::uint64_t m = o.flip_mask();
    auto it = mask_to_class.find(m);
    if (it == mask_to_class.end()) throw Error(ErrorCode::DegreeMismatch, "orientation of another base system");
    return it->second;
  }

  std::map<std::uint64_t, std::size_t> mask_to_class;
};

namespace detail {

/// How one permutation moves flip masks.
struct MaskAction {
  std::vector<std::size_t> target;  // base triple t goes to target[t]
  std::vector<std::uint8_t> flip;   // ascending t lands descending on target[t]

  MaskAction(const SteinerTripleSystem& s, const Permutation& phi) {
    const std::size_t m = s.triple_count();
    target.resize(m);
    flip.resize(m);
    for (std::size_t t = 0; t < m; ++t) {
      const auto& p = s.triple(t).points();
      const OrientedTriple img = OrientedTriple::from_cycle(phi(p[0]), phi(p[1]), phi(p[2]));
      target[t] = *s.index_of(img.support());
      flip[t] = img.is_ascending() ? 0 : 1;
    }
  }

  std::uint64_t operator()(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::size_t t = 0; t < target.size(); ++t) {
      const std::uint64_t bit = ((mask >> t) & 1U) ^ flip[t];
      out |= bit << target[t];
    }
    return out;
  }
};

}  // namespace detail

/// Partitions all 2^|T| orientations into isomorphism classes. Classes are
/// sorted by descending automorphism order, then by representative.
inline ClassificationReport classify_orientations(const SteinerTripleSystem& sts,
                                                  std::size_t max_triples = enumeration_cap()) {
  const auto range = enumerate_orientations(sts, max_triples);
  const PermutationGroup base_aut = sts_aut_group(sts);
  std::vector<detail::MaskAction> actions;
  actions.reserve(base_aut.order());
  for (const auto& phi : base_aut.elements()) actions.emplace_back(sts, phi);

  const std::uint64_t total = range.size();
  const std::uint64_t all_ones = total - 1;
  std::vector<bool> visited(total, false);

  struct Raw {
    std::vector<std::uint64_t> orbit;
    OrientedSTS rep;
    std::uint64_t rep_mask;
  };
  std::vector<Raw> raw;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (visited[m]) continue;
    std::vector<std::uint64_t> orbit;
    for (const auto& act : actions) {
      const std::uint64_t img = act(m);
      if (!visited[img]) {
        visited[img] = true;
        orbit.push_back(img);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::uint64_t best_mask = orbit.front();
    OrientedSTS best = OrientedSTS::from_mask(sts, best_mask);
    for (std::uint64_t x : orbit) {
      OrientedSTS cand = OrientedSTS::from_mask(sts, x);
      if (cand < best) {
        best = std::move(cand);
        best_mask = x;
      }
    }
    raw.push_back({std::move(orbit), std::move(best), best_mask});
  }

  ClassificationReport report;
  report.n = sts.order();
  report.base_aut_order = base_aut.order();
  report.orientation_count = total;
  for (auto& r : raw) {
    PermutationGroup aut = oriented_aut_group(r.rep, base_aut);
    SubgroupProfile prof = profile_group(aut);
    report.classes.push_back(
        {std::move(r.rep), static_cast<std::uint64_t>(r.orbit.size()), std::move(aut), std::move(prof), false, {}});
  }
  // sort classes, carrying their orbits along
  std::vector<std::size_t> idx(raw.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = report.classes[a];
    const auto& cb = report.classes[b];
    if (ca.aut.order() != cb.aut.order()) return ca.aut.order() > cb.aut.order();
    return ca.representative < cb.representative;
  });
  std::vector<OrientationClass> sorted;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    sorted.push_back(std::move(report.classes[idx[k]]));
    for (std::uint64_t m : raw[idx[k]].orbit) report.mask_to_class[m] = k;
  }
  report.classes = std::move(sorted);

  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    auto& c = report.classes[k];
    c.reflexive = is_reflexive(c.representative, &base_aut);
    const std::size_t partner = report.mask_to_class.at(c.representative.flip_mask() ^ all_ones);
    if (c.reflexive != (partner == k)) {
      throw std::logic_error("reflexivity disagrees with orbit lookup");
    }
    if (!c.reflexive) c.mirror = partner;
  }
  return report;
}

/// For each reference representative, the index of the class it belongs to
/// (via are_isomorphic) and whether the printed automorphism order matches.
struct ReferenceMatch {
  std::string name;
  int printed_aut_order = 0;
  std::vector<std::size_t> matching_classes;  ///< should hold exactly one index
  bool aut_order_matches = false;
};

inline std::vector<ReferenceMatch> match_references(const ClassificationReport& report,
                                                    const std::vector<ReferenceRepresentative>& refs) {
  std::vector<ReferenceMatch> out;
  std::optional<PermutationGroup> base_aut;
  for (const auto& ref : refs) {
    ReferenceMatch m{ref.name, ref.printed_aut_order, {}, false};
    if (!base_aut) base_aut = sts_aut_group(ref.system.base());
    for (std::size_t k = 0; k < report.classes.size(); ++k) {
      const auto& rep = report.classes[k].representative;
      if (rep.order() != ref.system.order()) continue;
      const PermutationGroup* aut = rep.base() == ref.system.base() ? &*base_aut : nullptr;
      if (are_isomorphic(ref.system, rep, aut)) m.matching_classes.push_back(k);
    }
    m.aut_order_matches = m.matching_classes.size() == 1 &&
                          report.classes[m.matching_classes.front()].aut.order() ==
                              static_cast<std::size_t>(ref.printed_aut_order);
    out.push_back(std::move(m));
  }
  return out;
}

inline nlohmann::json permutation_json(const Permutation& p) { return p.images(); }

inline nlohmann::json to_json(const ClassificationReport& r, const std::vector<ReferenceMatch>& matches = {}) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : c.aut.generators()) gens.push_back(permutation_json(g));
    nlohmann::json mirror = nullptr;
    if (c.mirror) mirror = *c.mirror + 1;
    classes.push_back({{"representative", triples_json(c.representative)},
                       {"orbit_size", c.orbit_size},
                       {"aut_order", c.aut.order()},
                       {"profile", c.profile.catalog_name},
                       {"abelian", c.profile.is_abelian},
                       {"exponent", c.profile.exponent},
                       {"generators", gens},
                       {"reflexive", c.reflexive},
                       {"mirror", mirror}});
  }
  nlohmann::json j{{"n", r.n},
                   {"base_aut_order", r.base_aut_order},
                   {"orientations", r.orientation_count},
                   {"classes", classes}};
  if (!matches.empty()) {
    nlohmann::json mj = nlohmann::json::array();
    for (const auto& m : matches) {
      nlohmann::json idx = nlohmann::json::array();
      for (std::size_t k : m.matching_classes) idx.push_back(k + 1);
      mj.push_back({{"name", m.name},
                    {"printed_aut_order", m.printed_aut_order},
                    {"classes", idx},
                    {"aut_order_matches", m.aut_order_matches}});
    }
    j["reference_matches"] = mj;
  }
  return j;
}

}  // namespace steiner
