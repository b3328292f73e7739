// steiner: command-line front end for the steiner library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "steiner/acceptance.hpp"
#include "steiner/algebra.hpp"
#include "steiner/classify.hpp"
#include "steiner/dynamics.hpp"
#include "steiner/io.hpp"
#include "steiner/models.hpp"

using namespace steiner;
using nlohmann::json;

namespace {

struct Options {
  std::string builtin;
  std::string input;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  int horizon = 10000;
  int max_k = -1;
  int steps = 20;
  bool numeric = false;
  bool elements = false;
  std::string a, b, w, v;
  std::string only;
  Tolerances tol;
};

int exit_code(ErrorCode c) {
  if (is_resource_error(c)) return 3;
  if (c == ErrorCode::DegenerateSpectrum) return 1;
  return 2;
}

Model load(const Options& o) {
  if (!o.builtin.empty() && !o.input.empty()) throw Error(ErrorCode::BadArgument, "use either --builtin or --input");
  if (!o.builtin.empty()) return builtin_model(o.builtin);
  if (o.input.empty()) throw Error(ErrorCode::BadArgument, "an input is required (--builtin NAME or --input FILE)");
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(o.input, std::ios::binary);
    if (!f) throw Error(ErrorCode::BadArgument, "cannot read " + o.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return parse_system(text);
}

OrientedSTS load_oriented(const Options& o) {
  Model m = load(o);
  if (auto* x = std::get_if<OrientedSTS>(&m)) return std::move(*x);
  throw Error(ErrorCode::BadArgument, "this command needs an oriented system");
}

SteinerTripleSystem load_sts(const Options& o) {
  Model m = load(o);
  if (auto* x = std::get_if<SteinerTripleSystem>(&m)) return std::move(*x);
  return std::get<OrientedSTS>(m).base();
}

DesignVector vector_arg(const std::string& text, const char* flag, int n) {
  if (text.empty()) throw Error(ErrorCode::BadArgument, std::string("missing --") + flag);
  return parse_vector(text, n);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw Error(ErrorCode::BadArgument, "format '" + o.format + "' not supported by this command");
}

std::string generators_text(const PermutationGroup& g) {
  std::string s;
  for (const auto& p : g.generators()) s += (s.empty() ? "" : ", ") + p.cycle_notation();
  return s.empty() ? "()" : s;
}

json group_json(const PermutationGroup& g, bool elements) {
  const auto prof = profile_group(g);
  json gens = json::array();
  json cyc = json::array();
  for (const auto& p : g.generators()) {
    gens.push_back(p.images());
    cyc.push_back(p.cycle_notation());
  }
  json j{{"degree", g.degree()},   {"order", g.order()},     {"profile", prof.catalog_name},
         {"abelian", prof.is_abelian}, {"exponent", prof.exponent}, {"cyclic", prof.is_cyclic},
         {"generators", gens},     {"generators_cycles", cyc}};
  if (elements) {
    json el = json::array();
    for (const auto& p : g.elements()) el.push_back(p.cycle_notation());
    j["elements"] = el;
  }
  return j;
}

// ----------------------------------------------------------------- commands

int cmd_validate(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  Model m = load(o);
  if (o.format == "json") {
    std::visit([&](const auto& x) { out << to_json(x).dump(2) << '\n'; }, m);
  } else if (auto* x = std::get_if<OrientedSTS>(&m)) {
    out << "valid oriented STS(" << x->order() << ") with " << x->triples().size() << " triples\n";
  } else {
    const auto& s = std::get<SteinerTripleSystem>(m);
    out << "valid STS(" << s.order() << ") with " << s.triple_count() << " triples\n";
  }
  return 0;
}

int cmd_classify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sts = load_sts(o);
  const auto report = classify_orientations(sts);
  std::vector<ReferenceMatch> matches;
  if (sts.order() == 3 || sts.order() == 7 || sts.order() == 9) {
    matches = match_references(report, reference_representatives(sts.order()));
  }
  if (o.format == "json") {
    out << to_json(report, matches).dump(2) << '\n';
    return 0;
  }
  out << "n=" << report.n << " |Aut(S,T)|=" << report.base_aut_order << " orientations=" << report.orientation_count
      << " classes=" << report.classes.size() << '\n';
  for (std::size_t k = 0; k < report.classes.size(); ++k) {
    const auto& c = report.classes[k];
    out << "class " << k + 1 << ": aut " << c.aut.order() << " (" << c.profile.catalog_name << ") orbit "
        << c.orbit_size << ' ';
    if (c.reflexive) {
      out << "reflexive";
    } else {
      out << "mirror " << *c.mirror + 1;
    }
    out << "\n  " << to_brackets(c.representative) << "\n  generators: " << generators_text(c.aut) << '\n';
  }
  if (!matches.empty()) {
    out << "printed representatives:\n";
    for (const auto& m : matches) {
      out << "  " << m.name << " ->";
      for (auto k : m.matching_classes) out << " class " << k + 1;
      if (m.matching_classes.empty()) out << " none";
      out << " (printed aut " << m.printed_aut_order << ") " << (m.aut_order_matches ? "ok" : "MISMATCH") << '\n';
    }
  }
  return 0;
}

int cmd_aut(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  Model m = load(o);
  PermutationGroup g = std::holds_alternative<OrientedSTS>(m) ? oriented_aut_group(std::get<OrientedSTS>(m))
                                                              : sts_aut_group(std::get<SteinerTripleSystem>(m));
  if (o.format == "json") {
    out << group_json(g, o.elements).dump(2) << '\n';
    return 0;
  }
  const auto prof = profile_group(g);
  out << "order " << g.order() << ", " << prof.catalog_name << ", " << (prof.is_abelian ? "abelian" : "non-abelian")
      << ", exponent " << prof.exponent << '\n';
  out << "generators: " << generators_text(g) << '\n';
  if (o.elements) {
    for (const auto& p : g.elements()) out << "  " << p.cycle_notation() << '\n';
  }
  return 0;
}

int cmd_product(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto a = vector_arg(o.a, "a", sys.order());
  const auto b = vector_arg(o.b, "b", sys.order());
  const auto p = steiner_product(sys, a, b);
  if (o.format == "json") {
    out << json{{"a", vector_json(a)}, {"b", vector_json(b)}, {"product", vector_json(p)},
                {"symbolic", format_symbolic(p)}}
               .dump(2)
        << '\n';
  } else {
    out << format_symbolic(a) << " x " << format_symbolic(b) << " = " << format_symbolic(p) << '\n'
        << format_vector(p) << '\n';
  }
  return 0;
}

int cmd_companion(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto w = vector_arg(o.w, "w", sys.order());
  const auto a = companion_matrix(sys, w);
  const auto rank = rank_exact(a);
  const auto kernel = kernel_basis(a);
  if (o.format == "json") {
    json k = json::array();
    for (const auto& x : kernel) k.push_back(vector_json(x));
    out << json{{"w", vector_json(w)}, {"matrix", matrix_json(a)}, {"rank", rank}, {"kernel", k}}.dump(2) << '\n';
    return 0;
  }
  out << "A_w for w = " << format_symbolic(w) << '\n' << format_matrix(a) << "rank " << rank << '\n' << "kernel:";
  for (const auto& x : kernel) out << ' ' << format_symbolic(x);
  out << '\n';
  return 0;
}

int cmd_zerodiv(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto w = vector_arg(o.w, "w", sys.order());
  const auto r = is_zero_divisor(sys, w);
  if (o.format == "json") {
    out << json{{"w", vector_json(w)},
                {"zero_divisor", r.zero_divisor},
                {"rank", r.rank},
                {"witness", r.witness ? vector_json(*r.witness) : json(nullptr)}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << format_symbolic(w) << (r.zero_divisor ? " is" : " is not") << " a zero-divisor (rank " << r.rank << ", n-1 = "
      << sys.order() - 1 << ")";
  if (r.witness) out << "; " << format_symbolic(w) << " x (" << format_symbolic(*r.witness) << ") = 0";
  out << '\n';
  return 0;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto r = check_cross_axioms(sys, o.seed);
  if (o.format == "json") {
    json wit = nullptr;
    if (r.witness) {
      wit = {{"v", vector_json(r.witness->v)},
             {"w", vector_json(r.witness->w)},
             {"lhs", to_string(r.witness->lhs)},
             {"rhs", to_string(r.witness->rhs)}};
    }
    out << json{{"axiom1", r.axiom1}, {"axiom2", r.axiom2}, {"axiom3", r.axiom3},
                {"axiom3_residual_terms", r.axiom3_terms}, {"witness", wit}}
               .dump(2)
        << '\n';
    return 0;
  }
  auto flag = [](bool b) { return b ? "PASS" : "FAIL"; };
  out << "axiom1 (bilinearity) " << flag(r.axiom1) << '\n'
      << "axiom2 (orthogonality) " << flag(r.axiom2) << '\n'
      << "axiom3 (norm identity) " << flag(r.axiom3) << " (" << r.axiom3_terms << " residual terms)\n";
  if (r.witness) {
    out << "  v = " << format_symbolic(r.witness->v) << ", w = " << format_symbolic(r.witness->w)
        << ": |v|^2|w|^2 = " << to_string(r.witness->lhs) << ", |v x w|^2 + <v,w>^2 = " << to_string(r.witness->rhs)
        << '\n';
  }
  return 0;
}

// Vectors from flags, or seeded random rationals when a flag is absent.
std::pair<DesignVector, DesignVector> dynamics_vectors(const Options& o, int n) {
  std::mt19937_64 rng(o.seed);
  DesignVector w = o.w.empty() ? random_rational_vector(rng, n) : parse_vector(o.w, n);
  DesignVector v = o.v.empty() ? random_rational_vector(rng, n) : parse_vector(o.v, n);
  return {w, v};
}

int cmd_dyn_rank(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto [w, v] = dynamics_vectors(o, sys.order());
  const RankGrowth g = o.numeric ? rank_growth(sys, to_float(w), to_float(v), o.max_k, o.tol.rank)
                                 : rank_growth(sys, w, v, o.max_k);
  if (o.format == "json") {
    out << json{{"w", vector_json(w)},       {"v", vector_json(v)},       {"exact", g.exact},
                {"ranks", g.ranks},          {"plateau_k", g.plateau_k}, {"plateau_rank", g.plateau_rank}}
               .dump(2)
        << '\n';
    return 0;
  }
  out << "w = " << format_symbolic(w) << ", v = " << format_symbolic(v) << (g.exact ? " (exact)" : " (numeric)")
      << '\n';
  for (std::size_t k = 0; k < g.ranks.size(); ++k) out << "k=" << k << " rank " << g.ranks[k] << '\n';
  out << "plateau rank " << g.plateau_rank << " at k=" << g.plateau_k << '\n';
  return 0;
}

int cmd_dyn_verify(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sys = load_oriented(o);
  const auto [w, v] = dynamics_vectors(o, sys.order());
  DynamicsInput in = dynamics_input(w, v);
  if (o.numeric) {
    in.exact_w.reset();
    in.exact_v.reset();
  }
  const auto r = verify_thmdyn(sys, in, o.horizon, o.tol);
  if (o.format == "json") {
    json j = to_json(r);
    j["w"] = vector_json(w);
    j["v"] = vector_json(v);
    out << j.dump(2) << '\n';
  } else {
    out << "w = " << format_symbolic(w) << ", v = " << format_symbolic(v) << '\n' << to_text(r);
  }
  return r.all_pass() ? 0 : 1;
}

int cmd_dyn_trace(const Options& o, std::ostream& out) {
  require_format(o, {"csv", "json", "text"});
  const auto sys = load_oriented(o);
  const auto [w, v] = dynamics_vectors(o, sys.order());
  const auto t = iterate_L(sys, to_float(w), to_float(v), o.steps);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < t.iterates.size(); ++k) {
      json coords = nullptr;
      if (t.normalized[k]) coords = std::vector<double>(t.normalized[k]->data(), t.normalized[k]->data() + sys.order());
      rows.push_back({{"k", k}, {"norm", t.iterates[k].norm()}, {"normalized", coords}});
    }
    out << json{{"w", vector_json(w)}, {"v", vector_json(v)}, {"trace", rows}}.dump(2) << '\n';
  } else {
    out << trace_csv(t);
  }
  return 0;
}

int cmd_acceptance(const Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto ids = select_criteria(o.only);
  const bool text = o.format == "text";
  const auto results = run_acceptance(ids, o.seed, [&](const CriterionResult& r) {
    if (text) out << format_criterion(r) << std::endl;
  });
  bool all = true;
  int passed = 0;
  for (const auto& r : results) {
    all = all && r.pass;
    passed += r.pass ? 1 : 0;
  }
  if (text) {
    out << passed << "/" << results.size() << " criteria passed\n";
  } else {
    out << to_json(results).dump(2) << '\n';
  }
  return all ? 0 : 1;
}

void add_input(CLI::App* c, Options& o) {
  c->add_option("--builtin", o.builtin, "builtin model name");
  c->add_option("--input", o.input, "system file (text or JSON; '-' for stdin)");
  c->add_option("--format", o.format, "text, json or csv");
  c->add_option("--out", o.out, "write output to FILE");
}

void add_tolerances(CLI::App* c, Options& o) {
  c->add_option("--tol-skew", o.tol.skew);
  c->add_option("--tol-orth", o.tol.orth);
  c->add_option("--tol-block", o.tol.block);
  c->add_option("--tol-cluster", o.tol.cluster);
  c->add_option("--tol-zero", o.tol.zero);
  c->add_option("--tol-rank", o.tol.rank);
  c->add_option("--tol-limit", o.tol.limit);
  c->add_option("--tol-projection", o.tol.projection);
  c->add_option("--tol-cycle", o.tol.cycle);
  c->add_option("--tol-cesaro", o.tol.cesaro);
  c->add_option("--tol-resolve", o.tol.resolve);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented Steiner triple systems: classification, Steiner-product algebra and dynamics"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> run;

  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* c = app.add_subcommand(name, help);
    add_input(c, o);
    c->callback([&run, fn] { run = fn; });
    return c;
  };

  sub("validate", "check and echo a system", cmd_validate);
  sub("classify", "classify all orientations of a system", cmd_classify);
  sub("aut", "automorphism group", cmd_aut)->add_flag("--elements", o.elements, "list every element");
  auto* product = sub("product", "Steiner product a x b", cmd_product);
  product->add_option("--a", o.a, "left factor");
  product->add_option("--b", o.b, "right factor");
  sub("companion", "companion matrix A_w, rank and kernel", cmd_companion)->add_option("--w", o.w, "vector w");
  sub("zerodiv", "zero-divisor test", cmd_zerodiv)->add_option("--w", o.w, "vector w");
  sub("axioms", "cross-product axioms", cmd_axioms)->add_option("--seed", o.seed, "seed for the bilinearity spot check");

  CLI::App* dyn = app.add_subcommand("dynamics", "iterated products L_w");
  dyn->require_subcommand(1);
  auto dyn_sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* c = dyn->add_subcommand(name, help);
    add_input(c, o);
    c->add_option("--w", o.w, "vector w (random when absent)");
    c->add_option("--v", o.v, "vector v (random when absent)");
    c->add_option("--seed", o.seed, "seed for random vectors");
    c->add_flag("--numeric", o.numeric, "use floating point instead of exact ranks");
    c->callback([&run, fn] { run = fn; });
    return c;
  };
  dyn_sub("rank", "rank growth and plateau", cmd_dyn_rank)->add_option("--max-k", o.max_k, "last power (default n)");
  auto* verify = dyn_sub("verify", "check the dynamics theorem for one (w, v)", cmd_dyn_verify);
  verify->add_option("--horizon", o.horizon, "iteration horizon");
  add_tolerances(verify, o);
  auto* trace = dyn_sub("trace", "iterate norms and normalized coordinates", cmd_dyn_trace);
  trace->add_option("--steps", o.steps, "number of iterations");
  trace->callback([&run, &o] {
    if (o.format == "text") o.format = "csv";
    run = cmd_dyn_trace;
  });

  CLI::App* acc = app.add_subcommand("acceptance", "run the acceptance criteria");
  acc->add_option("--only", o.only, "section (classification, algebra, dynamics) or comma list of numbers");
  acc->add_option("--format", o.format, "text or json");
  acc->add_option("--seed", o.seed, "base seed");
  acc->add_option("--out", o.out, "write output to FILE");
  acc->callback([&run] { run = cmd_acceptance; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: BadArgument: " << e.what() << '\n';
    return 2;
  }

  try {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.out.empty()) {
      file.open(o.out, std::ios::binary);
      if (!file) throw Error(ErrorCode::BadArgument, "cannot write " + o.out);
      out = &file;
    }
    return run(o, *out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
    return 2;
  }
}
