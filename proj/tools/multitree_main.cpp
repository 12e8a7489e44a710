// Command-line front end: energy, coeffs, compare, enumerate, search,
// verify, conjecture. All I/O is JSON (graphs use
// {"n": int, "edges": [[u,v,w], ...]}); big integers are emitted as decimal
// strings. Exit codes: 0 success/pass, 1 verification failure or
// conjecture counterexample, 2 usage error, 3 budget/resource refusal.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "multitree/json_io.hpp"

namespace {

using multitree::Json;

struct RunConfig {
  std::uint64_t budget = multitree::kDefaultBudget;
  double coulson_tol = 1e-4;
};

Json read_json(const std::string& path) {
  if (path.empty() || path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in) throw multitree::ParameterError("cannot open input file " + path);
  Json j;
  in >> j;
  return j;
}

multitree::WeightedForest read_graph(const std::string& path) {
  return multitree::forest_from_json(read_json(path));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

multitree::ClassSpec parse_class(const std::string& kind, int n, long long m,
                                 int k) {
  using multitree::ClassSpec;
  if (kind == "T") return ClassSpec::multitree(n, m);
  if (kind == "F") return ClassSpec::multiforest(n, m);
  if (kind == "Tfixed") return ClassSpec::fixed_seq_tree(n, m);
  if (kind == "Fnk") return ClassSpec::unit_forest(n, k);
  throw multitree::ParameterError("unknown class kind '" + kind +
                                  "' (expected T, F, Tfixed or Fnk)");
}

multitree::NamedGraph parse_named(const std::string& name, int n, long long m,
                                  int k, long long wa, long long wb,
                                  long long wc) {
  using multitree::NamedGraph;
  if (name == "balanced-star") return NamedGraph::balanced_star(n, m);
  if (name == "extremal-star") return NamedGraph::extremal_star(n, m);
  if (name == "pstar") return NamedGraph::pstar(n, m);
  if (name == "unit-star-forest") return NamedGraph::unit_star_forest(n, m);
  if (name == "min-forest") return NamedGraph::min_forest(n, k);
  if (name == "max-match-forest") return NamedGraph::max_match_forest(n, k);
  if (name == "max-path-forest") return NamedGraph::max_path_forest(n, k);
  if (name == "weighted-p4") return NamedGraph::weighted_p4(wa, wb, wc);
  throw multitree::ParameterError("unknown named graph '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"exact energy and extremal-energy toolkit for integer-weighted "
               "trees and forests"};
  app.require_subcommand(1);
  app.fallthrough();  // --budget may follow the subcommand

  RunConfig cfg;
  if (const char* env = std::getenv("MULTITREE_BUDGET"))
    cfg.budget = std::strtoull(env, nullptr, 10);
  app.add_option("--budget", cfg.budget,
                 "pre-dedup candidate cap for class enumeration");

  // common option storage
  std::string in_path = "-", in2_path, method = "eigen", class_kind,
              theorem, csv_path, out_path, closed_name;
  int n = 0, k = 0;
  long long m = 0, wa = 1, wb = 1, wc = 1;
  bool count_only = false;
  std::string direction = "min";

  auto* cmd_energy = app.add_subcommand("energy", "energy of a graph");
  cmd_energy->add_option("--in", in_path, "graph JSON path ('-' for stdin)");
  cmd_energy->add_option("--method", method,
                         "eigen | coulson | closed:<name>");
  cmd_energy->add_option("--n", n, "order (closed forms)");
  cmd_energy->add_option("--m", m, "total weight (closed forms)");
  cmd_energy->add_option("--k", k, "component count (closed forms)");
  cmd_energy->add_option("--wa", wa, "weighted-p4 pendant weight");
  cmd_energy->add_option("--wb", wb, "weighted-p4 middle weight");
  cmd_energy->add_option("--wc", wc, "weighted-p4 pendant weight");

  std::string coeffs_method = "recursion";
  auto* cmd_coeffs = app.add_subcommand(
      "coeffs", "characteristic-polynomial coefficients (exact)");
  cmd_coeffs->add_option("--in", in_path, "graph JSON path ('-' for stdin)");
  cmd_coeffs->add_option("--method", coeffs_method,
                         "recursion | oracle (matching enumeration)");

  auto* cmd_compare =
      app.add_subcommand("compare", "quasi-order relation of two graphs");
  cmd_compare->add_option("first", in_path, "first graph JSON")->required();
  cmd_compare->add_option("second", in2_path, "second graph JSON")->required();

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list a class, one graph per line");
  cmd_enumerate->add_option("--class", class_kind, "T | F | Tfixed | Fnk")
      ->required();
  cmd_enumerate->add_option("--n", n, "order")->required();
  cmd_enumerate->add_option("--m", m, "total weight");
  cmd_enumerate->add_option("--k", k, "component count (Fnk)");
  cmd_enumerate->add_flag("--count-only", count_only,
                          "print the member count instead of the members");

  auto* cmd_search =
      app.add_subcommand("search", "exhaustive extremal-energy scan");
  cmd_search->add_option("--class", class_kind, "T | F | Tfixed | Fnk")
      ->required();
  cmd_search->add_option("--n", n, "order")->required();
  cmd_search->add_option("--m", m, "total weight");
  cmd_search->add_option("--k", k, "component count (Fnk)");
  cmd_search->add_option("--direction", direction, "min | max");
  cmd_search->add_option("--csv", csv_path,
                         "also write the whole class as CSV");

  auto* cmd_verify =
      app.add_subcommand("verify", "run a registered verification");
  cmd_verify->add_option("--theorem", theorem, "statement id")->required();
  cmd_verify->add_option("--n", n, "order");
  cmd_verify->add_option("--m", m, "total weight");
  cmd_verify->add_option("--k", k, "component count / dimension");

  auto* cmd_conjecture = app.add_subcommand(
      "conjecture", "max-energy evidence scan over T(n,m)");
  cmd_conjecture->add_option("--n", n, "order")->required();
  cmd_conjecture->add_option("--m", m, "total weight")->required();
  cmd_conjecture->add_option("--out", out_path, "also write evidence here");
  cmd_conjecture->add_option("--csv", csv_path,
                             "also write the whole class as CSV");
  cmd_conjecture
      ->add_option("--coulson-tol", cfg.coulson_tol,
                   "cross-check tolerance between the two energy routes")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_energy->parsed()) {
    if (method == "eigen") {
      emit(multitree::spectrum_to_json(
          multitree::spectrum_of(read_graph(in_path))));
    } else if (method == "coulson") {
      Json j;
      j["energy"] =
          multitree::energy_coulson(multitree::coeffs(read_graph(in_path)));
      emit(j);
    } else if (method.rfind("closed:", 0) == 0) {
      Json j;
      j["energy"] = multitree::energy_closed(
          parse_named(method.substr(7), n, m, k, wa, wb, wc));
      emit(j);
    } else {
      throw multitree::ParameterError("unknown method '" + method + "'");
    }
    return 0;
  }

  if (cmd_coeffs->parsed()) {
    auto graph = read_graph(in_path);
    if (coeffs_method == "recursion")
      emit(multitree::coeffs_to_json(multitree::coeffs(graph)));
    else if (coeffs_method == "oracle")
      emit(multitree::coeffs_to_json(multitree::coeffs_oracle(graph)));
    else
      throw multitree::ParameterError("unknown method '" + coeffs_method +
                                      "'");
    return 0;
  }

  if (cmd_compare->parsed()) {
    auto c1 = multitree::coeffs(read_graph(in_path));
    auto c2 = multitree::coeffs(read_graph(in2_path));
    emit(multitree::relation_to_json(multitree::compare(c1, c2), c1, c2));
    return 0;
  }

  if (cmd_enumerate->parsed()) {
    auto spec = parse_class(class_kind, n, m, k);
    if (count_only) {
      Json j;
      j["count"] = multitree::enumerate_class(spec, cfg.budget).size();
      j["candidates"] = multitree::candidate_estimate(spec).str();
      emit(j);
    } else {
      for (const auto& member :
           multitree::enumerate_class(spec, cfg.budget))
        std::cout << multitree::forest_to_json(member.forest).dump() << "\n";
    }
    return 0;
  }

  if (cmd_search->parsed()) {
    auto spec = parse_class(class_kind, n, m, k);
    if (direction != "min" && direction != "max")
      throw multitree::ParameterError("--direction must be min or max");
    auto dir = direction == "min" ? multitree::Direction::Min
                                  : multitree::Direction::Max;
    auto report = multitree::search(spec, dir, cfg.budget);
    emit(multitree::report_to_json(report));
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out)
        throw multitree::ParameterError("cannot write CSV to " + csv_path);
      out << multitree::class_csv(spec, cfg.budget);
    }
    return 0;
  }

  if (cmd_verify->parsed()) {
    auto result = multitree::verify(theorem, {n, m, k}, cfg.budget);
    emit(multitree::verification_to_json(result));
    return result.pass ? 0 : 1;
  }

  if (cmd_conjecture->parsed()) {
    auto evidence = multitree::conjecture_evidence(n, m, cfg.budget);
    evidence.energy_cross_ok = evidence.eigen_coulson_gap <= cfg.coulson_tol;
    Json j = multitree::evidence_to_json(evidence);
    emit(j);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out)
        throw multitree::ParameterError("cannot write evidence to " +
                                        out_path);
      out << j.dump(2) << "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream out(csv_path);
      if (!out)
        throw multitree::ParameterError("cannot write CSV to " + csv_path);
      out << multitree::class_csv(multitree::ClassSpec::multitree(n, m),
                                  cfg.budget);
    }
    return evidence.supports_conjecture && evidence.energy_cross_ok ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const multitree::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const multitree::SizeBoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const multitree::TieResolutionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const multitree::MonotonicityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const multitree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
