#include "tga/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tga/closed_form.hpp"
#include "tga/errors.hpp"
#include "tga/mealy.hpp"
#include "tga/oracle.hpp"
#include "tga/schreier.hpp"
#include "tga/tree.hpp"
#include "tga/verify.hpp"

namespace tga::cli {
namespace {

using Json = nlohmann::ordered_json;

// Integers wider than 63 bits become decimal strings.
Json json_int(const BigInt& value) {
  if (bit_length(value) <= 63) return value.convert_to<std::int64_t>();
  return to_string(value);
}

Json json_power(const PowerProduct& p) {
  if (p.estimated_bits() <= kDefaultBitBudget) return json_int(p.value());
  return p.to_string();
}

Json json_tutte(const FactoredTutte& t) {
  Json factors = Json::array();
  for (const auto& [length, multiplicity] : t.cycle_factors) {
    factors.push_back({length, json_int(multiplicity)});
  }
  return {{"text", t.to_string()}, {"loop_exponent", json_int(t.loop_exponent)},
          {"factors", factors}};
}

Json json_census(const CycleCensus& census) {
  Json doc = Json::object();
  for (const auto& [key, count] : census) {
    doc[std::to_string(key.first)][std::to_string(key.second)] = count;
  }
  return doc;
}

// Runs f, turning library errors into {"error": ...} values.
Json guarded(const std::function<Json()>& f) {
  try {
    return f();
  } catch (const Error& ex) {
    return Json{{"error", ex.what()}};
  }
}

bool has_error(const Json& value) { return value.is_object() && value.contains("error"); }

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw MalformedInput("not a rational number: " + text);
  }
}

struct IndexRequest {
  std::string tree_path;
  std::uint32_t n = 1;
  std::string mode = "both";
  std::string variant = "corrected";
  std::uint64_t vertex_cap = default_vertex_cap();
};

class IndexReport {
 public:
  IndexReport(bool want_formula, bool want_oracle, Variant variant)
      : want_formula_(want_formula), want_oracle_(want_oracle), variant_(variant) {}

  // chosen/other are evaluated only when formulas are requested; oracle only
  // when oracles are. A null oracle with a reason marks a skipped check.
  void add(const std::string& key, const std::function<Json(Variant)>& formula, bool has_variants,
           const std::function<Json()>& oracle, const std::string& skip_reason = "",
           const std::function<bool(const Json&, const Json&)>& agree = nullptr) {
    Json entry = Json::object();
    Json chosen;
    if (want_formula_) {
      chosen = guarded([&] { return formula(variant_); });
      entry["formula"] = chosen;
      if (has_variants) {
        const Variant other =
            variant_ == Variant::kCorrected ? Variant::kPublished : Variant::kCorrected;
        entry[std::string(to_string(other))] = guarded([&] { return formula(other); });
      }
    }
    if (want_oracle_) {
      if (!skip_reason.empty()) {
        entry["oracle"] = nullptr;
        entry["skipped"] = skip_reason;
      } else {
        entry["oracle"] = guarded(oracle);
      }
    }
    if (want_formula_ && want_oracle_) {
      const Json& o = entry["oracle"];
      if (o.is_null() || has_error(o) || has_error(chosen)) {
        entry["agree"] = nullptr;
      } else {
        entry["agree"] = agree ? agree(chosen, o) : chosen == o;
      }
    }
    doc_[key] = std::move(entry);
  }

  Json& doc() { return doc_; }

 private:
  bool want_formula_;
  bool want_oracle_;
  Variant variant_;
  Json doc_ = Json::object();
};

int run_indices(const IndexRequest& request, std::ostream& out) {
  const OrientedTree tree = load_tree(request.tree_path);
  const std::uint32_t k = tree.vertex_count();
  const std::uint32_t n = request.n;
  const Variant variant = *parse_variant(request.variant);
  const bool want_formula = request.mode != "oracle";
  const bool want_oracle = request.mode != "formula";

  std::optional<SchreierMultigraph> schreier;
  std::optional<DistanceMatrix> distances;
  std::string distance_skip;
  if (want_oracle) {
    schreier.emplace(build_schreier(tree, n, request.vertex_cap));
    if (schreier->vertex_count() <= kAllPairsVertexCap) {
      distances.emplace(all_pairs_distances(schreier->graph()));
    } else {
      distance_skip = "all-pairs BFS guard (" + std::to_string(kAllPairsVertexCap) + " vertices)";
    }
  }
  const std::size_t vertices = schreier ? schreier->vertex_count() : 0;
  auto skip_above = [&](std::size_t cap, const std::string& what) -> std::string {
    if (!want_oracle || vertices <= cap) return "";
    return what + " guard (" + std::to_string(cap) + " vertices)";
  };
  const Multigraph* graph = schreier ? &schreier->graph() : nullptr;

  IndexReport report(want_formula, want_oracle, variant);
  report.doc()["k"] = k;
  report.doc()["n"] = n;
  report.doc()["mode"] = request.mode;
  report.doc()["variant"] = request.variant;

  const BigInt w_tree = tree_wiener(tree);
  const std::uint32_t d_tree = tree_diameter(tree);
  report.add("diameter", [&](Variant) { return json_int(diameter_formula(d_tree, n)); }, false,
             [&] { return Json(diameter_oracle(*distances)); }, distance_skip);
  report.add("wiener", [&](Variant) { return json_int(wiener_formula(k, n, w_tree)); }, false,
             [&] { return json_int(wiener_oracle(*distances)); }, distance_skip);
  report.add("szeged",
             [&](Variant) { return json_int(szeged_formula(k, n, tree_szeged(tree))); }, false,
             [&] { return json_int(szeged_oracle(*graph, *distances)); }, distance_skip);
  report.add("pm_count", [&](Variant) { return json_power(pm_count_formula(tree, n)); }, false,
             [&] { return json_int(pm_oracle(*graph).count); },
             skip_above(kMatchingVertexCap, "perfect matching enumeration"));
  report.add("spanning_trees",
             [&](Variant v) { return json_power(spanning_trees_formula(k, n, v)); }, true,
             [&] { return json_int(spanning_trees_oracle(*graph)); },
             skip_above(kMatrixTreeVertexCap, "matrix-tree"));
  report.add("spanning_forests",
             [&](Variant v) { return json_int(spanning_forests_formula(k, n, v)); }, true,
             [&] {
               return json_int(
                   require_integer(tutte_evaluate(tutte_block_oracle(*graph), 2, 1), "forests"));
             });
  report.add("cycle_census",
             [&](Variant) {
               CycleCensus census;
               for (std::uint32_t label = 0; label + 1 < k; ++label) {
                 for (std::uint32_t i = 0; i <= n; ++i) {
                   census[{label, i}] = cycle_count_formula(k, n, i).convert_to<std::uint64_t>();
                 }
               }
               return json_census(census);
             },
             false, [&] { return json_census(cycle_census(*schreier)); });
  report.add("tutte_factored", [&](Variant v) { return json_tutte(tutte_factored(k, n, v)); },
             true, [&] { return json_tutte(tutte_block_oracle(*graph)); });
  // At finite n the oracle side is the observed ratio W / (diam * k^(2n) / 2);
  // it agrees when within 5% of the limit.
  report.add(
      "asymptotic_ratio", [&](Variant v) { return Json(to_string(asymptotic_ratio(k, w_tree, v))); },
      true,
      [&] {
        const Rational ratio = Rational(wiener_oracle(*distances)) * 2 /
                               (Rational(diameter_oracle(*distances)) *
                                Rational(pow_int(k, 2 * std::uint64_t{n})));
        return Json(to_string(ratio));
      },
      distance_skip,
      [](const Json& formula, const Json& oracle) {
        const Rational limit(formula.get<std::string>());
        const Rational observed(oracle.get<std::string>());
        return abs(observed - limit) <= limit / 20;
      });
  out << report.doc().dump(2) << '\n';
  return kOk;
}

int run_tutte(const std::string& tree_path, std::uint32_t n, const std::string& variant_name,
              const std::vector<std::string>& eval, std::ostream& out) {
  const OrientedTree tree = load_tree(tree_path);
  const std::uint32_t k = tree.vertex_count();
  const Variant variant = *parse_variant(variant_name);
  const Variant other = variant == Variant::kCorrected ? Variant::kPublished : Variant::kCorrected;
  const FactoredTutte chosen = tutte_factored(k, n, variant);
  Json doc = Json::object();
  doc["k"] = k;
  doc["n"] = n;
  doc["variant"] = variant_name;
  doc["tutte"] = json_tutte(chosen);
  doc[std::string(to_string(other))] = json_tutte(tutte_factored(k, n, other));
  if (!eval.empty()) {
    const Rational x = parse_rational(eval[0]);
    const Rational y = parse_rational(eval[1]);
    doc["evaluation"] = {{"x", to_string(x)},
                         {"y", to_string(y)},
                         {"value", to_string(tutte_evaluate(chosen, x, y))}};
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schreier graphs of tree automaton groups: generation, closed forms, oracles",
               "tga"};
  app.require_subcommand(1);

  std::string tree_path;
  std::uint32_t n = 1;
  std::string format = "json";
  std::uint64_t vertex_cap = default_vertex_cap();
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--vertex-cap", vertex_cap,
                    std::string("Largest k^n to materialize (env ") + kVertexCapEnv + ")");
  };

  auto* graph_cmd = app.add_subcommand("graph", "Emit the n-th Schreier multigraph");
  graph_cmd->add_option("--tree", tree_path, "Tree edge-list file")->required();
  graph_cmd->add_option("-n", n, "Level")->required();
  graph_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  add_cap(graph_cmd);

  auto* automaton_cmd = app.add_subcommand("automaton", "Emit the Moore diagram");
  automaton_cmd->add_option("--tree", tree_path, "Tree edge-list file")->required();
  std::string automaton_format = "dot";
  automaton_cmd->add_option("--format", automaton_format)->check(CLI::IsMember({"dot"}));

  IndexRequest request;
  auto* indices_cmd = app.add_subcommand("indices", "Compute every index as JSON");
  indices_cmd->add_option("--tree", request.tree_path, "Tree edge-list file")->required();
  indices_cmd->add_option("-n", request.n, "Level")->required();
  indices_cmd->add_option("--mode", request.mode)
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  indices_cmd->add_option("--variant", request.variant)
      ->check(CLI::IsMember({"published", "corrected"}));
  indices_cmd->add_option("--vertex-cap", request.vertex_cap,
                          std::string("Largest k^n to materialize (env ") + kVertexCapEnv + ")");

  std::string tutte_variant = "corrected";
  std::vector<std::string> eval;
  auto* tutte_cmd = app.add_subcommand("tutte", "Factored Tutte polynomial");
  tutte_cmd->add_option("--tree", tree_path, "Tree edge-list file")->required();
  tutte_cmd->add_option("-n", n, "Level")->required();
  tutte_cmd->add_option("--eval", eval, "Evaluate at X Y (exact rationals)")->expected(2);
  tutte_cmd->add_option("--variant", tutte_variant)
      ->check(CLI::IsMember({"published", "corrected"}));

  std::string corpus_dir;
  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Run every formula/oracle cross-check");
  verify_cmd->add_option("--corpus", corpus_dir, "Directory of *.txt tree files");
  verify_cmd->add_option("--max-vertices", verify_options.max_vertices,
                         "Check every n with k^n up to this bound");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (graph_cmd->parsed()) {
      const auto schreier = build_schreier(load_tree(tree_path), n, vertex_cap);
      out << (format == "dot" ? export_dot(schreier) : export_json(schreier));
    } else if (automaton_cmd->parsed()) {
      out << export_moore_dot(build_automaton(load_tree(tree_path)));
    } else if (indices_cmd->parsed()) {
      if (request.n == 0) throw InvalidLevel("level must be at least 1");
      return run_indices(request, out);
    } else if (tutte_cmd->parsed()) {
      return run_tutte(tree_path, n, tutte_variant, eval, out);
    } else if (verify_cmd->parsed()) {
      const auto corpus = corpus_dir.empty() ? default_corpus() : load_corpus(corpus_dir);
      const auto report = run_verification(corpus, verify_options);
      out << format_ledger(report);
      return report.ok() ? kOk : kVerificationMismatch;
    }
  } catch (const InputError& ex) {
    err << "invalid tree: " << ex.what() << '\n';
    return kInvalidTree;
  } catch (const SizeGuardError& ex) {
    err << "size guard: " << ex.what() << '\n';
    return kSizeGuard;
  } catch (const InvalidLevel& ex) {
    err << "usage: " << ex.what() << '\n';
    return kUsage;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace tga::cli
