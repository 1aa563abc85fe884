#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "delzant/constructions.hpp"
#include "delzant/desingularize.hpp"
#include "delzant/json_io.hpp"
#include "delzant/metrics.hpp"
#include "delzant/moduli.hpp"
#include "delzant/secondary.hpp"

using namespace delzant;

namespace {

uint64_t seed_from_env() {
  const char* env = std::getenv("DELZANT_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

void emit(const Json& value) { std::cout << value.dump(2) << "\n"; }

std::vector<size_t> parse_indices(const std::string& text) {
  std::vector<size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoul(item));
  return out;
}

int cmd_verify(const std::string& file) {
  auto check = is_delzant(polytope_from_json(read_json(file)));
  Json out{{"delzant", check.delzant}};
  if (!check.delzant) {
    out["failure"] = check.failure;
    if (check.witness_vertex) out["witness_vertex"] = to_json(*check.witness_vertex);
  }
  emit(out);
  return 0;
}

int cmd_chop(const std::string& file, const std::string& vertex, const std::string& eps) {
  Polytope P = polytope_from_json(read_json(file));
  RationalVector v = rational_vector_from_json(Json::parse(vertex));
  emit(to_json(corner_chop(P, v, Rational::parse(eps))));
  return 0;
}

int cmd_blowup(const std::string& file, const std::string& cone) {
  Fan fan = fan_from_json(read_json(file));
  emit(to_json(blow_up(fan, parse_indices(cone))));
  return 0;
}

int cmd_blowdown(const std::string& file, int apply) {
  Fan fan = fan_from_json(read_json(file));
  auto candidates = find_blow_downs(fan);
  if (apply >= 0) {
    if (static_cast<size_t>(apply) >= candidates.size())
      throw Error(ErrorCode::UnsupportedInput, "no blow-down candidate with that index");
    emit(to_json(apply_blow_down(fan, candidates[apply])));
    return 0;
  }
  Json arr = Json::array();
  for (const auto& c : candidates) arr.push_back(Json{{"ray", c.ray}, {"target", c.target}});
  emit(Json{{"blowdowns", arr}});
  return 0;
}

int cmd_desingularize(const std::string& file) {
  Fan fan = fan_from_json(read_json(file));
  auto [unimodular, trace] = desingularize(fan);
  emit(Json{{"fan", to_json(unimodular)}, {"trace", to_json(trace)}});
  return 0;
}

int cmd_refinecheck(const std::string& fine, const std::string& coarse) {
  emit(Json{{"refines", refines(fan_from_json(read_json(fine)), fan_from_json(read_json(coarse)))}});
  return 0;
}

int cmd_sum(const std::string& file1, const std::string& file2, const std::string& lambda,
            const std::string& mu) {
  Polytope P = polytope_from_json(read_json(file1));
  Polytope Q = polytope_from_json(read_json(file2));
  emit(to_json(minkowski_combine(Rational::parse(lambda), P, Rational::parse(mu), Q)));
  return 0;
}

int cmd_path(const std::string& file1, const std::string& file2, const std::string& eps,
             size_t samples) {
  Polytope P1 = polytope_from_json(read_json(file1));
  Polytope P2 = polytope_from_json(read_json(file2));
  MinkowskiPath path = minkowski_path(P1, P2, Rational::parse(eps));
  auto complexity = path_complexity(path);

  bool all_delzant = true;
  for (size_t s = 0; s < path.segments.size(); ++s) {
    for (size_t i = 0; i <= samples; ++i) {
      Polytope sample = path.at(s, Rational(BigInt(static_cast<long>(i)),
                                            BigInt(static_cast<long>(samples))));
      if (!is_delzant(sample).delzant) all_delzant = false;
    }
  }

  Json breakpoints = Json::array();
  for (const auto& bp : path.breakpoints) breakpoints.push_back(to_json(bp));
  Json segments = Json::array();
  for (const auto& seg : path.segments)
    segments.push_back(Json{{"complexity", seg.complexity},
                            {"interior_fan", to_json(seg.interior_fan)}});
  emit(Json{{"breakpoints", breakpoints},
            {"segments", segments},
            {"local_complexity", complexity.local},
            {"global_complexity", complexity.global},
            {"samples_per_segment", samples + 1},
            {"samples_delzant", all_delzant},
            {"seed", seed_from_env()}});
  return 0;
}

int cmd_distance(const std::string& file1, const std::string& file2, const std::string& metric,
                 size_t samples) {
  Polytope P = polytope_from_json(read_json(file1));
  Polytope Q = polytope_from_json(read_json(file2));
  if (metric == "hausdorff") {
    Json out = to_json(hausdorff_distance(P, Q), "hausdorff");
    if (samples > 0) out["support_norm_estimate"] = support_uniform_norm_estimate(P, Q, samples);
    emit(out);
  } else if (metric == "symdiff") {
    emit(to_json(symmetric_difference_distance(P, Q), "symdiff"));
  } else {
    throw CLI::ValidationError("--metric must be hausdorff or symdiff");
  }
  return 0;
}

int cmd_classify(const std::string& file) {
  emit(to_json(classify_delzant_polygon(polytope_from_json(read_json(file)))));
  return 0;
}

int cmd_secondary(const std::string& file, bool config) {
  Json j = read_json(file);
  if (config) {
    std::vector<LatticeVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(lattice_vector_from_json(r));
    emit(to_json(config_cone(rays)));
  } else {
    emit(to_json(secondary_cone(fan_from_json(j))));
  }
  return 0;
}

int cmd_realize(const std::string& file) {
  auto result = realize_polytopal(fan_from_json(read_json(file)));
  if (std::holds_alternative<Polytope>(result)) {
    emit(Json{{"polytopal", true}, {"polytope", to_json(std::get<Polytope>(result))}});
  } else {
    emit(Json{{"polytopal", false},
              {"certificate", to_json(std::get<NotPolytopal>(result).certificate)}});
  }
  return 0;
}

int cmd_construct(const std::string& name, const std::map<std::string, std::string>& params) {
  auto get = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  auto get_int = [&](const std::string& key, long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stol(it->second);
  };
  Json out{{"name", name}};
  if (name == "delzant_triangle") {
    out["polytope"] = to_json(delzant_triangle(Rational::parse(get("lambda", "1"))));
  } else if (name == "hirzebruch_trapezoid") {
    out["polytope"] = to_json(hirzebruch_trapezoid(Rational::parse(get("a", "3")),
                                                   Rational::parse(get("b", "2")),
                                                   BigInt(get_int("k", 1))));
  } else if (name == "hirzebruch_fan") {
    out["fan"] = to_json(hirzebruch_fan(BigInt(get_int("k", 1))));
  } else if (name == "cube") {
    out["polytope"] = to_json(cube(static_cast<size_t>(get_int("n", 3))));
  } else if (name == "pentagon") {
    out["polytope"] = to_json(delzant_pentagon());
  } else if (name == "prism_pentagon") {
    out["polytope"] = to_json(prism(delzant_pentagon()));
  } else if (name == "moae_fan") {
    out["fan"] = to_json(moae_fan(get_int("unimodular", 1) != 0));
  } else if (name == "cubocta_fan") {
    out["fan"] = to_json(cubocta_fan(get_int("rescaled", 1) != 0));
  } else if (name == "isolated_fan") {
    out["fan"] = to_json(isolated_fan(static_cast<size_t>(get_int("k", 1))));
  } else if (name == "hardened_simplex_fan") {
    Fan simplex(3,
                {{BigInt(1), BigInt(0), BigInt(0)},
                 {BigInt(0), BigInt(1), BigInt(0)},
                 {BigInt(0), BigInt(0), BigInt(1)},
                 {BigInt(-1), BigInt(-1), BigInt(-1)}},
                {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    out["fan"] = to_json(harden_3fan(simplex));
  } else if (name == "nonlocal_sequence") {
    auto seq = nonlocal_sequence(static_cast<size_t>(get_int("k", 1)));
    out["tetrahedron"] = to_json(seq.tetrahedron);
    out["perturbed"] = to_json(seq.perturbed);
    out["cone"] = Json::array({to_json(seq.cone_ray_a), to_json(seq.cone_ray_b)});
  } else {
    throw Error(ErrorCode::UnsupportedInput, "unknown construction: " + name);
  }
  emit(out);
  return 0;
}

int cmd_corpus() {
  uint64_t seed = seed_from_env();
  auto rows = run_corpus(seed);
  bool all_pass = true;
  Json results = Json::array();
  for (const auto& row : rows) {
    results.push_back(
        Json{{"construction", row.construction}, {"check", row.check}, {"pass", row.pass}});
    all_pass = all_pass && row.pass;
    std::cerr << (row.pass ? "[PASS] " : "[FAIL] ") << row.construction << ": " << row.check
              << "\n";
  }
  emit(Json{{"seed", seed}, {"results", results}, {"all_pass", all_pass}});
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Delzant polytopes and unimodular fans"};
  app.require_subcommand(1);

  std::string file, file2, vertex, eps = "1/4", cone, metric = "hausdorff";
  std::string lambda = "1", mu = "1", name;
  size_t samples = 0, path_samples = 20;
  int apply = -1;
  bool config = false;
  std::vector<std::string> params;

  auto* verify = app.add_subcommand("verify", "Delzant check of a polytope");
  verify->add_option("file", file)->required();

  auto* chop = app.add_subcommand("chop", "corner chopping of a Delzant polytope");
  chop->add_option("file", file)->required();
  chop->add_option("--vertex", vertex, "vertex as JSON, e.g. [0,0]")->required();
  chop->add_option("--epsilon", eps, "chop size (rational)");

  auto* blowup = app.add_subcommand("blowup", "blow-up of a fan at a cone");
  blowup->add_option("file", file)->required();
  blowup->add_option("--cone", cone, "comma-separated ray indices")->required();

  auto* blowdown = app.add_subcommand("blowdown", "list or apply blow-downs of a fan");
  blowdown->add_option("file", file)->required();
  blowdown->add_option("--apply", apply, "apply the i-th candidate");

  auto* desing = app.add_subcommand("desingularize", "unimodular refinement with trace");
  desing->add_option("file", file)->required();

  auto* refinecheck = app.add_subcommand("refinecheck", "does the first fan refine the second?");
  refinecheck->add_option("fine", file)->required();
  refinecheck->add_option("coarse", file2)->required();

  auto* sum = app.add_subcommand("sum", "Minkowski combination of two polytopes");
  sum->add_option("file1", file)->required();
  sum->add_option("file2", file2)->required();
  sum->add_option("--lambda", lambda);
  sum->add_option("--mu", mu);

  auto* path = app.add_subcommand("path", "Minkowski path between Delzant polytopes");
  path->add_option("file1", file)->required();
  path->add_option("file2", file2)->required();
  path->add_option("--epsilon", eps);
  path->add_option("--samples", path_samples, "interior samples per segment");

  auto* distance = app.add_subcommand("distance", "distance between two polytopes");
  distance->add_option("file1", file)->required();
  distance->add_option("file2", file2)->required();
  distance->add_option("--metric", metric, "hausdorff or symdiff");
  distance->add_option("--samples", samples, "also report the support-norm estimate");

  auto* classify = app.add_subcommand("classify", "triangle/trapezoid + chops of a polygon");
  classify->add_option("file", file)->required();

  auto* secondary = app.add_subcommand("secondary", "secondary cone of a fan or configuration");
  secondary->add_option("file", file)->required();
  secondary->add_flag("--config", config, "treat input rays as a configuration");

  auto* realize = app.add_subcommand("realize", "polytope with the given normal fan, if any");
  realize->add_option("file", file)->required();

  auto* construct = app.add_subcommand("construct", "emit a named construction");
  construct->add_option("name", name)->required();
  construct->add_option("--param", params, "key=value construction parameters");

  app.add_subcommand("corpus", "run the construction checklist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(file);
    if (chop->parsed()) return cmd_chop(file, vertex, eps);
    if (blowup->parsed()) return cmd_blowup(file, cone);
    if (blowdown->parsed()) return cmd_blowdown(file, apply);
    if (desing->parsed()) return cmd_desingularize(file);
    if (refinecheck->parsed()) return cmd_refinecheck(file, file2);
    if (sum->parsed()) return cmd_sum(file, file2, lambda, mu);
    if (path->parsed()) return cmd_path(file, file2, eps, path_samples);
    if (distance->parsed()) return cmd_distance(file, file2, metric, samples);
    if (classify->parsed()) return cmd_classify(file);
    if (secondary->parsed()) return cmd_secondary(file, config);
    if (realize->parsed()) return cmd_realize(file);
    if (construct->parsed()) {
      std::map<std::string, std::string> kv;
      for (const auto& p : params) {
        auto pos = p.find('=');
        if (pos == std::string::npos)
          throw Error(ErrorCode::ParseError, "--param expects key=value");
        kv[p.substr(0, pos)] = p.substr(pos + 1);
      }
      return cmd_construct(name, kv);
    }
    return cmd_corpus();
  } catch (const Error& e) {
    emit(Json{{"error", Json{{"code", error_code_name(e.code())}, {"message", e.what()}}}});
    return 1;
  } catch (const std::exception& e) {
    emit(Json{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}});
    return 1;
  }
}
