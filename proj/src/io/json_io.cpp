// Copyright 2026 The colorful-lp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "colorful/io.hpp"

#include <fstream>

#include "colorful/errors.hpp"

namespace clp::io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ClpError(ErrorKind::kMalformedInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad ") + what);
  }
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("matrix must be a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size() || r.empty()) malformed("ragged matrix");
  return Matrix::from_rows(rows);
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(io::to_json(Vector(m.row(r).begin(), m.row(r).end())));
  return out;
}

}  // namespace

Json to_json(const Rational& value) { return format_rational(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  malformed("expected a rational, got " + j.dump());
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const PointConfiguration& config) {
  Json out;
  out["dimension"] = config.dimension;
  Json colors = Json::array();
  for (const auto& c : config.colors) {
    Json color = Json::array();
    for (const auto& p : c) color.push_back(to_json(p));
    colors.push_back(std::move(color));
  }
  out["colors"] = std::move(colors);
  if (config.target) out["target"] = to_json(*config.target);
  return out;
}

PointConfiguration config_from_json(const Json& j) {
  PointConfiguration c;
  c.dimension = get<int>(field(j, "dimension"), "dimension");
  const auto& colors = field(j, "colors");
  if (!colors.is_array()) malformed("colors must be an array");
  for (const auto& color : colors) {
    if (!color.is_array()) malformed("each color must be an array of points");
    std::vector<Point> pts;
    for (const auto& p : color) pts.push_back(vector_from_json(p));
    c.colors.push_back(std::move(pts));
  }
  if (j.contains("target") && !j.at("target").is_null()) c.target = vector_from_json(j.at("target"));
  try {
    c.validate();
  } catch (const ClpError& e) {
    malformed(e.what());
  }
  return c;
}

Json to_json(const ColorfulSelection& s) {
  Json out = Json::array();
  for (const auto& p : s.picks()) out.push_back(p ? Json(*p) : Json(nullptr));
  return out;
}

ColorfulSelection selection_from_json(const Json& j) {
  if (!j.is_array()) malformed("selection must be an array");
  std::vector<std::optional<int>> picks;
  for (const auto& p : j) {
    if (p.is_null()) {
      picks.emplace_back();
    } else {
      picks.emplace_back(get<int>(p, "selection entry"));
    }
  }
  return ColorfulSelection(std::move(picks));
}

Json to_json(const Provenance& p) {
  Json out;
  out["kind"] = std::string(to_string(p.kind));
  out["dimension"] = p.dimension;
  out["seed"] = p.seed;
  out["rng"] = p.rng;
  out["attempts"] = p.attempts;
  return out;
}

Json to_json(const GeneratedInstance& instance) {
  Json out = to_json(instance.config);
  out["provenance"] = to_json(instance.provenance);
  return out;
}

Json to_json(const SolveResult& result) {
  Json out;
  out["selection"] = to_json(result.selection);
  out["weights"] = to_json(result.certificate.weights);
  out["pivots"] = result.report.pivots;
  out["time_ms"] = result.report.wall_time_ms;
  out["rule"] = std::string(to_string(result.report.rule));
  out["backend"] = std::string(to_string(result.report.backend));
  out["switched_to_bland"] = result.report.switched_to_bland;
  out["perturbed"] = result.report.perturbed;
  out["float_fallback"] = result.report.float_fallback;
  return out;
}

Json to_json(const ClpDecision& decision) {
  Json out;
  out["answer"] = decision.yes ? "yes" : "no";
  if (decision.witness) {
    out["witness"] = to_json(*decision.witness);
    out["weights"] = to_json(decision.weights);
  }
  out["nodes"] = decision.nodes;
  out["pruned"] = decision.pruned;
  return out;
}

FacsInstance facs_from_json(const Json& j) {
  FacsInstance inst;
  inst.config = config_from_json(j);
  inst.given = selection_from_json(field(j, "given"));
  if (inst.given.num_colors() != inst.config.num_colors() || !inst.given.is_full()) {
    malformed("given selection must pick every color");
  }
  for (std::size_t i = 0; i < inst.given.num_colors(); ++i) {
    const int p = *inst.given.pick(i);
    if (p < 0 || p >= static_cast<int>(inst.config.colors[i].size())) malformed("given pick out of range");
  }
  if (j.contains("given_weights")) {
    inst.given_weights = vector_from_json(j.at("given_weights"));
  } else {
    const auto pts = inst.given.points(inst.config);
    if (inst.config.target) {
      inst.given_weights = cone_member(pts, *inst.config.target).multipliers;
    } else {
      inst.given_weights = is_positively_dependent(pts).convex.weights;
    }
  }
  return inst;
}

Json to_json(const FacsResult& result) {
  Json out;
  out["selection"] = to_json(result.selection);
  out["weights"] = to_json(result.weights);
  out["oracle_calls"] = result.oracle_calls;
  return out;
}

Json to_json(const BimatrixGame& game) {
  Json out;
  out["A"] = to_json(game.a);
  out["B"] = to_json(game.b);
  return out;
}

BimatrixGame game_from_json(const Json& j) {
  BimatrixGame g{matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B"))};
  try {
    g.validate();
  } catch (const ClpError& e) {
    malformed(e.what());
  }
  return g;
}

Json to_json(const MixedProfile& profile, bool verified) {
  Json out;
  out["y"] = to_json(profile.y);
  out["z"] = to_json(profile.z);
  out["verified"] = verified;
  return out;
}

Json to_json(const Digraph& graph) {
  Json out;
  out["vertices"] = graph.vertices;
  Json arcs = Json::array();
  for (const auto& [u, v] : graph.arcs) arcs.push_back({u, v});
  out["arcs"] = std::move(arcs);
  return out;
}

Digraph digraph_from_json(const Json& j) {
  Digraph g;
  g.vertices = get<int>(field(j, "vertices"), "vertex count");
  for (const auto& a : field(j, "arcs")) {
    if (!a.is_array() || a.size() != 2) malformed("arc must be [tail, head]");
    g.arcs.emplace_back(get<int>(a[0], "arc tail"), get<int>(a[1], "arc head"));
  }
  try {
    g.validate();
  } catch (const ClpError& e) {
    malformed(e.what());
  }
  return g;
}

Json to_json(const CrossPolytopeLabeling& labeling) {
  Json out;
  out["pairs"] = labeling.pairs;
  out["labels"] = labeling.label;
  return out;
}

CrossPolytopeLabeling labeling_from_json(const Json& j) {
  CrossPolytopeLabeling l{get<int>(field(j, "pairs"), "pairs"),
                          get<std::vector<int>>(field(j, "labels"), "labels")};
  try {
    l.validate();
  } catch (const ClpError& e) {
    malformed(e.what());
  }
  return l;
}

std::unique_ptr<Matroid> matroid_from_json(const Json& j) {
  const auto kind = get<std::string>(field(j, "kind"), "matroid kind");
  if (kind == "uniform") {
    return std::make_unique<UniformMatroid>(get<std::size_t>(field(j, "size"), "size"),
                                            get<std::size_t>(field(j, "rank"), "rank"));
  }
  if (kind == "partition") {
    return std::make_unique<PartitionMatroid>(get<std::vector<int>>(field(j, "blocks"), "blocks"),
                                              get<std::vector<int>>(field(j, "capacities"), "capacities"));
  }
  if (kind == "graphic") {
    const int n = get<int>(field(j, "vertices"), "vertex count");
    auto edges = get<std::vector<std::pair<int, int>>>(field(j, "edges"), "edges");
    for (const auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= n || v >= n) malformed("edge endpoint out of range");
    return std::make_unique<GraphicMatroid>(n, std::move(edges));
  }
  if (kind == "linear") {
    std::vector<Vector> vs;
    for (const auto& v : field(j, "vectors")) vs.push_back(vector_from_json(v));
    for (const auto& v : vs)
      if (v.size() != vs.front().size()) malformed("vectors differ in length");
    return std::make_unique<LinearMatroid>(std::move(vs));
  }
  malformed("unknown matroid kind '" + kind + "'");
}

Json to_json(const Census& census) {
  Json out;
  out["count"] = census.count;
  out["parity"] = census.even ? "even" : "odd";
  return out;
}

BenchPlan plan_from_json(const Json& j) {
  if (!j.is_object()) malformed("bench plan must be an object");
  BenchPlan plan;
  if (j.contains("kinds")) {
    plan.kinds.clear();
    for (const auto& k : j.at("kinds")) plan.kinds.push_back(parse_generator_kind(get<std::string>(k, "kind")));
  }
  if (j.contains("dimensions")) plan.dimensions = get<std::vector<int>>(j.at("dimensions"), "dimensions");
  if (j.contains("instances")) plan.instances = get<int>(j.at("instances"), "instances");
  if (j.contains("rule")) plan.rule = parse_pivot_rule(get<std::string>(j.at("rule"), "rule"));
  if (j.contains("backend")) plan.backend = parse_backend(get<std::string>(j.at("backend"), "backend"));
  if (j.contains("algorithm")) {
    const auto a = get<std::string>(j.at("algorithm"), "algorithm");
    if (a == "simplex") {
      plan.algorithm = Algorithm::kSimplexLike;
    } else if (a == "classic") {
      plan.algorithm = Algorithm::kClassic;
    } else {
      malformed("unknown algorithm '" + a + "'");
    }
  }
  if (j.contains("seed")) plan.base_seed = get<std::uint64_t>(j.at("seed"), "seed");
  if (j.contains("output")) plan.output = get<std::string>(j.at("output"), "output");
  if (j.contains("parallel")) plan.parallel = get<bool>(j.at("parallel"), "parallel");
  plan.validate();
  return plan;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    malformed(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ClpError(ErrorKind::kMalformedInput, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace clp::io
