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


// JSON forms of the library's inputs and outputs. Rationals are written as
// "p/q" strings; on input, JSON numbers and decimal strings are accepted as
// well. Every parse failure raises ClpError(kMalformedInput).

#ifndef COLORFUL_IO_HPP_
#define COLORFUL_IO_HPP_

#include <memory>
#include <string>

#include "colorful/bench.hpp"
#include "colorful/combinatorics.hpp"
#include "colorful/games.hpp"
#include "colorful/generators.hpp"
#include "colorful/geometry.hpp"
#include "colorful/pivot.hpp"
#include "json.hpp"

namespace clp::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);
Json to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// {"dimension": d, "colors": [[point, ...], ...], "target": point?}
Json to_json(const PointConfiguration& config);
PointConfiguration config_from_json(const Json& j);

// Picks by color, null for an unpicked color.
Json to_json(const ColorfulSelection& s);
ColorfulSelection selection_from_json(const Json& j);

// {"kind", "dimension", "seed", "rng", "attempts"}
Json to_json(const Provenance& p);
// Configuration plus a "provenance" object.
Json to_json(const GeneratedInstance& instance);

// {"selection", "weights", "pivots", "time_ms", "rule", "backend"} plus the
// report flags.
Json to_json(const SolveResult& result);

Json to_json(const ClpDecision& decision);

// Configuration plus "given" and optionally "given_weights"; missing weights
// are computed.
FacsInstance facs_from_json(const Json& j);
Json to_json(const FacsResult& result);

// {"A": [[...]], "B": [[...]]}
Json to_json(const BimatrixGame& game);
BimatrixGame game_from_json(const Json& j);
// {"y": [...], "z": [...], "verified": bool}
Json to_json(const MixedProfile& profile, bool verified);

// {"vertices": n, "arcs": [[u, v], ...]}
Json to_json(const Digraph& graph);
Digraph digraph_from_json(const Json& j);

// {"pairs": n, "labels": [...]}
Json to_json(const CrossPolytopeLabeling& labeling);
CrossPolytopeLabeling labeling_from_json(const Json& j);

// {"kind": "uniform", "size", "rank"} | {"kind": "partition", "blocks",
// "capacities"} | {"kind": "graphic", "vertices", "edges"} |
// {"kind": "linear", "vectors"}
std::unique_ptr<Matroid> matroid_from_json(const Json& j);

// {"count", "parity": "even" | "odd"}
Json to_json(const Census& census);

// {"kinds": [...], "dimensions": [...], "instances", "rule", "backend",
// "algorithm": "simplex" | "classic", "seed", "output", "parallel"}; every
// field optional.
BenchPlan plan_from_json(const Json& j);

Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace clp::io

#endif  // COLORFUL_IO_HPP_
