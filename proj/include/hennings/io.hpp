// JSON serialisation of groups, algebras, diagrams and move scripts.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hennings/hopf.hpp"
#include "hennings/kirby.hpp"

namespace hennings {

/// Malformed input; the message names the offending field.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

/// {"order": n, "table": [[...]], "names": [...]}.
Json group_to_json(const FiniteGroup& g);
/// Accepts the object form or a named constructor string such as "cyclic:4".
FiniteGroup group_from_json(const Json& j);

/// [index, "scalar", index, "scalar", ...]
Json vector_to_json(const SparseVec& v);
/// [i1, .., ik, "scalar", ...] with every index tuple flattened in place.
Json tensor_to_json(const SparseTensor& t);

/// Sparse structure constants; scalars are literals like "1/3 + 2/3*zeta^1"
/// with zeta a primitive conductor-th root of unity.
Json algebra_to_json(const HopfGAlgebra& h);
HopfGAlgebra algebra_from_json(const Json& j);

Json diagram_to_json(const KirbyDiagram& d);
KirbyDiagram diagram_from_json(const Json& j);

Json move_to_json(const MoveSpec& m, const FiniteGroup& g);
MoveSpec move_from_json(const Json& j, const FiniteGroup& g);
/// A list of moves, or an object with a "steps" list.
std::vector<MoveSpec> moves_from_json(const Json& j, const FiniteGroup& g);

/// Reads and parses a JSON file; throws IoError with the parser position.
Json read_json_file(const std::string& path);

}  // namespace hennings
