#pragma once

// JSON encodings of every public value. Object keys are emitted in sorted order
// (nlohmann::json default), so identical values always serialize identically.

#include <string>
#include <string_view>

#include <json.hpp>

#include "especial/family.hpp"
#include "especial/generators.hpp"
#include "especial/hullgeom.hpp"
#include "especial/straighten.hpp"
#include "especial/symmetry.hpp"

namespace especial {

using Json = nlohmann::json;

/// Structurally malformed input: wrong JSON types, unparsable numbers, missing
/// fields. `path` is a JSON pointer to the offending value.
class InputError : public Error {
 public:
  InputError(std::string path, const std::string& what)
      : Error("MalformedInput", path + ": " + what), path(std::move(path)) {}
  std::string path;
};

/// Parses text; nlohmann::json::parse_error (carrying the byte position)
/// propagates on syntax errors.
Json parse_json_text(std::string_view text);

Json to_json(const CirclePoint& p);
Json to_json(const CircleSet& s);
Json to_json(const FamilyPair& fp);
Json to_json(const Violation& v);
Json to_json(const NestingReport& report);
Json to_json(const EspecialDisc& disc);
Json classification_table(const FamilyPair& fp);
Json to_json(const PlanePoint& p);
Json to_json(const ConvexCell& cell);
Json to_json(const StraightenResult& r);
Json to_json(const LeafGraph& leaf);
Json to_json(const StraightenedDisc& sd);
Json to_json(const QuotientReport& report);
Json to_json(const CircleMap& g);
Json to_json(const EquivarianceReport& report);

CirclePoint circle_point_from_json(const Json& j, const std::string& path = "");

/// Element lists are read strictly (arrays of strings). Empty sets and
/// duplicate points inside one set are reported as validation violations, not
/// input errors, because they are semantic defects of otherwise well-formed data.
FamilyPair family_pair_from_json(const Json& j);
CircleMap circle_map_from_json(const Json& j);

}  // namespace especial
