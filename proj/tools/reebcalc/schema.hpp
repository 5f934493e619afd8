#pragma once

// JSON interchange forms for groups, graded groups, targets, manifolds,
// plans, function specs and reports. Exact values that may not fit a
// 64-bit integer (large ranks, torsion, rational coefficients) travel as
// decimal strings; decoders accept either form.

#include <string>
#include <string_view>

#include "json.hpp"
#include "reeb/abelian.hpp"
#include "reeb/bubbling.hpp"
#include "reeb/errors.hpp"
#include "reeb/functions.hpp"
#include "reeb/manifolds.hpp"
#include "reeb/oracle.hpp"
#include "reeb/planner.hpp"

namespace reeb::schema {

using Json = nlohmann::json;

// Decoding failure; the message starts with the offending field path.
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what) : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

Json parse_document(std::string_view text, const std::string& source = "input");

Integer integer_from_json(const Json& j, const std::string& path);
Rational rational_from_json(const Json& j, const std::string& path);
AbelianGroup group_from_json(const Json& j, const std::string& path = "group");
GradedGroup graded_from_json(const Json& j, const std::string& path = "graded");
TargetSequence target_from_json(const Json& j, const std::string& path = "target");
GeneratingManifold manifold_from_json(const Json& j, const std::string& path = "manifold");
Plan plan_from_json(const Json& j, const std::string& path = "plan");
FunctionSpec function_from_json(const Json& j, const std::string& path = "function");

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const AbelianGroup& g);
Json to_json(const GradedGroup& g);
Json to_json(const TargetSequence& t);
Json to_json(const GeneratingManifold& m);
Json to_json(const BaseSpec& base);
Json to_json(const Plan& plan);
Json to_json(const ReebModel& w);
Json to_json(const Certificate& c);
Json to_json(const FeasibilityReport& r);
Json to_json(const MinimalDimension& m);
Json to_json(const SearchBounds& b);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace reeb::schema
