#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orderlab/finspace.hpp"
#include "orderlab/poset.hpp"

namespace orderlab {

using Json = nlohmann::ordered_json;

/// Input error located by a JSON pointer into the offending document.
class JsonInputError : public InvalidInput {
 public:
  JsonInputError(std::string pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// {"elements": [...], "le": [[a, b], ...]}; closure taken on load.
PosetRef poset_from_json(const Json& j, const std::string& at = "");
Json poset_to_json(const Poset& p);

/// {"points": [...], "opens": [[...], ...]} or {"poset": <poset>}.
FinSpace space_from_json(const Json& j, const std::string& at = "");
Json space_to_json(const FinSpace& x);

/// A base object: a poset, or a space read through its specialisation order.
struct ObjectInput {
  PosetRef poset;
  std::optional<FinSpace> space;
};
ObjectInput object_from_json(const Json& j, const std::string& at = "");

/// {"dom": <object>, "cod": <object>, "map": {"a": "x", ...}}.
MonotoneMap map_from_json(const Json& j, const std::string& at = "");
Json map_to_json(const MonotoneMap& f);
/// The table only, {"a": "x", ...}.
Json table_to_json(const MonotoneMap& f);

Json subset_to_json(const Poset& p, const Subset& s);

/// Parses a file; parse failures become JsonInputError at the root.
Json load_json_file(const std::string& path);

}  // namespace orderlab
