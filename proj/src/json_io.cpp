#include "orderlab/json_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace orderlab {

JsonInputError::JsonInputError(std::string pointer, const std::string& message)
    : InvalidInput((pointer.empty() ? std::string("/") : pointer) + ": " + message),
      pointer_(std::move(pointer)) {}

namespace {

std::string child(const std::string& at, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return at + "/" + escaped;
}

std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const Json& require(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) throw JsonInputError(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonInputError(at, "missing key '" + key + "'");
  return *it;
}

const Json& require_array(const Json& j, const std::string& at) {
  if (!j.is_array()) throw JsonInputError(at, "expected an array");
  return j;
}

std::string require_string(const Json& j, const std::string& at) {
  if (!j.is_string()) throw JsonInputError(at, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& at) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& v : require_array(j, at)) {
    out.push_back(require_string(v, child(at, i++)));
  }
  return out;
}

Subset label_set(const std::vector<std::string>& labels, const Json& j, const std::string& at) {
  Subset s(labels.size());
  std::size_t i = 0;
  for (const auto& v : require_array(j, at)) {
    const auto p = child(at, i++);
    const auto name = require_string(v, p);
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw JsonInputError(p, "unknown point '" + name + "'");
    s.set(static_cast<std::size_t>(it - labels.begin()));
  }
  return s;
}

}  // namespace

PosetRef poset_from_json(const Json& j, const std::string& at) {
  const auto labels = string_list(require(j, "elements", at), child(at, "elements"));
  std::vector<std::pair<std::string, std::string>> pairs;
  const auto le_at = child(at, "le");
  if (j.contains("le")) {
    std::size_t i = 0;
    for (const auto& pr : require_array(j["le"], le_at)) {
      const auto p = child(le_at, i++);
      if (!pr.is_array() || pr.size() != 2) throw JsonInputError(p, "expected a pair [a, b]");
      std::array<std::string, 2> ends;
      for (std::size_t k = 0; k < 2; ++k) {
        ends[k] = require_string(pr[k], child(p, k));
        if (std::find(labels.begin(), labels.end(), ends[k]) == labels.end()) {
          throw JsonInputError(child(p, k), "unknown element '" + ends[k] + "'");
        }
      }
      pairs.emplace_back(ends[0], ends[1]);
    }
  }
  try {
    return make_poset(labels, pairs);
  } catch (const InvalidInput& e) {
    throw JsonInputError(pairs.empty() ? child(at, "elements") : le_at, e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json le = Json::array();
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b) {
      // Covering pairs suffice; closure is taken on load.
      if (p.lt(a, b)) {
        bool cover = true;
        for (int c = 0; c < p.size() && cover; ++c) cover = !(p.lt(a, c) && p.lt(c, b));
        if (cover) le.push_back({p.label(a), p.label(b)});
      }
    }
  }
  return Json{{"elements", p.labels()}, {"le", le}};
}

FinSpace space_from_json(const Json& j, const std::string& at) {
  if (!j.is_object()) throw JsonInputError(at, "expected an object");
  if (j.contains("poset")) return alexandrov(*poset_from_json(j["poset"], child(at, "poset")));
  const auto points = string_list(require(j, "points", at), child(at, "points"));
  const auto opens_at = child(at, "opens");
  std::vector<Subset> opens;
  std::size_t i = 0;
  for (const auto& u : require_array(require(j, "opens", at), opens_at)) {
    opens.push_back(label_set(points, u, child(opens_at, i++)));
  }
  try {
    return FinSpace(points, std::move(opens));
  } catch (const InvalidInput& e) {
    throw JsonInputError(at, e.what());
  }
}

Json space_to_json(const FinSpace& x) {
  Json opens = Json::array();
  for (const auto& u : x.opens()) {
    Json o = Json::array();
    for (int p : members(u)) o.push_back(x.points()[p]);
    opens.push_back(o);
  }
  return Json{{"points", x.points()}, {"opens", opens}};
}

ObjectInput object_from_json(const Json& j, const std::string& at) {
  if (!j.is_object()) throw JsonInputError(at, "expected an object");
  if (j.contains("elements")) return ObjectInput{poset_from_json(j, at), std::nullopt};
  if (j.contains("points") || j.contains("poset")) {
    auto space = space_from_json(j, at);
    try {
      auto p = specialization_poset(space);
      return ObjectInput{std::move(p), std::move(space)};
    } catch (const InvalidInput& e) {
      throw JsonInputError(at, e.what());
    }
  }
  throw JsonInputError(at, "expected a poset (\"elements\") or a space (\"points\" or \"poset\")");
}

MonotoneMap map_from_json(const Json& j, const std::string& at) {
  auto dom = object_from_json(require(j, "dom", at), child(at, "dom")).poset;
  auto cod = object_from_json(require(j, "cod", at), child(at, "cod")).poset;
  const auto& m = require(j, "map", at);
  const auto map_at = child(at, "map");
  if (!m.is_object()) throw JsonInputError(map_at, "expected an object from domain to codomain labels");
  std::vector<int> table(dom->size(), -1);
  for (const auto& [key, value] : m.items()) {
    const auto p = child(map_at, key);
    auto a = dom->find(key);
    if (!a) throw JsonInputError(p, "unknown domain element '" + key + "'");
    const auto target = require_string(value, p);
    auto b = cod->find(target);
    if (!b) throw JsonInputError(p, "unknown codomain element '" + target + "'");
    table[*a] = *b;
  }
  for (int a = 0; a < dom->size(); ++a) {
    if (table[a] < 0) throw JsonInputError(map_at, "no value for '" + dom->label(a) + "'");
  }
  try {
    return MonotoneMap(dom, cod, std::move(table));
  } catch (const InvalidInput& e) {
    throw JsonInputError(map_at, e.what());
  }
}

Json table_to_json(const MonotoneMap& f) {
  Json m = Json::object();
  for (int a = 0; a < f.dom().size(); ++a) m[f.dom().label(a)] = f.cod().label(f(a));
  return m;
}

Json map_to_json(const MonotoneMap& f) {
  return Json{{"dom", poset_to_json(f.dom())}, {"cod", poset_to_json(f.cod())}, {"map", table_to_json(f)}};
}

Json subset_to_json(const Poset& p, const Subset& s) {
  Json out = Json::array();
  for (int a : members(s)) out.push_back(p.label(a));
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonInputError("", "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonInputError("", std::string("parse error: ") + e.what());
  }
}

}  // namespace orderlab
