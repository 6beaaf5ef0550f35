#include "houghton/serialize.hpp"

#include <json.hpp>

namespace houghton {

using ordered_json = nlohmann::ordered_json;

std::string serialize(const HoughtonElement &g) {
  ordered_json doc;
  doc["n"] = g.rays();
  doc["t"] = g.translation();
  ordered_json table = ordered_json::array();
  for (const auto &[p, q] : g.exceptions())
    table.push_back({{p.ray, p.offset}, {q.ray, q.offset}});
  doc["exceptions"] = std::move(table);
  return doc.dump() + "\n";
}

namespace {

Point read_point(const ordered_json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw InvalidElement("point must be an array [ray, offset] of two integers");
  return {j[0].get<int>(), j[1].get<Offset>()};
}

} // namespace

HoughtonElement deserialize(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error &e) {
    throw InvalidElement(std::string("malformed element document: ") + e.what());
  }
  if (!doc.is_object())
    throw InvalidElement("element document must be an object");
  for (const char *key : {"n", "t", "exceptions"})
    if (!doc.contains(key))
      throw InvalidElement(std::string("element document lacks field '") + key + "'");
  if (doc.size() != 3)
    throw InvalidElement("element document has unexpected fields");

  if (!doc["n"].is_number_integer())
    throw InvalidElement("field 'n' must be an integer");
  const int n = doc["n"].get<int>();
  check_rays(n);

  const auto &tj = doc["t"];
  if (!tj.is_array())
    throw InvalidElement("field 't' must be an array");
  TranslationVector t;
  for (const auto &x : tj) {
    if (!x.is_number_integer())
      throw InvalidElement("field 't' must contain integers");
    t.push_back(x.get<Offset>());
  }

  const auto &ej = doc["exceptions"];
  if (!ej.is_array())
    throw InvalidElement("field 'exceptions' must be an array");
  std::vector<Exception> table;
  for (const auto &entry : ej) {
    if (!entry.is_array() || entry.size() != 2)
      throw InvalidElement("exception entries must be [[i,m],[j,k]] pairs");
    table.push_back({read_point(entry[0]), read_point(entry[1])});
  }
  return HoughtonElement::from_normal_form(n, std::move(t), std::move(table));
}

} // namespace houghton
