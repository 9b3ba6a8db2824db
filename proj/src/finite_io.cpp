#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homfree/error.hpp"
#include "homfree/finite.hpp"

namespace homfree {

using nlohmann::json;

namespace {

// Table errors report 1-based (row, column) of the offending entry.
[[noreturn]] void table_error(const std::string& what, std::size_t row, std::size_t col) {
  throw ParseError("structure file: " + what + " at row " + std::to_string(row) + ", column " +
                       std::to_string(col),
                   row, col);
}

[[noreturn]] void structure_error(const std::string& what) { throw ParseError("structure file: " + what, 0, 0); }

}  // namespace

FiniteHomMagma magma_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("structure file: invalid JSON: ") + e.what(), 0, e.byte);
  }
  if (!doc.is_object()) structure_error("top level must be an object");
  for (const char* key : {"labels", "mul", "alpha"}) {
    if (!doc.contains(key)) structure_error(std::string("missing key \"") + key + "\"");
    if (!doc[key].is_array()) structure_error(std::string("\"") + key + "\" must be an array");
  }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
    const auto& l = doc["labels"][i];
    if (!l.is_string()) table_error("label is not a string", 1, i + 1);
    labels.push_back(l.get<std::string>());
  }
  const std::size_t n = labels.size();
  if (n == 0) structure_error("\"labels\" is empty");

  auto index_of = [&](const json& v, std::size_t row, std::size_t col) -> Element {
    if (!v.is_string()) table_error("entry is not a label string", row, col);
    const auto& s = v.get_ref<const std::string&>();
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == s) return static_cast<Element>(i);
    }
    table_error("unknown label \"" + s + "\"", row, col);
  };

  const auto& rows = doc["mul"];
  if (rows.size() != n)
    structure_error("\"mul\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  std::vector<Element> mul;
  mul.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array()) table_error("\"mul\" row is not an array", r + 1, 1);
    if (rows[r].size() != n)
      table_error("ragged \"mul\" row of length " + std::to_string(rows[r].size()) + ", expected " +
                      std::to_string(n),
                  r + 1, std::min(rows[r].size(), n) + 1);
    for (std::size_t c = 0; c < n; ++c) mul.push_back(index_of(rows[r][c], r + 1, c + 1));
  }

  const auto& alpha_json = doc["alpha"];
  if (alpha_json.size() != n)
    structure_error("\"alpha\" has " + std::to_string(alpha_json.size()) + " entries, expected " +
                    std::to_string(n));
  std::vector<Element> alpha;
  for (std::size_t i = 0; i < n; ++i) alpha.push_back(index_of(alpha_json[i], 1, i + 1));

  try {
    return FiniteHomMagma(std::move(labels), std::move(mul), std::move(alpha));
  } catch (const PreconditionError& e) {
    structure_error(e.what());
  }
}

FiniteHomMagma load_magma(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return magma_from_json(buf.str());
}

std::string magma_to_json(const FiniteHomMagma& m, int indent) {
  json doc;
  doc["labels"] = m.labels();
  json rows = json::array();
  for (Element a = 0; a < m.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < m.order(); ++b) row.push_back(m.label(m.mul(a, b)));
    rows.push_back(std::move(row));
  }
  doc["mul"] = std::move(rows);
  json alpha = json::array();
  for (Element a = 0; a < m.order(); ++a) alpha.push_back(m.label(m.alpha(a)));
  doc["alpha"] = std::move(alpha);
  return doc.dump(indent);
}

}  // namespace homfree
